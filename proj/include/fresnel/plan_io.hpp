#pragma once

#include <string>
#include <string_view>

#include "fresnel/planner.hpp"

namespace fresnel {

/// JSON object with fields eps, n_taylor, n_trap, n_asym, x1, x2 and
/// achieved (array of the three branch bounds).
std::string serialize_plan(const HybridPlan& plan, int indent = 2);

/// Rebuilds a plan from serialize_plan() output. Coefficient tables and
/// `achieved` are recomputed from the orders; a stored `achieved` is
/// ignored. Throws std::invalid_argument on malformed JSON or missing
/// fields and std::domain_error on out-of-range parameters.
HybridPlan parse_plan(std::string_view json_text);

/// parse_plan() on a file's contents, additionally requiring that the
/// plan meets its own eps on every branch.
HybridPlan load_plan_file(const std::string& path);

}  // namespace fresnel
