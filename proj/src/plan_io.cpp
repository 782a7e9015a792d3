#include "fresnel/plan_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fresnel {

using nlohmann::json;

std::string serialize_plan(const HybridPlan& plan, int indent) {
  json j;
  j["eps"] = plan.eps();
  j["n_taylor"] = plan.n_taylor();
  j["n_trap"] = plan.n_trap();
  j["n_asym"] = plan.n_asym();
  j["x1"] = plan.x1();
  j["x2"] = plan.x2();
  j["achieved"] = plan.achieved();
  return j.dump(indent);
}

HybridPlan parse_plan(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
    return HybridPlan::from_parameters(j.at("eps").get<double>(), j.at("n_taylor").get<int>(),
                                       j.at("n_trap").get<int>(), j.at("n_asym").get<int>(),
                                       j.at("x1").get<double>(), j.at("x2").get<double>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid plan JSON: ") + e.what());
  }
}

HybridPlan load_plan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open plan file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  HybridPlan plan = parse_plan(buffer.str());
  if (!plan.satisfies_bounds()) {
    throw std::domain_error("plan file '" + path + "' does not meet its own eps on every branch");
  }
  return plan;
}

}  // namespace fresnel
