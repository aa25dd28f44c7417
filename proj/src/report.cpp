#include "cayley/report.hpp"

#include <string>

namespace cayley {

nlohmann::json to_json(const TraceStep& step) {
  nlohmann::json j = {{"chosen", step.chosen},
                      {"cyclic_order", step.cyclic_order},
                      {"branch", std::string(to_string(step.branch))}};
  if (step.running_generated_order) {
    j["running_generated_order"] = *step.running_generated_order;
  }
  return j;
}

nlohmann::json to_json(const AlgorithmTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return steps;
}

nlohmann::json find_result_json(std::size_t n, std::uint64_t m,
                                const Subgroup& h,
                                const AlgorithmTrace* trace) {
  nlohmann::json j = {{"n", n},
                      {"m", m},
                      {"subgroup", h.elements},
                      {"generators", h.generators}};
  if (trace) j["trace"] = to_json(*trace);
  return j;
}

}  // namespace cayley
