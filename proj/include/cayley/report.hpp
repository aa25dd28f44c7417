#pragma once

// JSON shapes shared by the CLI and the test suites.

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "cayley/find_subgroup.hpp"

namespace cayley {

nlohmann::json to_json(const TraceStep& step);
nlohmann::json to_json(const AlgorithmTrace& trace);

/// {"n", "m", "subgroup", "generators"} plus "trace" when given.
nlohmann::json find_result_json(std::size_t n, std::uint64_t m,
                                const Subgroup& h,
                                const AlgorithmTrace* trace = nullptr);

}  // namespace cayley
