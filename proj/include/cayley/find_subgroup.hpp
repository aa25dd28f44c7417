#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

enum class Branch { early_exit, pruned, retained, retained_and_constructed };

std::string_view to_string(Branch branch);

struct TraceStep {
  ElementId chosen = 0;
  std::uint64_t cyclic_order = 0;
  Branch branch = Branch::pruned;
  /// |<S>| after this step; set only on the retained branches.
  std::optional<std::uint64_t> running_generated_order;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct AlgorithmTrace {
  std::vector<TraceStep> steps;

  /// Chosen elements that were kept as generators, in order.
  std::vector<ElementId> retained() const;
  /// True when the main loop ran out of candidates without returning.
  bool exhausted() const;

  friend bool operator==(const AlgorithmTrace&, const AlgorithmTrace&) =
      default;
};

/// Subgroup of order m in an abelian table.
///
/// Repeatedly takes the smallest unprocessed non-identity element a and
/// its cyclic subgroup C of order r. If m | r, returns <a^(r/m)>. If
/// gcd(r, m) > 1, a joins the generator set S and, once m divides |<S>|,
/// an order-m subgroup of <S> is constructed. C is then discarded from the
/// candidates. When candidates run out the construction runs on <S>.
///
/// Throws NotAbelianInput, NonDivisorOrder, InternalExhaustion.
Subgroup find_subgroup(const CayleyTable& t, std::uint64_t m);

std::pair<Subgroup, AlgorithmTrace> find_subgroup_traced(const CayleyTable& t,
                                                         std::uint64_t m);

/// Runs the candidate loop to completion with both early returns disabled
/// and returns the retained generators S. Every element whose order shares
/// a prime with m ends up in <S>.
std::vector<ElementId> retained_generators(const CayleyTable& t,
                                           std::uint64_t m);

}  // namespace cayley
