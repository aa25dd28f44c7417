#pragma once

// Group builders, the brute-force subgroup oracle, and the subgroup
// verifier used as the postcondition check everywhere.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayley/table.hpp"

namespace cayley::testkit {

/// Largest order enumerate_subgroups() accepts without an override.
inline constexpr std::size_t kOracleMaxOrder = 64;

enum class GroupKind {
  cyclic,
  direct_product,      // parameters: orders of two cyclic factors
  abelian_invariants,  // parameters: cyclic factor orders, each >= 2
  dihedral,            // parameters: k >= 3, order 2k
  quaternion,
  symmetric,           // parameters: k <= 5
  alternating,         // parameters: k <= 5
  random_abelian,      // parameters: max order; seed in `seed`
};

struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  std::vector<std::uint64_t> parameters;
  std::optional<std::uint64_t> seed;
};

/// Throws ParameterOutOfRange when the parameters do not fit the kind.
CayleyTable build(const GroupSpec& spec);

CayleyTable build_cyclic(std::uint64_t k);

/// Element (i, j) has index i * |b| + j.
CayleyTable build_direct_product(const CayleyTable& a, const CayleyTable& b);

/// Left-associated iterated direct product of cyclic groups.
CayleyTable build_abelian(std::span<const std::uint64_t> invariants);

/// r^i s^j has index j * k + i.
CayleyTable build_dihedral(std::uint64_t k);

/// Index sign * 4 + u for sign in {+, -} and u in {1, i, j, k}.
CayleyTable build_quaternion();

/// Permutations of {0..k-1} in lexicographic rank; the product of
/// sigma and tau is the composition x -> sigma(tau(x)).
CayleyTable build_symmetric(std::uint64_t k);

/// The even permutations inside build_symmetric(k).
Subgroup even_permutations(std::uint64_t k);

/// Even-permutation subgroup of build_symmetric(k), re-indexed.
CayleyTable build_alternating(std::uint64_t k);

struct RandomAbelian {
  CayleyTable table;
  std::vector<std::uint64_t> invariants;
};

/// Deterministic in `seed` (std::minstd_rand). Draws factors uniformly
/// from [2, max_order / product so far] and stops with probability 1/2
/// after each draw.
RandomAbelian random_abelian(std::uint64_t max_order, std::uint64_t seed);

/// All subgroups, each once, sorted by (size, elements). Cyclic extension:
/// from the trivial subgroup, close H together with each g outside H until
/// nothing new appears.
/// Throws TooLargeForOracle above kOracleMaxOrder unless allow_large.
std::vector<Subgroup> enumerate_subgroups(const CayleyTable& t,
                                          bool allow_large = false);

bool has_subgroup_of_order(const CayleyTable& t, std::uint64_t m,
                           bool allow_large = false);

/// nullopt iff |h| = m, h holds the identity, and h is closed under
/// products and inverses.
std::optional<Defect> verify_subgroup(const CayleyTable& t, const Subgroup& h,
                                      std::uint64_t m);

}  // namespace cayley::testkit
