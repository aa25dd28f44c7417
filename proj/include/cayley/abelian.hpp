#pragma once

// Sylow components, m-primary parts, quotients, and construction of a
// subgroup of prescribed order inside a given subgroup of an abelian table.

#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

struct QuotientResult {
  CayleyTable table;
  /// Parent element -> coset label.
  std::vector<ElementId> projection;
  /// Coset label -> smallest parent element in that coset.
  std::vector<ElementId> representatives;
};

struct PrimaryPart {
  Subgroup part;
  std::vector<std::uint64_t> primes;
};

/// A subgroup re-indexed as a standalone table.
struct SubgroupTable {
  CayleyTable table;
  /// New element -> parent element.
  std::vector<ElementId> to_parent;
};

/// Record of the per-prime quotient-pullback recursion.
struct PrimeConstruction {
  std::uint64_t prime = 0;
  std::uint64_t sylow_order = 0;   // |P|
  std::uint64_t target_order = 0;  // p^c with p^c || m
  /// Table orders visited by the recursion: |P|, |P|/p, ..., |P|/p^c.
  std::vector<std::uint64_t> quotient_orders;
  /// Order-p element chosen at each level, in that level's indexing.
  std::vector<ElementId> pivots;

  /// |P| / p^c, the index this prime contributes to |ambient| / m.
  std::uint64_t residual_index() const {
    return quotient_orders.empty() ? 1 : quotient_orders.back();
  }
};

struct ConstructionTrace {
  std::uint64_t ambient_order = 0;
  std::uint64_t target_order = 0;
  std::vector<PrimeConstruction> primes;
};

/// {x : x^(p^e) = e} where p^e is the exact p-part of n.
/// Throws NotAbelianInput, ParameterOutOfRange (p not prime).
Subgroup sylow_component(const CayleyTable& t, std::uint64_t p);

/// The subgroup of elements whose order has only prime factors dividing m.
/// Throws NotAbelianInput, NonDivisorOrder.
PrimaryPart primary_part(const CayleyTable& t, std::uint64_t m);

/// Cosets are labelled by ascending smallest member.
/// Throws NotAbelianInput, NotASubgroup.
QuotientResult quotient(const CayleyTable& t, const Subgroup& normal);

/// Throws NotASubgroup with the offending pair as witness.
SubgroupTable subgroup_table(const CayleyTable& t, const Subgroup& h);

/// A subgroup of order m contained in `ambient`, built prime by prime:
/// inside the Sylow p-component pick the smallest-index element x of
/// order p, recurse in P / <x> for order p^(c-1), and pull the result back.
/// The per-prime pieces have coprime orders, so their closure has order m.
/// Throws NotAbelianInput, NonDivisorOrder, NotASubgroup.
Subgroup subgroup_of_order(const CayleyTable& t, const Subgroup& ambient,
                           std::uint64_t m);

std::pair<Subgroup, ConstructionTrace> subgroup_of_order_traced(
    const CayleyTable& t, const Subgroup& ambient, std::uint64_t m);

}  // namespace cayley
