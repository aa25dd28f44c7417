#pragma once

// Cayley-table groups and the elementary operations on them.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// Prime factorization of a positive integer.
struct IntFactorization {
  std::uint64_t value = 1;
  std::map<std::uint64_t, unsigned> factors;

  /// p^e where p^e exactly divides `value` (1 when p does not divide it).
  std::uint64_t prime_part(std::uint64_t p) const;
  std::vector<std::uint64_t> primes() const;
};

IntFactorization factorize(std::uint64_t k);

/// A finite group given by its full multiplication table.
///
/// Instances are always structurally valid: every row and column is a
/// permutation of [0, n) and a two-sided identity exists. Associativity
/// is not stored; certify it with check_associativity().
///
/// Commutativity is scanned once at construction and kept as the
/// abelian certificate that the abelian fast paths require.
class CayleyTable {
 public:
  /// Validates Latin-square shape and detects the identity.
  /// Throws GroupError(MalformedInput | NotLatinSquare | NoIdentity).
  static CayleyTable from_products(std::size_t order,
                                   std::vector<ElementId> products);

  std::size_t order() const noexcept { return order_; }
  ElementId identity() const noexcept { return identity_; }
  bool abelian() const noexcept { return abelian_; }

  ElementId product(ElementId a, ElementId b) const noexcept {
    return products_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::span<const ElementId> row(ElementId a) const noexcept {
    return {products_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const ElementId> products() const noexcept { return products_; }

  const IntFactorization& order_factorization() const noexcept {
    return order_factors_;
  }

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.order_ == b.order_ && a.products_ == b.products_;
  }

 private:
  friend struct DerivedTable;
  CayleyTable() = default;

  std::size_t order_ = 0;
  std::vector<ElementId> products_;
  ElementId identity_ = 0;
  bool abelian_ = false;
  IntFactorization order_factors_;
};

/// A subgroup of a parent table: sorted elements plus the generators that
/// produced them.
struct Subgroup {
  std::vector<ElementId> elements;
  std::vector<ElementId> generators;
  std::size_t parent_order = 0;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(ElementId x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

CayleyTable parse_table(std::istream& in);
CayleyTable parse_table(std::string_view text);

/// Writes the table in the text format accepted by parse_table().
void write_table(std::ostream& out, const CayleyTable& t);
std::string format_table(const CayleyTable& t);

enum class AssociativityMode { full, light };

/// `full` checks all n^3 triples. `light` finds a greedy generating set S
/// and checks only triples with a coordinate in S; the set of elements a
/// with (xa)y = x(ay) for all x, y is closed under products, so this
/// certifies associativity of the whole table.
std::optional<Defect> check_associativity(const CayleyTable& t,
                                          AssociativityMode mode);

/// The greedy generating set used by the light associativity check.
std::vector<ElementId> greedy_generating_set(const CayleyTable& t);

bool is_abelian(const CayleyTable& t);

ElementId inverse(const CayleyTable& t, ElementId a);
ElementId power(const CayleyTable& t, ElementId a, std::uint64_t k);

/// Smallest k >= 1 with a^k = e, by divisor refinement from n.
std::uint64_t element_order(const CayleyTable& t, ElementId a);

Subgroup cyclic_subgroup(const CayleyTable& t, ElementId a);

/// Smallest subgroup containing `gens`. Uses coset accumulation when the
/// table carries an abelian certificate, breadth-first closure otherwise.
Subgroup closure(const CayleyTable& t, std::span<const ElementId> gens);

/// Incrementally grown subgroup of an abelian table.
///
/// add(g) with g outside the current set R finds the least t >= 1 with
/// g^t in R and replaces R by the union of R * g^i for i < t. Every
/// extension at least doubles |R|, so the total work is O(|result| + number
/// of add calls).
class SubgroupAccumulator {
 public:
  /// Throws GroupError(NotAbelianInput) without an abelian certificate.
  explicit SubgroupAccumulator(const CayleyTable& t);
  SubgroupAccumulator(CayleyTable&&) = delete;

  /// Returns true when g extended the subgroup.
  bool add(ElementId g);

  bool contains(ElementId x) const noexcept { return member_[x] != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<ElementId>& generators() const noexcept {
    return generators_;
  }
  /// Snapshot with sorted elements.
  Subgroup subgroup() const;

 private:
  const CayleyTable* table_;
  std::vector<std::uint8_t> member_;
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
};

}  // namespace cayley
