#include "cayley/abelian.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "derived_table.hpp"

namespace cayley {

namespace {

constexpr ElementId kUnset = std::numeric_limits<ElementId>::max();

void require_abelian(const CayleyTable& t) {
  if (!t.abelian()) {
    throw GroupError(ErrorKind::NotAbelianInput,
                     "operation requires an abelian table");
  }
}

void require_divisor(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n % m != 0) {
    throw GroupError(ErrorKind::NonDivisorOrder,
                     std::to_string(m) + " does not divide " +
                         std::to_string(n));
  }
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Sorted, duplicate-free, in range, and containing the identity.
void require_subgroup_shape(const CayleyTable& t, const Subgroup& h) {
  const auto& el = h.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i] >= t.order() || (i && el[i - 1] >= el[i])) {
      throw GroupError(ErrorKind::NotASubgroup,
                       "elements must be sorted, distinct, and in range");
    }
  }
  if (!h.contains(t.identity())) {
    throw GroupError(ErrorKind::NotASubgroup, "identity missing",
                     {t.identity()});
  }
}

void require_closed(const CayleyTable& t, const Subgroup& h) {
  std::vector<std::uint8_t> member(t.order(), 0);
  for (ElementId x : h.elements) member[x] = 1;
  for (ElementId a : h.elements)
    for (ElementId b : h.elements)
      if (!member[t.product(a, b)]) {
        throw GroupError(ErrorKind::NotASubgroup,
                         "not closed under product", {a, b});
      }
}

// Generators are picked greedily in ascending element order.
Subgroup with_greedy_generators(const CayleyTable& t,
                                std::vector<ElementId> elements) {
  SubgroupAccumulator acc(t);
  for (ElementId x : elements) acc.add(x);
  Subgroup h;
  h.parent_order = t.order();
  h.generators = acc.generators();
  h.elements = std::move(elements);
  return h;
}

Subgroup exponent_kernel(const CayleyTable& t, std::uint64_t exponent) {
  std::vector<ElementId> elements;
  for (ElementId x = 0; x < t.order(); ++x)
    if (power(t, x, exponent) == t.identity()) elements.push_back(x);
  return with_greedy_generators(t, std::move(elements));
}

// Subgroup of order p^c inside the p-group `pg`, as sorted local indices.
std::vector<ElementId> build_p_subgroup(const CayleyTable& pg,
                                        std::uint64_t p, unsigned c,
                                        PrimeConstruction& record) {
  record.quotient_orders.push_back(pg.order());
  if (c == 0) return {pg.identity()};

  ElementId pivot = kUnset;
  for (ElementId x = 0; x < pg.order(); ++x) {
    if (x != pg.identity() && power(pg, x, p) == pg.identity()) {
      pivot = x;
      break;
    }
  }
  if (pivot == kUnset) {
    throw GroupError(ErrorKind::InternalExhaustion,
                     "no element of order " + std::to_string(p) +
                         " in a group of order " + std::to_string(pg.order()));
  }
  record.pivots.push_back(pivot);

  const QuotientResult q = quotient(pg, cyclic_subgroup(pg, pivot));
  const auto lifted = build_p_subgroup(q.table, p, c - 1, record);

  std::vector<std::uint8_t> in_lifted(q.table.order(), 0);
  for (ElementId k : lifted) in_lifted[k] = 1;
  std::vector<ElementId> preimage;
  preimage.reserve(lifted.size() * p);
  for (ElementId y = 0; y < pg.order(); ++y)
    if (in_lifted[q.projection[y]]) preimage.push_back(y);
  return preimage;
}

}  // namespace

Subgroup sylow_component(const CayleyTable& t, std::uint64_t p) {
  require_abelian(t);
  if (!is_prime(p)) {
    throw GroupError(ErrorKind::ParameterOutOfRange,
                     std::to_string(p) + " is not prime");
  }
  return exponent_kernel(t, t.order_factorization().prime_part(p));
}

PrimaryPart primary_part(const CayleyTable& t, std::uint64_t m) {
  require_abelian(t);
  require_divisor(m, t.order());
  PrimaryPart out;
  std::uint64_t exponent = 1;
  for (std::uint64_t p : factorize(m).primes()) {
    out.primes.push_back(p);
    exponent *= t.order_factorization().prime_part(p);
  }
  out.part = exponent_kernel(t, exponent);
  return out;
}

QuotientResult quotient(const CayleyTable& t, const Subgroup& normal) {
  require_abelian(t);
  require_subgroup_shape(t, normal);
  require_closed(t, normal);
  const std::size_t n = t.order();

  std::vector<ElementId> label(n, kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < n; ++x) {
    if (label[x] != kUnset) continue;
    const auto c = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId h : normal.elements) {
      label[t.product(x, h)] = c;
    }
  }

  const std::size_t k = reps.size();
  std::vector<ElementId> products(k * k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d)
      products[c * k + d] = label[t.product(reps[c], reps[d])];

  const ElementId identity = label[t.identity()];
  return QuotientResult{
      DerivedTable::make(k, std::move(products), identity, true),
      std::move(label), std::move(reps)};
}

SubgroupTable subgroup_table(const CayleyTable& t, const Subgroup& h) {
  require_subgroup_shape(t, h);
  const std::size_t k = h.size();
  std::vector<ElementId> local(t.order(), kUnset);
  for (std::size_t i = 0; i < k; ++i)
    local[h.elements[i]] = static_cast<ElementId>(i);

  std::vector<ElementId> products(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = t.row(h.elements[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const ElementId z = local[row[h.elements[j]]];
      if (z == kUnset) {
        throw GroupError(ErrorKind::NotASubgroup, "not closed under product",
                         {h.elements[i], h.elements[j]});
      }
      products[i * k + j] = z;
    }
  }
  return SubgroupTable{DerivedTable::make(k, std::move(products),
                                          local[t.identity()], t.abelian()),
                       h.elements};
}

std::pair<Subgroup, ConstructionTrace> subgroup_of_order_traced(
    const CayleyTable& t, const Subgroup& ambient, std::uint64_t m) {
  require_abelian(t);
  require_divisor(m, ambient.size());

  ConstructionTrace trace;
  trace.ambient_order = ambient.size();
  trace.target_order = m;

  const SubgroupTable restricted = subgroup_table(t, ambient);
  const CayleyTable& a = restricted.table;
  const IntFactorization target = factorize(m);

  SubgroupAccumulator acc(t);
  for (std::uint64_t p : a.order_factorization().primes()) {
    PrimeConstruction record;
    record.prime = p;
    record.target_order = target.prime_part(p);
    const auto c = target.factors.contains(p) ? target.factors.at(p) : 0u;

    const Subgroup sylow = sylow_component(a, p);
    record.sylow_order = sylow.size();
    if (sylow.size() == a.order()) {
      for (ElementId local : build_p_subgroup(a, p, c, record)) {
        acc.add(restricted.to_parent[local]);
      }
    } else {
      const SubgroupTable pt = subgroup_table(a, sylow);
      for (ElementId local : build_p_subgroup(pt.table, p, c, record)) {
        acc.add(restricted.to_parent[pt.to_parent[local]]);
      }
    }
    trace.primes.push_back(std::move(record));
  }

  if (acc.size() != m) {
    throw GroupError(ErrorKind::InternalExhaustion,
                     "constructed subgroup has order " +
                         std::to_string(acc.size()) + ", expected " +
                         std::to_string(m));
  }
  return {acc.subgroup(), std::move(trace)};
}

Subgroup subgroup_of_order(const CayleyTable& t, const Subgroup& ambient,
                           std::uint64_t m) {
  return subgroup_of_order_traced(t, ambient, m).first;
}

}  // namespace cayley
