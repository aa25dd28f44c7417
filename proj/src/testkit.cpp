#include "cayley/testkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace cayley::testkit {

namespace {

[[noreturn]] void out_of_range(const std::string& what) {
  throw GroupError(ErrorKind::ParameterOutOfRange, what);
}

std::vector<std::vector<unsigned>> lex_permutations(std::uint64_t k) {
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool is_even(const std::vector<unsigned>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

void check_symmetric_degree(std::uint64_t k) {
  if (k < 1 || k > 5) {
    out_of_range("symmetric/alternating degree must be in [1, 5], got " +
                 std::to_string(k));
  }
}

}  // namespace

CayleyTable build_cyclic(std::uint64_t k) {
  if (k < 1) out_of_range("cyclic order must be >= 1");
  std::vector<ElementId> p(k * k);
  for (std::uint64_t i = 0; i < k; ++i)
    for (std::uint64_t j = 0; j < k; ++j)
      p[i * k + j] = static_cast<ElementId>((i + j) % k);
  return CayleyTable::from_products(k, std::move(p));
}

CayleyTable build_direct_product(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<ElementId> p(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<ElementId>(x / nb);
    const auto xb = static_cast<ElementId>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<ElementId>(y / nb);
      const auto yb = static_cast<ElementId>(y % nb);
      p[x * n + y] =
          static_cast<ElementId>(a.product(xa, ya) * nb + b.product(xb, yb));
    }
  }
  return CayleyTable::from_products(n, std::move(p));
}

CayleyTable build_abelian(std::span<const std::uint64_t> invariants) {
  if (invariants.empty()) out_of_range("invariant list must be non-empty");
  for (auto k : invariants)
    if (k < 2) out_of_range("invariants must be >= 2");
  CayleyTable t = build_cyclic(invariants[0]);
  for (std::size_t i = 1; i < invariants.size(); ++i)
    t = build_direct_product(t, build_cyclic(invariants[i]));
  return t;
}

CayleyTable build_dihedral(std::uint64_t k) {
  if (k < 3) out_of_range("dihedral parameter must be >= 3");
  const std::uint64_t n = 2 * k;
  std::vector<ElementId> p(n * n);
  // r^a s^b * r^c s^d = r^(a + (-1)^b c) s^(b + d)
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t a = x % k, b = x / k;
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t c = y % k, d = y / k;
      const std::uint64_t rot = b ? (a + k - c) % k : (a + c) % k;
      p[x * n + y] = static_cast<ElementId>(((b + d) % 2) * k + rot);
    }
  }
  return CayleyTable::from_products(n, std::move(p));
}

CayleyTable build_quaternion() {
  // Unit products {1, i, j, k}: (result unit, negated).
  struct Signed {
    unsigned unit;
    bool neg;
  };
  static constexpr Signed kUnits[4][4] = {
      {{0, false}, {1, false}, {2, false}, {3, false}},
      {{1, false}, {0, true}, {3, false}, {2, true}},
      {{2, false}, {3, true}, {0, true}, {1, false}},
      {{3, false}, {2, false}, {1, true}, {0, true}},
  };
  std::vector<ElementId> p(64);
  for (unsigned x = 0; x < 8; ++x) {
    for (unsigned y = 0; y < 8; ++y) {
      const Signed u = kUnits[x % 4][y % 4];
      const bool neg = (x / 4 != y / 4) != u.neg;
      p[x * 8 + y] = (neg ? 4 : 0) + u.unit;
    }
  }
  return CayleyTable::from_products(8, std::move(p));
}

CayleyTable build_symmetric(std::uint64_t k) {
  check_symmetric_degree(k);
  const auto perms = lex_permutations(k);
  std::map<std::vector<unsigned>, ElementId> rank;
  for (std::size_t i = 0; i < perms.size(); ++i)
    rank[perms[i]] = static_cast<ElementId>(i);

  const std::size_t n = perms.size();
  std::vector<ElementId> p(n * n);
  std::vector<unsigned> composed(k);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t x = 0; x < k; ++x) composed[x] = perms[s][perms[t][x]];
      p[s * n + t] = rank.at(composed);
    }
  }
  return CayleyTable::from_products(n, std::move(p));
}

Subgroup even_permutations(std::uint64_t k) {
  check_symmetric_degree(k);
  const auto perms = lex_permutations(k);
  Subgroup h;
  h.parent_order = perms.size();
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (is_even(perms[i])) h.elements.push_back(static_cast<ElementId>(i));
  h.generators = h.elements;
  return h;
}

CayleyTable build_alternating(std::uint64_t k) {
  const CayleyTable sym = build_symmetric(k);
  const Subgroup even = even_permutations(k);
  const std::size_t m = even.size();
  std::vector<ElementId> local(sym.order(), 0);
  for (std::size_t i = 0; i < m; ++i)
    local[even.elements[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> p(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      p[i * m + j] = local[sym.product(even.elements[i], even.elements[j])];
  return CayleyTable::from_products(m, std::move(p));
}

RandomAbelian random_abelian(std::uint64_t max_order, std::uint64_t seed) {
  if (max_order < 2) out_of_range("random_abelian needs max_order >= 2");
  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(
      seed % std::minstd_rand::modulus));
  std::vector<std::uint64_t> invariants;
  std::uint64_t product = 1;
  while (max_order / product >= 2) {
    const std::uint64_t room = max_order / product;
    const std::uint64_t f = 2 + rng() % (room - 1);
    invariants.push_back(f);
    product *= f;
    if (rng() % 2 == 0) break;
  }
  return {build_abelian(invariants), std::move(invariants)};
}

CayleyTable build(const GroupSpec& spec) {
  const auto& p = spec.parameters;
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      out_of_range("expected " + std::to_string(count) + " parameter(s), got " +
                   std::to_string(p.size()));
    }
  };
  switch (spec.kind) {
    case GroupKind::cyclic: need(1); return build_cyclic(p[0]);
    case GroupKind::direct_product:
      need(2);
      return build_direct_product(build_cyclic(p[0]), build_cyclic(p[1]));
    case GroupKind::abelian_invariants: return build_abelian(p);
    case GroupKind::dihedral: need(1); return build_dihedral(p[0]);
    case GroupKind::quaternion: need(0); return build_quaternion();
    case GroupKind::symmetric: need(1); return build_symmetric(p[0]);
    case GroupKind::alternating: need(1); return build_alternating(p[0]);
    case GroupKind::random_abelian:
      need(1);
      return random_abelian(p[0], spec.seed.value_or(0)).table;
  }
  out_of_range("unknown group kind");
}

std::vector<Subgroup> enumerate_subgroups(const CayleyTable& t,
                                          bool allow_large) {
  const std::size_t n = t.order();
  if (n > kOracleMaxOrder && !allow_large) {
    throw GroupError(ErrorKind::TooLargeForOracle,
                     "order " + std::to_string(n) + " exceeds oracle limit " +
                         std::to_string(kOracleMaxOrder));
  }

  std::map<std::vector<ElementId>, Subgroup> known;
  std::vector<const Subgroup*> pending;
  auto admit = [&](Subgroup h) {
    auto [it, inserted] = known.emplace(h.elements, std::move(h));
    if (inserted) pending.push_back(&it->second);
  };

  admit(closure(t, {}));
  std::vector<ElementId> gens;
  while (!pending.empty()) {
    const Subgroup* h = pending.back();
    pending.pop_back();
    for (ElementId g = 0; g < n; ++g) {
      if (h->contains(g)) continue;
      gens = h->generators;
      gens.push_back(g);
      admit(closure(t, gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (auto& [key, h] : known) out.push_back(std::move(h));
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) {
                     return a.size() < b.size();
                   });
  return out;
}

bool has_subgroup_of_order(const CayleyTable& t, std::uint64_t m,
                           bool allow_large) {
  const auto all = enumerate_subgroups(t, allow_large);
  return std::any_of(all.begin(), all.end(),
                     [m](const Subgroup& h) { return h.size() == m; });
}

std::optional<Defect> verify_subgroup(const CayleyTable& t, const Subgroup& h,
                                      std::uint64_t m) {
  if (h.size() != m) {
    return Defect{ErrorKind::WrongOrder, {},
                  "size " + std::to_string(h.size()) + ", expected " +
                      std::to_string(m)};
  }
  std::vector<std::uint8_t> member(t.order(), 0);
  for (ElementId x : h.elements) {
    if (x >= t.order()) {
      return Defect{ErrorKind::NotASubgroup, {x}, "element out of range"};
    }
    if (member[x]) {
      return Defect{ErrorKind::NotASubgroup, {x}, "duplicate element"};
    }
    member[x] = 1;
  }
  if (!member[t.identity()]) {
    return Defect{ErrorKind::MissingIdentity, {t.identity()}, {}};
  }
  for (ElementId a : h.elements)
    for (ElementId b : h.elements)
      if (!member[t.product(a, b)])
        return Defect{ErrorKind::NotClosed, {a, b}, {}};
  for (ElementId a : h.elements)
    if (!member[inverse(t, a)])
      return Defect{ErrorKind::MissingInverse, {a}, {}};
  return std::nullopt;
}

}  // namespace cayley::testkit
