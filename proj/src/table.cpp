#include "cayley/table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cayley {

std::uint64_t IntFactorization::prime_part(std::uint64_t p) const {
  auto it = factors.find(p);
  if (it == factors.end()) return 1;
  std::uint64_t part = 1;
  for (unsigned i = 0; i < it->second; ++i) part *= p;
  return part;
}

std::vector<std::uint64_t> IntFactorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& [p, e] : factors) out.push_back(p);
  return out;
}

IntFactorization factorize(std::uint64_t k) {
  if (k == 0) {
    throw GroupError(ErrorKind::ParameterOutOfRange,
                     "cannot factorize 0");
  }
  IntFactorization f;
  f.value = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    while (k % p == 0) {
      ++f.factors[p];
      k /= p;
    }
  }
  if (k > 1) ++f.factors[k];
  return f;
}

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

namespace {

// Returns the first row/column that is not a permutation of [0, n).
std::optional<Defect> find_latin_defect(std::size_t n,
                                        std::span<const ElementId> p) {
  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ElementId v = p[i * n + j];
      if (seen[v] == i) {
        return Defect{ErrorKind::NotLatinSquare,
                      {static_cast<ElementId>(i), v},
                      "row " + std::to_string(i) + " repeats " +
                          std::to_string(v)};
      }
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const ElementId v = p[i * n + j];
      if (seen[v] == j) {
        return Defect{ErrorKind::NotLatinSquare,
                      {static_cast<ElementId>(j), v},
                      "column " + std::to_string(j) + " repeats " +
                          std::to_string(v)};
      }
      seen[v] = j;
    }
  }
  return std::nullopt;
}

}  // namespace

CayleyTable CayleyTable::from_products(std::size_t order,
                                       std::vector<ElementId> products) {
  if (order == 0) {
    throw GroupError(ErrorKind::MalformedInput, "group order must be >= 1");
  }
  if (products.size() != order * order) {
    throw GroupError(ErrorKind::MalformedInput,
                     "expected " + std::to_string(order * order) +
                         " entries, got " + std::to_string(products.size()));
  }
  for (std::size_t k = 0; k < products.size(); ++k) {
    if (products[k] >= order) {
      throw GroupError(ErrorKind::MalformedInput,
                       "entry " + std::to_string(products[k]) +
                           " out of range at row " +
                           std::to_string(k / order) + ", column " +
                           std::to_string(k % order));
    }
  }
  if (auto defect = find_latin_defect(order, products)) {
    throw GroupError(std::move(*defect));
  }

  // In a Latin square exactly one e has e * 0 = 0; it is the only
  // candidate for a left identity.
  ElementId candidate = 0;
  for (std::size_t i = 0; i < order; ++i) {
    if (products[i * order] == 0) {
      candidate = static_cast<ElementId>(i);
      break;
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    if (products[candidate * order + x] != x ||
        products[x * order + candidate] != x) {
      throw GroupError(ErrorKind::NoIdentity,
                       "no two-sided identity element");
    }
  }

  CayleyTable t;
  t.order_ = order;
  t.products_ = std::move(products);
  t.identity_ = candidate;
  t.order_factors_ = factorize(order);
  t.abelian_ = is_abelian(t);
  return t;
}

CayleyTable parse_table(std::istream& in) {
  std::size_t order = 0;
  bool have_order = false;
  std::vector<ElementId> products;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    const auto where = " (line " + std::to_string(line_no) + ")";
    std::vector<std::uint64_t> values;
    const char* p = line.data() + first;
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      std::uint64_t v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc{} ||
          (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw GroupError(ErrorKind::MalformedInput, "bad token" + where);
      }
      values.push_back(v);
      p = next;
    }

    if (!have_order) {
      if (values.size() != 1 || values[0] == 0) {
        throw GroupError(ErrorKind::MalformedInput,
                         "first line must hold a positive order" + where);
      }
      order = values[0];
      have_order = true;
      products.reserve(order * order);
      continue;
    }
    if (rows == order) {
      throw GroupError(ErrorKind::MalformedInput,
                       "more than " + std::to_string(order) + " rows" + where);
    }
    if (values.size() != order) {
      throw GroupError(ErrorKind::MalformedInput,
                       "row has " + std::to_string(values.size()) +
                           " entries, expected " + std::to_string(order) +
                           where);
    }
    for (auto v : values) {
      if (v >= order) {
        throw GroupError(ErrorKind::MalformedInput,
                         "index " + std::to_string(v) + " out of range" +
                             where);
      }
      products.push_back(static_cast<ElementId>(v));
    }
    ++rows;
  }
  if (!have_order) {
    throw GroupError(ErrorKind::MalformedInput, "empty input");
  }
  if (rows != order) {
    throw GroupError(ErrorKind::MalformedInput,
                     "expected " + std::to_string(order) + " rows, got " +
                         std::to_string(rows));
  }
  return CayleyTable::from_products(order, std::move(products));
}

CayleyTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_table(in);
}

void write_table(std::ostream& out, const CayleyTable& t) {
  const std::size_t n = t.order();
  out << n << '\n';
  std::string buf;
  for (std::size_t i = 0; i < n; ++i) {
    buf.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j) buf.push_back(' ');
      buf += std::to_string(t.product(static_cast<ElementId>(i),
                                      static_cast<ElementId>(j)));
    }
    buf.push_back('\n');
    out << buf;
  }
}

std::string format_table(const CayleyTable& t) {
  std::ostringstream out;
  write_table(out, t);
  return out.str();
}

std::vector<ElementId> greedy_generating_set(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<std::uint8_t> member(n, 0);
  std::vector<ElementId> members;
  std::vector<ElementId> gens;
  members.reserve(n);

  // Closure under products on both sides; each pair of members is
  // multiplied once, when the later of the two is processed.
  std::size_t processed = 0;
  auto admit = [&](ElementId x) {
    if (!member[x]) {
      member[x] = 1;
      members.push_back(x);
    }
  };
  auto saturate = [&] {
    while (processed < members.size()) {
      const ElementId y = members[processed];
      for (std::size_t k = 0; k <= processed; ++k) {
        const ElementId z = members[k];
        admit(t.product(y, z));
        admit(t.product(z, y));
      }
      ++processed;
    }
  };

  admit(t.identity());
  saturate();
  for (ElementId x = 0; x < n; ++x) {
    if (member[x]) continue;
    gens.push_back(x);
    admit(x);
    saturate();
  }
  return gens;
}

std::optional<Defect> check_associativity(const CayleyTable& t,
                                          AssociativityMode mode) {
  const auto n = static_cast<ElementId>(t.order());
  auto violated = [&](ElementId a, ElementId b, ElementId c) {
    return t.product(t.product(a, b), c) != t.product(a, t.product(b, c));
  };
  auto witness = [](ElementId a, ElementId b, ElementId c) {
    return Defect{ErrorKind::NotAssociative, {a, b, c},
                  "(ab)c != a(bc)"};
  };

  if (mode == AssociativityMode::full) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (violated(a, b, c)) return witness(a, b, c);
    return std::nullopt;
  }

  for (ElementId s : greedy_generating_set(t)) {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (violated(x, s, y)) return witness(x, s, y);
        if (violated(s, x, y)) return witness(s, x, y);
        if (violated(x, y, s)) return witness(x, y, s);
      }
    }
  }
  return std::nullopt;
}

bool is_abelian(const CayleyTable& t) {
  const auto n = static_cast<ElementId>(t.order());
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j)
      if (t.product(i, j) != t.product(j, i)) return false;
  return true;
}

ElementId inverse(const CayleyTable& t, ElementId a) {
  const auto r = t.row(a);
  const auto it = std::find(r.begin(), r.end(), t.identity());
  return static_cast<ElementId>(it - r.begin());
}

ElementId power(const CayleyTable& t, ElementId a, std::uint64_t k) {
  ElementId result = t.identity();
  ElementId base = a;
  while (k) {
    if (k & 1u) result = t.product(result, base);
    k >>= 1u;
    if (k) base = t.product(base, base);
  }
  return result;
}

std::uint64_t element_order(const CayleyTable& t, ElementId a) {
  std::uint64_t candidate = t.order();
  for (const auto& [p, e] : t.order_factorization().factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (power(t, a, candidate / p) != t.identity()) break;
      candidate /= p;
    }
  }
  return candidate;
}

Subgroup cyclic_subgroup(const CayleyTable& t, ElementId a) {
  Subgroup h;
  h.parent_order = t.order();
  h.generators = {a};
  ElementId x = t.identity();
  do {
    h.elements.push_back(x);
    x = t.product(x, a);
  } while (x != t.identity());
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

Subgroup closure(const CayleyTable& t, std::span<const ElementId> gens) {
  if (t.abelian()) {
    SubgroupAccumulator acc(t);
    for (ElementId g : gens) acc.add(g);
    Subgroup h = acc.subgroup();
    h.generators.assign(gens.begin(), gens.end());
    return h;
  }

  const std::size_t n = t.order();
  std::vector<std::uint8_t> member(n, 0);
  Subgroup h;
  h.parent_order = n;
  h.generators.assign(gens.begin(), gens.end());
  h.elements.push_back(t.identity());
  member[t.identity()] = 1;
  for (std::size_t k = 0; k < h.elements.size(); ++k) {
    const ElementId x = h.elements[k];
    for (ElementId g : gens) {
      const ElementId y = t.product(x, g);
      if (!member[y]) {
        member[y] = 1;
        h.elements.push_back(y);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

SubgroupAccumulator::SubgroupAccumulator(const CayleyTable& t)
    : table_(&t), member_(t.order(), 0) {
  if (!t.abelian()) {
    throw GroupError(ErrorKind::NotAbelianInput,
                     "coset accumulation needs an abelian table");
  }
  members_.reserve(t.order());
  members_.push_back(t.identity());
  member_[t.identity()] = 1;
}

bool SubgroupAccumulator::add(ElementId g) {
  if (member_[g]) return false;
  const CayleyTable& t = *table_;

  // Least s >= 1 with g^s in R; the cosets R * g^i, i < s, are disjoint.
  std::size_t s = 1;
  for (ElementId y = g; !member_[y]; y = t.product(y, g)) ++s;
  const std::size_t old_size = members_.size();
  ElementId shift = g;
  for (std::size_t i = 1; i < s; ++i) {
    for (std::size_t k = 0; k < old_size; ++k) {
      const ElementId z = t.product(members_[k], shift);
      member_[z] = 1;
      members_.push_back(z);
    }
    shift = t.product(shift, g);
  }
  generators_.push_back(g);
  return true;
}

Subgroup SubgroupAccumulator::subgroup() const {
  Subgroup h;
  h.parent_order = table_->order();
  h.elements = members_;
  std::sort(h.elements.begin(), h.elements.end());
  h.generators = generators_;
  return h;
}

}  // namespace cayley
