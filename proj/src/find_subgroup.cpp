#include "cayley/find_subgroup.hpp"

#include <numeric>
#include <string>

#include "cayley/abelian.hpp"

namespace cayley {

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::early_exit: return "early_exit";
    case Branch::pruned: return "pruned";
    case Branch::retained: return "retained";
    case Branch::retained_and_constructed: return "retained_and_constructed";
  }
  return "unknown";
}

std::vector<ElementId> AlgorithmTrace::retained() const {
  std::vector<ElementId> out;
  for (const auto& s : steps)
    if (s.branch == Branch::retained ||
        s.branch == Branch::retained_and_constructed)
      out.push_back(s.chosen);
  return out;
}

bool AlgorithmTrace::exhausted() const {
  return steps.empty() || (steps.back().branch != Branch::early_exit &&
                           steps.back().branch !=
                               Branch::retained_and_constructed);
}

namespace {

void check_preconditions(const CayleyTable& t, std::uint64_t m) {
  if (!t.abelian()) {
    throw GroupError(ErrorKind::NotAbelianInput,
                     "a subgroup of every divisor order is only guaranteed "
                     "for abelian groups");
  }
  if (m == 0 || t.order() % m != 0) {
    throw GroupError(ErrorKind::NonDivisorOrder,
                     std::to_string(m) + " does not divide " +
                         std::to_string(t.order()));
  }
}

// Unprocessed-element bitmap with a cursor at the smallest candidate.
class Candidates {
 public:
  explicit Candidates(const CayleyTable& t)
      : identity_(t.identity()), alive_(t.order(), 1) {}

  std::optional<ElementId> next() {
    while (cursor_ < alive_.size() &&
           (!alive_[cursor_] || cursor_ == identity_))
      ++cursor_;
    if (cursor_ == alive_.size()) return std::nullopt;
    return static_cast<ElementId>(cursor_);
  }
  void remove(ElementId x) { alive_[x] = 0; }

 private:
  ElementId identity_;
  std::vector<std::uint8_t> alive_;
  std::size_t cursor_ = 0;
};

// Removes <a> from the candidates and returns its order.
std::uint64_t discard_cyclic(const CayleyTable& t, ElementId a,
                             Candidates& u) {
  std::uint64_t r = 0;
  ElementId x = t.identity();
  do {
    u.remove(x);
    x = t.product(x, a);
    ++r;
  } while (x != t.identity());
  return r;
}

Subgroup accumulated(const SubgroupAccumulator& acc,
                     const std::vector<ElementId>& s) {
  Subgroup h = acc.subgroup();
  h.generators = s;
  return h;
}

}  // namespace

std::pair<Subgroup, AlgorithmTrace> find_subgroup_traced(const CayleyTable& t,
                                                         std::uint64_t m) {
  check_preconditions(t, m);

  AlgorithmTrace trace;
  std::vector<ElementId> s;
  SubgroupAccumulator generated(t);
  Candidates u(t);

  while (auto next = u.next()) {
    const ElementId a = *next;
    // C = <a> leaves U on every path, so it is discarded up front.
    const std::uint64_t r = discard_cyclic(t, a, u);

    if (r % m == 0) {
      const ElementId g = power(t, a, r / m);
      trace.steps.push_back({a, r, Branch::early_exit, std::nullopt});
      return {closure(t, std::vector<ElementId>{g}), std::move(trace)};
    }

    if (std::gcd(r, m) > 1) {
      s.push_back(a);
      generated.add(a);
      const std::uint64_t order = generated.size();
      if (order % m == 0) {
        trace.steps.push_back(
            {a, r, Branch::retained_and_constructed, order});
        return {subgroup_of_order(t, accumulated(generated, s), m),
                std::move(trace)};
      }
      trace.steps.push_back({a, r, Branch::retained, order});
    } else {
      trace.steps.push_back({a, r, Branch::pruned, std::nullopt});
    }
  }

  if (generated.size() % m != 0) {
    throw GroupError(ErrorKind::InternalExhaustion,
                     "retained elements generate a subgroup of order " +
                         std::to_string(generated.size()) +
                         ", not divisible by " + std::to_string(m));
  }
  return {subgroup_of_order(t, accumulated(generated, s), m),
          std::move(trace)};
}

Subgroup find_subgroup(const CayleyTable& t, std::uint64_t m) {
  return find_subgroup_traced(t, m).first;
}

std::vector<ElementId> retained_generators(const CayleyTable& t,
                                           std::uint64_t m) {
  check_preconditions(t, m);
  std::vector<ElementId> s;
  Candidates u(t);
  while (auto next = u.next()) {
    const ElementId a = *next;
    if (std::gcd(discard_cyclic(t, a, u), m) > 1) s.push_back(a);
  }
  return s;
}

}  // namespace cayley
