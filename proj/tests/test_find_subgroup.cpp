#include <gtest/gtest.h>

#include <set>

#include "cayley/abelian.hpp"
#include "cayley/find_subgroup.hpp"
#include "cayley/testkit.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace cayley;
using testkit::build_abelian;
using testkit::build_cyclic;

namespace {

using Elements = std::vector<ElementId>;
using Inv = std::vector<std::uint64_t>;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.kind();
  }
  return ErrorKind::InternalExhaustion;
}

void expect_trace_invariants(const CayleyTable& t, std::uint64_t m,
                             const AlgorithmTrace& trace) {
  std::set<ElementId> seen;
  ASSERT_LE(trace.steps.size(), t.order());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    ASSERT_TRUE(seen.insert(s.chosen).second);
    ASSERT_NE(s.chosen, t.identity());
    ASSERT_EQ(s.cyclic_order, oracle::naive_order(t, s.chosen));
    const bool retained = s.branch == Branch::retained ||
                          s.branch == Branch::retained_and_constructed;
    ASSERT_EQ(s.running_generated_order.has_value(), retained);
    if (retained) {
      ASSERT_GT(oracle::gcd(s.cyclic_order, m), 1u);
      ASSERT_EQ(t.order() % *s.running_generated_order, 0u);
    }
    if (s.branch == Branch::pruned) {
      ASSERT_EQ(oracle::gcd(s.cyclic_order, m), 1u);
    }
    if (s.branch == Branch::early_exit ||
        s.branch == Branch::retained_and_constructed) {
      ASSERT_EQ(i + 1, trace.steps.size());
    }
  }
}

}  // namespace

TEST(FindSubgroup, Examples) {
  const auto z6 = build_cyclic(6);
  EXPECT_EQ(find_subgroup(z6, 1).elements, (Elements{0}));
  EXPECT_EQ(find_subgroup(z6, 6).elements, (Elements{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(find_subgroup(z6, 3).elements, (Elements{0, 2, 4}));
}

TEST(FindSubgroup, CyclicTwelveOrderFourHandTrace) {
  const auto z12 = build_cyclic(12);
  const auto [h, trace] = find_subgroup_traced(z12, 4);
  EXPECT_EQ(h.elements, (Elements{0, 3, 6, 9}));
  EXPECT_EQ(h.generators, (Elements{3}));  // 1^(12/4)
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(trace.steps[0], (TraceStep{1, 12, Branch::early_exit, {}}));
  const auto oracle_sets = oracle::subset_subgroups(z12);
  EXPECT_TRUE(oracle_sets.contains(h.elements));
}

TEST(FindSubgroup, PrunesCoprimeElementFirst) {
  // Z3 x Z2 indexes (i, j) as 2i + j, so element 1 has order 2.
  const auto t = build_abelian(Inv{3, 2});
  ASSERT_EQ(element_order(t, 1), 2u);
  const auto [h, trace] = find_subgroup_traced(t, 3);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0], (TraceStep{1, 2, Branch::pruned, {}}));
  EXPECT_EQ(trace.steps[1], (TraceStep{2, 3, Branch::early_exit, {}}));
  EXPECT_EQ(h.elements, (Elements{0, 2, 4}));
  EXPECT_TRUE(oracle::subset_subgroups(t).contains(h.elements));
}

TEST(FindSubgroup, ConstructsFromAccumulatedGenerators) {
  const auto t = build_abelian(Inv{2, 2, 2});
  const auto [h, trace] = find_subgroup_traced(t, 4);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0], (TraceStep{1, 2, Branch::retained, 2}));
  EXPECT_EQ(trace.steps[1],
            (TraceStep{2, 2, Branch::retained_and_constructed, 4}));
  EXPECT_EQ(h.elements, (Elements{0, 1, 2, 3}));
  EXPECT_FALSE(testkit::verify_subgroup(t, h, 4));
}

TEST(FindSubgroupTraced, Examples) {
  const auto [h6, t6] = find_subgroup_traced(build_cyclic(6), 3);
  ASSERT_EQ(t6.steps.size(), 1u);
  EXPECT_EQ(t6.steps[0].branch, Branch::early_exit);

  const auto v4 = build_abelian(Inv{2, 2});
  const auto [hv, tv] = find_subgroup_traced(v4, 2);
  ASSERT_EQ(tv.steps.size(), 1u);
  EXPECT_EQ(tv.steps[0].branch, Branch::early_exit);

  const auto [h1, t1] = find_subgroup_traced(build_cyclic(1), 1);
  EXPECT_TRUE(t1.steps.empty());
  EXPECT_TRUE(t1.exhausted());
  EXPECT_EQ(h1.elements, (Elements{0}));
}

TEST(FindSubgroup, Errors) {
  EXPECT_EQ(kind_of([] { find_subgroup(testkit::build_dihedral(3), 2); }),
            ErrorKind::NotAbelianInput);
  EXPECT_EQ(kind_of([] { find_subgroup(testkit::build_alternating(4), 6); }),
            ErrorKind::NotAbelianInput);
  EXPECT_EQ(kind_of([] { find_subgroup(build_cyclic(6), 4); }),
            ErrorKind::NonDivisorOrder);
  EXPECT_EQ(kind_of([] { find_subgroup(build_cyclic(6), 0); }),
            ErrorKind::NonDivisorOrder);
}

TEST(FindSubgroup, IdentityNotAtIndexZero) {
  // Z6 relabelled by x -> (x + 3) mod 6, so the identity is 3.
  std::vector<ElementId> p(36);
  for (ElementId i = 0; i < 6; ++i)
    for (ElementId j = 0; j < 6; ++j)
      p[i * 6 + j] = ((i + 3) + (j + 3) + 3) % 6;
  const auto t = CayleyTable::from_products(6, std::move(p));
  ASSERT_EQ(t.identity(), 3u);
  for (auto m : oracle::divisors(6)) {
    const auto [h, trace] = find_subgroup_traced(t, m);
    EXPECT_FALSE(testkit::verify_subgroup(t, h, m));
    expect_trace_invariants(t, m, trace);
  }
}

TEST(FindSubgroup, PropertiesOverCorpus) {
  for (const auto& g : corpus::abelian_up_to(48)) {
    const auto& t = g.table;
    for (auto m : oracle::divisors(t.order())) {
      const auto [h, trace] = find_subgroup_traced(t, m);
      ASSERT_FALSE(testkit::verify_subgroup(t, h, m)) << g.name << " m=" << m;
      for (auto x : h.elements) ASSERT_EQ(power(t, x, m), t.identity());
      ASSERT_EQ(oracle::naive_closure(t, h.generators), h.elements);
      expect_trace_invariants(t, m, trace);
      // Deterministic.
      const auto [h2, trace2] = find_subgroup_traced(t, m);
      ASSERT_EQ(h, h2);
      ASSERT_EQ(trace, trace2);
    }
  }
}

TEST(FindSubgroup, MatchesOracleEnumeration) {
  for (const auto& g : corpus::abelian_up_to(32)) {
    const auto& t = g.table;
    std::set<Elements> all;
    for (const auto& h : testkit::enumerate_subgroups(t)) all.insert(h.elements);
    for (auto m : oracle::divisors(t.order())) {
      ASSERT_TRUE(all.contains(find_subgroup(t, m).elements))
          << g.name << " m=" << m;
    }
  }
}

TEST(FindSubgroup, LargerRandomGroupsVerify) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto r = testkit::random_abelian(720, seed);
    const auto& t = r.table;
    for (auto m : oracle::divisors(t.order())) {
      const auto h = find_subgroup(t, m);
      ASSERT_FALSE(testkit::verify_subgroup(t, h, m))
          << corpus::list_name(r.invariants) << " m=" << m;
    }
  }
}

TEST(CoprimePruning, CyclicSubgroupMeetsOrderMSubgroupsTrivially) {
  for (const auto& g : corpus::abelian_up_to(24)) {
    const auto& t = g.table;
    const auto subgroups = testkit::enumerate_subgroups(t);
    for (ElementId a = 0; a < t.order(); ++a) {
      const auto c = cyclic_subgroup(t, a);
      for (const auto& h : subgroups) {
        if (oracle::gcd(c.size(), h.size()) != 1) continue;
        Elements meet;
        std::set_intersection(c.elements.begin(), c.elements.end(),
                              h.elements.begin(), h.elements.end(),
                              std::back_inserter(meet));
        ASSERT_EQ(meet, (Elements{t.identity()})) << g.name;
      }
    }
  }
}

TEST(RetainedGenerators, GenerateAtLeastThePrimaryPart) {
  for (const auto& g : corpus::abelian_up_to(48)) {
    const auto& t = g.table;
    for (auto m : oracle::divisors(t.order())) {
      const auto s = retained_generators(t, m);
      const auto generated = closure(t, s);
      const auto gm = primary_part(t, m).part;
      ASSERT_TRUE(std::includes(generated.elements.begin(),
                                generated.elements.end(), gm.elements.begin(),
                                gm.elements.end()))
          << g.name << " m=" << m;
      ASSERT_EQ(generated.size() % m, 0u);
      // The m-primary part of <S> is exactly G_m.
      const auto sub = subgroup_table(t, generated);
      const auto inner = primary_part(sub.table, m).part;
      Elements lifted;
      for (auto x : inner.elements) lifted.push_back(sub.to_parent[x]);
      std::sort(lifted.begin(), lifted.end());
      ASSERT_EQ(lifted, gm.elements);
    }
  }
}

TEST(RetainedGenerators, CanOvershootThePrimaryPart) {
  // In Z2 x Z2 x Z3 with m = 4, the element (0, 1, 1) of order 6 shares the
  // prime 2 with m and is retained, so <S> is the whole group of order 12
  // while G_4 has order 4.
  const auto t = build_abelian(Inv{2, 2, 3});
  const auto s = retained_generators(t, 4);
  EXPECT_EQ(s.front(), 3u);  // element 1 has order 3 and is pruned
  EXPECT_EQ(closure(t, s).size(), 12u);
  EXPECT_EQ(primary_part(t, 4).part.size(), 4u);
}

TEST(RetainedGenerators, ExhaustedRunsSpanThePrimaryPart) {
  // The loop only runs out without returning when there is nothing to
  // choose (the trivial group); on every such run <S> = G_m.
  std::size_t exhausted = 0;
  for (const auto& g : corpus::abelian_up_to(48)) {
    const auto& t = g.table;
    for (auto m : oracle::divisors(t.order())) {
      const auto [h, trace] = find_subgroup_traced(t, m);
      if (!trace.exhausted()) continue;
      ++exhausted;
      EXPECT_EQ(closure(t, trace.retained()).elements,
                primary_part(t, m).part.elements);
    }
  }
  EXPECT_EQ(exhausted, 1u);
}
