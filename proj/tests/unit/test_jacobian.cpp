#include <gtest/gtest.h>

#include <random>

#include "graphjac/corpus.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/oracle.hpp"
#include "test_support.hpp"

using namespace graphjac;

namespace {

using Factors = std::vector<Integer>;

}  // namespace

TEST(Analyze, Cycles) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const JacobianStructure s = analyze(families::cycle(n));
    EXPECT_EQ(s.invariant_factors(), (Factors{Integer(n)}));
    EXPECT_TRUE(s.is_cyclic());
    EXPECT_EQ(s.group_order(), n);
    if (n <= 8) {
      EXPECT_EQ(oracle::enumerate_group(families::cycle(n)).size(), n);
    }
  }
}

TEST(Analyze, CompleteFour) {
  const JacobianStructure s = analyze(families::complete(4));
  EXPECT_EQ(s.invariant_factors(), (Factors{4, 4}));
  EXPECT_FALSE(s.is_cyclic());
  EXPECT_EQ(s.group_order(), 16);
  ASSERT_EQ(s.generators().size(), 2u);
}

TEST(Analyze, Bananas) {
  for (long m = 2; m <= 9; ++m) {
    const JacobianStructure s = analyze(families::banana(m));
    EXPECT_EQ(s.invariant_factors(), (Factors{m}));
    EXPECT_TRUE(s.is_cyclic());
  }
}

TEST(Analyze, TreesAreTrivial) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const JacobianStructure s = analyze(families::path(n));
    EXPECT_TRUE(s.invariant_factors().empty());
    EXPECT_TRUE(s.generators().empty());
    EXPECT_EQ(s.group_order(), 1);
    EXPECT_TRUE(s.is_cyclic());
  }
}

TEST(Analyze, WheelFamily) {
  // plain wheels split; removing a spoke makes them cyclic
  EXPECT_EQ(analyze(families::wheel(5)).invariant_factors(), (Factors{11, 11}));
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_TRUE(analyze(families::wheel_minus_spoke(n)).is_cyclic()) << n;
}

TEST(SpanningTreeCount, Examples) {
  EXPECT_EQ(spanning_tree_count(families::cycle(5)), 5);
  EXPECT_EQ(spanning_tree_count(families::complete(5)), 125);
  EXPECT_EQ(spanning_tree_count(families::complete(4)), 16);
  EXPECT_EQ(spanning_tree_count(families::path(2)), 1);
  EXPECT_EQ(oracle::spanning_trees_by_enumeration(families::complete(5)), 125u);
}

TEST(JacobianInvariants, Corpus) {
  for (const auto& [name, g] : builtin_corpus()) {
    const JacobianStructure s = analyze(g);
    Integer prod = 1;
    for (const auto& d : s.invariant_factors()) {
      EXPECT_GT(d, 1) << name;
      prod *= d;
    }
    EXPECT_EQ(prod, s.group_order()) << name;
    EXPECT_EQ(prod, spanning_tree_count(g)) << name;
    EXPECT_EQ(prod, oracle::spanning_trees_by_enumeration(g)) << name;
    EXPECT_EQ(s.is_cyclic(), s.invariant_factors().size() <= 1) << name;
    for (std::size_t i = 0; i + 1 < s.invariant_factors().size(); ++i)
      EXPECT_TRUE(mpz_divisible_p(s.invariant_factors()[i + 1].get_mpz_t(),
                                  s.invariant_factors()[i].get_mpz_t()));
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
      const Divisor& gen = s.generators()[i];
      const Integer& d = s.invariant_factors()[i];
      EXPECT_EQ(degree(gen), 0);
      EXPECT_TRUE(is_q_reduced(g, gen, 0)) << name;
      EXPECT_TRUE(s.is_principal(d * gen)) << name;
      for (const auto& p : prime_divisors(d))
        EXPECT_FALSE(s.is_principal(Integer(d / p) * gen)) << name;
      EXPECT_EQ(order_general(s, gen), d);
    }
    if (s.is_cyclic() && !s.generators().empty()) {
      EXPECT_EQ(element_order(s, s.generators()[0]), s.group_order()) << name;
    }
  }
}

TEST(ElementOrder, Examples) {
  const JacobianStructure c3 = analyze(families::cycle(3));
  EXPECT_EQ(element_order(c3, Divisor{1, -1, 0}), 3);
  EXPECT_EQ(element_order(c3, Divisor{3, -3, 0}), 1);
  EXPECT_EQ(element_order(analyze(families::banana(4)), Divisor{1, -1}), 4);
  EXPECT_EQ(element_order(analyze(families::path(3)), Divisor{1, 0, -1}), 1);
  try {
    element_order(analyze(families::complete(4)), Divisor{1, -1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCyclic);
  }
  EXPECT_THROW(element_order(c3, Divisor{1, 0, 0}), Error);
}

TEST(ElementOrder, AgreesWithBruteForceOnCyclicCorpus) {
  for (const auto& [name, g] : builtin_corpus()) {
    const JacobianStructure s = analyze(g);
    if (!s.is_cyclic() || s.group_order() > 60) continue;
    const auto table = oracle::enumerate_group(g);
    for (std::size_t i = 0; i < table.size(); ++i)
      EXPECT_EQ(element_order(s, table.elements()[i]), table.order(i)) << name;
  }
}

TEST(OrderGeneral, CompleteFour) {
  const MultiGraph k4 = families::complete(4);
  const JacobianStructure s = analyze(k4);
  const auto table = oracle::enumerate_group(k4);
  EXPECT_EQ(order_general(s, Divisor{1, -1, 0, 0}),
            oracle::brute_force_order(table, Divisor{1, -1, 0, 0}));
  EXPECT_EQ(order_general(s, Divisor{1, -1, 0, 0}), 4);
  EXPECT_EQ(order_general(s, Divisor(4)), 1);
  for (std::size_t i = 0; i < table.size(); ++i)
    EXPECT_EQ(order_general(s, table.elements()[i]), table.order(i));
  const JacobianStructure c7 = analyze(families::cycle(7));
  EXPECT_EQ(order_general(c7, c7.generators()[0]), 7);
}

TEST(ClassArithmetic, Examples) {
  const JacobianStructure s = analyze(families::cycle(3));
  const Divisor d{1, -1, 0};
  EXPECT_EQ(class_add(s, d, -d), s.reduce(s.zero()));
  EXPECT_EQ(class_scale(s, d, s.group_order()), s.reduce(s.zero()));
  const Divisor twice = class_add(s, d, d);
  EXPECT_EQ(twice, s.reduce(Divisor{2, -2, 0}));
  EXPECT_EQ(twice, s.reduce(-Divisor{0, 1, -1}));
  const auto table = oracle::enumerate_group(families::cycle(3));
  const std::size_t i = table.index_of(d);
  EXPECT_EQ(table.elements()[table.add(i, i)], twice);
  EXPECT_THROW(class_add(s, Divisor{1, 0, 0}, d), Error);
}

TEST(ClassArithmetic, GroupLawsOnCorpus) {
  for (const auto& [name, g] : builtin_corpus()) {
    if (spanning_tree_count(g) > 60) continue;
    const JacobianStructure s = analyze(g);
    const auto table = oracle::enumerate_group(g);
    const auto& el = table.elements();
    const std::size_t k = el.size();
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_EQ(class_scale(s, el[i], s.group_order()), s.zero()) << name;
      for (std::size_t j = 0; j < k; j += 1 + k / 7) {
        const Divisor ij = class_add(s, el[i], el[j]);
        EXPECT_EQ(ij, class_add(s, el[j], el[i]));
        EXPECT_EQ(ij, el[table.add(i, j)]) << name;
        const std::size_t l = (i * 7 + j * 3) % k;
        EXPECT_EQ(class_add(s, ij, el[l]),
                  class_add(s, el[i], class_add(s, el[j], el[l])));
      }
    }
  }
}

TEST(JacobianStructure, ReduceAndEquivalence) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = testutil::random_graph(2 + trial % 9, trial % 6, rng);
    const JacobianStructure s = analyze(g);
    const Divisor a = random_divisor(g.vertex_count(), rng, 4);
    const Divisor b = random_lift(g, a, rng, 5);
    EXPECT_EQ(s.reduce(a), dhar_reduce(g, a, 0));
    EXPECT_EQ(s.reduce(a), s.reduce(b));
    EXPECT_TRUE(s.equivalent(a, b));
    const Divisor c = random_divisor(g.vertex_count(), rng, 4);
    EXPECT_EQ(s.equivalent(a, c), equivalent(g, a, c));
    EXPECT_EQ(s.is_principal(a - c), equivalent(g, a, c));
  }
}
