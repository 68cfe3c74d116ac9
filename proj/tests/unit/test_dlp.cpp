#include <gtest/gtest.h>

#include <random>

#include "graphjac/corpus.hpp"
#include "graphjac/dlp.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/oracle.hpp"
#include "test_support.hpp"

using namespace graphjac;

TEST(DlpCyclic, CycleThreeGolden) {
  const JacobianStructure s = analyze(families::cycle(3));
  const Divisor g{1, -1, 0};
  ASSERT_EQ(s.pair(g, g).to_string(), "2/3");
  ASSERT_EQ(s.pair(Integer(2) * g, g).to_string(), "1/3");
  const DlpInstance inst{s, g, Integer(2) * g};
  const auto sol = dlp_cyclic(inst);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, (DlpSolution{2, 3}));
  EXPECT_TRUE(verify_solution(inst, *sol));
}

TEST(DlpCyclic, TrivialCases) {
  const JacobianStructure s = analyze(families::cycle(6));
  const Divisor d{1, 0, -1, 0, 0, 0};  // order 3 in Z/6
  const auto zero = dlp_cyclic({s, d, s.zero()});
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(*zero, (DlpSolution{0, 3}));
  const auto one = dlp_cyclic({s, d, d});
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(*one, (DlpSolution{1, 3}));
  // a generator is not a multiple of an order-3 element
  EXPECT_FALSE(dlp_cyclic({s, d, s.generators()[0]}).has_value());
  // order-1 base
  const auto deg = dlp_cyclic({s, s.zero(), s.zero()});
  ASSERT_TRUE(deg.has_value());
  EXPECT_EQ(*deg, (DlpSolution{0, 1}));
}

TEST(DlpCyclic, Errors) {
  const JacobianStructure k4 = analyze(families::complete(4));
  try {
    dlp_cyclic({k4, Divisor{1, -1, 0, 0}, Divisor{1, -1, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCyclic);
  }
  const JacobianStructure c3 = analyze(families::cycle(3));
  EXPECT_THROW(dlp_cyclic({c3, Divisor{1, 0, 0}, Divisor{1, -1, 0}}), Error);
}

TEST(DlpGeneral, CompleteFourAgainstBruteForce) {
  const MultiGraph k4 = families::complete(4);
  const JacobianStructure s = analyze(k4);
  const auto table = oracle::enumerate_group(k4);
  for (const auto& d : table.elements())
    for (const auto& t : table.elements()) {
      const auto want = oracle::brute_force_dlp(table, d, t);
      const auto got = dlp_general({s, d, t});
      ASSERT_EQ(want.has_value(), got.has_value());
      if (!got) continue;
      EXPECT_EQ(got->x, *want);
      EXPECT_EQ(got->modulus, order_general(s, d));
      EXPECT_TRUE(verify_solution({s, d, t}, *got));
    }
}

TEST(DlpGeneral, OutsideSubgroupIsNoSolution) {
  const JacobianStructure s = analyze(families::complete(4));
  ASSERT_EQ(s.generators().size(), 2u);
  EXPECT_FALSE(
      dlp_general({s, s.generators()[0], s.generators()[1]}).has_value());
}

TEST(DlpGeneral, AgreesWithCyclicOnCyclicGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Family fams[] = {Family::Cycle, Family::Banana, Family::Wheel,
                           Family::Random};
    const Family fam = fams[trial % 4];
    const MultiGraph g = make_family_graph(
        fam, fam == Family::Banana ? 2 + trial % 9 : 3 + trial % 9, rng);
    const JacobianStructure s = analyze(g);
    const Divisor d = random_divisor(g.vertex_count(), rng);
    std::uniform_int_distribution<long> pick(0, 50);
    const Divisor t = class_scale(s, d, pick(rng));
    const auto a = dlp_cyclic({s, d, t});
    const auto b = dlp_general({s, d, t});
    ASSERT_TRUE(a && b);
    EXPECT_EQ(*a, *b);
  }
}

TEST(Dlp, AgreesWithBruteForceOnSmallCorpus) {
  std::mt19937_64 rng(62);
  for (const auto& [name, g] : builtin_corpus()) {
    const JacobianStructure s = analyze(g);
    if (s.group_order() > 60) continue;
    const auto table = oracle::enumerate_group(g);
    for (int k = 0; k < 6; ++k) {
      const auto& d = table.elements()[rng() % table.size()];
      const auto& t = table.elements()[rng() % table.size()];
      const auto want = oracle::brute_force_dlp(table, d, t);
      const auto got = dlp_general({s, d, t});
      ASSERT_EQ(want.has_value(), got.has_value()) << name;
      if (got) {
        EXPECT_EQ(got->x, *want) << name;
      }
      if (s.is_cyclic()) {
        const auto c = dlp_cyclic({s, d, t});
        EXPECT_EQ(c, got) << name;
      }
    }
  }
}

TEST(Dlp, RoundTripAndLiftIndependence) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiGraph g = make_family_graph(Family::Random, 5 + trial % 20, rng);
    const JacobianStructure s = analyze(g);
    const Divisor d = random_divisor(g.vertex_count(), rng);
    const Integer x = static_cast<unsigned long>(rng() % 1000);
    const Divisor t = class_scale(s, d, x);
    const auto sol = dlp_cyclic({s, d, t});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->modulus, element_order(s, d));
    EXPECT_EQ(sol->x, mod(x, sol->modulus));
    EXPECT_TRUE(verify_solution({s, d, t}, *sol));
    const auto lifted = dlp_cyclic(
        {s, random_lift(g, d, rng, 9), random_lift(g, t, rng, 9)});
    ASSERT_TRUE(lifted.has_value());
    EXPECT_EQ(*lifted, *sol);
  }
}

TEST(VerifySolution, RejectsWrongAnswers) {
  const JacobianStructure s = analyze(families::cycle(5));
  const Divisor d = s.generators()[0];
  const DlpInstance inst{s, d, class_scale(s, d, 3)};
  EXPECT_TRUE(verify_solution(inst, {3, 5}));
  EXPECT_FALSE(verify_solution(inst, {4, 5}));   // x + 1
  EXPECT_FALSE(verify_solution(inst, {3, 10}));  // proper multiple
  EXPECT_FALSE(verify_solution(inst, {8, 5}));   // out of range
  EXPECT_FALSE(verify_solution(inst, {-2, 5}));
}

TEST(CrtMerge, Cases) {
  EXPECT_EQ(crt_merge({2, 3}, {3, 4}), (DlpSolution{11, 12}));
  EXPECT_EQ(crt_merge({1, 4}, {3, 6}), (DlpSolution{9, 12}));
  EXPECT_FALSE(crt_merge({1, 4}, {2, 6}).has_value());
  EXPECT_EQ(crt_merge({0, 1}, {5, 7}), (DlpSolution{5, 7}));
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    const long m1 = 1 + rng() % 30, m2 = 1 + rng() % 30;
    const long x = rng() % 1000;
    const auto r = crt_merge({x % m1, m1}, {x % m2, m2});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->modulus, lcm(m1, m2));
    EXPECT_EQ(r->x, x % r->modulus.get_si());
  }
}
