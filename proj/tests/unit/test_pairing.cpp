#include <gtest/gtest.h>

#include <random>

#include "graphjac/corpus.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/oracle.hpp"
#include "graphjac/pairing.hpp"
#include "test_support.hpp"

using namespace graphjac;

namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

PairingValue pv(long p, long d) { return PairingValue(q(p, d)); }

RationalMatrix times(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b;
}

}  // namespace

TEST(PairingValue, CanonicalForm) {
  EXPECT_EQ(pv(5, 3).to_string(), "2/3");
  EXPECT_EQ(pv(-1, 3).to_string(), "2/3");
  EXPECT_EQ(pv(4, 2).to_string(), "0/1");
  EXPECT_EQ(pv(0, 1).to_string(), "0/1");
  EXPECT_EQ(pv(1, 3) + pv(2, 3), pv(0, 1));
  EXPECT_EQ(-pv(1, 4), pv(3, 4));
  EXPECT_EQ(Integer(3) * pv(1, 2), pv(1, 2));
  EXPECT_EQ(PairingValue::parse("2/3"), pv(2, 3));
  EXPECT_EQ(PairingValue::parse("4/6"), pv(2, 3));
  EXPECT_EQ(PairingValue::parse("-1/3"), pv(2, 3));
  EXPECT_THROW(PairingValue::parse("1/0"), Error);
  EXPECT_THROW(PairingValue::parse("x"), Error);
}

TEST(GenInverseMinor, CycleThree) {
  const GeneralizedInverse l = gen_inverse_minor(families::cycle(3), 2);
  RationalMatrix want(3, 3);
  want(0, 0) = q(2, 3);
  want(0, 1) = q(1, 3);
  want(1, 0) = q(1, 3);
  want(1, 1) = q(2, 3);
  EXPECT_EQ(l.matrix(), want);
  EXPECT_EQ(l.describe(), "minor:2");
  EXPECT_EQ(l.deleted_vertex(), std::optional<Vertex>(2));
}

TEST(GenInverseMinor, BananaThree) {
  const GeneralizedInverse l = gen_inverse_minor(families::banana(3), 1);
  RationalMatrix want(2, 2);
  want(0, 0) = q(1, 3);
  EXPECT_EQ(l.matrix(), want);
}

TEST(GenInverseMinor, OutOfRangeThrows) {
  EXPECT_THROW(gen_inverse_minor(families::cycle(3), 3), Error);
}

TEST(MoorePenrose, BananaTwo) {
  const GeneralizedInverse l = moore_penrose(families::banana(2));
  RationalMatrix want(2, 2);
  want(0, 0) = want(1, 1) = q(1, 8);
  want(0, 1) = want(1, 0) = q(-1, 8);
  EXPECT_EQ(l.matrix(), want);
  EXPECT_EQ(l.describe(), "mp");
}

TEST(MoorePenrose, IdentitiesOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = testutil::random_graph(1 + trial % 8, trial % 5, rng);
    const std::size_t n = g.vertex_count();
    const RationalMatrix qm = to_rational(laplacian(g));
    const RationalMatrix p = moore_penrose(g).matrix();
    RationalMatrix proj = to_rational(IntegerMatrix::identity(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) proj(i, j) -= q(1, n);
    EXPECT_EQ(times(qm, p), proj);
    EXPECT_EQ(times(p, qm), proj);
    EXPECT_EQ(times(times(p, qm), p), p);
    EXPECT_EQ(p, p.transpose());
  }
}

TEST(GeneralizedInverse, DefiningIdentityAndTranspose) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = testutil::random_graph(1 + trial % 8, trial % 5, rng);
    const RationalMatrix qm = to_rational(laplacian(g));
    std::vector<GeneralizedInverse> all{moore_penrose(g)};
    for (Vertex i = 0; i < g.vertex_count(); ++i)
      all.push_back(gen_inverse_minor(g, i));
    for (const auto& l : all) {
      EXPECT_EQ(times(times(qm, l.matrix()), qm), qm);
      EXPECT_EQ(times(times(qm, l.matrix().transpose()), qm), qm);
      EXPECT_NO_THROW(GeneralizedInverse::from_matrix(g, l.matrix()));
      EXPECT_NO_THROW(
          GeneralizedInverse::from_matrix(g, l.matrix().transpose()));
    }
  }
}

TEST(GeneralizedInverse, FromMatrixRejectsNonInverse) {
  const MultiGraph g = families::cycle(3);
  EXPECT_THROW(GeneralizedInverse::from_matrix(
                   g, to_rational(IntegerMatrix::identity(3))),
               std::invalid_argument);
  // minor inverse plus any multiple of J still works
  RationalMatrix shifted = gen_inverse_minor(g, 0).matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) shifted(i, j) += q(5, 7);
  const auto l = GeneralizedInverse::from_matrix(g, shifted);
  EXPECT_EQ(l.describe(), "custom");
  EXPECT_EQ(monodromy_pairing(Divisor{1, -1, 0}, Divisor{1, -1, 0}, l),
            pv(2, 3));
}

TEST(MonodromyPairing, GoldenValues) {
  const MultiGraph c3 = families::cycle(3);
  EXPECT_EQ(monodromy_pairing(Divisor{1, -1, 0}, Divisor{1, -1, 0},
                              gen_inverse_minor(c3, 2)),
            pv(2, 3));
  for (long m = 2; m <= 6; ++m) {
    const MultiGraph b = families::banana(m);
    EXPECT_EQ(monodromy_pairing(Divisor{1, -1}, Divisor{1, -1},
                                gen_inverse_minor(b, 1)),
              pv(1, m));
  }
  EXPECT_TRUE(monodromy_pairing(Divisor{2, 1, -3}, Divisor(3),
                                moore_penrose(c3))
                  .is_zero());
}

TEST(MonodromyPairing, Errors) {
  const MultiGraph c3 = families::cycle(3);
  const GeneralizedInverse l = gen_inverse_minor(c3, 0);
  try {
    monodromy_pairing(Divisor{1, 0, 0}, Divisor{1, -1, 0}, l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonZeroDegree);
  }
  EXPECT_THROW(monodromy_pairing(Divisor{1, -1}, Divisor{1, -1}, l), Error);
}

TEST(PairingByDefinition, Examples) {
  const MultiGraph c3 = families::cycle(3);
  EXPECT_EQ(pairing_by_definition(c3, Divisor{1, -1, 0}, Divisor{1, -1, 0}),
            pv(2, 3));
  // principal D2 pairs to zero with anything
  const Divisor principal = div_of_function(c3, VertexFunction{4, -1, 2});
  EXPECT_TRUE(
      pairing_by_definition(c3, Divisor{5, -2, -3}, principal).is_zero());
  EXPECT_TRUE(pairing_by_definition(c3, Divisor(3), Divisor{1, -1, 0})
                  .is_zero());
  EXPECT_THROW(pairing_by_definition(c3, Divisor{1, 0, 0}, Divisor{1, -1, 0}),
               Error);
}

TEST(PairingAxioms, RandomGraphs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiGraph g = testutil::random_graph(2 + trial % 7, trial % 6, rng);
    const std::size_t n = g.vertex_count();
    const GeneralizedInverse l = gen_inverse_minor(g, n - 1);
    const GeneralizedInverse mp = moore_penrose(g);
    for (int k = 0; k < 10; ++k) {
      const Divisor a = random_divisor(n, rng), a2 = random_divisor(n, rng);
      const Divisor b = random_divisor(n, rng);
      const PairingValue ab = monodromy_pairing(a, b, l);
      EXPECT_EQ(monodromy_pairing(a + a2, b, l),
                ab + monodromy_pairing(a2, b, l));
      EXPECT_EQ(monodromy_pairing(b, a, l), ab);
      EXPECT_EQ(monodromy_pairing(random_lift(g, a, rng), b, l), ab);
      EXPECT_EQ(monodromy_pairing(a, b, mp), ab);
      EXPECT_EQ(pairing_by_definition(g, a, b), ab);
    }
  }
}

TEST(PairingAxioms, NonDegenerateOnSmallCorpus) {
  for (const auto& [name, g] : small_multigraphs(4, 5)) {
    const auto table = oracle::enumerate_group(g);
    const GeneralizedInverse l = gen_inverse_minor(g, 0);
    for (std::size_t i = 0; i < table.size(); ++i) {
      bool all_zero = true;
      for (const auto& e : table.elements())
        all_zero = all_zero &&
                   monodromy_pairing(table.elements()[i], e, l).is_zero();
      EXPECT_EQ(all_zero, i == table.zero_index()) << name;
    }
  }
}
