#include <gtest/gtest.h>

#include "generators.hpp"
#include "superinv/supermatrix.hpp"

namespace superinv {
namespace {

struct OneOne {
  ContextPtr ctx = RingContext::create({"a", "b", "c"}, {"al", "be", "ga"});
  Scalar a = Scalar::even_generator(ctx, 0), b = Scalar::even_generator(ctx, 1), c = Scalar::even_generator(ctx, 2);
  Scalar al = Scalar::odd_generator(ctx, 0), be = Scalar::odd_generator(ctx, 1), ga = Scalar::odd_generator(ctx, 2);

  ScalarMatrix one(const Scalar& v) const {
    ScalarMatrix m(ctx, 1, 1);
    m(0, 0) = v;
    return m;
  }
  SuperMatrix matrix(const Scalar& e11, const Scalar& e12, const Scalar& e21, const Scalar& e22) const {
    return SuperMatrix::from_blocks(one(e11), one(e12), one(e21), one(e22));
  }
};

// Ber through the other Schur complement: det A / det(D - C A^-1 B).
Scalar ber_by_left_schur(const SuperMatrix& m) {
  const ScalarMatrix a = m.block(Parity::Even, Parity::Even), b = m.block(Parity::Even, Parity::Odd);
  const ScalarMatrix c = m.block(Parity::Odd, Parity::Even), d = m.block(Parity::Odd, Parity::Odd);
  return det_even(a) * det_even(d - c * inverse_even(a) * b).inverse();
}

TEST(Berezinian, OneByOneClosedForm) {
  OneOne r;
  const SuperMatrix g = r.matrix(r.a, r.al, r.be, r.b);
  EXPECT_EQ(berezinian(g), (r.a - r.al * r.b.inverse() * r.be) * r.b.inverse());
  EXPECT_EQ(berezinian_star(g), (r.b - r.be * r.a.inverse() * r.al) * r.a.inverse());
  EXPECT_EQ(classify(g), MatrixKind::Even);
}

TEST(Berezinian, FakeColumnsAndRejections) {
  OneOne r;
  // odd column (al; b) in the even slot: fake-I, Ber defined
  const SuperMatrix fake1 = r.matrix(r.ga, r.al, r.c, r.b);
  EXPECT_EQ(classify(fake1), MatrixKind::FakeI);
  EXPECT_EQ(berezinian(fake1), (r.ga - r.al * r.b.inverse() * r.c) * r.b.inverse());
  const SuperMatrix fake2 = r.matrix(r.a, r.c, r.be, r.ga);
  EXPECT_EQ(classify(fake2), MatrixKind::FakeII);
  EXPECT_EQ(berezinian_star(fake2), (r.ga - r.be * r.a.inverse() * r.c) * r.a.inverse());

  const SuperMatrix mixed = r.matrix(r.a + r.ga, r.al, r.be, r.b);
  EXPECT_EQ(classify(mixed), MatrixKind::Inhomogeneous);
  EXPECT_THROW(berezinian(mixed), ShapeError);
}

TEST(SuperCramer, OneByOneExample) {
  OneOne r;
  const SuperMatrix g = r.matrix(r.a, r.al, r.be, r.b);
  const auto sol = super_cramer_solve(g, {r.c, r.ga});
  ASSERT_EQ(sol.size(), 2u);
  EXPECT_EQ(sol[0], (r.c - r.al * r.b.inverse() * r.ga) * (r.a - r.al * r.b.inverse() * r.be).inverse());
  EXPECT_EQ(sol[1], (r.ga - r.be * r.a.inverse() * r.c) * (r.b - r.be * r.a.inverse() * r.al).inverse());
}

class SquareProperty : public ::testing::TestWithParam<std::pair<std::size_t, std::size_t>> {};

TEST_P(SquareProperty, BerAgreesWithOtherSchurComplement) {
  const auto [p, q] = GetParam();
  Rng rng(1000 + 10 * p + q);
  for (int k = 0; k < testgen::kPropertyCases / 4; ++k) {
    const ContextPtr ctx = grassmann_context(2 * p * q);
    std::size_t next = 0;
    const SuperMatrix m = testgen::numeric_square(ctx, p, q, next, rng);
    EXPECT_EQ(berezinian(m), ber_by_left_schur(m));
  }
}

TEST_P(SquareProperty, BerIsMultiplicative) {
  const auto [p, q] = GetParam();
  Rng rng(2000 + 10 * p + q);
  for (int k = 0; k < testgen::kPropertyCases / 4; ++k) {
    const ContextPtr ctx = grassmann_context(4 * p * q);
    std::size_t next = 0;
    const SuperMatrix m = testgen::numeric_square(ctx, p, q, next, rng);
    const SuperMatrix n = testgen::numeric_square(ctx, p, q, next, rng);
    EXPECT_EQ(berezinian(m * n), berezinian(m) * berezinian(n));
  }
}

TEST_P(SquareProperty, BerStarIsBerOfInverse) {
  const auto [p, q] = GetParam();
  Rng rng(3000 + 10 * p + q);
  for (int k = 0; k < testgen::kPropertyCases / 4; ++k) {
    const ContextPtr ctx = grassmann_context(2 * p * q);
    std::size_t next = 0;
    const SuperMatrix m = testgen::numeric_square(ctx, p, q, next, rng);
    const SuperMatrix inv = inverse(m);
    EXPECT_EQ(m * inv, SuperMatrix::identity(ctx, {p, q}));
    EXPECT_EQ(berezinian_star(m), berezinian(inv));
    EXPECT_TRUE((berezinian_star(m) * berezinian(m)).is_one());
    EXPECT_EQ(berezinian(pi_reverse(m)), berezinian_star(m));
  }
}

TEST_P(SquareProperty, UdlReassembles) {
  const auto [p, q] = GetParam();
  Rng rng(4000 + 10 * p + q);
  for (int k = 0; k < testgen::kPropertyCases / 4; ++k) {
    const ContextPtr ctx = grassmann_context(2 * p * q);
    std::size_t next = 0;
    const SuperMatrix m = testgen::numeric_square(ctx, p, q, next, rng);
    const UdlFactors f = udl_decompose(m);
    EXPECT_EQ(f.upper * f.diagonal * f.lower, m);
    EXPECT_EQ(berezinian(f.diagonal), berezinian(m));
  }
}

TEST_P(SquareProperty, CramerSolvesEvenAndOddRightHandSides) {
  const auto [p, q] = GetParam();
  Rng rng(5000 + 10 * p + q);
  for (int k = 0; k < testgen::kPropertyCases / 4; ++k) {
    const ContextPtr ctx = grassmann_context(2 * p * q + p + q);
    std::size_t next = 0;
    const SuperMatrix m = testgen::numeric_square(ctx, p, q, next, rng);
    const bool odd_rhs = rng.below(2);
    std::vector<Scalar> b;
    for (std::size_t i = 0; i < p + q; ++i) {
      const bool odd = (i >= p) != odd_rhs;
      b.push_back(odd ? Scalar::odd_generator(ctx, next++).scaled(rng.nonzero_rational())
                      : Scalar::constant(ctx, rng.nonzero_rational()));
    }
    const auto x = super_cramer_solve(m, b);
    for (std::size_t i = 0; i < p + q; ++i) {
      Scalar acc(ctx);
      for (std::size_t j = 0; j < p + q; ++j) acc += m(i, j) * x[j];
      EXPECT_EQ(acc, b[i]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, SquareProperty,
                         ::testing::Values(std::pair<std::size_t, std::size_t>{1, 1},
                                           std::pair<std::size_t, std::size_t>{2, 1},
                                           std::pair<std::size_t, std::size_t>{1, 2},
                                           std::pair<std::size_t, std::size_t>{2, 2}));

TEST(Submatrix, KeepAndDeleteSelectSlots) {
  const ContextPtr ctx = grassmann_context(8);
  Rng rng(6);
  std::size_t next = 0;
  const SuperMatrix m = testgen::numeric_square(ctx, 2, 2, next, rng);
  const SuperMatrix kept = submatrix_keep(m, {{1}, {0}}, {{0}, {1}});
  EXPECT_EQ(kept(0, 0), m(1, 0));
  EXPECT_EQ(kept(1, 1), m(2, 3));
  const SuperMatrix deleted = submatrix_delete(m, {{0}, {1}}, {{1}, {0}});
  EXPECT_EQ(deleted, kept);
}

}  // namespace
}  // namespace superinv
