#include <gtest/gtest.h>

#include "generators.hpp"
#include "superinv/minors.hpp"

namespace superinv {
namespace {

ColumnLabel even(std::size_t i) { return {Parity::Even, i}; }
ColumnLabel odd(std::size_t i) { return {Parity::Odd, i}; }

TEST(MinorSymbol, PrintsAndValidates) {
  const MatrixShape shape{1, 1, 2, 2};
  const MinorSymbol plain = MinorSymbol::plain(false, {1}, {1});
  EXPECT_EQ(plain.to_string(), "X[1|1]");
  EXPECT_EQ(plain.kind(), MinorKind::Plain);

  const MinorSymbol fake1{false, {odd(2)}, {odd(1)}};
  EXPECT_EQ(fake1.to_string(), "X[^2|1]");
  EXPECT_EQ(fake1.kind(), MinorKind::FakeI);
  EXPECT_NO_THROW(fake1.validate(shape));

  const MinorSymbol fake2{true, {even(1)}, {even(2)}};
  EXPECT_EQ(fake2.to_string(), "Xs[1|^2]");
  EXPECT_EQ(fake2.kind(), MinorKind::FakeII);
  EXPECT_EQ(fake2.to_latex(), "X^*_{1|2}");

  EXPECT_THROW(MinorSymbol::plain(false, {3}, {1}).validate(shape), std::invalid_argument);
  EXPECT_THROW((MinorSymbol{false, {even(1)}, {odd(1)}}).validate({2, 1, 3, 2}), std::invalid_argument);
  const MinorSymbol two_fakes{false, {odd(1), odd(2)}, {even(1)}};
  EXPECT_THROW(two_fakes.validate({2, 1, 3, 2}), std::invalid_argument);
}

TEST(SuperMinor, OneByOneMatchesHandExpansion) {
  auto g = generic_matrix(1, 1, 2, 2);
  const auto& ctx = g.ctx;
  auto even_gen = [&](const char* n) { return Scalar::even_generator(ctx, *ctx->find_even(n)); };
  auto odd_gen = [&](const char* n) { return Scalar::odd_generator(ctx, *ctx->find_odd(n)); };
  const Scalar x12 = even_gen("x[1,2]"), y11 = even_gen("y[1,1]");
  const Scalar al11 = odd_gen("al[1,1]"), be12 = odd_gen("be[1,2]");
  // X[2|1] = Ber (x12 al11; be12 y11)
  EXPECT_EQ(super_minor(g.matrix, MinorSymbol::plain(false, {2}, {1})),
            (x12 - al11 * y11.inverse() * be12) * y11.inverse());
  // Xs[2|1] = Ber* of the same matrix
  EXPECT_EQ(super_minor(g.matrix, MinorSymbol::plain(true, {2}, {1})),
            (y11 - be12 * x12.inverse() * al11) * x12.inverse());
}

TEST(SuperMinorProperty, InvariantUnderUnimodularElements) {
  const MatrixShape shape{1, 1, 2, 2};
  const std::vector<MinorSymbol> minors{
      MinorSymbol::plain(false, {1}, {1}), MinorSymbol::plain(true, {2}, {2}),
      MinorSymbol{false, {odd(2)}, {odd(1)}}, MinorSymbol{true, {even(1)}, {even(2)}}};
  for (int k = 0; k < 20; ++k) {
    Rng rng(700 + k);
    const ContextPtr ctx = grassmann_context(4 + unimodular_odd_count(1, 1));
    SuperMatrix a(ctx, {1, 1}, {2, 2});
    std::size_t next = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const bool is_odd = (i < 1) != (j < 2);
        a(i, j) = is_odd ? Scalar::odd_generator(ctx, next++).scaled(rng.nonzero_rational())
                         : Scalar::constant(ctx, rng.nonzero_rational());
      }
    }
    const SuperMatrix g = random_unimodular(ctx, 1, 1, next, rng);
    ASSERT_TRUE(berezinian(g).is_one());
    for (const auto& m : minors) {
      m.validate(shape);
      EXPECT_EQ(super_minor(g * a, m), super_minor(a, m)) << m.to_string() << " seed " << 700 + k;
    }
  }
}

TEST(SuperMinorProperty, RandomUnimodularHasBerOne) {
  for (auto [r, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}}) {
    for (int k = 0; k < 10; ++k) {
      Rng rng(800 + k);
      const ContextPtr ctx = grassmann_context(unimodular_odd_count(r, s));
      EXPECT_TRUE(berezinian(random_unimodular(ctx, r, s, 0, rng)).is_one());
    }
  }
}

TEST(CoordinateModel, NumericModelIsDeterministic) {
  const MatrixShape shape{2, 1, 3, 2};
  CoordinateModel a = CoordinateModel::numeric(shape, 17), b = CoordinateModel::numeric(shape, 17);
  const MinorSymbol m = MinorSymbol::plain(false, {1, 3}, {2});
  EXPECT_EQ(a.minor(m).to_string(), b.minor(m).to_string());
  EXPECT_EQ(a.kind(), ModelKind::Numeric);
}

TEST(CoordinateModel, SliceFixesHeadBlock) {
  CoordinateModel slice = CoordinateModel::fft_slice({2, 1, 3, 2});
  const SuperMatrix& a = slice.matrix();
  EXPECT_TRUE(a(1, 1).is_one());
  EXPECT_TRUE(a(2, 3).is_one());
  EXPECT_TRUE(a(0, 1).is_zero());
  // the head minor on the slice is the slice parameter itself
  EXPECT_EQ(slice.minor(MinorSymbol::plain(false, {1, 2}, {1})), a(0, 0));
}

class FftShapes : public ::testing::TestWithParam<MatrixShape> {};

TEST_P(FftShapes, DecompositionIsExactAndEntriesMatch) {
  const MatrixShape shape = GetParam();
  auto g = generic_matrix(shape.r, shape.s, shape.p, shape.q);
  const FftDecomposition d = fft_decompose(g.matrix, shape);
  EXPECT_TRUE(d.product_matches);
  EXPECT_TRUE(d.unimodular) << d.ber_a_tilde.to_string();
  for (const auto& e : verify_fft_entries(g.matrix, shape, d)) {
    EXPECT_TRUE(e.matches) << e.block << "(" << e.row << "," << e.col << ") " << e.formula << " " << e.note;
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FftShapes,
                         ::testing::Values(MatrixShape{1, 0, 3, 0}, MatrixShape{1, 1, 2, 2}, MatrixShape{2, 1, 3, 2},
                                           MatrixShape{1, 2, 2, 3}, MatrixShape{1, 1, 1, 3}));

TEST(Fft, RejectsEmptyEvenPart) {
  auto g = generic_matrix(0, 1, 1, 2);
  EXPECT_THROW(fft_decompose(g.matrix, {0, 1, 1, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace superinv
