#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "superinv/relations.hpp"

namespace superinv {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Classical, TwoByFourIsTheThreeTermRelation) {
  const auto rels = classical_plucker_relations(2, 4);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].to_string(), "X[1,2]*X[3,4] - X[1,3]*X[2,4] + X[1,4]*X[2,3] = 0");
  EXPECT_EQ(rels[0].to_latex(), "X_{12}X_{34}-X_{13}X_{24}+X_{14}X_{23}=0");
  EXPECT_TRUE(verify_relation(rels[0], VerifyMode::Symbolic, 0, 0).verified());
}

TEST(Classical, GrassmannianOfPlanesHasOneRelationPerFourColumns) {
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto rels = classical_plucker_relations(2, n);
    EXPECT_EQ(rels.size(), binomial(n, 4));
    for (const auto& r : rels) EXPECT_TRUE(verify_relation(r, VerifyMode::Symbolic, 0, 0).verified()) << r.to_string();
  }
  for (const auto& r : classical_plucker_relations(3, 6)) {
    EXPECT_TRUE(verify_relation(r, VerifyMode::Numeric, 5, 3).verified()) << r.to_string();
  }
  EXPECT_TRUE(classical_plucker_relations(2, 3).empty());
}

TEST(Sl11, FamilySizesFollowIndexRanges) {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      EXPECT_EQ(sl11_family(Family::Sp1, p, q).size(), p * q);
      EXPECT_EQ(sl11_family(Family::Sp2, p, q).size(), p * p * q * q);
      EXPECT_EQ(sl11_family(Family::Sp3, p, q).size(), p * q * q * q);
      EXPECT_EQ(sl11_family(Family::Sp4, p, q).size(), p * p * p * q);
    }
  }
}

TEST(Sl11, FirstFamilyText) {
  const auto rels = sl11_family(Family::Sp1, 1, 1);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].to_string(), "X[1|1]*Xs[1|1] = 1");
  EXPECT_EQ(family_latex(Family::Sp1), R"(X_{i|\hat\mu}X^*_{i|\hat\mu}=1)");
}

TEST(Sl11, AllFamiliesVerifyInEveryMode) {
  for (VerifyMode mode : {VerifyMode::Symbolic, VerifyMode::Slice, VerifyMode::Numeric}) {
    RelationVerifier v(VerifyOptions{mode, 5, 11, 0});
    for (const auto& r : sl11_plucker_relations(2, 2)) {
      const Certificate c = v.verify(r);
      EXPECT_TRUE(c.verified()) << mode_name(mode) << " " << r.to_string() << " " << c.witness;
    }
  }
}

TEST(Slrs, FirstTwoFamilySizes) {
  for (const MatrixShape s : {MatrixShape{2, 1, 3, 2}, MatrixShape{1, 2, 2, 3}}) {
    const std::size_t minors = binomial(s.p, s.r) * binomial(s.q, s.s);
    EXPECT_EQ(slrs_family(Family::Gsp1, s).size(), minors);
    EXPECT_EQ(slrs_family(Family::Gsp2, s).size(), minors * minors);
  }
}

TEST(Slrs, ReducesToSl11TermForTerm) {
  const std::pair<Family, Family> pairs[] = {
      {Family::Gsp1, Family::Sp1}, {Family::Gsp2, Family::Sp2}, {Family::Gsp3, Family::Sp3}, {Family::Gsp4, Family::Sp4}};
  for (const auto& [g, s] : pairs) {
    std::multiset<std::string> a, b;
    for (const auto& r : slrs_family(g, {1, 1, 2, 3})) a.insert(r.to_string());
    for (const auto& r : sl11_family(s, 2, 3)) b.insert(r.to_string());
    EXPECT_EQ(a, b) << family_name(g);
  }
}

TEST(Slrs, SliceVerifiesAtTwoOne) {
  RelationVerifier v(VerifyOptions{VerifyMode::Slice, 0, 0, 0});
  for (const auto& r : slrs_plucker_relations({2, 1, 3, 2})) {
    EXPECT_TRUE(v.verify(r).verified()) << r.to_string();
  }
}

TEST(Slrs, PrintedGsp4ExponentIsFalsified) {
  GspOptions opt;
  opt.gsp4 = Gsp4Exponent::Printed;
  std::size_t falsified = 0, total = 0;
  for (const auto& r : slrs_family(Family::Gsp4, {2, 1, 3, 2}, opt)) {
    ++total;
    if (verify_relation(r, VerifyMode::Numeric, 5, 1).verdict == Verdict::Falsified) ++falsified;
  }
  EXPECT_GT(total, 0u);
  EXPECT_GT(falsified, 0u);
  for (const auto& r : slrs_family(Family::Gsp4, {2, 1, 3, 2})) {
    EXPECT_TRUE(verify_relation(r, VerifyMode::Numeric, 5, 1).verified()) << r.to_string();
  }
}

TEST(Verify, NumericCertificatesAreReproducible) {
  const auto rels = sl11_family(Family::Sp3, 2, 2);
  for (const auto& r : rels) {
    const Certificate a = verify_relation(r, VerifyMode::Numeric, 7, 99);
    const Certificate b = verify_relation(r, VerifyMode::Numeric, 7, 99);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.trials, 7u);
    EXPECT_EQ(a.seed, 99u);
  }
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_EQ(trial_seed(5, 3), trial_seed(5, 3));
}

TEST(Verify, CorruptedRelationIsFalsifiedWithWitness) {
  Relation r = sl11_family(Family::Sp1, 2, 2)[0];
  r.rhs = MinorExpr::constant(Rational(2));
  const Certificate c = verify_relation(r, VerifyMode::Symbolic, 0, 0);
  EXPECT_EQ(c.verdict, Verdict::Falsified);
  EXPECT_FALSE(c.witness.empty());
}

TEST(MutationProperty, MutantsDifferAndAreWellFormed) {
  Rng rng(31);
  const auto corpus = sl11_plucker_relations(2, 2);
  for (int k = 0; k < testgen::kPropertyCases; ++k) {
    const Relation& r = corpus[rng.below(corpus.size())];
    const Relation m = mutate(r, rng);
    EXPECT_NE(m.to_string(), r.to_string());
    for (const auto& s : m.lhs.symbols()) EXPECT_NO_THROW(s.validate(m.shape));
    for (const auto& s : m.rhs.symbols()) EXPECT_NO_THROW(s.validate(m.shape));
  }
}

TEST(MutationCampaign, CatchesEveryEffectiveMutantOnASmallCorpus) {
  MutationOptions opt;
  opt.seed = 3;
  opt.per_relation = 1;
  const auto stats = mutation_campaign(sl11_plucker_relations(2, 2), opt);
  ASSERT_FALSE(stats.empty());
  for (const auto& s : stats) {
    EXPECT_GT(s.effective, 0u) << family_name(s.family);
    EXPECT_GE(s.rate(), 0.95) << family_name(s.family);
  }
}

TEST(Jacobi, ClassicalAndSuperRawCoordinates) {
  const SuperMatrix g = generic_square(3, 0, SquareParam::Raw);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_TRUE(jacobi_check(g.block(Parity::Even, Parity::Even), r).verified);
  const SuperMatrix a = generic_square(2, 1, SquareParam::Raw);
  for (std::size_t r = 0; r < 2; ++r) {
    const JacobiReport rep = super_jacobi_check(a, r, 0);
    EXPECT_TRUE(rep.verified);
    EXPECT_EQ(rep.sign_exponent, static_cast<long>(r * 3));
  }
  const JacobiReport rep = super_jacobi_check(generic_square(2, 2, SquareParam::Factored), 1, 1);
  EXPECT_TRUE(rep.verified);
  EXPECT_EQ(rep.sign_exponent, 6);
}

TEST(Jacobi, EveryApplicableMutationIsCaught) {
  const SuperMatrix a = generic_square(2, 2, SquareParam::Factored);
  for (JacobiMutation m : {JacobiMutation::FlipSign, JacobiMutation::ShiftEvenRow, JacobiMutation::ShiftOddRow,
                           JacobiMutation::ShiftEvenCol, JacobiMutation::ShiftOddCol}) {
    if (!jacobi_mutation_applies(m, 2, 2, 1, 1)) continue;
    EXPECT_FALSE(super_jacobi_check(a, 1, 1, m).verified) << jacobi_mutation_name(m);
  }
}

TEST(MinorExpr, BerNodeEvaluatesLikeAMatrix) {
  // Ber of the 1|1 matrix of minors (X[1|1] 0; 0 X[1|1]) is 1
  const MinorExpr x = MinorExpr::minor(MinorSymbol::plain(false, {1}, {1}));
  const MinorExpr e = MinorExpr::ber({1, 1}, {x, MinorExpr::constant(Rational(0)), MinorExpr::constant(Rational(0)), x}, false);
  CoordinateModel model = CoordinateModel::generic({1, 1, 1, 1});
  EXPECT_TRUE(evaluate(e, model).is_one());
  EXPECT_EQ(e.symbols().size(), 1u);
}

}  // namespace
}  // namespace superinv
