#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "superinv/minors.hpp"

namespace superinv {

// Expression over minor symbols: constants, minors, signed sums, ordered
// products, integer powers and Berezinians of matrices of subexpressions.
class MinorExpr {
 public:
  enum class Op { Constant, Minor, Sum, Product, Power, Ber };

  MinorExpr();  // the constant 0
  static MinorExpr constant(const Rational& c);
  static MinorExpr minor(MinorSymbol m);
  // Linear combination sum c_k * e_k.
  static MinorExpr sum(std::vector<std::pair<Rational, MinorExpr>> terms);
  static MinorExpr product(std::vector<MinorExpr> factors);
  static MinorExpr power(MinorExpr base, long exponent);
  // Ber (or Ber* when starred) of the (even|odd) x (even|odd) matrix given row-major.
  static MinorExpr ber(ParitySignature sig, std::vector<MinorExpr> entries, bool starred);

  Op op() const;
  const Rational& value() const;                                  // Constant
  const MinorSymbol& symbol() const;                              // Minor
  const std::vector<std::pair<Rational, MinorExpr>>& terms() const;  // Sum
  const std::vector<MinorExpr>& children() const;                 // Product, Power (one), Ber
  long exponent() const;                                          // Power
  const ParitySignature& signature() const;                       // Ber
  bool starred() const;                                           // Ber

  // Every minor symbol occurring, in first-occurrence order.
  std::vector<MinorSymbol> symbols() const;
  // New tree with each minor symbol passed through `f`.
  MinorExpr map_symbols(const std::function<MinorSymbol(const MinorSymbol&)>& f) const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const MinorExpr& a, const MinorExpr& b);

 private:
  struct Node;
  explicit MinorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Scalar evaluate(const MinorExpr& e, CoordinateModel& model);

enum class Family { ClassicalPlucker, Sp1, Sp2, Sp3, Sp4, Gsp1, Gsp2, Gsp3, Gsp4, Jacobi, SuperJacobi };
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
// The family written with symbolic indices, in LaTeX.
std::string family_latex(Family f);

enum class VerifyMode { Symbolic, Slice, Numeric };
const char* mode_name(VerifyMode m);
std::optional<VerifyMode> mode_from_name(const std::string& name);

enum class Verdict { Unchecked, Verified, Falsified, Undefined, CapExceeded };
const char* verdict_name(Verdict v);

struct Certificate {
  VerifyMode mode = VerifyMode::Symbolic;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Unchecked;
  std::string witness;  // falsifying point or the nonzero difference
  std::string note;
  bool verified() const noexcept { return verdict == Verdict::Verified; }
};

struct Relation {
  Family family = Family::ClassicalPlucker;
  MatrixShape shape;  // coordinate matrix the minors live on
  std::vector<std::pair<std::string, std::vector<std::size_t>>> indices;
  MinorExpr lhs;
  MinorExpr rhs;
  Certificate certificate;

  std::string to_string() const;  // "lhs = rhs"
  std::string to_latex() const;
};

// Classical relations sum_k (-1)^k X_{i, j_k} X_{j without j_k} on an r x p matrix,
// canonicalized as polynomials in sorted minors, zero ones dropped, duplicates
// up to sign removed.
std::vector<Relation> classical_plucker_relations(std::size_t r, std::size_t p);

// (sp1)-(sp4) over all indices 1..p and 1..q.
std::vector<Relation> sl11_plucker_relations(std::size_t p, std::size_t q);
std::vector<Relation> sl11_family(Family f, std::size_t p, std::size_t q);

// Exponent used on the left of the fourth SL(r|s) family: the sign-corrected
// r+s-1 (which reduces to the SL(1|1) relation) or the printed -(r+s-1).
enum class Gsp4Exponent { Corrected, Printed };

struct GspOptions {
  std::size_t instance_cap = 0;  // per family, 0 = unlimited
  Gsp4Exponent gsp4 = Gsp4Exponent::Corrected;
};
std::vector<Relation> slrs_family(Family f, const MatrixShape& shape, const GspOptions& opt = {});
std::vector<Relation> slrs_plucker_relations(const MatrixShape& shape, const GspOptions& opt = {});

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Symbolic;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::uint64_t op_cap = 0;  // per relation, 0 = take the environment default
};

// Keeps one coordinate model per shape (and per trial in numeric mode) so
// minors are shared between relations.
class RelationVerifier {
 public:
  explicit RelationVerifier(VerifyOptions opt);
  Certificate verify(const Relation& rel);
  const VerifyOptions& options() const noexcept { return opt_; }

 private:
  CoordinateModel& model(const MatrixShape& shape, std::size_t trial);
  Certificate check_on(const Relation& rel, CoordinateModel& model);

  VerifyOptions opt_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>, CoordinateModel> models_;
};

Certificate verify_relation(const Relation& rel, VerifyMode mode, std::size_t trials, std::uint64_t seed);

// Seed of the numeric point used for a given trial.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

// Injects one sign flip or one index change. Mutants that are not well formed
// are never produced; the caller may resample mutants whose evaluation is undefined.
Relation mutate(const Relation& rel, Rng& rng);

// Jacobi complementary minor identity on a square matrix.
struct JacobiReport {
  std::size_t n = 0, r = 0;             // classical
  std::size_t p = 0, q = 0, s = 0;      // super (r shared)
  long sign_exponent = 0;
  Scalar lhs;  // Ber A * Ber (A^-1) restricted
  Scalar rhs;  // (-1)^t Ber A^u_v
  bool verified = false;
};

// Deliberate corruptions of the identity, used to test that checks catch them:
// flip the sign, or move one index of the kept block of A by one position.
enum class JacobiMutation { None, FlipSign, ShiftEvenRow, ShiftOddRow, ShiftEvenCol, ShiftOddCol };
const char* jacobi_mutation_name(JacobiMutation m);
bool jacobi_mutation_applies(JacobiMutation m, std::size_t p, std::size_t q, std::size_t r, std::size_t s);

JacobiReport jacobi_check(const ScalarMatrix& a, std::size_t r, JacobiMutation m = JacobiMutation::None);
JacobiReport super_jacobi_check(const SuperMatrix& a, std::size_t r, std::size_t s,
                                JacobiMutation m = JacobiMutation::None);

// Square supermatrix at a random numeric point: rational even blocks, each odd
// entry c * e_k with its own generator of a Grassmann algebra.
SuperMatrix random_numeric_square(std::size_t p, std::size_t q, Rng& rng);

// Square generic matrix of the given signature. Raw: every entry a fresh
// generator (a, b, c, d blocks). Factored: (I X; 0 I)(V 0; 0 W)(I 0; Z I) with
// generic blocks, a birational change of coordinates that keeps the odd degree
// of every entry at most two.
enum class SquareParam { Raw, Factored };
SuperMatrix generic_square(std::size_t p, std::size_t q, SquareParam param = SquareParam::Raw);

struct MutationOptions {
  std::size_t per_relation = 3;
  std::size_t trials = 10;  // numeric trials per mutant
  std::uint64_t seed = 1;
  std::size_t redraws = 20;  // attempts per requested mutant
  VerifyMode exact = VerifyMode::Symbolic;
};

// Per family tally. A mutant that the exact check still verifies is an
// equivalent mutant (a true identity) and is redrawn rather than counted.
struct MutationStats {
  Family family = Family::ClassicalPlucker;
  std::size_t drawn = 0;
  std::size_t equivalent = 0;
  std::size_t undefined = 0;  // mutant not defined exactly, or no defined numeric point
  std::size_t effective = 0;
  std::size_t falsified = 0;
  std::vector<std::string> survivors;  // first few effective mutants numeric checks missed
  double rate() const { return effective == 0 ? 0.0 : static_cast<double>(falsified) / static_cast<double>(effective); }
};

std::vector<MutationStats> mutation_campaign(const std::vector<Relation>& corpus, const MutationOptions& opt);

// Every applicable Jacobi mutation for classical n <= max_n and super p, q <= max_pq.
std::vector<MutationStats> jacobi_mutation_campaign(std::size_t max_n, std::size_t max_pq, const MutationOptions& opt);

}  // namespace superinv
