#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superinv/minors.hpp"
#include "superinv/relations.hpp"

namespace superinv {

// Coordinate ring of the (1|1) x (p|q) matrix with every even coordinate
// inverted: Laurent polynomials in x_1..x_p, y_1..y_q tensored with the
// exterior algebra on al_1..al_q, be_1..be_p. Odd bit k < q is al_{k+1},
// bit q + j is be_{j+1}; even slot k < p is x_{k+1}, slot p + l is y_{l+1}.
class LaurentExterior {
 public:
  struct Key {
    std::vector<int> exps;
    OddMask mask = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  LaurentExterior(std::size_t p, std::size_t q);
  static LaurentExterior constant(std::size_t p, std::size_t q, const Rational& c);
  static LaurentExterior x(std::size_t p, std::size_t q, std::size_t i, int e = 1);  // 1-based
  static LaurentExterior y(std::size_t p, std::size_t q, std::size_t j, int e = 1);
  static LaurentExterior al(std::size_t p, std::size_t q, std::size_t j);
  static LaurentExterior be(std::size_t p, std::size_t q, std::size_t i);
  // Throws std::domain_error when a denominator is not a monomial in the even coordinates.
  static LaurentExterior from_scalar(const Scalar& s, std::size_t p, std::size_t q);

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const noexcept { return terms_; }

  friend LaurentExterior operator+(const LaurentExterior& a, const LaurentExterior& b);
  friend LaurentExterior operator-(const LaurentExterior& a, const LaurentExterior& b);
  friend LaurentExterior operator*(const LaurentExterior& a, const LaurentExterior& b);
  LaurentExterior scaled(const Rational& c) const;
  friend bool operator==(const LaurentExterior&, const LaurentExterior&) = default;

  // Same element inside the generic (1|1) x (p|q) coordinate ring.
  Scalar to_scalar(const ContextPtr& ctx) const;
  std::string to_string() const;

 private:
  std::size_t p_, q_;
  std::map<Key, Rational> terms_;
};

// Basis element prod x^a (x^-1)^b prod xi^c of the Laurent exterior ring.
struct BasisMonomial {
  std::size_t p = 0, q = 0;
  std::vector<unsigned> a;  // positive exponents, even slots as in LaurentExterior
  std::vector<unsigned> b;  // negative exponents; a[k] * b[k] == 0
  OddMask c = 0;

  static BasisMonomial from_key(const LaurentExterior::Key& k, std::size_t p, std::size_t q);
  std::string to_string() const;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// The three-case order: at the first even tuple where a differs the larger a is
// smaller; then at the first tuple where b differs the smaller b is smaller;
// then at the first odd tuple where c differs the one containing it is smaller.
std::strong_ordering basis_order(const BasisMonomial& m, const BasisMonomial& n);

// Smallest basis monomial with nonzero coefficient; throws on zero.
BasisMonomial leading_term(const LaurentExterior& v);
BasisMonomial leading_term(const Scalar& v, std::size_t p, std::size_t q);

// Supercommutative monomial in the abstract generators Y_{i|mu}, Y_{mu|nu},
// Y*_{j|nu}, Y*_{i|j}, named by the minor symbols they map to. Factors sorted
// by symbol, odd ones with exponent one.
struct Word {
  std::vector<std::pair<MinorSymbol, unsigned>> factors;
  unsigned degree() const;
  std::string to_string() const;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
};

bool generator_is_odd(const MinorSymbol& g);
// Throws std::invalid_argument unless `g` is one of the four generator types within (p, q).
void validate_generator(const MinorSymbol& g, std::size_t p, std::size_t q);

class InvariantPolynomial {
 public:
  InvariantPolynomial() = default;
  static InvariantPolynomial constant(const Rational& c);
  static InvariantPolynomial generator(const MinorSymbol& g);
  static InvariantPolynomial monomial(const Word& w, const Rational& c = Rational(1));

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const noexcept { return terms_; }
  unsigned degree() const;
  std::vector<MinorSymbol> generators() const;

  friend InvariantPolynomial operator+(const InvariantPolynomial& a, const InvariantPolynomial& b);
  friend InvariantPolynomial operator-(const InvariantPolynomial& a, const InvariantPolynomial& b);
  friend InvariantPolynomial operator*(const InvariantPolynomial& a, const InvariantPolynomial& b);
  InvariantPolynomial operator-() const { return scaled(Rational(-1)); }
  InvariantPolynomial scaled(const Rational& c) const;
  InvariantPolynomial pow(unsigned e) const;
  friend bool operator==(const InvariantPolynomial&, const InvariantPolynomial&) = default;

  std::string to_string() const;  // parseable: 2*X[1|1]*Xs[1|2] - 1
  std::string to_latex() const;

 private:
  void add_term(const Word& w, const Rational& c);
  std::map<Word, Rational> terms_;
};

// Converts an expression over (1|1) minors; negative powers and the inverted
// entries of Ber nodes must be single plain minors, replaced by their partners
// X <-> X* (which is exact modulo the first relation family).
InvariantPolynomial to_invariant_polynomial(const MinorExpr& e);

// Images under the map sending each generator to its minor.
LaurentExterior pi_laurent(const InvariantPolynomial& f, std::size_t p, std::size_t q);
Scalar pi_evaluate(const InvariantPolynomial& f, CoordinateModel& model);
Scalar pi_evaluate(const InvariantPolynomial& f, std::size_t p, std::size_t q);

// Standard expressions: X[1|m], X[i|1], X[^e|1] (e >= 2), Xs[1|m], Xs[j|1], Xs[1|^l] (l >= 2).
bool is_standard_generator(const MinorSymbol& g);
// Generators mapping to zero: X[^m|m] and Xs[i|^i].
bool is_zero_generator(const MinorSymbol& g);
std::vector<MinorSymbol> standard_generators(std::size_t p, std::size_t q);
std::vector<MinorSymbol> all_generators(std::size_t p, std::size_t q);

// A product of standard expressions in the six-block layout
// P_{1|mu} P_{i|1} P_{eta|1} P*_{1|lambda} P*_{j|1} P*_{1|l}.
struct StandardProduct {
  std::vector<std::pair<std::size_t, unsigned>> mu;      // X[1|mu]^d
  std::vector<std::pair<std::size_t, unsigned>> i;       // X[i|1]^d, i >= 2
  std::vector<std::size_t> eta;                          // X[^eta|1], eta >= 2
  std::vector<std::pair<std::size_t, unsigned>> lambda;  // Xs[1|lambda]^d
  std::vector<std::pair<std::size_t, unsigned>> j;       // Xs[j|1]^d, j >= 2
  std::vector<std::size_t> l;                            // Xs[1|^l], l >= 2

  unsigned degree() const;
  // Index monotonicity, ranges and the two exclusion conditions.
  void validate(std::size_t p, std::size_t q) const;
  // The product in block order, as a signed canonical monomial.
  InvariantPolynomial to_polynomial() const;
  std::string to_string() const;  // block order
  // Inverse of to_polynomial on standard words; sign is the Koszul sign relating the two.
  static std::pair<StandardProduct, int> from_word(const Word& w);
  friend bool operator==(const StandardProduct&, const StandardProduct&) = default;
};

bool is_standard_word(const Word& w);
std::vector<StandardProduct> enumerate_standard_products(std::size_t p, std::size_t q, unsigned max_degree);

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultRewriteFuel = 10'000;

// Expansion of a non-standard generator by the straightening identities.
InvariantPolynomial straightening_rule(const MinorSymbol& g);

// Rewrites to a combination of standard words: substitute non-standard
// generators, drop zero generators, cancel X[1|m] Xs[1|m] and X[i|1] Xs[i|1]
// pairs, repeat. Each pass counts against `fuel`.
InvariantPolynomial rewrite_to_standard(const InvariantPolynomial& f, std::size_t fuel = kDefaultRewriteFuel);

struct MembershipResult {
  bool in_ideal = false;
  InvariantPolynomial normal_form;
  bool pi_zero = false;  // independent oracle
  bool agrees() const noexcept { return in_ideal == pi_zero; }
};
MembershipResult normal_form_membership(const InvariantPolynomial& f, std::size_t p, std::size_t q,
                                        std::size_t fuel = kDefaultRewriteFuel);

struct IndependenceReport {
  bool distinct_leading_terms = false;
  std::vector<BasisMonomial> leading_terms;
  std::optional<std::pair<std::size_t, std::size_t>> collision;  // first pair sharing a leading term
  bool verified() const noexcept { return distinct_leading_terms; }
};
IndependenceReport independence_check(const std::vector<StandardProduct>& products, std::size_t p, std::size_t q);

// Exact rank of the images, by elimination over Q.
std::size_t image_rank(const std::vector<InvariantPolynomial>& polys, std::size_t p, std::size_t q);

// Polynomial forms of the SL(1|1) relations (sp1)-(sp4) over all indices.
std::vector<std::pair<Relation, InvariantPolynomial>> sl11_relation_polynomials(std::size_t p, std::size_t q);

}  // namespace superinv
