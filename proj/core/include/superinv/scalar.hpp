#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superinv/ring.hpp"

namespace superinv {

using OddMask = std::uint64_t;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

enum class ScalarParity { Zero, Even, Odd, Inhomogeneous };

// Sign of reordering the ordered product xi_I * xi_J into increasing order.
int koszul_sign(OddMask left, OddMask right) noexcept;

class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

class RationalFunction;

struct GrassmannTerm {
  OddMask mask;
  Poly coeff;
};

// Element of Frac(Q[even]) (x) Lambda(odd), stored as
//   scale * (sum_I N_I xi_I) / prod atom^e
// with N_I in Z[even], the N_I jointly primitive, the first N_I having a positive
// leading coefficient, and no atom dividing every N_I. This form is canonical.
class Scalar {
 public:
  Scalar() = default;  // detached zero, only useful as a placeholder
  explicit Scalar(ContextPtr ctx);

  static Scalar constant(ContextPtr ctx, const Rational& value);
  static Scalar even_generator(ContextPtr ctx, std::size_t index);
  static Scalar odd_generator(ContextPtr ctx, std::size_t index);
  static Scalar from_poly(ContextPtr ctx, const Poly& p);
  static Scalar from_parts(ContextPtr ctx, Rational scale, Factorization den, std::vector<GrassmannTerm> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  ScalarParity parity() const noexcept;
  bool is_even() const noexcept;  // zero counts as even
  bool is_odd() const noexcept;   // zero counts as odd
  std::size_t term_count() const noexcept { return terms_.size(); }

  const Rational& scale() const noexcept { return scale_; }
  const Factorization& denominator() const noexcept { return den_; }
  const std::vector<GrassmannTerm>& numerators() const noexcept { return terms_; }

  // Per odd monomial coefficients, each reduced on its own.
  std::vector<std::pair<OddMask, RationalFunction>> terms() const;
  RationalFunction coefficient(OddMask mask) const;
  RationalFunction body() const;
  Scalar body_scalar() const;
  Scalar soul() const;
  Scalar odd_part() const;
  Scalar even_part() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar scaled(const Rational& q) const;

  // Inverse of an even element with nonzero body.
  Scalar inverse() const;
  // Non-negative powers of anything, negative powers of invertible even elements.
  Scalar pow(long e) const;

  // Structural equality of canonical forms, falling back to a difference test
  // when the atom registry has been refined since either side was built.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Canonical text: sum of coeff * monomial * odd generators, rational
  // coefficients printed as (num)/(den).
  std::string to_string() const;

 private:
  void normalize();

  ContextPtr ctx_;
  Rational scale_{0};
  Factorization den_;
  std::vector<GrassmannTerm> terms_;
};

// Body-only scalar; exposes numerator and denominator as integer polynomials.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Scalar body_only);

  const Scalar& as_scalar() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_polynomial() const noexcept { return value_.denominator().empty(); }
  // value = numerator() / denominator(), denominator with positive leading coefficient,
  // gcd(numerator, denominator) = 1.
  Poly numerator() const;
  Poly denominator() const;
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.value_ == b.value_; }

 private:
  Scalar value_;
};

std::string odd_monomial_text(const RingContext& ctx, OddMask mask);

}  // namespace superinv
