#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superinv/integer.hpp"
#include "superinv/monomial.hpp"

namespace superinv {

struct Term {
  Monomial mono;
  Int coeff;
};

// Sparse polynomial over Z, terms sorted by decreasing deglex order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int constant);
  static Poly variable(std::size_t var);
  static Poly monomial(const Monomial& m, Int coeff);
  // Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);
  // Caller guarantees strictly decreasing monomials and nonzero coefficients.
  static Poly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Int constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  std::uint32_t support() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  std::uint32_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  Int content() const;              // nonnegative gcd of coefficients
  Poly primitive_part() const;      // content removed, positive leading coefficient
  Monomial monomial_content() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly scaled(const Int& c) const;
  Poly times_term(const Monomial& m, const Int& c) const;
  Poly divided_by_int(const Int& c) const;              // exact
  Poly divided_by_monomial(const Monomial& m) const;    // exact
  Poly pow(unsigned e) const;

  // Quotient when divisor divides *this exactly in Z[x], nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Normalized gcd: positive leading coefficient, integer content included.
  static Poly gcd(const Poly& a, const Poly& b);

  Rational evaluate(const std::vector<Rational>& point) const;
  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

 private:
  std::vector<Term> terms_;
};

// Hash-based accumulator used for products and sums of many polynomials.
class TermAccumulator {
 public:
  TermAccumulator();
  void add(const Monomial& m, const Int& c);
  void add_product(const Poly& f, const Poly& g, bool negate);
  void add_poly(const Poly& f, bool negate);
  Poly take();
  std::size_t size() const noexcept { return count_; }

 private:
  struct Slot {
    Monomial mono;
    Int coeff;
    bool used = false;
  };
  void grow();
  Slot& find(const Monomial& m);

  std::vector<Slot> slots_;
  std::size_t count_ = 0;
};

}  // namespace superinv
