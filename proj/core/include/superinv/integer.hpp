#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace superinv {

// Arbitrary precision integer that stays inline while the value fits in int64.
class Int {
 public:
  Int() noexcept = default;
  Int(long long v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT
  Int(long v) noexcept : small_(v) {}                                   // NOLINT
  Int(int v) noexcept : small_(v) {}                                    // NOLINT
  explicit Int(const mpz_class& v);
  static Int parse(std::string_view text);

  Int(const Int& other);
  Int(Int&& other) noexcept : small_(other.small_), big_(other.big_) { other.big_ = nullptr; }
  Int& operator=(const Int& other);
  Int& operator=(Int&& other) noexcept;
  ~Int();

  bool is_small() const noexcept { return big_ == nullptr; }
  std::int64_t small_value() const noexcept { return small_; }
  int sign() const noexcept;
  bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
  bool is_one() const noexcept { return big_ == nullptr && small_ == 1; }

  mpz_class to_mpz() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Int& operator+=(const Int& rhs);
  Int& operator-=(const Int& rhs);
  Int& operator*=(const Int& rhs);
  void negate();
  // this += a * b
  void add_mul(const Int& a, const Int& b);

  friend Int operator+(Int a, const Int& b) { a += b; return a; }
  friend Int operator-(Int a, const Int& b) { a -= b; return a; }
  friend Int operator*(Int a, const Int& b) { a *= b; return a; }
  friend Int operator-(Int a) { a.negate(); return a; }

  friend bool operator==(const Int& a, const Int& b) noexcept;
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept;

  static Int gcd(const Int& a, const Int& b);
  static Int divexact(const Int& a, const Int& b);
  bool divisible_by(const Int& d) const;
  Int abs() const;

 private:
  void assign_mpz(mpz_srcptr v);
  void release() noexcept;
  mpz_ptr ensure_big();

  std::int64_t small_ = 0;
  mpz_ptr big_ = nullptr;
};

using Rational = mpq_class;

Rational to_rational(const Int& v);
std::string rational_to_string(const Rational& q);

}  // namespace superinv
