#include "superinv/integer.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace superinv {

namespace {

// Temporary mpz holding either the big value or a copy of the small one.
class MpzView {
 public:
  MpzView(std::int64_t small, mpz_srcptr big) {
    if (big != nullptr) {
      ptr_ = big;
    } else {
      mpz_init_set_si(tmp_, small);
      owned_ = true;
      ptr_ = tmp_;
    }
  }
  ~MpzView() {
    if (owned_) mpz_clear(tmp_);
  }
  MpzView(const MpzView&) = delete;
  MpzView& operator=(const MpzView&) = delete;
  mpz_srcptr get() const { return ptr_; }

 private:
  mpz_t tmp_;
  mpz_srcptr ptr_ = nullptr;
  bool owned_ = false;
};

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

Int::Int(const mpz_class& v) { assign_mpz(v.get_mpz_t()); }

Int Int::parse(std::string_view text) {
  mpz_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("invalid integer literal: " + std::string(text));
  }
  return Int(v);
}

Int::Int(const Int& other) : small_(other.small_) {
  if (other.big_ != nullptr) {
    big_ = new __mpz_struct;
    mpz_init_set(big_, other.big_);
  }
}

Int& Int::operator=(const Int& other) {
  if (this == &other) return *this;
  if (other.big_ == nullptr) {
    release();
    small_ = other.small_;
  } else {
    ensure_big();
    mpz_set(big_, other.big_);
  }
  return *this;
}

Int& Int::operator=(Int&& other) noexcept {
  if (this == &other) return *this;
  release();
  small_ = other.small_;
  big_ = other.big_;
  other.big_ = nullptr;
  return *this;
}

Int::~Int() { release(); }

void Int::release() noexcept {
  if (big_ != nullptr) {
    mpz_clear(big_);
    delete big_;
    big_ = nullptr;
  }
}

mpz_ptr Int::ensure_big() {
  if (big_ == nullptr) {
    big_ = new __mpz_struct;
    mpz_init(big_);
  }
  return big_;
}

void Int::assign_mpz(mpz_srcptr v) {
  if (mpz_fits_slong_p(v)) {
    release();
    small_ = mpz_get_si(v);
  } else {
    ensure_big();
    mpz_set(big_, v);
    small_ = 0;
  }
}

int Int::sign() const noexcept {
  if (big_ != nullptr) return mpz_sgn(big_);
  return (small_ > 0) - (small_ < 0);
}

mpz_class Int::to_mpz() const {
  if (big_ != nullptr) return mpz_class(big_);
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), small_);
  return out;
}

std::string Int::to_string() const {
  if (big_ == nullptr) return std::to_string(small_);
  return to_mpz().get_str();
}

std::size_t Int::hash() const noexcept {
  if (big_ == nullptr) return std::hash<std::int64_t>{}(small_);
  std::size_t h = static_cast<std::size_t>(mpz_sgn(big_));
  const std::size_t n = mpz_size(big_);
  for (std::size_t i = 0; i < n; ++i) {
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(big_, static_cast<mp_size_t>(i)));
  }
  return h;
}

Int& Int::operator+=(const Int& rhs) {
  if (big_ == nullptr && rhs.big_ == nullptr) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  MpzView a(small_, big_);
  MpzView b(rhs.small_, rhs.big_);
  mpz_t out;
  mpz_init(out);
  mpz_add(out, a.get(), b.get());
  assign_mpz(out);
  mpz_clear(out);
  return *this;
}

Int& Int::operator-=(const Int& rhs) {
  if (big_ == nullptr && rhs.big_ == nullptr) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  MpzView a(small_, big_);
  MpzView b(rhs.small_, rhs.big_);
  mpz_t out;
  mpz_init(out);
  mpz_sub(out, a.get(), b.get());
  assign_mpz(out);
  mpz_clear(out);
  return *this;
}

Int& Int::operator*=(const Int& rhs) {
  if (big_ == nullptr && rhs.big_ == nullptr) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  MpzView a(small_, big_);
  MpzView b(rhs.small_, rhs.big_);
  mpz_t out;
  mpz_init(out);
  mpz_mul(out, a.get(), b.get());
  assign_mpz(out);
  mpz_clear(out);
  return *this;
}

void Int::add_mul(const Int& a, const Int& b) {
  if (big_ == nullptr && a.big_ == nullptr && b.big_ == nullptr) {
    std::int64_t p;
    std::int64_t r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  *this += a * b;
}

void Int::negate() {
  if (big_ == nullptr) {
    if (small_ != INT64_MIN) {
      small_ = -small_;
      return;
    }
    ensure_big();
    mpz_set_si(big_, small_);
  }
  mpz_neg(big_, big_);
  assign_mpz(big_);
}

bool operator==(const Int& a, const Int& b) noexcept {
  if (a.big_ == nullptr && b.big_ == nullptr) return a.small_ == b.small_;
  if (a.big_ != nullptr && b.big_ != nullptr) return mpz_cmp(a.big_, b.big_) == 0;
  return false;  // normalized: a big value never fits int64
}

std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
  if (a.big_ == nullptr && b.big_ == nullptr) return a.small_ <=> b.small_;
  int c;
  if (a.big_ != nullptr && b.big_ != nullptr) {
    c = mpz_cmp(a.big_, b.big_);
  } else if (a.big_ != nullptr) {
    c = mpz_cmp_si(a.big_, b.small_);
  } else {
    c = -mpz_cmp_si(b.big_, a.small_);
  }
  return c <=> 0;
}

Int Int::gcd(const Int& a, const Int& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) {
    const std::uint64_t g = std::gcd(uabs(a.small_), uabs(b.small_));
    if (g <= static_cast<std::uint64_t>(INT64_MAX)) return Int(static_cast<long long>(g));
  }
  MpzView x(a.small_, a.big_);
  MpzView y(b.small_, b.big_);
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), x.get(), y.get());
  return Int(out);
}

Int Int::divexact(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.big_ == nullptr && b.big_ == nullptr && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    return Int(static_cast<long long>(a.small_ / b.small_));
  }
  MpzView x(a.small_, a.big_);
  MpzView y(b.small_, b.big_);
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), x.get(), y.get());
  return Int(out);
}

bool Int::divisible_by(const Int& d) const {
  if (d.is_zero()) return is_zero();
  if (big_ == nullptr && d.big_ == nullptr) {
    if (d.small_ == -1) return true;
    return small_ % d.small_ == 0;
  }
  MpzView x(small_, big_);
  MpzView y(d.small_, d.big_);
  return mpz_divisible_p(x.get(), y.get()) != 0;
}

Int Int::abs() const {
  Int out(*this);
  if (out.sign() < 0) out.negate();
  return out;
}

Rational to_rational(const Int& v) { return Rational(v.to_mpz()); }

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace superinv
