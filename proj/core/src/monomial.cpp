#include "superinv/monomial.hpp"

#include <bit>
#include <stdexcept>

namespace superinv {

namespace {
constexpr std::uint64_t kHigh = 0x8080808080808080ull;
}

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
  Monomial m;
  m.set_exponent(var, exponent);
  return m;
}

void Monomial::set_exponent(std::size_t var, unsigned e) {
  if (var >= kMaxEvenVars) throw std::out_of_range("even variable index exceeds monomial capacity");
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  const unsigned old = exponent(var);
  auto& w = words_[var / 8];
  w &= ~(std::uint64_t{0xff} << shift(var));
  w |= std::uint64_t{e} << shift(var);
  degree_ = degree_ - old + e;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t out = 0;
  for (std::size_t k = 0; k < kMaxEvenVars; ++k) {
    if (exponent(k) != 0) out |= (1u << k);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kWords; ++i) {
    // high bit of each byte of (other|H) - this stays set iff other_byte >= this_byte
    if ((((other.words_[i] | kHigh) - words_[i]) & kHigh) != kHigh) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const noexcept {
  Monomial out;
  for (std::size_t i = 0; i < kWords; ++i) out.words_[i] = words_[i] - divisor.words_[i];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial out;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < kWords; ++i) {
    const std::uint64_t ge = (((a.words_[i] | kHigh) - b.words_[i]) & kHigh) >> 7;
    const std::uint64_t mask = ge * 0xff;  // bytes where a >= b
    out.words_[i] = (b.words_[i] & mask) | (a.words_[i] & ~mask);
    std::uint64_t w = out.words_[i];
    while (w != 0) {
      deg += static_cast<std::uint32_t>(w & 0xff);
      w >>= 8;
    }
  }
  out.degree_ = deg;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < Monomial::kWords; ++i) {
    out.words_[i] = a.words_[i] + b.words_[i];
    if ((out.words_[i] & kHigh) != 0) throw std::overflow_error("monomial exponent overflow");
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

}  // namespace superinv
