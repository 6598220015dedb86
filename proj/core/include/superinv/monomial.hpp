#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace superinv {

inline constexpr std::size_t kMaxEvenVars = 32;
inline constexpr unsigned kMaxExponent = 127;

// Exponent vector packed one byte per variable. Variable k lives in word k/8
// at the most significant free byte, so comparing words compares lexicographically.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t var, unsigned exponent = 1);

  unsigned exponent(std::size_t var) const noexcept {
    return static_cast<unsigned>((words_[var / 8] >> shift(var)) & 0xffu);
  }
  void set_exponent(std::size_t var, unsigned e);
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::uint32_t support() const noexcept;  // bit k set when variable k occurs

  bool divides(const Monomial& other) const noexcept;
  Monomial quotient(const Monomial& divisor) const noexcept;  // requires divisor | *this
  static Monomial gcd(const Monomial& a, const Monomial& b) noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.words_ == b.words_;
  }
  // Degree-lexicographic: higher total degree is larger, ties broken by
  // the exponent of the earliest variable.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = 0; i < kWords; ++i) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = degree_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0xff51afd7ed558ccdull + (h >> 29);
    return static_cast<std::size_t>(h ^ (h >> 32));
  }

 private:
  static constexpr std::size_t kWords = kMaxEvenVars / 8;
  static unsigned shift(std::size_t var) noexcept { return static_cast<unsigned>((7 - var % 8) * 8); }

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace superinv
