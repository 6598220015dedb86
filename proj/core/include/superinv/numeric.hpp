#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "superinv/scalar.hpp"

namespace superinv {

// Deterministic generator: std::mt19937_64 (fully specified by the standard)
// with our own rejection sampling, so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);                  // uniform in [0, n)
  std::int64_t between(std::int64_t lo, std::int64_t hi);  // uniform in [lo, hi]
  Rational nonzero_rational(std::int64_t max_num = 9, std::int64_t max_den = 5);

 private:
  std::mt19937_64 engine_;
};

// Images of the generators: even ones go to rationals, each odd one to a
// linear combination of the odd generators of `target` (a ring without even
// generators, i.e. a finite Grassmann algebra over Q).
struct NumericAssignment {
  ContextPtr target;
  std::vector<Rational> even;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> odd;
};

// Ring homomorphism image; throws std::domain_error when a denominator vanishes.
Scalar evaluate_numeric(const Scalar& s, const NumericAssignment& assignment);

// Grassmann algebra with generators e1..en and no even generators.
ContextPtr grassmann_context(std::size_t odd_count);

// Random point: even values nonzero rationals n/d with |n| <= 97, d <= 13 (wide
// enough that accidental vanishing of minors is rare), odd generator k sent to c_k * e_k
// with c_k a random nonzero rational. `extra_odd` further generators are added to
// the target for the caller's use (they follow the images of the source ones).
NumericAssignment random_assignment(const RingContext& source, Rng& rng, std::size_t extra_odd = 0);

}  // namespace superinv
