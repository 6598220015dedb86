#pragma once

// Seeded generators for the property suites. Each test seeds its own Rng so
// failures reproduce from the printed seed.

#include <cstdint>
#include <vector>

#include "superinv/numeric.hpp"
#include "superinv/scalar.hpp"
#include "superinv/sft11.hpp"
#include "superinv/supermatrix.hpp"

namespace superinv::testgen {

inline constexpr int kPropertyCases = 100;

// A sum of a few terms rational * even monomial * odd monomial of the asked
// parity, sometimes divided by a linear even factor.
inline Scalar homogeneous(const ContextPtr& ctx, bool odd, Rng& rng, bool allow_denominator = true) {
  Scalar out(ctx);
  const std::size_t terms = 1 + rng.below(3);
  for (std::size_t t = 0; t < terms; ++t) {
    Scalar term = Scalar::constant(ctx, rng.nonzero_rational());
    for (std::size_t v = 0; v < ctx->even_count(); ++v) {
      for (std::uint64_t k = rng.below(3); k > 0; --k) term *= Scalar::even_generator(ctx, v);
    }
    std::vector<std::size_t> picks;
    for (std::size_t v = 0; v < ctx->odd_count(); ++v) {
      if (rng.below(2)) picks.push_back(v);
    }
    if ((picks.size() % 2 == 1) != odd) {
      if (picks.empty()) {
        picks.push_back(rng.below(ctx->odd_count()));
      } else {
        picks.pop_back();
      }
    }
    for (std::size_t v : picks) term *= Scalar::odd_generator(ctx, v);
    out += term;
  }
  if (allow_denominator && ctx->even_count() > 0 && rng.below(2)) {
    const Scalar den = Scalar::even_generator(ctx, rng.below(ctx->even_count())) +
                       Scalar::constant(ctx, rng.nonzero_rational());
    out *= den.inverse();
  }
  return out;
}

inline Scalar any_scalar(const ContextPtr& ctx, Rng& rng) {
  return homogeneous(ctx, false, rng) + homogeneous(ctx, true, rng);
}

// Even with a nonzero constant body, hence invertible.
inline Scalar invertible(const ContextPtr& ctx, Rng& rng) {
  return Scalar::constant(ctx, rng.nonzero_rational()) + homogeneous(ctx, false, rng, false) *
                                                             Scalar::even_generator(ctx, 0);
}

// Square (p|q) matrix over a Grassmann algebra: rational even blocks with
// nonzero determinant, odd entries c * e_k on fresh generators from `next`.
inline SuperMatrix numeric_square(const ContextPtr& ctx, std::size_t p, std::size_t q, std::size_t& next, Rng& rng) {
  SuperMatrix a(ctx, {p, q}, {p, q});
  while (true) {
    std::size_t k = next;
    for (std::size_t i = 0; i < p + q; ++i) {
      for (std::size_t j = 0; j < p + q; ++j) {
        const bool odd = (i < p) != (j < p);
        const Rational v = rng.nonzero_rational(9, 5);
        a(i, j) = odd ? Scalar::odd_generator(ctx, k++).scaled(v) : Scalar::constant(ctx, v);
      }
    }
    const bool ok = (p == 0 || !det_rows(a.block(Parity::Even, Parity::Even)).is_zero()) &&
                    (q == 0 || !det_rows(a.block(Parity::Odd, Parity::Odd)).is_zero());
    if (ok) {
      next = k;
      return a;
    }
  }
}

// Random polynomial in the (1|1) generators: a few words of degree <= max_degree.
inline InvariantPolynomial invariant(std::size_t p, std::size_t q, unsigned max_degree, Rng& rng) {
  const auto gens = all_generators(p, q);
  InvariantPolynomial f;
  const std::size_t terms = 1 + rng.below(4);
  for (std::size_t t = 0; t < terms; ++t) {
    InvariantPolynomial w = InvariantPolynomial::constant(rng.nonzero_rational());
    const unsigned d = static_cast<unsigned>(rng.below(max_degree + 1));
    for (unsigned k = 0; k < d; ++k) w = w * InvariantPolynomial::generator(gens[rng.below(gens.size())]);
    f = f + w;
  }
  return f;
}

}  // namespace superinv::testgen
