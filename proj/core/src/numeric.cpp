#include "superinv/numeric.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace superinv {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between with empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
  std::int64_t num = between(1, max_num);
  if (below(2) == 1) num = -num;
  const std::int64_t den = between(1, max_den);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

ContextPtr grassmann_context(std::size_t odd_count) {
  std::vector<std::string> names;
  names.reserve(odd_count);
  for (std::size_t k = 1; k <= odd_count; ++k) names.push_back("e" + std::to_string(k));
  return RingContext::create({}, std::move(names));
}

namespace {

using Sparse = std::map<OddMask, Rational>;

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if ((ma & mb) != 0) continue;
      Rational c = ca * cb;
      if (koszul_sign(ma, mb) < 0) c = -c;
      out[ma | mb] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Scalar evaluate_numeric(const Scalar& s, const NumericAssignment& assignment) {
  const ContextPtr& target = assignment.target;
  if (!target || target->even_count() != 0) throw std::invalid_argument("numeric target must be a Grassmann algebra");
  if (s.is_zero()) return Scalar(target);
  const RingContext& source = *s.context();
  if (assignment.even.size() != source.even_count() || assignment.odd.size() != source.odd_count()) {
    throw std::invalid_argument("numeric assignment does not match the ring");
  }
  Rational den(1);
  for (const auto& [id, e] : s.denominator()) {
    const Rational v = source.atom(id).evaluate(assignment.even);
    if (v == 0) throw std::domain_error("denominator vanishes at the numeric point");
    for (std::uint32_t k = 0; k < e; ++k) den *= v;
  }
  std::vector<Sparse> images(source.odd_count());
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (const auto& [eta, c] : assignment.odd[k]) {
      if (eta >= target->odd_count()) throw std::out_of_range("odd image uses an undeclared generator");
      if (c != 0) images[k][OddMask{1} << eta] += c;
    }
  }
  Sparse total;
  std::map<OddMask, Sparse> cache;
  cache[0] = Sparse{{0, Rational(1)}};
  for (const auto& t : s.numerators()) {
    const Rational c = t.coeff.evaluate(assignment.even) * s.scale() / den;
    if (c == 0) continue;
    auto it = cache.find(t.mask);
    if (it == cache.end()) {
      Sparse prod{{0, Rational(1)}};
      for (OddMask m = t.mask; m != 0; m &= m - 1) prod = multiply(prod, images[std::countr_zero(m)]);
      it = cache.emplace(t.mask, std::move(prod)).first;
    }
    for (const auto& [mask, v] : it->second) total[mask] += c * v;
  }
  // Bring all coefficients over a common integer denominator.
  mpz_class lcm_den(1);
  for (const auto& [mask, v] : total) {
    if (v != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<GrassmannTerm> terms;
  for (const auto& [mask, v] : total) {
    if (v == 0) continue;
    const mpz_class n = v.get_num() * (lcm_den / v.get_den());
    terms.push_back(GrassmannTerm{mask, Poly(Int(n))});
  }
  return Scalar::from_parts(target, Rational(mpz_class(1), lcm_den), {}, std::move(terms));
}

NumericAssignment random_assignment(const RingContext& source, Rng& rng, std::size_t extra_odd) {
  NumericAssignment a;
  a.target = grassmann_context(source.odd_count() + extra_odd);
  a.even.reserve(source.even_count());
  for (std::size_t k = 0; k < source.even_count(); ++k) a.even.push_back(rng.nonzero_rational(97, 13));
  a.odd.resize(source.odd_count());
  for (std::size_t k = 0; k < source.odd_count(); ++k) a.odd[k].emplace_back(k, rng.nonzero_rational());
  return a;
}

}  // namespace superinv
