#include "superinv/scalar.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "superinv/budget.hpp"

namespace superinv {

int koszul_sign(OddMask left, OddMask right) noexcept {
  int inversions = 0;
  for (OddMask m = right; m != 0; m &= m - 1) {
    const int b = std::countr_zero(m);
    if (b < 63) inversions += std::popcount(left >> (b + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::string odd_monomial_text(const RingContext& ctx, OddMask mask) {
  std::string out;
  for (OddMask m = mask; m != 0; m &= m - 1) {
    const auto k = static_cast<std::size_t>(std::countr_zero(m));
    if (!out.empty()) out += "*";
    out += ctx.odd_names().at(k);
  }
  return out;
}

namespace {

const ContextPtr& pick_context(const Scalar& a, const Scalar& b) {
  if (a.context() && b.context() && a.context() != b.context()) throw ContextMismatch();
  return a.context() ? a.context() : b.context();
}

Factorization add_exponents(const Factorization& a, const Factorization& b) {
  std::map<AtomId, std::uint32_t> m(a.begin(), a.end());
  for (const auto& [id, e] : b) m[id] += e;
  return Factorization(m.begin(), m.end());
}

Factorization max_exponents(const Factorization& a, const Factorization& b) {
  std::map<AtomId, std::uint32_t> m(a.begin(), a.end());
  for (const auto& [id, e] : b) m[id] = std::max(m[id], e);
  return Factorization(m.begin(), m.end());
}

Factorization sub_exponents(const Factorization& a, const Factorization& b) {
  std::map<AtomId, std::uint32_t> m(a.begin(), a.end());
  for (const auto& [id, e] : b) m[id] -= e;
  Factorization out;
  for (const auto& [id, e] : m) {
    if (e > 0) out.emplace_back(id, e);
  }
  return out;
}

Int lcm(const Int& a, const Int& b) { return Int::divexact(a, Int::gcd(a, b)) * b; }

}  // namespace

Scalar::Scalar(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Scalar Scalar::constant(ContextPtr ctx, const Rational& value) {
  Scalar s(std::move(ctx));
  if (value != 0) {
    s.scale_ = value;
    s.terms_.push_back(GrassmannTerm{0, Poly(Int(1))});
  }
  return s;
}

Scalar Scalar::even_generator(ContextPtr ctx, std::size_t index) {
  if (index >= ctx->even_count()) throw std::out_of_range("even generator index out of range");
  Scalar s(std::move(ctx));
  s.scale_ = 1;
  s.terms_.push_back(GrassmannTerm{0, Poly::variable(index)});
  return s;
}

Scalar Scalar::odd_generator(ContextPtr ctx, std::size_t index) {
  if (index >= ctx->odd_count()) throw std::out_of_range("odd generator index out of range");
  Scalar s(std::move(ctx));
  s.scale_ = 1;
  s.terms_.push_back(GrassmannTerm{OddMask{1} << index, Poly(Int(1))});
  return s;
}

Scalar Scalar::from_poly(ContextPtr ctx, const Poly& p) {
  return from_parts(std::move(ctx), Rational(1), {}, {GrassmannTerm{0, p}});
}

Scalar Scalar::from_parts(ContextPtr ctx, Rational scale, Factorization den, std::vector<GrassmannTerm> terms) {
  Scalar s(std::move(ctx));
  std::sort(terms.begin(), terms.end(), [](const GrassmannTerm& a, const GrassmannTerm& b) { return a.mask < b.mask; });
  for (auto& t : terms) {
    if (!s.terms_.empty() && s.terms_.back().mask == t.mask) {
      s.terms_.back().coeff += t.coeff;
    } else {
      s.terms_.push_back(std::move(t));
    }
  }
  s.scale_ = std::move(scale);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  std::erase_if(terms_, [](const GrassmannTerm& t) { return t.coeff.is_zero(); });
  if (terms_.empty() || scale_ == 0) {
    terms_.clear();
    den_.clear();
    scale_ = 0;
    return;
  }
  if (!den_.empty()) den_ = ctx_->refresh(den_);

  Int g(0);
  for (const auto& t : terms_) {
    for (const auto& term : t.coeff.terms()) {
      g = Int::gcd(g, term.coeff);
      if (g.is_one()) break;
    }
    if (g.is_one()) break;
  }
  if (terms_.front().coeff.leading().coeff.sign() < 0) g.negate();
  if (!g.is_one()) {
    for (auto& t : terms_) t.coeff = t.coeff.divided_by_int(g);
    scale_ *= to_rational(g);
  }

  if (den_.empty()) return;
  std::vector<std::size_t> order(terms_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return terms_[x].coeff.size() < terms_[y].coeff.size(); });
  for (auto& [id, e] : den_) {
    const Poly p = ctx_->atom(id);
    const std::uint32_t support = p.support();
    while (e > 0) {
      bool ok = true;
      for (const auto& t : terms_) {
        if ((support & ~t.coeff.support()) != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      std::vector<Poly> quotients(terms_.size());
      for (std::size_t idx : order) {
        auto q = terms_[idx].coeff.divide_exact(p);
        if (!q) {
          ok = false;
          break;
        }
        quotients[idx] = std::move(*q);
      }
      if (!ok) break;
      for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i].coeff = std::move(quotients[i]);
      --e;
    }
  }
  std::erase_if(den_, [](const auto& f) { return f.second == 0; });
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].mask == 0 && den_.empty() && scale_ == 1 && terms_[0].coeff.is_constant() &&
         terms_[0].coeff.constant_value().is_one();
}

ScalarParity Scalar::parity() const noexcept {
  if (terms_.empty()) return ScalarParity::Zero;
  bool even = false;
  bool odd = false;
  for (const auto& t : terms_) {
    if (std::popcount(t.mask) % 2 == 0) {
      even = true;
    } else {
      odd = true;
    }
  }
  if (even && odd) return ScalarParity::Inhomogeneous;
  return even ? ScalarParity::Even : ScalarParity::Odd;
}

bool Scalar::is_even() const noexcept {
  const auto p = parity();
  return p == ScalarParity::Zero || p == ScalarParity::Even;
}

bool Scalar::is_odd() const noexcept {
  const auto p = parity();
  return p == ScalarParity::Zero || p == ScalarParity::Odd;
}

std::vector<std::pair<OddMask, RationalFunction>> Scalar::terms() const {
  std::vector<std::pair<OddMask, RationalFunction>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.emplace_back(t.mask, RationalFunction(from_parts(ctx_, scale_, den_, {GrassmannTerm{0, t.coeff}})));
  }
  return out;
}

RationalFunction Scalar::coefficient(OddMask mask) const {
  for (const auto& t : terms_) {
    if (t.mask == mask) return RationalFunction(from_parts(ctx_, scale_, den_, {GrassmannTerm{0, t.coeff}}));
  }
  return RationalFunction(Scalar(ctx_));
}

RationalFunction Scalar::body() const { return coefficient(0); }

Scalar Scalar::body_scalar() const { return body().as_scalar(); }

namespace {

Scalar filtered(const Scalar& s, bool (*keep)(OddMask)) {
  std::vector<GrassmannTerm> kept;
  for (const auto& t : s.numerators()) {
    if (keep(t.mask)) kept.push_back(t);
  }
  return Scalar::from_parts(s.context(), s.scale(), s.denominator(), std::move(kept));
}

}  // namespace

Scalar Scalar::soul() const {
  return filtered(*this, [](OddMask m) { return m != 0; });
}

Scalar Scalar::odd_part() const {
  return filtered(*this, [](OddMask m) { return std::popcount(m) % 2 == 1; });
}

Scalar Scalar::even_part() const {
  return filtered(*this, [](OddMask m) { return std::popcount(m) % 2 == 0; });
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  out.scale_ = -out.scale_;
  return out;
}

Scalar Scalar::scaled(const Rational& q) const {
  if (q == 0 || is_zero()) return Scalar(ctx_);
  Scalar out(*this);
  out.scale_ *= q;
  return out;
}

namespace {

Scalar add_impl(const Scalar& a, const Scalar& b, bool subtract) {
  const ContextPtr& ctx = pick_context(a, b);
  if (b.is_zero()) return a.context() ? a : Scalar(ctx);
  if (a.is_zero()) return subtract ? -b : b;
  OpBudget::charge(a.term_count() + b.term_count());

  const Factorization da = ctx->refresh(a.denominator());
  const Factorization db = ctx->refresh(b.denominator());
  Factorization common = max_exponents(da, db);
  const Poly ma = ctx->expand(sub_exponents(common, da));
  const Poly mb = ctx->expand(sub_exponents(common, db));

  const Rational& sa = a.scale();
  Rational sb = b.scale();
  if (subtract) sb = -sb;
  const Int qa(sa.get_den());
  const Int qb(sb.get_den());
  const Int q = lcm(qa, qb);
  const Poly fa = ma.scaled(Int(sa.get_num()) * Int::divexact(q, qa));
  const Poly fb = mb.scaled(Int(sb.get_num()) * Int::divexact(q, qb));

  std::vector<GrassmannTerm> terms;
  const auto& ta = a.numerators();
  const auto& tb = b.numerators();
  terms.reserve(ta.size() + tb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].mask < tb[j].mask)) {
      terms.push_back(GrassmannTerm{ta[i].mask, ta[i].coeff * fa});
      ++i;
    } else if (i == ta.size() || tb[j].mask < ta[i].mask) {
      terms.push_back(GrassmannTerm{tb[j].mask, tb[j].coeff * fb});
      ++j;
    } else {
      terms.push_back(GrassmannTerm{ta[i].mask, ta[i].coeff * fa + tb[j].coeff * fb});
      ++i;
      ++j;
    }
  }
  return Scalar::from_parts(ctx, Rational(mpz_class(1), q.to_mpz()), std::move(common), std::move(terms));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) { return add_impl(a, b, false); }
Scalar operator-(const Scalar& a, const Scalar& b) { return add_impl(a, b, true); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const ContextPtr& ctx = pick_context(a, b);
  if (a.is_zero() || b.is_zero()) return Scalar(ctx);
  const auto& ta = a.numerators();
  const auto& tb = b.numerators();
  OpBudget::charge(static_cast<std::uint64_t>(ta.size()) * tb.size());

  struct PairRef {
    OddMask mask;
    std::uint32_t i;
    std::uint32_t j;
    bool negate;
  };
  std::vector<PairRef> pairs;
  pairs.reserve(ta.size() * tb.size());
  for (std::uint32_t i = 0; i < ta.size(); ++i) {
    for (std::uint32_t j = 0; j < tb.size(); ++j) {
      if ((ta[i].mask & tb[j].mask) != 0) continue;
      pairs.push_back(PairRef{ta[i].mask | tb[j].mask, i, j, koszul_sign(ta[i].mask, tb[j].mask) < 0});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const PairRef& x, const PairRef& y) { return x.mask < y.mask; });

  std::vector<GrassmannTerm> terms;
  TermAccumulator acc;
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t end = k + 1;
    while (end < pairs.size() && pairs[end].mask == pairs[k].mask) ++end;
    Poly coeff;
    if (end == k + 1) {
      coeff = ta[pairs[k].i].coeff * tb[pairs[k].j].coeff;
      if (pairs[k].negate) coeff = -coeff;
    } else {
      for (std::size_t m = k; m < end; ++m) acc.add_product(ta[pairs[m].i].coeff, tb[pairs[m].j].coeff, pairs[m].negate);
      coeff = acc.take();
    }
    if (!coeff.is_zero()) terms.push_back(GrassmannTerm{pairs[k].mask, std::move(coeff)});
    k = end;
  }
  Factorization den = add_exponents(ctx->refresh(a.denominator()), ctx->refresh(b.denominator()));
  return Scalar::from_parts(ctx, a.scale() * b.scale(), std::move(den), std::move(terms));
}

Scalar Scalar::inverse() const {
  if (!ctx_ || is_zero()) throw NotInvertible("cannot invert zero");
  if (!is_even()) throw NotInvertible("only even elements can be inverted");
  if (terms_.front().mask != 0) throw NotInvertible("body vanishes; element is nilpotent");
  Int unit;
  Factorization body_factors = ctx_->factor(terms_.front().coeff, unit);
  const Rational inv_scale = 1 / (scale_ * to_rational(unit));
  Scalar body_inverse = from_parts(ctx_, inv_scale, std::move(body_factors), {GrassmannTerm{0, ctx_->expand(den_)}});
  if (terms_.size() == 1) return body_inverse;

  const Scalar step = -(soul() * body_inverse);
  Scalar sum = constant(ctx_, Rational(1));
  Scalar power = sum;
  for (std::size_t k = 0; k <= ctx_->odd_count() / 2 + 1; ++k) {
    power = power * step;
    if (power.is_zero()) break;
    sum += power;
  }
  return body_inverse * sum;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = constant(ctx_, Rational(1));
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.ctx_ != b.ctx_) return false;
  if (a.scale_ == b.scale_ && a.den_ == b.den_ && a.terms_.size() == b.terms_.size()) {
    bool same = true;
    for (std::size_t i = 0; i < a.terms_.size() && same; ++i) {
      same = a.terms_[i].mask == b.terms_[i].mask && a.terms_[i].coeff == b.terms_[i].coeff;
    }
    if (same) return true;
  }
  if (a.ctx_->any_split()) return (a - b).is_zero();
  return false;
}

namespace {

void append_signed(std::ostringstream& os, bool& first, bool negative) {
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  first = false;
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& names = ctx_->even_names();
  for (const auto& [mask, rf] : terms()) {
    const std::string gens = odd_monomial_text(*ctx_, mask);
    const Scalar& v = rf.as_scalar();
    if (v.denominator().empty()) {
      for (const auto& t : v.numerators().front().coeff.terms()) {
        Rational q = v.scale() * to_rational(t.coeff);
        append_signed(os, first, q < 0);
        if (q < 0) q = -q;
        std::string mono = Poly::monomial(t.mono, Int(1)).to_string(names);
        std::vector<std::string> parts;
        if (q != 1 || (t.mono.is_one() && gens.empty())) parts.push_back(q.get_str());
        if (!t.mono.is_one()) parts.push_back(mono);
        if (!gens.empty()) parts.push_back(gens);
        for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
      }
    } else {
      append_signed(os, first, false);
      os << "(" << rf.numerator().to_string(names) << ")/(" << rf.denominator().to_string(names) << ")";
      if (!gens.empty()) os << "*" << gens;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(Scalar body_only) : value_(std::move(body_only)) {
  for (const auto& t : value_.numerators()) {
    if (t.mask != 0) throw std::invalid_argument("rational function must not contain odd generators");
  }
}

Poly RationalFunction::numerator() const {
  if (value_.is_zero()) return Poly{};
  return value_.numerators().front().coeff.scaled(Int(value_.scale().get_num()));
}

Poly RationalFunction::denominator() const {
  if (value_.is_zero()) return Poly(Int(1));
  return value_.context()->expand(value_.denominator()).scaled(Int(value_.scale().get_den()));
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  if (value_.is_zero()) return Rational(0);
  const Rational d = denominator().evaluate(point);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return numerator().evaluate(point) / d;
}

std::string RationalFunction::to_string() const { return value_.to_string(); }

}  // namespace superinv
