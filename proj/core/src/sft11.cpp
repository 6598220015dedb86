#include "superinv/sft11.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superinv {

namespace {

void check_sizes(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("SL(1|1) coordinates need p >= 1 and q >= 1");
  if (p + q > kMaxOddGens) throw std::invalid_argument("too many columns for the Laurent-exterior ring");
}

void add_into(std::map<LaurentExterior::Key, Rational>& terms, const LaurentExterior::Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string coefficient_prefix(const Rational& c, bool first, bool has_body) {
  std::string out;
  Rational mag = c;
  if (c < 0) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  if (!has_body) return out + rational_to_string(mag);
  if (mag != 1) out += rational_to_string(mag) + "*";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentExterior

LaurentExterior::LaurentExterior(std::size_t p, std::size_t q) : p_(p), q_(q) { check_sizes(p, q); }

LaurentExterior LaurentExterior::constant(std::size_t p, std::size_t q, const Rational& c) {
  LaurentExterior v(p, q);
  add_into(v.terms_, Key{std::vector<int>(p + q, 0), 0}, c);
  return v;
}

LaurentExterior LaurentExterior::x(std::size_t p, std::size_t q, std::size_t i, int e) {
  if (i < 1 || i > p) throw std::invalid_argument("x index out of range");
  LaurentExterior v(p, q);
  Key k{std::vector<int>(p + q, 0), 0};
  k.exps[i - 1] = e;
  v.terms_.emplace(std::move(k), Rational(1));
  return v;
}

LaurentExterior LaurentExterior::y(std::size_t p, std::size_t q, std::size_t j, int e) {
  if (j < 1 || j > q) throw std::invalid_argument("y index out of range");
  LaurentExterior v(p, q);
  Key k{std::vector<int>(p + q, 0), 0};
  k.exps[p + j - 1] = e;
  v.terms_.emplace(std::move(k), Rational(1));
  return v;
}

LaurentExterior LaurentExterior::al(std::size_t p, std::size_t q, std::size_t j) {
  if (j < 1 || j > q) throw std::invalid_argument("al index out of range");
  LaurentExterior v(p, q);
  v.terms_.emplace(Key{std::vector<int>(p + q, 0), OddMask{1} << (j - 1)}, Rational(1));
  return v;
}

LaurentExterior LaurentExterior::be(std::size_t p, std::size_t q, std::size_t i) {
  if (i < 1 || i > p) throw std::invalid_argument("be index out of range");
  LaurentExterior v(p, q);
  v.terms_.emplace(Key{std::vector<int>(p + q, 0), OddMask{1} << (q + i - 1)}, Rational(1));
  return v;
}

LaurentExterior LaurentExterior::from_scalar(const Scalar& s, std::size_t p, std::size_t q) {
  LaurentExterior v(p, q);
  if (s.is_zero()) return v;
  const RingContext& ctx = *s.context();
  if (ctx.even_count() != p + q || ctx.odd_count() != p + q) {
    throw std::domain_error("scalar does not live on the (1|1) x (" + std::to_string(p) + "|" + std::to_string(q) +
                            ") coordinate ring");
  }
  std::vector<int> shift(p + q, 0);
  for (const auto& [id, e] : ctx.refresh(s.denominator())) {
    const Poly a = ctx.atom(id);
    if (a.size() != 1 || !a.leading().coeff.is_one()) {
      throw std::domain_error("denominator factor " + a.to_string(ctx.even_names()) +
                              " is not a monomial; element lies outside the Laurent-exterior ring");
    }
    for (std::size_t k = 0; k < p + q; ++k) shift[k] -= static_cast<int>(a.leading().mono.exponent(k) * e);
  }
  for (const auto& t : s.numerators()) {
    for (const auto& term : t.coeff.terms()) {
      Key k{shift, t.mask};
      for (std::size_t i = 0; i < p + q; ++i) k.exps[i] += static_cast<int>(term.mono.exponent(i));
      add_into(v.terms_, k, s.scale() * to_rational(term.coeff));
    }
  }
  return v;
}

LaurentExterior operator+(const LaurentExterior& a, const LaurentExterior& b) {
  LaurentExterior out = a;
  for (const auto& [k, c] : b.terms_) add_into(out.terms_, k, c);
  return out;
}

LaurentExterior operator-(const LaurentExterior& a, const LaurentExterior& b) {
  LaurentExterior out = a;
  for (const auto& [k, c] : b.terms_) add_into(out.terms_, k, -c);
  return out;
}

LaurentExterior operator*(const LaurentExterior& a, const LaurentExterior& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_) throw std::invalid_argument("Laurent-exterior elements of different sizes");
  LaurentExterior out(a.p_, a.q_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.mask & kb.mask) continue;
      LaurentExterior::Key k{ka.exps, ka.mask | kb.mask};
      for (std::size_t i = 0; i < k.exps.size(); ++i) k.exps[i] += kb.exps[i];
      Rational c = ca * cb;
      if (koszul_sign(ka.mask, kb.mask) < 0) c = -c;
      add_into(out.terms_, k, c);
    }
  }
  return out;
}

LaurentExterior LaurentExterior::scaled(const Rational& c) const {
  LaurentExterior out(p_, q_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

Scalar LaurentExterior::to_scalar(const ContextPtr& ctx) const {
  if (ctx->even_count() != p_ + q_ || ctx->odd_count() != p_ + q_) {
    throw std::invalid_argument("context is not the (1|1) coordinate ring of this size");
  }
  Scalar out(ctx);
  for (const auto& [k, c] : terms_) {
    Scalar t = Scalar::constant(ctx, c);
    for (std::size_t i = 0; i < k.exps.size(); ++i) {
      if (k.exps[i] != 0) t *= Scalar::even_generator(ctx, i).pow(k.exps[i]);
    }
    for (OddMask m = k.mask; m != 0; m &= m - 1) {
      t *= Scalar::odd_generator(ctx, static_cast<std::size_t>(std::countr_zero(m)));
    }
    out += t;
  }
  return out;
}

namespace {

std::string even_slot_name(std::size_t p, std::size_t k) {
  return k < p ? "x[1," + std::to_string(k + 1) + "]" : "y[1," + std::to_string(k - p + 1) + "]";
}

std::string odd_bit_name(std::size_t q, std::size_t bit) {
  return bit < q ? "al[1," + std::to_string(bit + 1) + "]" : "be[1," + std::to_string(bit - q + 1) + "]";
}

std::string laurent_monomial_text(std::size_t p, std::size_t q, const std::vector<int>& exps, OddMask mask) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    std::string s = even_slot_name(p, k);
    if (exps[k] != 1) s += "^" + (exps[k] < 0 ? "(" + std::to_string(exps[k]) + ")" : std::to_string(exps[k]));
    parts.push_back(std::move(s));
  }
  for (OddMask m = mask; m != 0; m &= m - 1) parts.push_back(odd_bit_name(q, std::countr_zero(m)));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace

std::string LaurentExterior::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const std::string body = laurent_monomial_text(p_, q_, k.exps, k.mask);
    out += coefficient_prefix(c, first, !body.empty()) + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis monomials and the order

BasisMonomial BasisMonomial::from_key(const LaurentExterior::Key& k, std::size_t p, std::size_t q) {
  BasisMonomial m;
  m.p = p;
  m.q = q;
  m.a.assign(k.exps.size(), 0);
  m.b.assign(k.exps.size(), 0);
  for (std::size_t i = 0; i < k.exps.size(); ++i) {
    if (k.exps[i] > 0) m.a[i] = static_cast<unsigned>(k.exps[i]);
    if (k.exps[i] < 0) m.b[i] = static_cast<unsigned>(-k.exps[i]);
  }
  m.c = k.mask;
  return m;
}

std::string BasisMonomial::to_string() const {
  std::vector<int> exps(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) exps[i] = static_cast<int>(a[i]) - static_cast<int>(b[i]);
  const std::string s = laurent_monomial_text(p, q, exps, c);
  return s.empty() ? "1" : s;
}

std::strong_ordering basis_order(const BasisMonomial& m, const BasisMonomial& n) {
  if (m.a.size() != n.a.size()) throw std::invalid_argument("basis monomials of different sizes");
  for (std::size_t k = 0; k < m.a.size(); ++k) {
    if (m.a[k] != n.a[k]) return m.a[k] > n.a[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (std::size_t k = 0; k < m.b.size(); ++k) {
    if (m.b[k] != n.b[k]) return m.b[k] < n.b[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const OddMask diff = m.c ^ n.c;
  if (diff == 0) return std::strong_ordering::equal;
  const OddMask low = diff & (~diff + 1);
  return (m.c & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

BasisMonomial leading_term(const LaurentExterior& v) {
  if (v.is_zero()) throw std::invalid_argument("the zero element has no leading term");
  std::optional<BasisMonomial> best;
  for (const auto& [k, c] : v.terms()) {
    BasisMonomial m = BasisMonomial::from_key(k, v.p(), v.q());
    if (!best || basis_order(m, *best) == std::strong_ordering::less) best = std::move(m);
  }
  return *best;
}

BasisMonomial leading_term(const Scalar& v, std::size_t p, std::size_t q) {
  return leading_term(LaurentExterior::from_scalar(v, p, q));
}

// ---------------------------------------------------------------------------
// Words and invariant polynomials

unsigned Word::degree() const {
  unsigned d = 0;
  for (const auto& f : factors) d += f.second;
  return d;
}

std::string Word::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i].first.to_string();
    if (factors[i].second != 1) out += "^" + std::to_string(factors[i].second);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da <=> db;
  return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                b.factors.end());
}

bool generator_is_odd(const MinorSymbol& g) { return g.kind() != MinorKind::Plain; }

void validate_generator(const MinorSymbol& g, std::size_t p, std::size_t q) {
  g.validate(MatrixShape{1, 1, p, q});
}

namespace {

// Product of two canonical words; sign 0 when an odd generator repeats.
std::pair<Word, int> multiply_words(const Word& a, const Word& b) {
  int sign = 1;
  for (const auto& [gb, eb] : b.factors) {
    if (!generator_is_odd(gb)) continue;
    for (const auto& [ga, ea] : a.factors) {
      if (!generator_is_odd(ga)) continue;
      if (ga == gb) return {Word{}, 0};
      if (gb < ga) sign = -sign;
    }
  }
  Word out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      out.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
      out.factors.push_back(b.factors[j++]);
    } else {
      out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    }
  }
  return {std::move(out), sign};
}

}  // namespace

void InvariantPolynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

InvariantPolynomial InvariantPolynomial::constant(const Rational& c) {
  InvariantPolynomial f;
  f.add_term(Word{}, c);
  return f;
}

InvariantPolynomial InvariantPolynomial::generator(const MinorSymbol& g) {
  if (g.even_slots.size() != 1 || g.odd_slots.size() != 1) {
    throw std::invalid_argument("generator " + g.to_string() + " is not a (1|1) minor");
  }
  InvariantPolynomial f;
  f.add_term(Word{{{g, 1u}}}, Rational(1));
  return f;
}

InvariantPolynomial InvariantPolynomial::monomial(const Word& w, const Rational& c) {
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    if (i && !(w.factors[i - 1].first < w.factors[i].first)) throw std::invalid_argument("word is not canonical");
    if (w.factors[i].second == 0) throw std::invalid_argument("word has a zero exponent");
    if (generator_is_odd(w.factors[i].first) && w.factors[i].second > 1) return InvariantPolynomial{};
  }
  InvariantPolynomial f;
  f.add_term(w, c);
  return f;
}

unsigned InvariantPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

std::vector<MinorSymbol> InvariantPolynomial::generators() const {
  std::set<MinorSymbol> seen;
  for (const auto& [w, c] : terms_) {
    for (const auto& f : w.factors) seen.insert(f.first);
  }
  return {seen.begin(), seen.end()};
}

InvariantPolynomial operator+(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  InvariantPolynomial out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

InvariantPolynomial operator-(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  InvariantPolynomial out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

InvariantPolynomial operator*(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  InvariantPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      auto [w, sign] = multiply_words(wa, wb);
      if (sign == 0) continue;
      out.add_term(w, sign > 0 ? ca * cb : Rational(-(ca * cb)));
    }
  }
  return out;
}

InvariantPolynomial InvariantPolynomial::scaled(const Rational& c) const {
  InvariantPolynomial out;
  if (c == 0) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
  return out;
}

InvariantPolynomial InvariantPolynomial::pow(unsigned e) const {
  InvariantPolynomial out = constant(Rational(1));
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

namespace {

// Word order, with the constant term moved to the end.
std::vector<std::pair<const Word*, const Rational*>> printing_order(const std::map<Word, Rational>& terms) {
  std::vector<std::pair<const Word*, const Rational*>> out;
  for (const auto& [w, c] : terms) {
    if (!w.factors.empty()) out.emplace_back(&w, &c);
  }
  if (!terms.empty() && terms.begin()->first.factors.empty()) out.emplace_back(&terms.begin()->first, &terms.begin()->second);
  return out;
}

}  // namespace

std::string InvariantPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [wp, cp] : printing_order(terms_)) {
    const Word& w = *wp;
    const Rational& c = *cp;
    const bool body = !w.factors.empty();
    out += coefficient_prefix(c, first, body) + (body ? w.to_string() : "");
    first = false;
  }
  return out;
}

std::string InvariantPolynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [wp, cp] : printing_order(terms_)) {
    const Word& w = *wp;
    const Rational& c = *cp;
    Rational mag = c < 0 ? Rational(-c) : c;
    out += c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    first = false;
    if (w.factors.empty() || mag != 1) {
      if (mag.get_den() == 1) {
        out += mag.get_num().get_str();
      } else {
        out += "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
      }
    }
    for (const auto& [g, e] : w.factors) {
      out += g.to_latex();
      if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// From minor expressions

namespace {

MinorSymbol partner(const MinorSymbol& g) {
  MinorSymbol h = g;
  h.starred = !g.starred;
  return h;
}

InvariantPolynomial inverse_of(const MinorExpr& e) {
  if (e.op() == MinorExpr::Op::Minor && e.symbol().kind() == MinorKind::Plain) {
    return InvariantPolynomial::generator(partner(e.symbol()));
  }
  if (e.op() == MinorExpr::Op::Power && e.children()[0].op() == MinorExpr::Op::Minor &&
      e.children()[0].symbol().kind() == MinorKind::Plain) {
    const MinorSymbol& g = e.children()[0].symbol();
    const long k = e.exponent();
    return InvariantPolynomial::generator(k > 0 ? partner(g) : g).pow(static_cast<unsigned>(k > 0 ? k : -k));
  }
  throw std::invalid_argument("cannot invert " + e.to_string() + " inside the polynomial ring");
}

}  // namespace

InvariantPolynomial to_invariant_polynomial(const MinorExpr& e) {
  switch (e.op()) {
    case MinorExpr::Op::Constant:
      return InvariantPolynomial::constant(e.value());
    case MinorExpr::Op::Minor:
      return InvariantPolynomial::generator(e.symbol());
    case MinorExpr::Op::Sum: {
      InvariantPolynomial out;
      for (const auto& [c, t] : e.terms()) out = out + to_invariant_polynomial(t).scaled(c);
      return out;
    }
    case MinorExpr::Op::Product: {
      InvariantPolynomial out = InvariantPolynomial::constant(Rational(1));
      for (const auto& f : e.children()) out = out * to_invariant_polynomial(f);
      return out;
    }
    case MinorExpr::Op::Power: {
      if (e.exponent() >= 0) return to_invariant_polynomial(e.children()[0]).pow(static_cast<unsigned>(e.exponent()));
      return inverse_of(MinorExpr::power(e.children()[0], -e.exponent()));
    }
    case MinorExpr::Op::Ber: {
      if (e.signature().even != 1 || e.signature().odd != 1) {
        throw std::invalid_argument("only (1|1) Berezinians convert to the polynomial ring");
      }
      const auto& m = e.children();
      // Ber(a b; c d) = d^-1 (a - b d^-1 c); Ber*(a b; c d) = a^-1 (d - c a^-1 b).
      const auto& [pa, pb, pc, pd] = std::tie(m[0], m[1], m[2], m[3]);
      if (!e.starred()) {
        const InvariantPolynomial dinv = inverse_of(pd);
        return dinv * (to_invariant_polynomial(pa) - to_invariant_polynomial(pb) * dinv * to_invariant_polynomial(pc));
      }
      const InvariantPolynomial ainv = inverse_of(pa);
      return ainv * (to_invariant_polynomial(pd) - to_invariant_polynomial(pc) * ainv * to_invariant_polynomial(pb));
    }
  }
  throw std::logic_error("unknown expression node");
}

// ---------------------------------------------------------------------------
// The map to minors

namespace {

LaurentExterior column_entry(std::size_t p, std::size_t q, std::size_t row, const ColumnLabel& c) {
  if (row == 0) {
    return c.parity == Parity::Even ? LaurentExterior::x(p, q, c.index) : LaurentExterior::al(p, q, c.index);
  }
  return c.parity == Parity::Even ? LaurentExterior::be(p, q, c.index) : LaurentExterior::y(p, q, c.index);
}

LaurentExterior invert_variable(std::size_t p, std::size_t q, std::size_t row, const ColumnLabel& c) {
  if (row == 0 && c.parity == Parity::Even) return LaurentExterior::x(p, q, c.index, -1);
  if (row == 1 && c.parity == Parity::Odd) return LaurentExterior::y(p, q, c.index, -1);
  throw std::logic_error("pivot of a (1|1) minor must be an even coordinate");
}

LaurentExterior generator_image(const MinorSymbol& g, std::size_t p, std::size_t q) {
  validate_generator(g, p, q);
  const ColumnLabel& ce = g.even_slots[0];
  const ColumnLabel& co = g.odd_slots[0];
  const LaurentExterior a = column_entry(p, q, 0, ce);
  const LaurentExterior b = column_entry(p, q, 0, co);
  const LaurentExterior c = column_entry(p, q, 1, ce);
  const LaurentExterior d = column_entry(p, q, 1, co);
  if (!g.starred) {
    const LaurentExterior dinv = invert_variable(p, q, 1, co);
    return dinv * (a - b * dinv * c);
  }
  const LaurentExterior ainv = invert_variable(p, q, 0, ce);
  return ainv * (d - c * ainv * b);
}

}  // namespace

LaurentExterior pi_laurent(const InvariantPolynomial& f, std::size_t p, std::size_t q) {
  std::map<MinorSymbol, LaurentExterior> images;
  auto image = [&](const MinorSymbol& g) -> const LaurentExterior& {
    auto it = images.find(g);
    if (it == images.end()) it = images.emplace(g, generator_image(g, p, q)).first;
    return it->second;
  };
  LaurentExterior out(p, q);
  for (const auto& [w, c] : f.terms()) {
    LaurentExterior t = LaurentExterior::constant(p, q, c);
    for (const auto& [g, e] : w.factors) {
      for (unsigned k = 0; k < e; ++k) t = t * image(g);
    }
    out = out + t;
  }
  return out;
}

Scalar pi_evaluate(const InvariantPolynomial& f, CoordinateModel& model) {
  const MatrixShape& sh = model.shape();
  if (sh.r != 1 || sh.s != 1) throw std::invalid_argument("the invariant ring map needs a (1|1) coordinate model");
  Scalar out(model.context());
  for (const auto& [w, c] : f.terms()) {
    Scalar t = Scalar::constant(model.context(), c);
    for (const auto& [g, e] : w.factors) {
      validate_generator(g, sh.p, sh.q);
      t *= model.minor(g).pow(static_cast<long>(e));
    }
    out += t;
  }
  return out;
}

Scalar pi_evaluate(const InvariantPolynomial& f, std::size_t p, std::size_t q) {
  CoordinateModel model = CoordinateModel::generic(MatrixShape{1, 1, p, q});
  return pi_evaluate(f, model);
}

// ---------------------------------------------------------------------------
// Standard expressions and products

namespace {

std::size_t even_index(const MinorSymbol& g) { return g.even_slots[0].index; }
std::size_t odd_index(const MinorSymbol& g) { return g.odd_slots[0].index; }

MinorSymbol gen_x(std::size_t i, std::size_t mu) { return MinorSymbol::plain(false, {i}, {mu}); }
MinorSymbol gen_xs(std::size_t j, std::size_t nu) { return MinorSymbol::plain(true, {j}, {nu}); }
MinorSymbol gen_fake_one(std::size_t lambda, std::size_t mu) {
  MinorSymbol g;
  g.even_slots = {{Parity::Odd, lambda}};
  g.odd_slots = {{Parity::Odd, mu}};
  return g;
}
MinorSymbol gen_fake_two(std::size_t i, std::size_t j) {
  MinorSymbol g;
  g.starred = true;
  g.even_slots = {{Parity::Even, i}};
  g.odd_slots = {{Parity::Even, j}};
  return g;
}

InvariantPolynomial Y(const MinorSymbol& g) { return InvariantPolynomial::generator(g); }

}  // namespace

bool is_standard_generator(const MinorSymbol& g) {
  if (g.even_slots.size() != 1 || g.odd_slots.size() != 1) return false;
  switch (g.kind()) {
    case MinorKind::Plain:
      return even_index(g) == 1 || odd_index(g) == 1;
    case MinorKind::FakeI:
      return !g.starred && odd_index(g) == 1 && even_index(g) >= 2;
    case MinorKind::FakeII:
      return g.starred && even_index(g) == 1 && odd_index(g) >= 2;
  }
  return false;
}

bool is_zero_generator(const MinorSymbol& g) {
  if (g.even_slots.size() != 1 || g.odd_slots.size() != 1) return false;
  const MinorKind k = g.kind();
  return (k == MinorKind::FakeI || k == MinorKind::FakeII) && even_index(g) == odd_index(g);
}

std::vector<MinorSymbol> standard_generators(std::size_t p, std::size_t q) {
  check_sizes(p, q);
  std::vector<MinorSymbol> out;
  for (std::size_t mu = 1; mu <= q; ++mu) out.push_back(gen_x(1, mu));
  for (std::size_t i = 2; i <= p; ++i) out.push_back(gen_x(i, 1));
  for (std::size_t eta = 2; eta <= q; ++eta) out.push_back(gen_fake_one(eta, 1));
  for (std::size_t lambda = 1; lambda <= q; ++lambda) out.push_back(gen_xs(1, lambda));
  for (std::size_t j = 2; j <= p; ++j) out.push_back(gen_xs(j, 1));
  for (std::size_t l = 2; l <= p; ++l) out.push_back(gen_fake_two(1, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MinorSymbol> all_generators(std::size_t p, std::size_t q) {
  check_sizes(p, q);
  std::vector<MinorSymbol> out;
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t mu = 1; mu <= q; ++mu) {
      out.push_back(gen_x(i, mu));
      out.push_back(gen_xs(i, mu));
    }
  }
  for (std::size_t a = 1; a <= q; ++a) {
    for (std::size_t b = 1; b <= q; ++b) out.push_back(gen_fake_one(a, b));
  }
  for (std::size_t a = 1; a <= p; ++a) {
    for (std::size_t b = 1; b <= p; ++b) out.push_back(gen_fake_two(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_standard_word(const Word& w) {
  std::set<std::pair<std::size_t, std::size_t>> plain, starred;
  for (const auto& [g, e] : w.factors) {
    if (!is_standard_generator(g)) return false;
    if (g.kind() == MinorKind::Plain) (g.starred ? starred : plain).emplace(even_index(g), odd_index(g));
  }
  for (const auto& ix : plain) {
    if (starred.count(ix)) return false;
  }
  return true;
}

unsigned StandardProduct::degree() const {
  unsigned d = static_cast<unsigned>(eta.size() + l.size());
  for (const auto* v : {&mu, &i, &lambda, &j}) {
    for (const auto& [k, e] : *v) d += e;
  }
  return d;
}

void StandardProduct::validate(std::size_t p, std::size_t q) const {
  auto fail = [](const std::string& why) { throw std::invalid_argument("invalid standard product: " + why); };
  auto check_block = [&](const std::vector<std::pair<std::size_t, unsigned>>& v, std::size_t lo, std::size_t hi,
                         const char* name) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].first < lo || v[k].first > hi) fail(std::string(name) + " index out of range");
      if (v[k].second == 0) fail(std::string(name) + " exponent must be positive");
      if (k && v[k - 1].first >= v[k].first) fail(std::string(name) + " indices must increase");
    }
  };
  auto check_odd = [&](const std::vector<std::size_t>& v, std::size_t lo, std::size_t hi, const char* name) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < lo || v[k] > hi) fail(std::string(name) + " index out of range");
      if (k && v[k - 1] >= v[k]) fail(std::string(name) + " indices must increase");
    }
  };
  check_block(mu, 1, q, "mu");
  check_block(i, 2, p, "i");
  check_odd(eta, 2, q, "eta");
  check_block(lambda, 1, q, "lambda");
  check_block(j, 2, p, "j");
  check_odd(l, 2, p, "l");
  for (const auto& a : mu) {
    for (const auto& b : lambda) {
      if (a.first == b.first) fail("mu and lambda share the index " + std::to_string(a.first));
    }
  }
  for (const auto& a : i) {
    for (const auto& b : j) {
      if (a.first == b.first) fail("i and j share the index " + std::to_string(a.first));
    }
  }
}

namespace {

std::vector<MinorSymbol> block_order_factors(const StandardProduct& s) {
  std::vector<MinorSymbol> out;
  auto push = [&](const MinorSymbol& g, unsigned e) {
    for (unsigned k = 0; k < e; ++k) out.push_back(g);
  };
  for (const auto& [m, d] : s.mu) push(gen_x(1, m), d);
  for (const auto& [m, d] : s.i) push(gen_x(m, 1), d);
  for (std::size_t e : s.eta) push(gen_fake_one(e, 1), 1);
  for (const auto& [m, d] : s.lambda) push(gen_xs(1, m), d);
  for (const auto& [m, d] : s.j) push(gen_xs(m, 1), d);
  for (std::size_t e : s.l) push(gen_fake_two(1, e), 1);
  return out;
}

}  // namespace

InvariantPolynomial StandardProduct::to_polynomial() const {
  InvariantPolynomial out = InvariantPolynomial::constant(Rational(1));
  for (const auto& g : block_order_factors(*this)) out = out * Y(g);
  return out;
}

std::string StandardProduct::to_string() const {
  const auto f = block_order_factors(*this);
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < f.size();) {
    std::size_t run = 1;
    while (k + run < f.size() && f[k + run] == f[k]) ++run;
    if (!out.empty()) out += "*";
    out += f[k].to_string();
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

std::pair<StandardProduct, int> StandardProduct::from_word(const Word& w) {
  if (!is_standard_word(w)) throw std::invalid_argument("word " + w.to_string() + " is not a standard product");
  StandardProduct s;
  for (const auto& [g, e] : w.factors) {
    const std::size_t a = even_index(g);
    const std::size_t b = odd_index(g);
    switch (g.kind()) {
      case MinorKind::Plain:
        if (!g.starred) {
          (a == 1 ? s.mu : s.i).emplace_back(a == 1 ? b : a, e);
        } else {
          (a == 1 ? s.lambda : s.j).emplace_back(a == 1 ? b : a, e);
        }
        break;
      case MinorKind::FakeI:
        s.eta.push_back(a);
        break;
      case MinorKind::FakeII:
        s.l.push_back(b);
        break;
    }
  }
  for (auto* v : {&s.mu, &s.i, &s.lambda, &s.j}) std::sort(v->begin(), v->end());
  std::sort(s.eta.begin(), s.eta.end());
  std::sort(s.l.begin(), s.l.end());
  const InvariantPolynomial poly = s.to_polynomial();
  const auto it = poly.terms().find(w);
  if (it == poly.terms().end()) throw std::logic_error("standard product does not reproduce its word");
  return {std::move(s), it->second > 0 ? 1 : -1};
}

std::vector<StandardProduct> enumerate_standard_products(std::size_t p, std::size_t q, unsigned max_degree) {
  const std::vector<MinorSymbol> gens = standard_generators(p, q);
  std::vector<StandardProduct> out;
  Word current;
  auto rec = [&](auto&& self, std::size_t from, unsigned budget) -> void {
    if (is_standard_word(current)) out.push_back(StandardProduct::from_word(current).first);
    for (std::size_t k = from; k < gens.size(); ++k) {
      const unsigned cap = generator_is_odd(gens[k]) ? 1u : budget;
      for (unsigned e = 1; e <= std::min(cap, budget); ++e) {
        current.factors.emplace_back(gens[k], e);
        if (is_standard_word(current)) self(self, k + 1, budget - e);
        current.factors.pop_back();
      }
    }
  };
  rec(rec, 0, max_degree);
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting

InvariantPolynomial straightening_rule(const MinorSymbol& g) {
  if (is_standard_generator(g) || is_zero_generator(g)) {
    throw std::invalid_argument("generator " + g.to_string() + " needs no straightening");
  }
  const std::size_t a = even_index(g);
  const std::size_t b = odd_index(g);
  switch (g.kind()) {
    case MinorKind::Plain:
      if (!g.starred) {
        // X[i|mu] = Xs[1|1] X[1|mu] X[i|1] - Xs[1|1] X[^mu|1] X[1|mu]^2 Xs[1|^i]
        return Y(gen_xs(1, 1)) * Y(gen_x(1, b)) * Y(gen_x(a, 1)) -
               Y(gen_xs(1, 1)) * Y(gen_fake_one(b, 1)) * Y(gen_x(1, b)).pow(2) * Y(gen_fake_two(1, a));
      }
      // Xs[j|la] = X[1|1] Xs[j|1] Xs[1|la] - X[1|1] Xs[1|^j] Xs[j|1]^2 X[^la|1]
      return Y(gen_x(1, 1)) * Y(gen_xs(a, 1)) * Y(gen_xs(1, b)) -
             Y(gen_x(1, 1)) * Y(gen_fake_two(1, a)) * Y(gen_xs(a, 1)).pow(2) * Y(gen_fake_one(b, 1));
    case MinorKind::FakeI:
      // X[^eta|nu] = Xs[1|1] X[1|nu] X[^eta|1] - Xs[1|1] X[^nu|1] X[1|nu]^2 Xs[1|eta]
      return Y(gen_xs(1, 1)) * Y(gen_x(1, b)) * Y(gen_fake_one(a, 1)) -
             Y(gen_xs(1, 1)) * Y(gen_fake_one(b, 1)) * Y(gen_x(1, b)).pow(2) * Y(gen_xs(1, a));
    case MinorKind::FakeII:
      // Xs[k|^l] = X[1|1] Xs[k|1] Xs[1|^l] - X[1|1] Xs[1|^k] Xs[k|1]^2 X[l|1]
      return Y(gen_x(1, 1)) * Y(gen_xs(a, 1)) * Y(gen_fake_two(1, b)) -
             Y(gen_x(1, 1)) * Y(gen_fake_two(1, a)) * Y(gen_xs(a, 1)).pow(2) * Y(gen_x(b, 1));
  }
  throw std::logic_error("unknown generator kind");
}

namespace {

// One rewriting step on a term; nullopt when the term is already standard.
std::optional<InvariantPolynomial> rewrite_term(const Word& w, const Rational& c) {
  for (const auto& [g, e] : w.factors) {
    if (is_zero_generator(g)) return InvariantPolynomial{};
  }
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    const auto& [g, e] = w.factors[k];
    if (is_standard_generator(g)) continue;
    Word before{{w.factors.begin(), w.factors.begin() + static_cast<std::ptrdiff_t>(k)}};
    Word after{{w.factors.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.factors.end()}};
    return InvariantPolynomial::monomial(before, c) * straightening_rule(g).pow(e) * InvariantPolynomial::monomial(after);
  }
  // Complementary pairs X[a|b] Xs[a|b] -> 1.
  std::map<MinorSymbol, unsigned> exps(w.factors.begin(), w.factors.end());
  bool cancelled = false;
  for (auto& [g, e] : exps) {
    if (g.kind() != MinorKind::Plain || g.starred || e == 0) continue;
    auto it = exps.find(partner(g));
    if (it == exps.end() || it->second == 0) continue;
    const unsigned m = std::min(e, it->second);
    e -= m;
    it->second -= m;
    cancelled = true;
  }
  if (!cancelled) return std::nullopt;
  Word out;
  for (const auto& [g, e] : exps) {
    if (e) out.factors.emplace_back(g, e);
  }
  return InvariantPolynomial::monomial(out, c);
}

}  // namespace

InvariantPolynomial rewrite_to_standard(const InvariantPolynomial& f, std::size_t fuel) {
  InvariantPolynomial current = f;
  for (std::size_t pass = 0;; ++pass) {
    InvariantPolynomial next;
    bool changed = false;
    std::optional<std::string> pending;
    for (const auto& [w, c] : current.terms()) {
      auto r = rewrite_term(w, c);
      if (!r) {
        next = next + InvariantPolynomial::monomial(w, c);
        continue;
      }
      changed = true;
      if (!pending) pending = InvariantPolynomial::monomial(w, c).to_string();
      next = next + *r;
    }
    if (!changed) return current;
    if (pass + 1 >= fuel) {
      throw FuelExhausted("rewriting did not reach standard form within " + std::to_string(fuel) +
                          " passes; offending term: " + *pending);
    }
    current = std::move(next);
  }
}

MembershipResult normal_form_membership(const InvariantPolynomial& f, std::size_t p, std::size_t q,
                                        std::size_t fuel) {
  for (const auto& g : f.generators()) validate_generator(g, p, q);
  MembershipResult r;
  r.normal_form = rewrite_to_standard(f, fuel);
  r.in_ideal = r.normal_form.is_zero();
  r.pi_zero = pi_laurent(f, p, q).is_zero();
  return r;
}

IndependenceReport independence_check(const std::vector<StandardProduct>& products, std::size_t p, std::size_t q) {
  IndependenceReport rep;
  rep.distinct_leading_terms = true;
  std::map<std::vector<int>, std::size_t> seen;  // exps followed by the odd mask
  for (std::size_t k = 0; k < products.size(); ++k) {
    products[k].validate(p, q);
    const LaurentExterior img = pi_laurent(products[k].to_polynomial(), p, q);
    if (img.is_zero()) throw std::logic_error("standard product " + products[k].to_string() + " maps to zero");
    BasisMonomial lt = leading_term(img);
    std::vector<int> key(lt.a.begin(), lt.a.end());
    for (std::size_t i = 0; i < lt.b.size(); ++i) key[i] -= static_cast<int>(lt.b[i]);
    key.push_back(static_cast<int>(lt.c & 0x7fffffff));
    key.push_back(static_cast<int>(lt.c >> 31));
    auto [it, fresh] = seen.emplace(std::move(key), k);
    if (!fresh && rep.distinct_leading_terms) {
      rep.distinct_leading_terms = false;
      rep.collision = std::make_pair(it->second, k);
    }
    rep.leading_terms.push_back(std::move(lt));
  }
  return rep;
}

std::size_t image_rank(const std::vector<InvariantPolynomial>& polys, std::size_t p, std::size_t q) {
  using Key = LaurentExterior::Key;
  // Echelon rows indexed by pivot key (the map-smallest key of the row).
  std::map<Key, std::map<Key, Rational>> rows;
  for (const auto& f : polys) {
    std::map<Key, Rational> v = pi_laurent(f, p, q).terms();
    while (!v.empty()) {
      const Key& pivot = v.begin()->first;
      auto it = rows.find(pivot);
      if (it == rows.end()) {
        const Key k = pivot;
        rows.emplace(k, std::move(v));
        break;
      }
      const Rational factor = v.begin()->second / it->second.begin()->second;
      for (const auto& [k, c] : it->second) {
        auto [jt, fresh] = v.try_emplace(k, -factor * c);
        if (!fresh) {
          jt->second -= factor * c;
          if (jt->second == 0) v.erase(jt);
        }
      }
    }
  }
  return rows.size();
}

std::vector<std::pair<Relation, InvariantPolynomial>> sl11_relation_polynomials(std::size_t p, std::size_t q) {
  std::vector<std::pair<Relation, InvariantPolynomial>> out;
  for (auto& rel : sl11_plucker_relations(p, q)) {
    InvariantPolynomial f = to_invariant_polynomial(rel.lhs) - to_invariant_polynomial(rel.rhs);
    out.emplace_back(std::move(rel), std::move(f));
  }
  return out;
}

}  // namespace superinv
