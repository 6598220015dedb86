#include "superinv/poly.hpp"

#include "superinv/budget.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superinv {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Poly::Poly(Int constant) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial{}, std::move(constant)});
}

Poly Poly::variable(std::size_t var) { return monomial(Monomial::variable(var), Int(1)); }

Poly Poly::monomial(const Monomial& m, Int coeff) {
  Poly p;
  if (!coeff.is_zero()) p.terms_.push_back(Term{m, std::move(coeff)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Int Poly::constant_value() const {
  if (terms_.empty()) return Int(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].coeff;
}

std::uint32_t Poly::support() const noexcept {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& t : terms_) {
    g = Int::gcd(g, t.coeff);
    if (g.is_one()) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return *this;
  Int c = content();
  if (terms_.front().coeff.sign() < 0) c.negate();
  return c.is_one() ? *this : divided_by_int(c);
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) {
    m = Monomial::gcd(m, t.mono);
    if (m.is_one()) break;
  }
  return m;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff.negate();
  return out;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const auto c = x[i].mono <=> y[j].mono;
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
      if (subtract) out.back().coeff.negate();
    } else {
      Int s = subtract ? x[i].coeff - y[j].coeff : x[i].coeff + y[j].coeff;
      if (!s.is_zero()) out.push_back(Term{x[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) {
    out.push_back(y[j]);
    if (subtract) out.back().coeff.negate();
  }
  return Poly::from_sorted_terms(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (a.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.size() * b.size() <= 64) {
    OpBudget::charge(a.size() * b.size());
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) prods.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
    }
    return Poly::from_terms(std::move(prods));
  }
  TermAccumulator acc;
  acc.add_product(a, b, false);
  return acc.take();
}

Poly Poly::scaled(const Int& c) const {
  if (c.is_zero()) return Poly{};
  Poly out(*this);
  if (c.is_one()) return out;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::times_term(const Monomial& m, const Int& c) const {
  if (c.is_zero()) return Poly{};
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return out;
}

Poly Poly::divided_by_int(const Int& c) const {
  Poly out(*this);
  if (c.is_one()) return out;
  for (auto& t : out.terms_) t.coeff = Int::divexact(t.coeff, c);
  return out;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
  Poly out(*this);
  if (m.is_one()) return out;
  for (auto& t : out.terms_) t.mono = t.mono.quotient(m);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Int(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly{};
  const Term& lead = divisor.leading();
  if (divisor.size() == 1) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono) || !t.coeff.divisible_by(lead.coeff)) return std::nullopt;
      out.push_back(Term{t.mono.quotient(lead.mono), Int::divexact(t.coeff, lead.coeff)});
    }
    return Poly::from_sorted_terms(std::move(out));
  }
  if (!lead.mono.divides(leading().mono) || !divisor.trailing().mono.divides(trailing().mono)) {
    return std::nullopt;
  }
  if ((divisor.support() & ~support()) != 0) return std::nullopt;
  if (size() < divisor.size() && size() == 1) return std::nullopt;

  std::map<Monomial, Int, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first) || !it->second.divisible_by(lead.coeff)) return std::nullopt;
    const Monomial qm = it->first.quotient(lead.mono);
    Int qc = Int::divexact(it->second, lead.coeff);
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.size(); ++k) {
      const auto& t = divisor.terms_[k];
      const Monomial m = t.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m, Int(0));
      pos->second -= t.coeff * qc;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    quotient.push_back(Term{qm, std::move(qc)});
  }
  return Poly::from_sorted_terms(std::move(quotient));
}

namespace {

using UPoly = std::vector<Poly>;

UPoly to_univariate(const Poly& f, std::size_t var) {
  UPoly out(f.degree_in(var) + 1);
  std::vector<std::vector<Term>> parts(out.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const unsigned e = m.exponent(var);
    m.set_exponent(var, 0);
    parts[e].push_back(Term{m, t.coeff});
  }
  for (std::size_t k = 0; k < parts.size(); ++k) out[k] = Poly::from_terms(std::move(parts[k]));
  return out;
}

Poly from_univariate(const UPoly& u, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Monomial shift = Monomial::variable(var, static_cast<unsigned>(k));
    for (const auto& t : u[k].terms()) terms.push_back(Term{t.mono * shift, t.coeff});
  }
  return Poly::from_terms(std::move(terms));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly univariate_content(const UPoly& u) {
  Poly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = Poly::gcd(g, c);
    if (g.is_constant() && g.constant_value().is_one()) break;
  }
  return g;
}

UPoly divide_coefficients(const UPoly& u, const Poly& c) {
  UPoly out;
  out.reserve(u.size());
  for (const auto& a : u) {
    auto q = a.divide_exact(c);
    if (!q) throw std::logic_error("content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const Poly& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Poly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

Poly normalize_sign(Poly p) {
  if (!p.is_zero() && p.leading().coeff.sign() < 0) return -p;
  return p;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) return Poly(Int::gcd(a.content(), b.content()));

  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  const Monomial mono = Monomial::gcd(ma, mb);
  const Int ca = a.content();
  const Int cb = b.content();
  const Int cint = Int::gcd(ca, cb);
  Poly f = a.divided_by_monomial(ma).divided_by_int(ca);
  Poly g = b.divided_by_monomial(mb).divided_by_int(cb);
  const Poly scale = Poly::monomial(mono, cint);

  if (f.is_constant() || g.is_constant()) return scale;
  if (f == g || f == -g) return normalize_sign(f * scale);

  const std::uint32_t sf = f.support();
  const std::uint32_t sg = g.support();
  if ((sf & ~sg) != 0) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(sf & ~sg));
    return normalize_sign(gcd(univariate_content(to_univariate(f, v)), g) * scale);
  }
  if ((sg & ~sf) != 0) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(sg & ~sf));
    return normalize_sign(gcd(f, univariate_content(to_univariate(g, v))) * scale);
  }

  std::size_t var = 0;
  unsigned best = ~0u;
  for (std::uint32_t s = sf; s != 0; s &= s - 1) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
    const unsigned d = std::max(f.degree_in(v), g.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  UPoly ua = to_univariate(f, var);
  UPoly ub = to_univariate(g, var);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  const Poly ca_poly = univariate_content(ua);
  const Poly cb_poly = univariate_content(ub);
  const Poly content_gcd = gcd(ca_poly, cb_poly);
  ua = divide_coefficients(ua, ca_poly);
  ub = divide_coefficients(ub, cb_poly);
  while (true) {
    UPoly r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = UPoly{Poly(Int(1))};
      break;
    }
    ua = std::move(ub);
    ub = divide_coefficients(r, univariate_content(r));
  }
  Poly h = from_univariate(ub, var);
  h = h.primitive_part();
  return normalize_sign(h * content_gcd * scale);
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational term = to_rational(t.coeff);
    for (std::uint32_t s = t.mono.support(); s != 0; s &= s - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
      if (v >= point.size()) throw std::out_of_range("evaluation point too short");
      for (unsigned e = t.mono.exponent(v); e > 0; --e) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Int c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c.negate();
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c.negate();
    }
    first = false;
    bool need_star = false;
    if (!c.is_one() || t.mono.is_one()) {
      os << c.to_string();
      need_star = true;
    }
    for (std::uint32_t s = t.mono.support(); s != 0; s &= s - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
      if (need_star) os << "*";
      os << (v < names.size() ? names[v] : "v" + std::to_string(v));
      const unsigned e = t.mono.exponent(v);
      if (e != 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) h = (h * 31) ^ t.mono.hash() ^ (t.coeff.hash() << 1);
  return h;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

TermAccumulator::TermAccumulator() : slots_(64) {}

TermAccumulator::Slot& TermAccumulator::find(const Monomial& m) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = m.hash() & mask;
  while (slots_[i].used && !(slots_[i].mono == m)) i = (i + 1) & mask;
  return slots_[i];
}

void TermAccumulator::grow() {
  std::vector<Slot> old(slots_.size() * 2);
  old.swap(slots_);
  for (auto& s : old) {
    if (!s.used) continue;
    Slot& d = find(s.mono);
    d.used = true;
    d.mono = s.mono;
    d.coeff = std::move(s.coeff);
  }
}

void TermAccumulator::add(const Monomial& m, const Int& c) {
  if ((count_ + 1) * 2 > slots_.size()) grow();
  Slot& s = find(m);
  if (!s.used) {
    s.used = true;
    s.mono = m;
    s.coeff = c;
    ++count_;
  } else {
    s.coeff += c;
  }
}

void TermAccumulator::add_product(const Poly& f, const Poly& g, bool negate) {
  OpBudget::charge(f.size() * g.size());
  while ((count_ + f.size() * g.size()) * 2 > slots_.size() && slots_.size() < (std::size_t{1} << 22)) grow();
  for (const auto& s : f.terms()) {
    Int c = s.coeff;
    if (negate) c.negate();
    for (const auto& t : g.terms()) {
      const Monomial m = s.mono * t.mono;
      if ((count_ + 1) * 2 > slots_.size()) grow();
      Slot& slot = find(m);
      if (!slot.used) {
        slot.used = true;
        slot.mono = m;
        slot.coeff = c * t.coeff;
        ++count_;
      } else {
        slot.coeff.add_mul(c, t.coeff);
      }
    }
  }
}

void TermAccumulator::add_poly(const Poly& f, bool negate) {
  for (const auto& t : f.terms()) {
    if (negate) {
      add(t.mono, -t.coeff);
    } else {
      add(t.mono, t.coeff);
    }
  }
}

Poly TermAccumulator::take() {
  std::vector<Term> out;
  out.reserve(count_);
  for (auto& s : slots_) {
    if (s.used && !s.coeff.is_zero()) out.push_back(Term{s.mono, std::move(s.coeff)});
  }
  std::sort(out.begin(), out.end(), term_greater);
  slots_.assign(64, Slot{});
  count_ = 0;
  return Poly::from_sorted_terms(std::move(out));
}

}  // namespace superinv
