#include "superinv/relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superinv/budget.hpp"

namespace superinv {

struct MinorExpr::Node {
  Op op = Op::Constant;
  Rational value{0};
  MinorSymbol symbol;
  std::vector<std::pair<Rational, MinorExpr>> terms;
  std::vector<MinorExpr> children;
  long exponent = 1;
  ParitySignature sig;
  bool starred = false;
};

MinorExpr::MinorExpr() : node_(std::make_shared<Node>()) {}

MinorExpr MinorExpr::constant(const Rational& c) {
  auto n = std::make_shared<Node>();
  n->value = c;
  return MinorExpr(std::move(n));
}

MinorExpr MinorExpr::minor(MinorSymbol m) {
  auto n = std::make_shared<Node>();
  n->op = Op::Minor;
  n->symbol = std::move(m);
  return MinorExpr(std::move(n));
}

MinorExpr MinorExpr::sum(std::vector<std::pair<Rational, MinorExpr>> terms) {
  auto n = std::make_shared<Node>();
  n->op = Op::Sum;
  n->terms = std::move(terms);
  return MinorExpr(std::move(n));
}

MinorExpr MinorExpr::product(std::vector<MinorExpr> factors) {
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->op = Op::Product;
  n->children = std::move(factors);
  return MinorExpr(std::move(n));
}

MinorExpr MinorExpr::power(MinorExpr base, long exponent) {
  if (exponent == 1) return base;
  auto n = std::make_shared<Node>();
  n->op = Op::Power;
  n->children.push_back(std::move(base));
  n->exponent = exponent;
  return MinorExpr(std::move(n));
}

MinorExpr MinorExpr::ber(ParitySignature sig, std::vector<MinorExpr> entries, bool starred) {
  if (entries.size() != sig.size() * sig.size()) throw std::invalid_argument("Ber node needs a square entry list");
  auto n = std::make_shared<Node>();
  n->op = Op::Ber;
  n->sig = sig;
  n->children = std::move(entries);
  n->starred = starred;
  return MinorExpr(std::move(n));
}

MinorExpr::Op MinorExpr::op() const { return node_->op; }
const Rational& MinorExpr::value() const { return node_->value; }
const MinorSymbol& MinorExpr::symbol() const { return node_->symbol; }
const std::vector<std::pair<Rational, MinorExpr>>& MinorExpr::terms() const { return node_->terms; }
const std::vector<MinorExpr>& MinorExpr::children() const { return node_->children; }
long MinorExpr::exponent() const { return node_->exponent; }
const ParitySignature& MinorExpr::signature() const { return node_->sig; }
bool MinorExpr::starred() const { return node_->starred; }

std::vector<MinorSymbol> MinorExpr::symbols() const {
  std::vector<MinorSymbol> out;
  std::function<void(const MinorExpr&)> walk = [&](const MinorExpr& e) {
    switch (e.op()) {
      case Op::Constant: break;
      case Op::Minor:
        if (std::find(out.begin(), out.end(), e.symbol()) == out.end()) out.push_back(e.symbol());
        break;
      case Op::Sum:
        for (const auto& t : e.terms()) walk(t.second);
        break;
      default:
        for (const auto& c : e.children()) walk(c);
    }
  };
  walk(*this);
  return out;
}

MinorExpr MinorExpr::map_symbols(const std::function<MinorSymbol(const MinorSymbol&)>& f) const {
  switch (op()) {
    case Op::Constant: return *this;
    case Op::Minor: return minor(f(symbol()));
    case Op::Sum: {
      std::vector<std::pair<Rational, MinorExpr>> t;
      for (const auto& [c, e] : terms()) t.emplace_back(c, e.map_symbols(f));
      return sum(std::move(t));
    }
    case Op::Product: {
      std::vector<MinorExpr> k;
      for (const auto& c : children()) k.push_back(c.map_symbols(f));
      return product(std::move(k));
    }
    case Op::Power: return power(children()[0].map_symbols(f), exponent());
    case Op::Ber: {
      std::vector<MinorExpr> k;
      for (const auto& c : children()) k.push_back(c.map_symbols(f));
      return ber(signature(), std::move(k), starred());
    }
  }
  return *this;
}

namespace {

bool needs_parens_in_product(const MinorExpr& e) {
  return e.op() == MinorExpr::Op::Sum ||
         (e.op() == MinorExpr::Op::Constant && e.value() < 0);
}

std::string coefficient_prefix(const Rational& c, bool first, const std::string& body) {
  const bool neg = c < 0;
  const Rational a = neg ? Rational(-c) : c;
  std::string out;
  if (first) {
    out = neg ? "-" : "";
  } else {
    out = neg ? " - " : " + ";
  }
  if (a != 1) out += rational_to_string(a) + "*";
  return out + body;
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  mpz_class n = abs(q.get_num());
  return sign + "\\frac{" + n.get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string MinorExpr::to_string() const {
  switch (op()) {
    case Op::Constant: return rational_to_string(value());
    case Op::Minor: return symbol().to_string();
    case Op::Sum: {
      if (terms().empty()) return "0";
      std::string out;
      bool first = true;
      for (const auto& [c, e] : terms()) {
        std::string body = e.to_string();
        if (e.op() == Op::Sum) body = "(" + body + ")";
        out += coefficient_prefix(c, first, body);
        first = false;
      }
      return out;
    }
    case Op::Product: {
      std::string out;
      for (std::size_t k = 0; k < children().size(); ++k) {
        const auto& c = children()[k];
        if (k) out += "*";
        out += needs_parens_in_product(c) ? "(" + c.to_string() + ")" : c.to_string();
      }
      return out;
    }
    case Op::Power: {
      const auto& b = children()[0];
      std::string base = b.op() == Op::Minor ? b.to_string() : "(" + b.to_string() + ")";
      std::string e = std::to_string(exponent());
      return base + "^" + (exponent() < 0 ? "(" + e + ")" : e);
    }
    case Op::Ber: {
      const ParitySignature& sig = signature();
      std::ostringstream os;
      os << (starred() ? "Bers[" : "Ber[") << sig.even << "|" << sig.odd << "](";
      const std::size_t n = sig.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << children()[i * n + j].to_string();
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

std::string MinorExpr::to_latex() const {
  switch (op()) {
    case Op::Constant: return latex_rational(value());
    case Op::Minor: return symbol().to_latex();
    case Op::Sum: {
      if (terms().empty()) return "0";
      std::string out;
      bool first = true;
      for (const auto& [c, e] : terms()) {
        std::string body = e.to_latex();
        if (e.op() == Op::Sum) body = "\\left(" + body + "\\right)";
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        out += first ? (neg ? "-" : "") : (neg ? "-" : "+");
        if (a != 1) out += latex_rational(a);
        out += body;
        first = false;
      }
      return out;
    }
    case Op::Product: {
      std::string out;
      for (const auto& c : children()) {
        out += needs_parens_in_product(c) ? "\\left(" + c.to_latex() + "\\right)" : c.to_latex();
      }
      return out;
    }
    case Op::Power: {
      const auto& b = children()[0];
      std::string base = b.op() == Op::Minor ? "{" + b.to_latex() + "}" : "\\left(" + b.to_latex() + "\\right)";
      return base + "^{" + std::to_string(exponent()) + "}";
    }
    case Op::Ber: {
      const ParitySignature& sig = signature();
      const std::size_t n = sig.size();
      std::string cols(sig.even, 'c');
      if (sig.even && sig.odd) cols += "|";
      cols += std::string(sig.odd, 'c');
      std::ostringstream os;
      os << (starred() ? "\\mathrm{Ber}^{*}" : "\\mathrm{Ber}") << "\\left(\\begin{array}{" << cols << "}";
      for (std::size_t i = 0; i < n; ++i) {
        if (i == sig.even && i > 0) os << "\\hline ";
        for (std::size_t j = 0; j < n; ++j) os << (j ? " & " : "") << children()[i * n + j].to_latex();
        if (i + 1 < n) os << " \\\\ ";
      }
      os << "\\end{array}\\right)";
      return os.str();
    }
  }
  return "?";
}

bool operator==(const MinorExpr& a, const MinorExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case MinorExpr::Op::Constant: return a.value() == b.value();
    case MinorExpr::Op::Minor: return a.symbol() == b.symbol();
    case MinorExpr::Op::Sum: return a.terms() == b.terms();
    case MinorExpr::Op::Product: return a.children() == b.children();
    case MinorExpr::Op::Power: return a.exponent() == b.exponent() && a.children() == b.children();
    case MinorExpr::Op::Ber:
      return a.starred() == b.starred() && a.signature() == b.signature() && a.children() == b.children();
  }
  return false;
}

Scalar evaluate(const MinorExpr& e, CoordinateModel& model) {
  const ContextPtr& ctx = model.context();
  switch (e.op()) {
    case MinorExpr::Op::Constant: return Scalar::constant(ctx, e.value());
    case MinorExpr::Op::Minor: return model.minor(e.symbol());
    case MinorExpr::Op::Sum: {
      Scalar acc(ctx);
      for (const auto& [c, t] : e.terms()) acc += evaluate(t, model).scaled(c);
      return acc;
    }
    case MinorExpr::Op::Product: {
      Scalar acc = Scalar::constant(ctx, Rational(1));
      for (const auto& c : e.children()) acc *= evaluate(c, model);
      return acc;
    }
    case MinorExpr::Op::Power: return evaluate(e.children()[0], model).pow(e.exponent());
    case MinorExpr::Op::Ber: {
      const ParitySignature sig = e.signature();
      SuperMatrix m(ctx, sig, sig);
      const std::size_t n = sig.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = evaluate(e.children()[i * n + j], model);
      }
      return e.starred() ? berezinian_star(m) : berezinian(m);
    }
  }
  throw std::logic_error("unknown expression node");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::ClassicalPlucker: return "classical-plucker";
    case Family::Sp1: return "sp1";
    case Family::Sp2: return "sp2";
    case Family::Sp3: return "sp3";
    case Family::Sp4: return "sp4";
    case Family::Gsp1: return "gsp1";
    case Family::Gsp2: return "gsp2";
    case Family::Gsp3: return "gsp3";
    case Family::Gsp4: return "gsp4";
    case Family::Jacobi: return "jacobi";
    case Family::SuperJacobi: return "super-jacobi";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::ClassicalPlucker, Family::Sp1, Family::Sp2, Family::Sp3, Family::Sp4, Family::Gsp1,
                   Family::Gsp2, Family::Gsp3, Family::Gsp4, Family::Jacobi, Family::SuperJacobi}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

std::string family_latex(Family f) {
  switch (f) {
    case Family::ClassicalPlucker:
      return R"(\sum_{k=1}^{r+1}(-1)^{k}X_{i_1\cdots i_{r-1}j_k}X_{j_1\cdots\widehat{j_k}\cdots j_{r+1}}=0)";
    case Family::Sp1: return R"(X_{i|\hat\mu}X^*_{i|\hat\mu}=1)";
    case Family::Sp2:
      return R"(X_{i|\hat\mu}X_{j|\hat\nu}=\mathrm{Ber}\begin{pmatrix}X_{j|\hat\mu}&X_{\hat\nu|\hat\mu}\\X^*_{i|j}&X^*_{i|\hat\nu}\end{pmatrix})";
    case Family::Sp3:
      return R"(X_{i|\hat\mu}X_{\hat\lambda|\hat\nu}=\mathrm{Ber}\begin{pmatrix}X_{\hat\lambda|\hat\mu}&X_{\hat\nu|\hat\mu}\\X^*_{i|\hat\lambda}&X^*_{i|\hat\nu}\end{pmatrix})";
    case Family::Sp4:
      return R"(X^*_{i|\hat\mu}X^*_{j|k}=\mathrm{Ber}^*\begin{pmatrix}X_{j|\hat\mu}&X_{k|\hat\mu}\\X^*_{i|j}&X^*_{i|k}\end{pmatrix})";
    case Family::Gsp1: return R"(X_{\underline{i}|\underline{\hat\mu}}X^*_{\underline{i}|\underline{\hat\mu}}=1)";
    case Family::Gsp2:
      return R"((X_{\underline{i}|\underline{\hat\mu}})^{r+s-1}X_{\underline{j}|\underline{\hat\nu}}=\mathrm{Ber}\begin{pmatrix}X_{\underline{i}_a(j_t)|\underline{\hat\mu}}&X_{\underline{i}_a(\hat\nu_\beta)|\underline{\hat\mu}}\\X^*_{\underline{i}|\underline{\hat\mu}_\alpha(j_t)}&X^*_{\underline{i}|\underline{\hat\mu}_\alpha(\hat\nu_\beta)}\end{pmatrix})";
    case Family::Gsp3:
      return R"((X_{\underline{i}|\underline{\hat\mu}})^{r+s-1}X_{j_1\cdots j_{r-1}\hat\lambda|\underline{\hat\nu}}=\mathrm{Ber}\begin{pmatrix}X_{\underline{i}_a(j_t)|\underline{\hat\mu}}&X_{\underline{i}_a(\hat\lambda)|\underline{\hat\mu}}&X_{\underline{i}_a(\hat\nu_\beta)|\underline{\hat\mu}}\\X^*_{\underline{i}|\underline{\hat\mu}_\alpha(j_t)}&X^*_{\underline{i}|\underline{\hat\mu}_\alpha(\hat\lambda)}&X^*_{\underline{i}|\underline{\hat\mu}_\alpha(\hat\nu_\beta)}\end{pmatrix})";
    case Family::Gsp4:
      return R"((X^*_{\underline{i}|\underline{\hat\mu}})^{r+s-1}X^*_{\underline{j}|\hat\nu_1\cdots\hat\nu_{s-1}y}=\mathrm{Ber}^*\begin{pmatrix}X_{\underline{i}_a(j_t)|\underline{\hat\mu}}&X_{\underline{i}_a(\hat\nu_\beta)|\underline{\hat\mu}}&X_{\underline{i}_a(y)|\underline{\hat\mu}}\\X^*_{\underline{i}|\underline{\hat\mu}_\alpha(j_t)}&X^*_{\underline{i}|\underline{\hat\mu}_\alpha(\hat\nu_\beta)}&X^*_{\underline{i}|\underline{\hat\mu}_\alpha(y)}\end{pmatrix})";
    case Family::Jacobi: return R"(\det A\,\det(A^{-1})^{\tilde v}_{\tilde u}=(-1)^{r(n+1)}\det A^{u}_{v})";
    case Family::SuperJacobi:
      return R"(\mathrm{Ber}A\,\mathrm{Ber}(A^{-1})^{\tilde v}_{\tilde u}=(-1)^{r(p+1)+s(q+1)}\mathrm{Ber}A^{u}_{v})";
  }
  return "";
}

const char* mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::Symbolic: return "symbolic";
    case VerifyMode::Slice: return "slice";
    case VerifyMode::Numeric: return "numeric";
  }
  return "?";
}

std::optional<VerifyMode> mode_from_name(const std::string& name) {
  for (VerifyMode m : {VerifyMode::Symbolic, VerifyMode::Slice, VerifyMode::Numeric}) {
    if (name == mode_name(m)) return m;
  }
  return std::nullopt;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Unchecked: return "unchecked";
    case Verdict::Verified: return "verified";
    case Verdict::Falsified: return "falsified";
    case Verdict::Undefined: return "undefined";
    case Verdict::CapExceeded: return "resource-cap";
  }
  return "?";
}

std::string Relation::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
std::string Relation::to_latex() const { return lhs.to_latex() + "=" + rhs.to_latex(); }

namespace {

using Labels = std::vector<ColumnLabel>;

ColumnLabel ev(std::size_t j) { return {Parity::Even, j}; }
ColumnLabel od(std::size_t j) { return {Parity::Odd, j}; }

Labels evens(const std::vector<std::size_t>& v) {
  Labels out;
  for (auto j : v) out.push_back(ev(j));
  return out;
}

Labels odds(const std::vector<std::size_t>& v) {
  Labels out;
  for (auto j : v) out.push_back(od(j));
  return out;
}

MinorExpr X(Labels even, Labels odd) { return MinorExpr::minor(MinorSymbol{false, std::move(even), std::move(odd)}); }
MinorExpr Xs(Labels even, Labels odd) { return MinorExpr::minor(MinorSymbol{true, std::move(even), std::move(odd)}); }

// Strictly increasing k-subsets of 1..n in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t a = 0; a < k; ++a) cur[a] = a + 1;
  while (true) {
    out.push_back(cur);
    std::size_t a = k;
    while (a > 0 && cur[a - 1] == n - k + a) --a;
    if (a == 0) break;
    ++cur[a - 1];
    for (std::size_t b = a; b < k; ++b) cur[b] = cur[b - 1] + 1;
  }
  return out;
}

std::vector<std::size_t> range1(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k + 1;
  return v;
}

Relation make(Family f, MatrixShape shape, std::vector<std::pair<std::string, std::vector<std::size_t>>> idx, MinorExpr lhs,
              MinorExpr rhs) {
  Relation r;
  r.family = f;
  r.shape = shape;
  r.indices = std::move(idx);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

MinorExpr one() { return MinorExpr::constant(Rational(1)); }

// Sorted even columns of a classical minor with the permutation sign; sign 0 on repeats.
int sort_with_sign(std::vector<std::size_t>& cols) {
  int sign = 1;
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      if (cols[a] == cols[b]) return 0;
      if (cols[a] > cols[b]) sign = -sign;
    }
  }
  std::sort(cols.begin(), cols.end());
  return sign;
}

}  // namespace

std::vector<Relation> classical_plucker_relations(std::size_t r, std::size_t p) {
  if (r == 0 || r > p) throw std::invalid_argument("classical relations need 1 <= r <= p");
  using Key = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  std::vector<Relation> out;
  std::set<std::map<Key, long>> seen;
  const MatrixShape shape{r, 0, p, 0};
  for (const auto& i : combinations(p, r - 1)) {
    for (const auto& j : combinations(p, r + 1)) {
      std::map<Key, long> poly;
      for (std::size_t k = 0; k <= r; ++k) {
        std::vector<std::size_t> first = i;
        first.push_back(j[k]);
        std::vector<std::size_t> second;
        for (std::size_t t = 0; t <= r; ++t) {
          if (t != k) second.push_back(j[t]);
        }
        int sign = ((k + 1) % 2 == 0) ? 1 : -1;
        sign *= sort_with_sign(first) * sort_with_sign(second);
        if (sign == 0) continue;
        Key key = first < second ? Key{first, second} : Key{second, first};
        poly[key] += sign;
      }
      std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
      if (poly.empty()) continue;
      long g = 0;
      for (const auto& kv : poly) g = std::gcd(g, kv.second);
      if (poly.begin()->second < 0) g = -g;
      for (auto& kv : poly) kv.second /= g;
      if (!seen.insert(poly).second) continue;
      std::vector<std::pair<Rational, MinorExpr>> terms;
      for (const auto& [key, c] : poly) {
        terms.emplace_back(Rational(c), MinorExpr::product({X(evens(key.first), {}), X(evens(key.second), {})}));
      }
      out.push_back(make(Family::ClassicalPlucker, shape, {{"i", i}, {"j", j}}, MinorExpr::sum(std::move(terms)),
                         MinorExpr::constant(Rational(0))));
    }
  }
  return out;
}

std::vector<Relation> sl11_family(Family f, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("SL(1|1) relations need p, q >= 1");
  const MatrixShape shape{1, 1, p, q};
  std::vector<Relation> out;
  const auto P = range1(p);
  const auto Q = range1(q);
  switch (f) {
    case Family::Sp1:
      for (auto i : P) {
        for (auto mu : Q) {
          out.push_back(make(f, shape, {{"i", {i}}, {"mu", {mu}}},
                             MinorExpr::product({X({ev(i)}, {od(mu)}), Xs({ev(i)}, {od(mu)})}), one()));
        }
      }
      break;
    case Family::Sp2:
      for (auto i : P) {
        for (auto mu : Q) {
          for (auto j : P) {
            for (auto nu : Q) {
              auto lhs = MinorExpr::product({X({ev(i)}, {od(mu)}), X({ev(j)}, {od(nu)})});
              auto rhs = MinorExpr::ber({1, 1},
                                        {X({ev(j)}, {od(mu)}), X({od(nu)}, {od(mu)}), Xs({ev(i)}, {ev(j)}),
                                         Xs({ev(i)}, {od(nu)})},
                                        false);
              out.push_back(make(f, shape, {{"i", {i}}, {"mu", {mu}}, {"j", {j}}, {"nu", {nu}}}, lhs, rhs));
            }
          }
        }
      }
      break;
    case Family::Sp3:
      for (auto i : P) {
        for (auto mu : Q) {
          for (auto la : Q) {
            for (auto nu : Q) {
              auto lhs = MinorExpr::product({X({ev(i)}, {od(mu)}), X({od(la)}, {od(nu)})});
              auto rhs = MinorExpr::ber({1, 1},
                                        {X({od(la)}, {od(mu)}), X({od(nu)}, {od(mu)}), Xs({ev(i)}, {od(la)}),
                                         Xs({ev(i)}, {od(nu)})},
                                        false);
              out.push_back(make(f, shape, {{"i", {i}}, {"mu", {mu}}, {"lambda", {la}}, {"nu", {nu}}}, lhs, rhs));
            }
          }
        }
      }
      break;
    case Family::Sp4:
      for (auto i : P) {
        for (auto mu : Q) {
          for (auto j : P) {
            for (auto k : P) {
              auto lhs = MinorExpr::product({Xs({ev(i)}, {od(mu)}), Xs({ev(j)}, {ev(k)})});
              auto rhs = MinorExpr::ber({1, 1},
                                        {X({ev(j)}, {od(mu)}), X({ev(k)}, {od(mu)}), Xs({ev(i)}, {ev(j)}),
                                         Xs({ev(i)}, {ev(k)})},
                                        true);
              out.push_back(make(f, shape, {{"i", {i}}, {"mu", {mu}}, {"j", {j}}, {"k", {k}}}, lhs, rhs));
            }
          }
        }
      }
      break;
    default: throw std::invalid_argument(std::string(family_name(f)) + " is not an SL(1|1) family");
  }
  return out;
}

std::vector<Relation> sl11_plucker_relations(std::size_t p, std::size_t q) {
  std::vector<Relation> out;
  for (Family f : {Family::Sp1, Family::Sp2, Family::Sp3, Family::Sp4}) {
    auto part = sl11_family(f, p, q);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

// Entries of the Ber matrices: X with the a-th even slot of i replaced, and X*
// with the alpha-th odd slot of mu replaced.
struct Replacer {
  Labels i, mu;
  MinorExpr even_row(std::size_t a, ColumnLabel c) const {
    Labels e = i;
    e[a] = c;
    return X(std::move(e), mu);
  }
  MinorExpr odd_row(std::size_t alpha, ColumnLabel c) const {
    Labels o = mu;
    o[alpha] = c;
    return Xs(i, std::move(o));
  }
  // Matrix whose columns are labelled by `cols` (even block first), rows a then alpha.
  std::vector<MinorExpr> matrix(const Labels& cols) const {
    std::vector<MinorExpr> m;
    for (std::size_t a = 0; a < i.size(); ++a) {
      for (const auto& c : cols) m.push_back(even_row(a, c));
    }
    for (std::size_t al = 0; al < mu.size(); ++al) {
      for (const auto& c : cols) m.push_back(odd_row(al, c));
    }
    return m;
  }
};

Labels concat(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool capped(const std::vector<Relation>& out, const GspOptions& opt) {
  return opt.instance_cap != 0 && out.size() >= opt.instance_cap;
}

}  // namespace

std::vector<Relation> slrs_family(Family f, const MatrixShape& shape, const GspOptions& opt) {
  shape.validate();
  const auto [r, s, p, q] = shape;
  const long e = static_cast<long>(r + s) - 1;
  const ParitySignature sig{r, s};
  std::vector<Relation> out;
  const auto I = combinations(p, r);
  const auto M = combinations(q, s);
  for (const auto& i : I) {
    for (const auto& mu : M) {
      const Replacer rep{evens(i), odds(mu)};
      const MinorExpr xi = X(evens(i), odds(mu));
      const MinorExpr xsi = Xs(evens(i), odds(mu));
      switch (f) {
        case Family::Gsp1:
          if (capped(out, opt)) return out;
          out.push_back(make(f, shape, {{"i", i}, {"mu", mu}}, MinorExpr::product({xi, xsi}), one()));
          break;
        case Family::Gsp2:
          for (const auto& j : I) {
            for (const auto& nu : M) {
              if (capped(out, opt)) return out;
              auto lhs = MinorExpr::product({MinorExpr::power(xi, e), X(evens(j), odds(nu))});
              auto rhs = MinorExpr::ber(sig, rep.matrix(concat(evens(j), odds(nu))), false);
              out.push_back(make(f, shape, {{"i", i}, {"mu", mu}, {"j", j}, {"nu", nu}}, lhs, rhs));
            }
          }
          break;
        case Family::Gsp3:
          if (r == 0) return out;
          for (const auto& j : combinations(p, r - 1)) {
            for (std::size_t la = 1; la <= q; ++la) {
              for (const auto& nu : M) {
                if (capped(out, opt)) return out;
                Labels top = evens(j);
                top.push_back(od(la));
                auto lhs = MinorExpr::product({MinorExpr::power(xi, e), X(top, odds(nu))});
                auto rhs = MinorExpr::ber(sig, rep.matrix(concat(top, odds(nu))), false);
                out.push_back(
                    make(f, shape, {{"i", i}, {"mu", mu}, {"j", j}, {"lambda", {la}}, {"nu", nu}}, lhs, rhs));
              }
            }
          }
          break;
        case Family::Gsp4: {
          if (s == 0) return out;
          const long ex = opt.gsp4 == Gsp4Exponent::Corrected ? e : -e;
          for (const auto& j : I) {
            for (const auto& nu : combinations(q, s - 1)) {
              for (std::size_t y = 1; y <= p; ++y) {
                if (capped(out, opt)) return out;
                Labels bottom = odds(nu);
                bottom.push_back(ev(y));
                auto lhs = MinorExpr::product({MinorExpr::power(xsi, ex), Xs(evens(j), bottom)});
                auto rhs = MinorExpr::ber(sig, rep.matrix(concat(evens(j), bottom)), true);
                out.push_back(make(f, shape, {{"i", i}, {"mu", mu}, {"j", j}, {"nu", nu}, {"y", {y}}}, lhs, rhs));
              }
            }
          }
          break;
        }
        default: throw std::invalid_argument(std::string(family_name(f)) + " is not an SL(r|s) family");
      }
    }
  }
  return out;
}

std::vector<Relation> slrs_plucker_relations(const MatrixShape& shape, const GspOptions& opt) {
  std::vector<Relation> out;
  for (Family f : {Family::Gsp1, Family::Gsp2, Family::Gsp3, Family::Gsp4}) {
    auto part = slrs_family(f, shape, opt);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RelationVerifier::RelationVerifier(VerifyOptions opt) : opt_(opt) {
  if (opt_.op_cap == 0) opt_.op_cap = op_cap_from_env();
  if (opt_.mode == VerifyMode::Numeric && opt_.trials == 0) throw std::invalid_argument("numeric mode needs trials >= 1");
}

CoordinateModel& RelationVerifier::model(const MatrixShape& shape, std::size_t trial) {
  const auto key = std::make_tuple(shape.r, shape.s, shape.p, shape.q, trial);
  auto it = models_.find(key);
  if (it != models_.end()) return it->second;
  switch (opt_.mode) {
    case VerifyMode::Symbolic: return models_.emplace(key, CoordinateModel::generic(shape)).first->second;
    case VerifyMode::Slice: return models_.emplace(key, CoordinateModel::fft_slice(shape)).first->second;
    case VerifyMode::Numeric:
      return models_.emplace(key, CoordinateModel::numeric(shape, trial_seed(opt_.seed, trial))).first->second;
  }
  throw std::logic_error("unknown mode");
}

namespace {

std::string clip(std::string s, std::size_t n = 400) {
  if (s.size() > n) s = s.substr(0, n) + " ...";
  return s;
}

bool parities_agree(const Scalar& a, const Scalar& b) {
  const ScalarParity pa = a.parity();
  const ScalarParity pb = b.parity();
  return pa == ScalarParity::Zero || pb == ScalarParity::Zero || pa == pb;
}

}  // namespace

Certificate RelationVerifier::check_on(const Relation& rel, CoordinateModel& m) {
  Certificate c;
  c.mode = opt_.mode;
  c.seed = opt_.seed;
  try {
    OpBudget budget(opt_.op_cap);
    const Scalar l = evaluate(rel.lhs, m);
    const Scalar r = evaluate(rel.rhs, m);
    const Scalar d = l - r;
    if (d.is_zero()) {
      c.verdict = Verdict::Verified;
    } else {
      c.verdict = Verdict::Falsified;
      c.witness = "lhs - rhs = " + clip(d.to_string());
    }
    if (!parities_agree(l, r)) c.note = "sides have different parity";
  } catch (const NotInvertible& e) {
    c.verdict = Verdict::Undefined;
    c.note = e.what();
  } catch (const std::domain_error& e) {
    c.verdict = Verdict::Undefined;
    c.note = e.what();
  } catch (const ResourceCapExceeded& e) {
    c.verdict = Verdict::CapExceeded;
    c.note = e.what();
  }
  return c;
}

Certificate RelationVerifier::verify(const Relation& rel) {
  Certificate out;
  out.mode = opt_.mode;
  out.seed = opt_.seed;
  if (opt_.mode != VerifyMode::Numeric) {
    out = check_on(rel, model(rel.shape, 0));
    return out;
  }
  // A random point where some needed denominator vanishes says nothing, so
  // such points are skipped, up to twice as many extra draws as trials.
  out.trials = opt_.trials;
  std::size_t done = 0;
  std::size_t skipped = 0;
  std::string last_undefined;
  for (std::size_t t = 0; done < opt_.trials && t < 3 * opt_.trials; ++t) {
    Certificate c = check_on(rel, model(rel.shape, t));
    if (c.verdict == Verdict::Undefined) {
      ++skipped;
      last_undefined = c.note;
      continue;
    }
    if (c.verdict != Verdict::Verified) {
      out.verdict = c.verdict;
      out.note = c.note;
      out.witness = "trial " + std::to_string(t) + " (point seed " + std::to_string(trial_seed(opt_.seed, t)) +
                    "): " + c.witness;
      return out;
    }
    if (!c.note.empty()) out.note = c.note;
    ++done;
  }
  if (done < opt_.trials) {
    out.verdict = Verdict::Undefined;
    out.note = "no defined point found: " + last_undefined;
    return out;
  }
  if (skipped) out.note = std::to_string(skipped) + " degenerate points skipped";
  out.verdict = Verdict::Verified;
  return out;
}

Certificate verify_relation(const Relation& rel, VerifyMode mode, std::size_t trials, std::uint64_t seed) {
  RelationVerifier v(VerifyOptions{mode, trials, seed, 0});
  return v.verify(rel);
}

namespace {

// Mutation sites: sum coefficients, the right-hand side, and single minor indices.
struct SiteCounter {
  std::size_t target = 0;
  std::size_t seen = 0;
  Rng* rng = nullptr;
  const MatrixShape* shape = nullptr;
  bool done = false;

  bool hit() {
    if (done) return false;
    if (seen++ == target) {
      done = true;
      return true;
    }
    return false;
  }

  // Slots whose index could change while the symbol stays well formed.
  std::vector<std::pair<bool, std::size_t>> index_sites(const MinorSymbol& m) const {
    std::vector<std::pair<bool, std::size_t>> out;
    for (std::size_t k = 0; k < m.even_slots.size(); ++k) {
      if ((m.even_slots[k].parity == Parity::Even ? shape->p : shape->q) >= 2) out.emplace_back(true, k);
    }
    for (std::size_t k = 0; k < m.odd_slots.size(); ++k) {
      if ((m.odd_slots[k].parity == Parity::Even ? shape->p : shape->q) >= 2) out.emplace_back(false, k);
    }
    return out;
  }

  MinorExpr walk(const MinorExpr& e) {
    using Op = MinorExpr::Op;
    switch (e.op()) {
      case Op::Constant: return e;
      case Op::Minor: {
        auto sites = index_sites(e.symbol());
        for (const auto& [is_even, k] : sites) {
          if (!hit()) continue;
          MinorSymbol m = e.symbol();
          ColumnLabel& c = is_even ? m.even_slots[k] : m.odd_slots[k];
          const std::size_t limit = c.parity == Parity::Even ? shape->p : shape->q;
          std::size_t v = 1 + rng->below(limit - 1);
          if (v >= c.index) ++v;
          c.index = v;
          return MinorExpr::minor(std::move(m));
        }
        return e;
      }
      case Op::Sum: {
        std::vector<std::pair<Rational, MinorExpr>> t;
        for (const auto& [c, x] : e.terms()) {
          if (hit()) {
            t.emplace_back(-c, x);
          } else {
            t.emplace_back(c, walk(x));
          }
        }
        return MinorExpr::sum(std::move(t));
      }
      case Op::Product: {
        std::vector<MinorExpr> k;
        for (const auto& c : e.children()) k.push_back(walk(c));
        return MinorExpr::product(std::move(k));
      }
      case Op::Power: return MinorExpr::power(walk(e.children()[0]), e.exponent());
      case Op::Ber: {
        std::vector<MinorExpr> k;
        for (const auto& c : e.children()) k.push_back(walk(c));
        return MinorExpr::ber(e.signature(), std::move(k), e.starred());
      }
    }
    return e;
  }
};

std::size_t count_sites(const MinorExpr& e, const MatrixShape& shape) {
  SiteCounter c;
  c.shape = &shape;
  c.target = static_cast<std::size_t>(-1);
  Rng dummy(0);
  c.rng = &dummy;
  c.walk(e);
  return c.seen;
}

}  // namespace

Relation mutate(const Relation& rel, Rng& rng) {
  const std::size_t left = count_sites(rel.lhs, rel.shape);
  const std::size_t right = count_sites(rel.rhs, rel.shape);
  // One extra site: negate the whole right-hand side.
  const std::size_t pick = rng.below(left + right + 1);
  Relation out = rel;
  out.certificate = Certificate{};
  if (pick == left + right) {
    out.rhs = MinorExpr::sum({{Rational(-1), rel.rhs}});
    return out;
  }
  SiteCounter c;
  c.shape = &rel.shape;
  c.rng = &rng;
  if (pick < left) {
    c.target = pick;
    out.lhs = c.walk(rel.lhs);
  } else {
    c.target = pick - left;
    out.rhs = c.walk(rel.rhs);
  }
  return out;
}

const char* jacobi_mutation_name(JacobiMutation m) {
  switch (m) {
    case JacobiMutation::None: return "none";
    case JacobiMutation::FlipSign: return "flip-sign";
    case JacobiMutation::ShiftEvenRow: return "shift-even-row";
    case JacobiMutation::ShiftOddRow: return "shift-odd-row";
    case JacobiMutation::ShiftEvenCol: return "shift-even-col";
    case JacobiMutation::ShiftOddCol: return "shift-odd-col";
  }
  return "?";
}

bool jacobi_mutation_applies(JacobiMutation m, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  switch (m) {
    case JacobiMutation::None:
    case JacobiMutation::FlipSign:
      return true;
    case JacobiMutation::ShiftEvenRow:
    case JacobiMutation::ShiftEvenCol:
      return r >= 1 && p > r;
    case JacobiMutation::ShiftOddRow:
    case JacobiMutation::ShiftOddCol:
      return s >= 1 && q > s;
  }
  return false;
}

namespace {

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t k = from; k < to; ++k) v.push_back(k);
  return v;
}

// Kept rows {0..n-r-1} and columns {r..n-1}, with the mutation moving the
// last row down or the first column left.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> kept_indices(std::size_t n, std::size_t r, bool shift_row,
                                                                           bool shift_col) {
  auto rows = iota(0, n - r);
  auto cols = iota(r, n);
  if (shift_row) rows.back() = n - r;
  if (shift_col) cols.front() = r - 1;
  return {rows, cols};
}

Scalar ber_or_one(const SuperMatrix& m) {
  if (m.rows() == 0) return Scalar::constant(m.context(), Rational(1));
  return berezinian(m);
}

}  // namespace

JacobiReport jacobi_check(const ScalarMatrix& a, std::size_t r, JacobiMutation m) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ShapeError("Jacobi identity needs a square matrix");
  if (r > n) throw std::invalid_argument("Jacobi identity needs r <= n");
  if (m == JacobiMutation::ShiftOddRow || m == JacobiMutation::ShiftOddCol || !jacobi_mutation_applies(m, n, 0, r, 0)) {
    throw std::invalid_argument(std::string("mutation ") + jacobi_mutation_name(m) + " does not apply here");
  }
  const ContextPtr& ctx = a.context();
  JacobiReport rep;
  rep.n = n;
  rep.r = r;
  rep.sign_exponent = static_cast<long>(r * (n + 1));
  const Scalar det_a = det_even(a);
  const ScalarMatrix inv = inverse_even(a);
  ScalarMatrix corner(ctx, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) corner(i, j) = inv(i, n - r + j);
  }
  const auto [rows, cols] =
      kept_indices(n, r, m == JacobiMutation::ShiftEvenRow, m == JacobiMutation::ShiftEvenCol);
  ScalarMatrix kept(ctx, n - r, n - r);
  for (std::size_t i = 0; i < n - r; ++i) {
    for (std::size_t j = 0; j < n - r; ++j) kept(i, j) = a(rows[i], cols[j]);
  }
  const Scalar one = Scalar::constant(ctx, Rational(1));
  rep.lhs = det_a * (r == 0 ? one : det_even(corner));
  rep.rhs = r == n ? one : det_even(kept);
  if ((rep.sign_exponent % 2 != 0) != (m == JacobiMutation::FlipSign)) rep.rhs = -rep.rhs;
  rep.verified = rep.lhs == rep.rhs;
  return rep;
}

JacobiReport super_jacobi_check(const SuperMatrix& a, std::size_t r, std::size_t s, JacobiMutation m) {
  if (!a.is_square()) throw ShapeError("super Jacobi identity needs a square supermatrix");
  const std::size_t p = a.row_signature().even;
  const std::size_t q = a.row_signature().odd;
  if (r > p || s > q) throw std::invalid_argument("super Jacobi identity needs r <= p and s <= q");
  if (!jacobi_mutation_applies(m, p, q, r, s)) {
    throw std::invalid_argument(std::string("mutation ") + jacobi_mutation_name(m) + " does not apply here");
  }
  JacobiReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.s = s;
  rep.sign_exponent = static_cast<long>(r * (p + 1) + s * (q + 1));
  const Scalar ber_a = berezinian(a);
  const SuperMatrix inv = inverse(a);
  const SuperMatrix corner = submatrix_keep(inv, {iota(0, r), iota(0, s)}, {iota(p - r, p), iota(q - s, q)});
  const auto [even_rows, even_cols] =
      kept_indices(p, r, m == JacobiMutation::ShiftEvenRow, m == JacobiMutation::ShiftEvenCol);
  const auto [odd_rows, odd_cols] =
      kept_indices(q, s, m == JacobiMutation::ShiftOddRow, m == JacobiMutation::ShiftOddCol);
  const SuperMatrix kept = submatrix_keep(a, {even_rows, odd_rows}, {even_cols, odd_cols});
  rep.lhs = ber_a * ber_or_one(corner);
  rep.rhs = ber_or_one(kept);
  if ((rep.sign_exponent % 2 != 0) != (m == JacobiMutation::FlipSign)) rep.rhs = -rep.rhs;
  rep.verified = rep.lhs == rep.rhs;
  return rep;
}

SuperMatrix random_numeric_square(std::size_t p, std::size_t q, Rng& rng) {
  ContextPtr ctx = grassmann_context(2 * p * q);
  SuperMatrix a(ctx, {p, q}, {p, q});
  std::size_t next = 0;
  for (std::size_t i = 0; i < p + q; ++i) {
    for (std::size_t j = 0; j < p + q; ++j) {
      const bool odd = (i < p) != (j < p);
      const Rational c = rng.nonzero_rational(97, 13);
      a(i, j) = odd ? Scalar::odd_generator(ctx, next++).scaled(c) : Scalar::constant(ctx, c);
    }
  }
  return a;
}

SuperMatrix generic_square(std::size_t p, std::size_t q, SquareParam param) {
  const bool raw = param == SquareParam::Raw;
  const char* names[4] = {"a", "d", "b", "c"};
  if (!raw) {
    names[0] = "v";
    names[1] = "w";
    names[2] = "x";
    names[3] = "z";
  }
  std::vector<std::string> even;
  std::vector<std::string> odd;
  auto name = [](const char* b, std::size_t i, std::size_t j) {
    return std::string(b) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
  };
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) even.push_back(name(names[0], i, j));
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) even.push_back(name(names[1], i, j));
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) odd.push_back(name(names[2], i, j));
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < p; ++j) odd.push_back(name(names[3], i, j));
  }
  ContextPtr ctx = RingContext::create(std::move(even), std::move(odd));
  ScalarMatrix b1(ctx, p, p), b2(ctx, p, q), b3(ctx, q, p), b4(ctx, q, q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) b1(i, j) = Scalar::even_generator(ctx, i * p + j);
    for (std::size_t j = 0; j < q; ++j) b2(i, j) = Scalar::odd_generator(ctx, i * q + j);
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < p; ++j) b3(i, j) = Scalar::odd_generator(ctx, p * q + i * p + j);
    for (std::size_t j = 0; j < q; ++j) b4(i, j) = Scalar::even_generator(ctx, p * p + i * q + j);
  }
  if (raw) return SuperMatrix::from_blocks(b1, b2, b3, b4);
  // (I X; 0 I)(V 0; 0 W)(I 0; Z I) = (V + XWZ, XW; WZ, W)
  const ScalarMatrix xw = b2 * b4;
  return SuperMatrix::from_blocks(b1 + xw * b3, xw, b4 * b3, b4);
}

namespace {

constexpr std::size_t kSurvivorSamples = 5;

void note_survivor(MutationStats& st, std::string text) {
  if (st.survivors.size() < kSurvivorSamples) st.survivors.push_back(std::move(text));
}

MutationStats& stats_for(std::vector<MutationStats>& all, Family f) {
  for (auto& st : all) {
    if (st.family == f) return st;
  }
  all.push_back(MutationStats{});
  all.back().family = f;
  return all.back();
}

}  // namespace

std::vector<MutationStats> mutation_campaign(const std::vector<Relation>& corpus, const MutationOptions& opt) {
  RelationVerifier exact({opt.exact, 1, opt.seed, 0});
  RelationVerifier numeric({VerifyMode::Numeric, opt.trials, opt.seed, 0});
  Rng rng(opt.seed);
  std::vector<MutationStats> out;
  for (const auto& rel : corpus) {
    MutationStats& st = stats_for(out, rel.family);
    for (std::size_t k = 0; k < opt.per_relation; ++k) {
      for (std::size_t attempt = 0; attempt < opt.redraws; ++attempt) {
        Relation m = mutate(rel, rng);
        ++st.drawn;
        const Certificate truth = exact.verify(m);
        if (truth.verdict == Verdict::Verified) {
          ++st.equivalent;
          continue;
        }
        if (truth.verdict != Verdict::Falsified) {
          ++st.undefined;
          continue;
        }
        const Certificate c = numeric.verify(m);
        if (c.verdict == Verdict::Undefined || c.verdict == Verdict::CapExceeded) {
          ++st.undefined;
          continue;
        }
        ++st.effective;
        if (c.verdict == Verdict::Falsified) {
          ++st.falsified;
        } else {
          note_survivor(st, m.to_string());
        }
        break;
      }
    }
  }
  return out;
}

namespace {

ScalarMatrix generic_even_square(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) names.push_back("a[" + std::to_string(i) + "," + std::to_string(j) + "]");
  }
  ContextPtr ctx = RingContext::create(std::move(names), {});
  ScalarMatrix a(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar::even_generator(ctx, i * n + j);
  }
  return a;
}

ScalarMatrix random_rational_square(std::size_t n, Rng& rng) {
  ContextPtr ctx = grassmann_context(0);
  ScalarMatrix a(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar::constant(ctx, rng.nonzero_rational(97, 13));
  }
  return a;
}

constexpr JacobiMutation kJacobiMutations[] = {JacobiMutation::FlipSign, JacobiMutation::ShiftEvenRow,
                                               JacobiMutation::ShiftOddRow, JacobiMutation::ShiftEvenCol,
                                               JacobiMutation::ShiftOddCol};

// Runs `check` on up to `trials` defined numeric points; nullopt when none is defined.
template <typename Check>
std::optional<bool> numeric_survives(std::size_t trials, Check&& check) {
  std::size_t defined = 0;
  for (std::size_t t = 0; t < 3 * trials && defined < trials; ++t) {
    try {
      if (!check(t)) return false;
      ++defined;
    } catch (const std::domain_error&) {
    }
  }
  if (defined == 0) return std::nullopt;
  return true;
}

}  // namespace

std::vector<MutationStats> jacobi_mutation_campaign(std::size_t max_n, std::size_t max_pq, const MutationOptions& opt) {
  std::vector<MutationStats> out;
  MutationStats& cl = stats_for(out, Family::Jacobi);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const ScalarMatrix g = generic_even_square(n);
    for (std::size_t r = 0; r <= n; ++r) {
      for (JacobiMutation m : kJacobiMutations) {
        if (m == JacobiMutation::ShiftOddRow || m == JacobiMutation::ShiftOddCol) continue;
        if (!jacobi_mutation_applies(m, n, 0, r, 0)) continue;
        ++cl.drawn;
        if (jacobi_check(g, r, m).verified) {
          ++cl.equivalent;
          continue;
        }
        const auto survives = numeric_survives(opt.trials, [&](std::size_t t) {
          Rng rng(trial_seed(opt.seed, t));
          return jacobi_check(random_rational_square(n, rng), r, m).verified;
        });
        if (!survives) {
          ++cl.undefined;
          continue;
        }
        ++cl.effective;
        if (!*survives) {
          ++cl.falsified;
        } else {
          note_survivor(cl, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " " + jacobi_mutation_name(m));
        }
      }
    }
  }
  MutationStats& sj = stats_for(out, Family::SuperJacobi);
  for (std::size_t p = 1; p <= max_pq; ++p) {
    for (std::size_t q = 1; q <= max_pq; ++q) {
      const SuperMatrix g = generic_square(p, q, SquareParam::Factored);
      for (std::size_t r = 0; r <= p; ++r) {
        for (std::size_t s = 0; s <= q; ++s) {
          for (JacobiMutation m : kJacobiMutations) {
            if (!jacobi_mutation_applies(m, p, q, r, s)) continue;
            ++sj.drawn;
            if (super_jacobi_check(g, r, s, m).verified) {
              ++sj.equivalent;
              continue;
            }
            const auto survives = numeric_survives(opt.trials, [&](std::size_t t) {
              Rng rng(trial_seed(opt.seed, t));
              return super_jacobi_check(random_numeric_square(p, q, rng), r, s, m).verified;
            });
            if (!survives) {
              ++sj.undefined;
              continue;
            }
            ++sj.effective;
            if (!*survives) {
              ++sj.falsified;
            } else {
              note_survivor(sj, std::to_string(p) + "|" + std::to_string(q) + " r=" + std::to_string(r) +
                                    " s=" + std::to_string(s) + " " + jacobi_mutation_name(m));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace superinv

