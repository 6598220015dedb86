#include "parse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace superinv::cli {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::invalid_argument("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " +
                            message),
      message_(message),
      pos_(pos) {}

namespace {

enum class Tok { Number, Ident, LBracket, RBracket, Comma, Bar, Caret, Plus, Minus, Star, Slash, LParen, RParen, RowSep, End };

const char* tok_text(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Bar: return "'|'";
    case Tok::Caret: return "'^'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::RowSep: return "row separator";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view s, bool rows) {
  std::vector<Token> out;
  SourcePos pos;
  int depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n' && rows && depth == 0) {
      out.push_back({Tok::RowSep, "\n", pos});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourcePos at = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '[': k = Tok::LBracket; ++depth; break;
      case ']': k = Tok::RBracket; --depth; break;
      case '(': k = Tok::LParen; ++depth; break;
      case ')': k = Tok::RParen; --depth; break;
      case ',': k = Tok::Comma; break;
      case '|': k = Tok::Bar; break;
      case '^': k = Tok::Caret; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case ';':
        if (!rows) throw ParseError("unexpected ';'", at);
        k = Tok::RowSep;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
    out.push_back({k, std::string(1, c), at});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

bool is_odd_coordinate(const std::string& base) { return base == "al" || base == "be"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[at_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
    }
    return toks_[at_++];
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::Number || t.kind == Tok::Ident) return "'" + t.text + "'";
    return tok_text(t.kind);
  }

  Expr expression() {
    const SourcePos start = peek().pos;
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    sum.pos = start;
    int sign = 1;
    if (accept(Tok::Minus)) sign = -1;
    else accept(Tok::Plus);
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = peek().kind == Tok::Plus ? 1 : -1;
      ++at_;
      sum.children.push_back(term());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
    return sum;
  }

  Expr term() {
    Expr first = unary();
    if (peek().kind != Tok::Star) return first;
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.pos = first.pos;
    prod.children.push_back(std::move(first));
    while (accept(Tok::Star)) prod.children.push_back(unary());
    return prod;
  }

  Expr unary() {
    if (peek().kind == Tok::Minus) {
      Expr neg;
      neg.kind = Expr::Kind::Negate;
      neg.pos = peek().pos;
      ++at_;
      neg.children.push_back(unary());
      return neg;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind != Tok::Caret) return base;
    const SourcePos caret = peek().pos;
    ++at_;
    bool negative = accept(Tok::Minus);
    const Token& n = expect(Tok::Number, "an integer exponent");
    long e = 0;
    try {
      e = std::stol(n.text);
    } catch (const std::exception&) {
      throw ParseError("exponent too large", n.pos);
    }
    if (negative) e = -e;
    const bool odd_base = (base.kind == Expr::Kind::Coordinate || base.kind == Expr::Kind::Minor) && base.odd;
    if (odd_base && (e >= 2 || e < 0)) {
      const std::string what = base.kind == Expr::Kind::Coordinate ? base.name : base.minor.to_string();
      throw ParseError("odd generator " + what + " raised to power " + std::to_string(e), caret);
    }
    Expr pw;
    pw.kind = Expr::Kind::Power;
    pw.pos = base.pos;
    pw.exponent = e;
    pw.children.push_back(std::move(base));
    return pw;
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++at_;
      Expr num;
      num.kind = Expr::Kind::Number;
      num.pos = t.pos;
      num.value = Rational(mpz_class(t.text));
      if (accept(Tok::Slash)) {
        const Token& d = expect(Tok::Number, "an integer denominator");
        mpz_class den(d.text);
        if (den == 0) throw ParseError("zero denominator", d.pos);
        num.value = Rational(mpz_class(t.text), den);
        num.value.canonicalize();
      }
      if (peek().kind == Tok::Slash) throw ParseError("'/' is only allowed inside a rational literal", peek().pos);
      return num;
    }
    if (t.kind == Tok::LParen) {
      ++at_;
      Expr inner = expression();
      expect(Tok::RParen, "')'");
      if (peek().kind == Tok::Slash) throw ParseError("'/' is only allowed inside a rational literal", peek().pos);
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "X" || t.text == "Xs") return minor();
      if (t.text == "x" || t.text == "y" || t.text == "al" || t.text == "be") return coordinate();
      throw ParseError("unknown generator '" + t.text + "'", t.pos);
    }
    throw ParseError("expected a number, generator or '(', found " + describe(t), t.pos);
  }

  std::size_t index() {
    const Token& n = expect(Tok::Number, "an index");
    std::size_t v = 0;
    try {
      v = std::stoul(n.text);
    } catch (const std::exception&) {
      throw ParseError("index too large", n.pos);
    }
    if (v == 0) throw ParseError("indices start at 1", n.pos);
    return v;
  }

  Expr coordinate() {
    const Token& id = toks_[at_++];
    expect(Tok::LBracket, "'['");
    const std::size_t a = index();
    expect(Tok::Comma, "','");
    const std::size_t b = index();
    expect(Tok::RBracket, "']'");
    Expr c;
    c.kind = Expr::Kind::Coordinate;
    c.pos = id.pos;
    c.name = id.text + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    c.odd = is_odd_coordinate(id.text);
    return c;
  }

  std::vector<ColumnLabel> labels(Parity slot) {
    std::vector<ColumnLabel> out;
    if (peek().kind == Tok::Bar || peek().kind == Tok::RBracket) return out;
    do {
      const bool flipped = accept(Tok::Caret);
      const std::size_t v = index();
      out.push_back({flipped ? flip(slot) : slot, v});
    } while (accept(Tok::Comma));
    return out;
  }

  Expr minor() {
    const Token& id = toks_[at_++];
    expect(Tok::LBracket, "'['");
    MinorSymbol m;
    m.starred = id.text == "Xs";
    m.even_slots = labels(Parity::Even);
    if (accept(Tok::Bar)) m.odd_slots = labels(Parity::Odd);
    expect(Tok::RBracket, "']'");
    std::size_t flipped = 0;
    for (const auto& c : m.even_slots) flipped += c.parity == Parity::Odd;
    for (const auto& c : m.odd_slots) flipped += c.parity == Parity::Even;
    if (flipped > 1) throw ParseError("minor " + m.to_string() + " carries more than one fake index", id.pos);
    Expr e;
    e.kind = Expr::Kind::Minor;
    e.pos = id.pos;
    e.minor = std::move(m);
    e.odd = e.minor.kind() != MinorKind::Plain;
    return e;
  }

  bool at_end() const { return peek().kind == Tok::End; }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void walk(const Expr& e, const std::function<void(const Expr&)>& f) {
  f(e);
  for (const auto& c : e.children) walk(c, f);
}

}  // namespace

Expr parse_expression(std::string_view text) {
  Parser p(lex(text, false));
  if (p.at_end()) throw ParseError("empty expression", p.peek().pos);
  Expr e = p.expression();
  if (!p.at_end()) throw ParseError("unexpected " + Parser::describe(p.peek()), p.peek().pos);
  return e;
}

std::vector<std::vector<Expr>> parse_rows(std::string_view text) {
  Parser p(lex(text, true));
  std::vector<std::vector<Expr>> rows;
  while (!p.at_end()) {
    if (p.accept(Tok::RowSep)) continue;
    std::vector<Expr> row;
    row.push_back(p.expression());
    while (p.accept(Tok::Comma)) row.push_back(p.expression());
    if (!p.at_end() && !p.accept(Tok::RowSep)) {
      throw ParseError("unexpected " + Parser::describe(p.peek()) + " in matrix row", p.peek().pos);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool mentions_coordinates(const Expr& e) {
  bool found = false;
  walk(e, [&](const Expr& n) { found |= n.kind == Expr::Kind::Coordinate; });
  return found;
}

bool mentions_minors(const Expr& e) {
  bool found = false;
  walk(e, [&](const Expr& n) { found |= n.kind == Expr::Kind::Minor; });
  return found;
}

std::vector<std::string> coordinate_names(const Expr& e) {
  std::set<std::string> names;
  walk(e, [&](const Expr& n) {
    if (n.kind == Expr::Kind::Coordinate) names.insert(n.name);
  });
  return {names.begin(), names.end()};
}

InvariantPolynomial to_invariant(const Expr& e, std::size_t p, std::size_t q) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return InvariantPolynomial::constant(e.value);
    case Expr::Kind::Coordinate:
      throw ParseError("coordinate " + e.name + " cannot appear in an invariant polynomial", e.pos);
    case Expr::Kind::Minor:
      try {
        validate_generator(e.minor, p, q);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), e.pos);
      }
      return InvariantPolynomial::generator(e.minor);
    case Expr::Kind::Sum: {
      InvariantPolynomial out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const InvariantPolynomial t = to_invariant(e.children[k], p, q);
        out = e.signs[k] > 0 ? out + t : out - t;
      }
      return out;
    }
    case Expr::Kind::Product: {
      InvariantPolynomial out = InvariantPolynomial::constant(Rational(1));
      for (const auto& c : e.children) out = out * to_invariant(c, p, q);
      return out;
    }
    case Expr::Kind::Negate:
      return -to_invariant(e.children[0], p, q);
    case Expr::Kind::Power:
      if (e.exponent < 0) throw ParseError("negative powers are not polynomial", e.pos);
      return to_invariant(e.children[0], p, q).pow(static_cast<unsigned>(e.exponent));
  }
  throw std::logic_error("unknown expression node");
}

namespace {

Scalar lower(const Expr& e, const ContextPtr& ctx, CoordinateModel* model) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Scalar::constant(ctx, e.value);
    case Expr::Kind::Coordinate: {
      if (e.odd) {
        if (auto k = ctx->find_odd(e.name)) return Scalar::odd_generator(ctx, *k);
      } else if (auto k = ctx->find_even(e.name)) {
        return Scalar::even_generator(ctx, *k);
      }
      throw ParseError("generator " + e.name + " does not exist at this size", e.pos);
    }
    case Expr::Kind::Minor:
      if (!model) throw ParseError("minor " + e.minor.to_string() + " needs a coordinate matrix", e.pos);
      try {
        e.minor.validate(model->shape());
        return model->minor(e.minor);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), e.pos);
      }
    case Expr::Kind::Sum: {
      Scalar out(ctx);
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const Scalar t = lower(e.children[k], ctx, model);
        out = e.signs[k] > 0 ? out + t : out - t;
      }
      return out;
    }
    case Expr::Kind::Product: {
      Scalar out = Scalar::constant(ctx, Rational(1));
      for (const auto& c : e.children) out = out * lower(c, ctx, model);
      return out;
    }
    case Expr::Kind::Negate:
      return -lower(e.children[0], ctx, model);
    case Expr::Kind::Power:
      try {
        return lower(e.children[0], ctx, model).pow(e.exponent);
      } catch (const std::domain_error& err) {
        throw ParseError(err.what(), e.pos);
      }
  }
  throw std::logic_error("unknown expression node");
}

}  // namespace

Scalar to_scalar(const Expr& e, CoordinateModel& model) { return lower(e, model.context(), &model); }

Scalar to_scalar(const Expr& e, const ContextPtr& ctx) { return lower(e, ctx, nullptr); }

ContextPtr context_for(const std::vector<const Expr*>& exprs) {
  std::set<std::string> even, odd;
  for (const Expr* e : exprs) {
    walk(*e, [&](const Expr& n) {
      if (n.kind == Expr::Kind::Coordinate) (n.odd ? odd : even).insert(n.name);
    });
  }
  if (odd.size() > kMaxOddGens) throw std::invalid_argument("too many odd generators");
  return RingContext::create({even.begin(), even.end()}, {odd.begin(), odd.end()});
}

}  // namespace superinv::cli
