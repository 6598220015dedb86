#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superinv/minors.hpp"
#include "superinv/sft11.hpp"

namespace superinv::cli {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, SourcePos pos);
  SourcePos pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  SourcePos pos_;
};

// Syntax tree of an expression over coordinates x[i,j], y[k,l], al[i,k], be[l,j]
// and minors X[..|..], Xs[..|..].
struct Expr {
  enum class Kind { Number, Coordinate, Minor, Sum, Product, Negate, Power };
  Kind kind = Kind::Number;
  SourcePos pos;
  Rational value;              // Number
  std::string name;            // Coordinate: canonical name such as al[1,2]
  bool odd = false;            // Coordinate or Minor parity
  MinorSymbol minor;           // Minor
  std::vector<Expr> children;  // Sum: terms with sign in `signs`, Product, Negate, Power (one)
  std::vector<int> signs;      // Sum
  long exponent = 1;           // Power
};

// Whitespace-insensitive. Errors carry line and column of the offending token.
Expr parse_expression(std::string_view text);

bool mentions_coordinates(const Expr& e);
bool mentions_minors(const Expr& e);
std::vector<std::string> coordinate_names(const Expr& e);

// Minors only; each checked as a (1|1) generator within (p, q). Negative powers rejected.
InvariantPolynomial to_invariant(const Expr& e, std::size_t p, std::size_t q);

// Coordinates looked up by name in the model's context, minors evaluated on the model.
Scalar to_scalar(const Expr& e, CoordinateModel& model);
// Coordinates only, in an arbitrary context that declares them.
Scalar to_scalar(const Expr& e, const ContextPtr& ctx);

// Context whose generators are exactly the coordinates named in `exprs`,
// even ones (x, y) then odd ones (al, be), each sorted.
ContextPtr context_for(const std::vector<const Expr*>& exprs);

// Matrix text: rows separated by ';' or newlines, entries by ','.
std::vector<std::vector<Expr>> parse_rows(std::string_view text);

}  // namespace superinv::cli
