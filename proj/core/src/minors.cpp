#include "superinv/minors.hpp"

#include <sstream>
#include <stdexcept>

namespace superinv {

void MatrixShape::validate() const {
  if (r > p || s > q) throw std::invalid_argument("shape requires r <= p and s <= q");
  if (r + s == 0) throw std::invalid_argument("shape requires r + s >= 1");
}

namespace {

std::string idx2(const char* base, std::size_t i, std::size_t j) {
  return std::string(base) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace

GenericCoordinateMatrix generic_matrix(std::size_t r, std::size_t s, std::size_t p, std::size_t q) {
  MatrixShape shape{r, s, p, q};
  shape.validate();
  std::vector<std::string> even;
  std::vector<std::string> odd;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= p; ++j) even.push_back(idx2("x", i, j));
  }
  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t l = 1; l <= q; ++l) even.push_back(idx2("y", k, l));
  }
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t k = 1; k <= q; ++k) odd.push_back(idx2("al", i, k));
  }
  for (std::size_t l = 1; l <= s; ++l) {
    for (std::size_t j = 1; j <= p; ++j) odd.push_back(idx2("be", l, j));
  }
  ContextPtr ctx = RingContext::create(std::move(even), std::move(odd));
  SuperMatrix a(ctx, {r, s}, {p, q});
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < p; ++j) a(i, j) = Scalar::even_generator(ctx, i * p + j);
    for (std::size_t k = 0; k < q; ++k) a(i, p + k) = Scalar::odd_generator(ctx, i * q + k);
  }
  for (std::size_t l = 0; l < s; ++l) {
    for (std::size_t j = 0; j < p; ++j) a(r + l, j) = Scalar::odd_generator(ctx, r * q + l * p + j);
    for (std::size_t k = 0; k < q; ++k) a(r + l, p + k) = Scalar::even_generator(ctx, r * p + l * q + k);
  }
  return GenericCoordinateMatrix{shape, ctx, std::move(a)};
}

MinorKind MinorSymbol::kind() const {
  bool fake_one = false;
  bool fake_two = false;
  for (const auto& c : even_slots) fake_one |= c.parity == Parity::Odd;
  for (const auto& c : odd_slots) fake_two |= c.parity == Parity::Even;
  if (fake_one) return MinorKind::FakeI;
  if (fake_two) return MinorKind::FakeII;
  return MinorKind::Plain;
}

void MinorSymbol::validate(const MatrixShape& shape) const {
  if (even_slots.size() != shape.r || odd_slots.size() != shape.s) {
    throw std::invalid_argument("minor " + to_string() + " needs " + std::to_string(shape.r) + " even and " +
                                std::to_string(shape.s) + " odd indices");
  }
  std::size_t flipped_even = 0;
  std::size_t flipped_odd = 0;
  auto check = [&](const ColumnLabel& c) {
    const std::size_t limit = c.parity == Parity::Even ? shape.p : shape.q;
    if (c.index < 1 || c.index > limit) throw std::invalid_argument("minor " + to_string() + " has an index out of range");
  };
  for (const auto& c : even_slots) {
    check(c);
    if (c.parity == Parity::Odd) ++flipped_even;
  }
  for (const auto& c : odd_slots) {
    check(c);
    if (c.parity == Parity::Even) ++flipped_odd;
  }
  if (flipped_even + flipped_odd > 1) {
    throw std::invalid_argument("minor " + to_string() + " carries more than one fake substitution");
  }
  if (flipped_even == 1 && starred) {
    throw std::invalid_argument("minor " + to_string() + ": an odd column in an even slot needs the unstarred form");
  }
  if (flipped_odd == 1 && !starred) {
    throw std::invalid_argument("minor " + to_string() + ": an even column in an odd slot needs the starred form");
  }
}

namespace {

std::string label_text(const ColumnLabel& c, Parity slot) {
  return (c.parity == slot ? "" : "^") + std::to_string(c.index);
}

std::string label_latex(const ColumnLabel& c) {
  if (c.parity == Parity::Odd) return "\\hat{" + std::to_string(c.index) + "}";
  return std::to_string(c.index);
}

bool needs_commas(const MinorSymbol& m) {
  for (const auto* v : {&m.even_slots, &m.odd_slots}) {
    for (const auto& c : *v) {
      if (c.index >= 10) return true;
    }
  }
  return false;
}

}  // namespace

std::string MinorSymbol::to_string() const {
  std::ostringstream os;
  os << (starred ? "Xs[" : "X[");
  for (std::size_t k = 0; k < even_slots.size(); ++k) os << (k ? "," : "") << label_text(even_slots[k], Parity::Even);
  // Classical minors (no odd slots) drop the bar.
  if (!odd_slots.empty() || even_slots.empty()) os << "|";
  for (std::size_t k = 0; k < odd_slots.size(); ++k) os << (k ? "," : "") << label_text(odd_slots[k], Parity::Odd);
  os << "]";
  return os.str();
}

std::string MinorSymbol::to_latex() const {
  const bool commas = needs_commas(*this);
  std::ostringstream os;
  os << (starred ? "X^*_{" : "X_{");
  for (std::size_t k = 0; k < even_slots.size(); ++k) os << (k && commas ? "," : "") << label_latex(even_slots[k]);
  if (!odd_slots.empty() || even_slots.empty()) os << "|";
  for (std::size_t k = 0; k < odd_slots.size(); ++k) os << (k && commas ? "," : "") << label_latex(odd_slots[k]);
  os << "}";
  return os.str();
}

MinorSymbol MinorSymbol::plain(bool starred, const std::vector<std::size_t>& even, const std::vector<std::size_t>& odd) {
  MinorSymbol m;
  m.starred = starred;
  for (std::size_t j : even) m.even_slots.push_back({Parity::Even, j});
  for (std::size_t k : odd) m.odd_slots.push_back({Parity::Odd, k});
  return m;
}

SuperMatrix minor_matrix(const SuperMatrix& a, const MinorSymbol& m) {
  const ParitySignature& cs = a.col_signature();
  MatrixShape shape{a.row_signature().even, a.row_signature().odd, cs.even, cs.odd};
  m.validate(shape);
  std::vector<std::size_t> positions;
  for (const auto* v : {&m.even_slots, &m.odd_slots}) {
    for (const auto& c : *v) positions.push_back(c.parity == Parity::Even ? c.index - 1 : cs.even + c.index - 1);
  }
  SuperMatrix out(a.context(), a.row_signature(), {m.even_slots.size(), m.odd_slots.size()});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < positions.size(); ++j) out(i, j) = a(i, positions[j]);
  }
  return out;
}

Scalar super_minor(const SuperMatrix& a, const MinorSymbol& m) {
  const SuperMatrix sub = minor_matrix(a, m);
  return m.starred ? berezinian_star(sub) : berezinian(sub);
}

const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Generic: return "generic";
    case ModelKind::Slice: return "slice";
    case ModelKind::Numeric: return "numeric";
    case ModelKind::Explicit: return "explicit";
  }
  return "?";
}

CoordinateModel::CoordinateModel(ModelKind kind, MatrixShape shape, SuperMatrix a)
    : kind_(kind), shape_(shape), matrix_(std::move(a)) {}

CoordinateModel CoordinateModel::generic(const MatrixShape& shape) {
  auto g = generic_matrix(shape.r, shape.s, shape.p, shape.q);
  return CoordinateModel(ModelKind::Generic, shape, std::move(g.matrix));
}

CoordinateModel CoordinateModel::fft_slice(const MatrixShape& shape) {
  shape.validate();
  if (shape.r == 0) throw std::invalid_argument("the normal-form slice needs r >= 1");
  const auto [r, s, p, q] = shape;
  std::vector<std::string> even{"t"};
  std::vector<std::string> odd;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = r + 1; j <= p; ++j) even.push_back(idx2("x", i, j));
  }
  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t l = s + 1; l <= q; ++l) even.push_back(idx2("y", k, l));
  }
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t l = s + 1; l <= q; ++l) odd.push_back(idx2("al", i, l));
  }
  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t j = r + 1; j <= p; ++j) odd.push_back(idx2("be", k, j));
  }
  ContextPtr ctx = RingContext::create(std::move(even), std::move(odd));
  SuperMatrix a(ctx, {r, s}, {p, q});
  const Scalar one = Scalar::constant(ctx, Rational(1));
  a(0, 0) = Scalar::even_generator(ctx, 0);
  for (std::size_t i = 1; i < r; ++i) a(i, i) = one;
  for (std::size_t k = 0; k < s; ++k) a(r + k, p + k) = one;
  std::size_t ev = 1;
  std::size_t od = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = r; j < p; ++j) a(i, j) = Scalar::even_generator(ctx, ev++);
  }
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t l = s; l < q; ++l) a(r + k, p + l) = Scalar::even_generator(ctx, ev++);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = s; l < q; ++l) a(i, p + l) = Scalar::odd_generator(ctx, od++);
  }
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t j = r; j < p; ++j) a(r + k, j) = Scalar::odd_generator(ctx, od++);
  }
  return CoordinateModel(ModelKind::Slice, shape, std::move(a));
}

CoordinateModel CoordinateModel::numeric(const MatrixShape& shape, std::uint64_t seed) {
  auto g = generic_matrix(shape.r, shape.s, shape.p, shape.q);
  Rng rng(seed);
  const NumericAssignment point = random_assignment(*g.ctx, rng);
  SuperMatrix a(point.target, g.matrix.row_signature(), g.matrix.col_signature());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = evaluate_numeric(g.matrix(i, j), point);
  }
  return CoordinateModel(ModelKind::Numeric, shape, std::move(a));
}

CoordinateModel CoordinateModel::from_matrix(SuperMatrix a, ModelKind kind) {
  MatrixShape shape{a.row_signature().even, a.row_signature().odd, a.col_signature().even, a.col_signature().odd};
  return CoordinateModel(kind, shape, std::move(a));
}

const Scalar& CoordinateModel::minor(const MinorSymbol& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  Scalar v = super_minor(matrix_, m);
  return cache_.emplace(m, std::move(v)).first->second;
}

std::size_t unimodular_odd_count(std::size_t r, std::size_t s) { return 2 * r * s; }

namespace {

ScalarMatrix random_rational_matrix(const ContextPtr& ctx, std::size_t n, Rng& rng) {
  while (true) {
    ScalarMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::constant(ctx, Rational(static_cast<long>(rng.between(-4, 4))));
    }
    if (n == 0 || !det_rows(m).is_zero()) return m;
  }
}

void scale_first_row(ScalarMatrix& m, const Scalar& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(0, j) = m(0, j) * factor;
}

}  // namespace

SuperMatrix random_unimodular(const ContextPtr& ctx, std::size_t r, std::size_t s, std::size_t first_odd, Rng& rng) {
  if (first_odd + unimodular_odd_count(r, s) > ctx->odd_count()) {
    throw std::invalid_argument("not enough odd generators for a random group element");
  }
  ScalarMatrix v = random_rational_matrix(ctx, r, rng);
  ScalarMatrix w = random_rational_matrix(ctx, s, rng);
  if (r > 0 && s > 0) {
    scale_first_row(w, det_rows(v) * det_rows(w).inverse());
  } else if (r > 0) {
    scale_first_row(v, det_rows(v).inverse());
  } else if (s > 0) {
    scale_first_row(w, det_rows(w).inverse());
  }
  std::size_t next = first_odd;
  ScalarMatrix x(ctx, r, s);
  ScalarMatrix z(ctx, s, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < s; ++k) x(i, k) = Scalar::odd_generator(ctx, next++).scaled(rng.nonzero_rational());
  }
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < r; ++i) z(k, i) = Scalar::odd_generator(ctx, next++).scaled(rng.nonzero_rational());
  }
  const ScalarMatrix zr(ctx, s, r);
  const ScalarMatrix zs(ctx, r, s);
  const SuperMatrix upper = SuperMatrix::from_blocks(ScalarMatrix::identity(ctx, r), x, zr, ScalarMatrix::identity(ctx, s));
  const SuperMatrix diag = SuperMatrix::from_blocks(v, zs, zr, w);
  const SuperMatrix lower = SuperMatrix::from_blocks(ScalarMatrix::identity(ctx, r), zs, z, ScalarMatrix::identity(ctx, s));
  return upper * diag * lower;
}

FftDecomposition fft_decompose(const SuperMatrix& a, const MatrixShape& shape) {
  shape.validate();
  if (shape.r == 0) throw std::invalid_argument("the decomposition needs r >= 1");
  SuperMatrix head(a.context(), a.row_signature(), {shape.r, shape.s});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < shape.r; ++j) head(i, j) = a(i, j);
    for (std::size_t k = 0; k < shape.s; ++k) head(i, shape.r + k) = a(i, shape.p + k);
  }
  const Scalar x_head = berezinian(head);
  const Scalar x_inv = x_head.inverse();
  FftDecomposition d;
  d.a_tilde = head;
  for (std::size_t i = 0; i < a.rows(); ++i) d.a_tilde(i, 0) = head(i, 0) * x_inv;
  d.b = inverse(d.a_tilde) * a;
  d.ber_a_tilde = berezinian(d.a_tilde);
  d.unimodular = d.ber_a_tilde.is_one();
  d.product_matches = d.a_tilde * d.b == a;
  return d;
}

namespace {

std::vector<ColumnLabel> range_labels(Parity parity, std::size_t n) {
  std::vector<ColumnLabel> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back({parity, i});
  return out;
}

}  // namespace

std::vector<FftEntryReport> verify_fft_entries(const SuperMatrix& a, const MatrixShape& shape,
                                               const FftDecomposition& d) {
  CoordinateModel model = CoordinateModel::from_matrix(a);
  MinorSymbol head;
  head.even_slots = range_labels(Parity::Even, shape.r);
  head.odd_slots = range_labels(Parity::Odd, shape.s);
  MinorSymbol head_star = head;
  head_star.starred = true;
  const Scalar x = model.minor(head);
  const Scalar x_star = model.minor(head_star);

  std::vector<FftEntryReport> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool even_row = i < shape.r;
    const std::size_t row = even_row ? i + 1 : i - shape.r + 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const bool even_col = j < shape.p;
      const ColumnLabel label{even_col ? Parity::Even : Parity::Odd, even_col ? j + 1 : j - shape.p + 1};
      FftEntryReport rep;
      rep.row = row;
      rep.col = label.index;
      rep.block = even_row ? (even_col ? "U" : "V") : (even_col ? "W" : "Z");
      Scalar expected;
      if (even_row) {
        MinorSymbol m = head;
        m.even_slots[row - 1] = label;
        if (row == 1) {
          expected = model.minor(m);
          rep.formula = m.to_string();
          rep.note = "first index replaced by the column label";
        } else {
          expected = x_star * model.minor(m);
          rep.formula = head_star.to_string() + "*" + m.to_string();
        }
      } else {
        MinorSymbol m = head_star;
        m.odd_slots[row - 1] = label;
        expected = x * model.minor(m);
        rep.formula = head.to_string() + "*" + m.to_string();
      }
      rep.matches = expected == d.b(i, j);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace superinv
