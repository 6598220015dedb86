#include "superinv/supermatrix.hpp"

#include <bit>
#include <sstream>

namespace superinv {

const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Even: return "even";
    case MatrixKind::Odd: return "odd";
    case MatrixKind::FakeI: return "fake-I";
    case MatrixKind::FakeII: return "fake-II";
    case MatrixKind::Inhomogeneous: return "inhomogeneous";
  }
  return "?";
}

ScalarMatrix::ScalarMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, Scalar(ctx_)) {}

ScalarMatrix ScalarMatrix::identity(ContextPtr ctx, std::size_t n) {
  ScalarMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::constant(ctx, Rational(1));
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product dimension mismatch");
  ScalarMatrix out(a.ctx_ ? a.ctx_ : b.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Scalar acc(out.ctx_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum dimension mismatch");
  ScalarMatrix out(a.ctx_ ? a.ctx_ : b.ctx_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference dimension mismatch");
  ScalarMatrix out(a.ctx_ ? a.ctx_ : b.ctx_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

ScalarMatrix ScalarMatrix::operator-() const {
  ScalarMatrix out(*this);
  for (auto& s : out.data_) s = -s;
  return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (!(a.data_[k] == b.data_[k])) return false;
  }
  return true;
}

Scalar det_rows(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const ContextPtr& ctx = m.context();
  if (n == 0) return Scalar::constant(ctx, Rational(1));
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n > 20) throw ShapeError("determinant size exceeds supported range");
  // Row-by-row expansion memoized on the set of used columns.
  std::vector<Scalar> partial(std::size_t{1} << n, Scalar(ctx));
  partial[0] = Scalar::constant(ctx, Rational(1));
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (partial[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) continue;
      if (m(row, j).is_zero()) continue;
      const bool negative = std::popcount(mask >> (j + 1)) % 2 == 1;
      const Scalar term = partial[mask] * m(row, j);
      Scalar& slot = partial[mask | (1u << j)];
      slot = negative ? slot - term : slot + term;
    }
    partial[mask] = Scalar(ctx);
  }
  return partial[full];
}

Scalar det_even(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_even()) throw ShapeError("det_even requires even entries");
    }
  }
  return det_rows(m);
}

namespace {

ScalarMatrix drop(const ScalarMatrix& m, std::size_t row, std::size_t col) {
  ScalarMatrix out(m.context(), m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

struct EvenInverse {
  ScalarMatrix inverse;
  Scalar det_inverse;
};

EvenInverse invert_even_block(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  const ContextPtr& ctx = m.context();
  if (n != m.cols()) throw ShapeError("inverse of a non-square block");
  if (n == 0) return {ScalarMatrix(ctx, 0, 0), Scalar::constant(ctx, Rational(1))};
  const Scalar det = det_even(m);
  if (det.body().is_zero()) throw NotInvertible("block determinant has zero body");
  const Scalar dinv = det.inverse();
  ScalarMatrix out(ctx, n, n);
  if (n == 1) {
    out(0, 0) = dinv;
    return {out, dinv};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar cof = det_rows(drop(m, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      out(i, j) = cof * dinv;
    }
  }
  return {out, dinv};
}

}  // namespace

ScalarMatrix inverse_even(const ScalarMatrix& m) { return invert_even_block(m).inverse; }

SuperMatrix::SuperMatrix(ContextPtr ctx, ParitySignature rows, ParitySignature cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows.size() * cols.size(), Scalar(ctx_)) {}

SuperMatrix SuperMatrix::identity(ContextPtr ctx, ParitySignature sig) {
  SuperMatrix m(ctx, sig, sig);
  for (std::size_t i = 0; i < sig.size(); ++i) m(i, i) = Scalar::constant(ctx, Rational(1));
  return m;
}

SuperMatrix SuperMatrix::from_blocks(const ScalarMatrix& b1, const ScalarMatrix& b2, const ScalarMatrix& b3,
                                     const ScalarMatrix& b4) {
  if (b1.rows() != b2.rows() || b3.rows() != b4.rows() || b1.cols() != b3.cols() || b2.cols() != b4.cols()) {
    throw ShapeError("inconsistent block sizes");
  }
  ContextPtr ctx = b1.context() ? b1.context() : (b4.context() ? b4.context() : b2.context() ? b2.context() : b3.context());
  SuperMatrix m(ctx, {b1.rows(), b3.rows()}, {b1.cols(), b2.cols()});
  const std::size_t r = b1.rows();
  const std::size_t c = b1.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const bool top = i < r;
      const bool left = j < c;
      const ScalarMatrix& b = top ? (left ? b1 : b2) : (left ? b3 : b4);
      m(i, j) = b(top ? i : i - r, left ? j : j - c);
    }
  }
  return m;
}

std::size_t SuperMatrix::row_position(SlotIndex s) const {
  const std::size_t limit = s.parity == Parity::Even ? rows_.even : rows_.odd;
  if (s.index >= limit) throw std::out_of_range("row slot out of range");
  return s.parity == Parity::Even ? s.index : rows_.even + s.index;
}

std::size_t SuperMatrix::col_position(SlotIndex s) const {
  const std::size_t limit = s.parity == Parity::Even ? cols_.even : cols_.odd;
  if (s.index >= limit) throw std::out_of_range("column slot out of range");
  return s.parity == Parity::Even ? s.index : cols_.even + s.index;
}

const Scalar& SuperMatrix::at(SlotIndex row, SlotIndex col) const {
  return (*this)(row_position(row), col_position(col));
}

ScalarMatrix SuperMatrix::block(Parity row, Parity col) const {
  const std::size_t r0 = row == Parity::Even ? 0 : rows_.even;
  const std::size_t nr = row == Parity::Even ? rows_.even : rows_.odd;
  const std::size_t c0 = col == Parity::Even ? 0 : cols_.even;
  const std::size_t nc = col == Parity::Even ? cols_.even : cols_.odd;
  ScalarMatrix out(ctx_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

std::vector<Scalar> SuperMatrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.push_back((*this)(i, j));
  return out;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.cols_ == b.rows_)) throw ShapeError("supermatrix product: column and row signatures differ");
  SuperMatrix out(a.ctx_ ? a.ctx_ : b.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc(out.ctx_);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

SuperMatrix multiply(const SuperMatrix& a, const SuperMatrix& b) { return a * b; }

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_)) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (!(a.data_[k] == b.data_[k])) return false;
  }
  return true;
}

std::string SuperMatrix::to_string() const {
  std::ostringstream os;
  os << "rows " << rows_.even << "|" << rows_.odd << "\n";
  os << "cols " << cols_.even << "|" << cols_.odd << "\n";
  for (std::size_t i = 0; i < rows(); ++i) {
    os << "row ";
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? " ; " : "") << (*this)(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

MatrixKind classify(const SuperMatrix& m) {
  enum class Col { Zero, Conform, Flipped, Mixed };
  bool flipped_even = false;
  bool flipped_odd = false;
  bool conforming = false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Col status = Col::Zero;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const ScalarParity p = m(i, j).parity();
      if (p == ScalarParity::Zero) continue;
      if (p == ScalarParity::Inhomogeneous) return MatrixKind::Inhomogeneous;
      const Parity expected = m.row_signature().slot(i) + m.col_signature().slot(j);
      const bool matches = (p == ScalarParity::Even) == (expected == Parity::Even);
      const Col here = matches ? Col::Conform : Col::Flipped;
      if (status == Col::Zero) {
        status = here;
      } else if (status != here) {
        status = Col::Mixed;
      }
    }
    if (status == Col::Mixed) return MatrixKind::Inhomogeneous;
    if (status == Col::Conform) conforming = true;
    if (status == Col::Flipped) {
      (m.col_signature().slot(j) == Parity::Even ? flipped_even : flipped_odd) = true;
    }
  }
  if (!flipped_even && !flipped_odd) return MatrixKind::Even;
  if (flipped_even && flipped_odd) return conforming ? MatrixKind::Inhomogeneous : MatrixKind::Odd;
  return flipped_even ? MatrixKind::FakeI : MatrixKind::FakeII;
}

SuperMatrix pi_reverse(const SuperMatrix& m) {
  const ParitySignature rows{m.row_signature().odd, m.row_signature().even};
  const ParitySignature cols{m.col_signature().odd, m.col_signature().even};
  SuperMatrix out(m.context(), rows, cols);
  auto map_row = [&](std::size_t i) {
    return i < rows.even ? m.row_signature().even + i : i - rows.even;
  };
  auto map_col = [&](std::size_t j) {
    return j < cols.even ? m.col_signature().even + j : j - cols.even;
  };
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m(map_row(i), map_col(j));
  }
  return out;
}

namespace {

std::vector<std::size_t> positions_kept(const ParitySignature& sig, const SlotSelection& deleted) {
  std::vector<bool> drop_even(sig.even, false);
  std::vector<bool> drop_odd(sig.odd, false);
  for (std::size_t k : deleted.even) {
    if (k >= sig.even) throw std::out_of_range("deleted even slot out of range");
    if (drop_even[k]) throw std::invalid_argument("slot deleted twice");
    drop_even[k] = true;
  }
  for (std::size_t k : deleted.odd) {
    if (k >= sig.odd) throw std::out_of_range("deleted odd slot out of range");
    if (drop_odd[k]) throw std::invalid_argument("slot deleted twice");
    drop_odd[k] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sig.even; ++k) {
    if (!drop_even[k]) out.push_back(k);
  }
  for (std::size_t k = 0; k < sig.odd; ++k) {
    if (!drop_odd[k]) out.push_back(sig.even + k);
  }
  return out;
}

std::vector<std::size_t> positions_listed(const ParitySignature& sig, const SlotSelection& keep) {
  std::vector<std::size_t> out;
  for (std::size_t k : keep.even) {
    if (k >= sig.even) throw std::out_of_range("even slot out of range");
    out.push_back(k);
  }
  for (std::size_t k : keep.odd) {
    if (k >= sig.odd) throw std::out_of_range("odd slot out of range");
    out.push_back(sig.even + k);
  }
  return out;
}

SuperMatrix gather(const SuperMatrix& m, const std::vector<std::size_t>& rows, ParitySignature rsig,
                   const std::vector<std::size_t>& cols, ParitySignature csig) {
  SuperMatrix out(m.context(), rsig, csig);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

}  // namespace

SuperMatrix submatrix_delete(const SuperMatrix& m, const SlotSelection& rows, const SlotSelection& cols) {
  const auto& rs = m.row_signature();
  const auto& cs = m.col_signature();
  const auto kr = positions_kept(rs, rows);
  const auto kc = positions_kept(cs, cols);
  return gather(m, kr, {rs.even - rows.even.size(), rs.odd - rows.odd.size()}, kc,
                {cs.even - cols.even.size(), cs.odd - cols.odd.size()});
}

SuperMatrix submatrix_keep(const SuperMatrix& m, const SlotSelection& rows, const SlotSelection& cols) {
  return gather(m, positions_listed(m.row_signature(), rows), {rows.even.size(), rows.odd.size()},
                positions_listed(m.col_signature(), cols), {cols.even.size(), cols.odd.size()});
}

SuperMatrix replace_column(const SuperMatrix& m, SlotIndex slot, const std::vector<Scalar>& column) {
  if (column.size() != m.rows()) throw ShapeError("replacement column has wrong length");
  SuperMatrix out(m);
  const std::size_t j = m.col_position(slot);
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = column[i];
  return out;
}

Scalar berezinian(const SuperMatrix& m) {
  if (!m.is_square()) throw ShapeError("Berezinian of a non-square supermatrix");
  const MatrixKind kind = classify(m);
  if (kind != MatrixKind::Even && kind != MatrixKind::FakeI) {
    throw ShapeError(std::string("Berezinian requires an even or fake-I matrix, got ") + kind_name(kind));
  }
  const ScalarMatrix b1 = m.block(Parity::Even, Parity::Even);
  if (m.row_signature().odd == 0) return det_rows(b1);
  const ScalarMatrix b4 = m.block(Parity::Odd, Parity::Odd);
  const EvenInverse inv = invert_even_block(b4);
  if (m.row_signature().even == 0) return inv.det_inverse;
  const ScalarMatrix schur =
      b1 - m.block(Parity::Even, Parity::Odd) * inv.inverse * m.block(Parity::Odd, Parity::Even);
  return inv.det_inverse * det_rows(schur);
}

Scalar berezinian_star(const SuperMatrix& m) {
  if (!m.is_square()) throw ShapeError("Berezinian of a non-square supermatrix");
  const MatrixKind kind = classify(m);
  if (kind != MatrixKind::Even && kind != MatrixKind::FakeII) {
    throw ShapeError(std::string("Ber* requires an even or fake-II matrix, got ") + kind_name(kind));
  }
  return berezinian(pi_reverse(m));
}

namespace {

void require_even_square(const SuperMatrix& m, const char* what) {
  if (!m.is_square()) throw ShapeError(std::string(what) + " of a non-square supermatrix");
  const MatrixKind kind = classify(m);
  if (kind != MatrixKind::Even) {
    throw ShapeError(std::string(what) + " requires an even matrix, got " + kind_name(kind));
  }
}

}  // namespace

UdlFactors udl_decompose(const SuperMatrix& m) {
  require_even_square(m, "UDL decomposition");
  const ContextPtr& ctx = m.context();
  const std::size_t r = m.row_signature().even;
  const std::size_t s = m.row_signature().odd;
  const ScalarMatrix b1 = m.block(Parity::Even, Parity::Even);
  const ScalarMatrix b2 = m.block(Parity::Even, Parity::Odd);
  const ScalarMatrix b3 = m.block(Parity::Odd, Parity::Even);
  const ScalarMatrix b4 = m.block(Parity::Odd, Parity::Odd);
  const ScalarMatrix w_inv = invert_even_block(b4).inverse;
  UdlFactors f;
  f.w = b4;
  f.x = b2 * w_inv;
  f.z = w_inv * b3;
  f.v = b1 - f.x * b3;
  if (det_even(f.v).body().is_zero()) throw NotInvertible("even-even Schur block is not invertible");
  const ScalarMatrix zr(ctx, s, r);
  const ScalarMatrix zs(ctx, r, s);
  f.upper = SuperMatrix::from_blocks(ScalarMatrix::identity(ctx, r), f.x, zr, ScalarMatrix::identity(ctx, s));
  f.diagonal = SuperMatrix::from_blocks(f.v, zs, zr, f.w);
  f.lower = SuperMatrix::from_blocks(ScalarMatrix::identity(ctx, r), zs, f.z, ScalarMatrix::identity(ctx, s));
  return f;
}

SuperMatrix inverse(const SuperMatrix& m) {
  require_even_square(m, "inverse");
  const std::size_t r = m.row_signature().even;
  const std::size_t s = m.row_signature().odd;
  const ScalarMatrix b1 = m.block(Parity::Even, Parity::Even);
  const ScalarMatrix b2 = m.block(Parity::Even, Parity::Odd);
  const ScalarMatrix b3 = m.block(Parity::Odd, Parity::Even);
  const ScalarMatrix b4 = m.block(Parity::Odd, Parity::Odd);
  const ScalarMatrix w_inv = invert_even_block(b4).inverse;
  const ScalarMatrix x = b2 * w_inv;
  const ScalarMatrix z = w_inv * b3;
  const ScalarMatrix v_inv = invert_even_block(b1 - x * b3).inverse;
  const ScalarMatrix vx = v_inv * x;
  (void)r;
  (void)s;
  return SuperMatrix::from_blocks(v_inv, -vx, -(z * v_inv), w_inv + z * vx);
}

VectorParity vector_parity(const std::vector<Scalar>& v, ParitySignature sig) {
  if (v.size() != sig.size()) throw ShapeError("vector length does not match the signature");
  bool even = false;
  bool odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const ScalarParity p = v[i].parity();
    if (p == ScalarParity::Zero) continue;
    if (p == ScalarParity::Inhomogeneous) throw ShapeError("inhomogeneous vector entry");
    const bool entry_even = p == ScalarParity::Even;
    const bool slot_even = sig.slot(i) == Parity::Even;
    (entry_even == slot_even ? even : odd) = true;
  }
  if (even && odd) throw ShapeError("vector is neither even nor odd");
  return odd ? VectorParity::Odd : VectorParity::Even;
}

std::vector<Scalar> super_cramer_solve(const SuperMatrix& m, const std::vector<Scalar>& b) {
  require_even_square(m, "super Cramer rule");
  vector_parity(b, m.row_signature());
  const std::size_t r = m.col_signature().even;
  const std::size_t s = m.col_signature().odd;
  std::vector<Scalar> x;
  x.reserve(r + s);
  if (r > 0) {
    const Scalar ber_inv = berezinian(m).inverse();
    for (std::size_t i = 0; i < r; ++i) {
      x.push_back(berezinian(replace_column(m, {Parity::Even, i}, b)) * ber_inv);
    }
  }
  if (s > 0) {
    const Scalar ber_star_inv = berezinian_star(m).inverse();
    for (std::size_t k = 0; k < s; ++k) {
      x.push_back(berezinian_star(replace_column(m, {Parity::Odd, k}, b)) * ber_star_inv);
    }
  }
  return x;
}

}  // namespace superinv
