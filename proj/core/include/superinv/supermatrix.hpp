#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superinv/scalar.hpp"

namespace superinv {

// Slot layout of rows or columns: all even slots first, then the odd ones.
struct ParitySignature {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t size() const noexcept { return even + odd; }
  Parity slot(std::size_t i) const noexcept { return i < even ? Parity::Even : Parity::Odd; }
  friend bool operator==(const ParitySignature&, const ParitySignature&) = default;
};

enum class MatrixKind { Even, Odd, FakeI, FakeII, Inhomogeneous };
const char* kind_name(MatrixKind k);

class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Plain rectangular matrix of scalars, used for blocks.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
  static ScalarMatrix identity(ContextPtr ctx, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  ScalarMatrix operator-() const;
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  ContextPtr ctx_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Determinant with products taken in row order; entries need not be even.
Scalar det_rows(const ScalarMatrix& m);
// Determinant of a square matrix with even entries.
Scalar det_even(const ScalarMatrix& m);
// Inverse of an even square matrix via the adjugate.
ScalarMatrix inverse_even(const ScalarMatrix& m);

struct SlotIndex {
  Parity parity = Parity::Even;
  std::size_t index = 0;  // 0-based within its parity block
  friend bool operator==(const SlotIndex&, const SlotIndex&) = default;
};

// Per parity 0-based slot indices.
struct SlotSelection {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
};

class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(ContextPtr ctx, ParitySignature rows, ParitySignature cols);
  static SuperMatrix identity(ContextPtr ctx, ParitySignature sig);
  static SuperMatrix from_blocks(const ScalarMatrix& b1, const ScalarMatrix& b2, const ScalarMatrix& b3,
                                 const ScalarMatrix& b4);

  const ContextPtr& context() const noexcept { return ctx_; }
  const ParitySignature& row_signature() const noexcept { return rows_; }
  const ParitySignature& col_signature() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
  const Scalar& at(SlotIndex row, SlotIndex col) const;
  std::size_t row_position(SlotIndex s) const;
  std::size_t col_position(SlotIndex s) const;

  // Blocks B1 (even,even), B2 (even,odd), B3 (odd,even), B4 (odd,odd).
  ScalarMatrix block(Parity row, Parity col) const;
  std::vector<Scalar> column(std::size_t j) const;

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  ParitySignature rows_;
  ParitySignature cols_;
  std::vector<Scalar> data_;
};

MatrixKind classify(const SuperMatrix& m);
SuperMatrix multiply(const SuperMatrix& a, const SuperMatrix& b);
// Swaps even and odd slots, so the blocks become (B4 B3; B2 B1).
SuperMatrix pi_reverse(const SuperMatrix& m);
SuperMatrix submatrix_delete(const SuperMatrix& m, const SlotSelection& rows, const SlotSelection& cols);
// Keeps the listed rows and columns, in the listed order within each parity.
SuperMatrix submatrix_keep(const SuperMatrix& m, const SlotSelection& rows, const SlotSelection& cols);
SuperMatrix replace_column(const SuperMatrix& m, SlotIndex slot, const std::vector<Scalar>& column);

// Ber for even or fake-I square matrices.
Scalar berezinian(const SuperMatrix& m);
// Ber of the parity reversed matrix, for even or fake-II square matrices.
Scalar berezinian_star(const SuperMatrix& m);

struct UdlFactors {
  SuperMatrix upper;     // (I X; 0 I)
  SuperMatrix diagonal;  // (V 0; 0 W)
  SuperMatrix lower;     // (I 0; Z I)
  ScalarMatrix x, v, w, z;
};
UdlFactors udl_decompose(const SuperMatrix& m);
SuperMatrix inverse(const SuperMatrix& m);

enum class VectorParity { Even, Odd };
// Parity of a column vector laid out along the signature; throws when inhomogeneous.
VectorParity vector_parity(const std::vector<Scalar>& v, ParitySignature sig);

// Solves M x = b through Berezinian ratios of column replaced matrices.
std::vector<Scalar> super_cramer_solve(const SuperMatrix& m, const std::vector<Scalar>& b);

}  // namespace superinv
