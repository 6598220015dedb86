#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superinv/numeric.hpp"
#include "superinv/supermatrix.hpp"

namespace superinv {

// Shape (r|s) x (p|q) of a coordinate matrix with r <= p and s <= q.
struct MatrixShape {
  std::size_t r = 0, s = 0, p = 0, q = 0;
  void validate() const;
  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

// Generic matrix with entries x[i,j] (r x p, even), al[i,k] (r x q, odd),
// be[l,j] (s x p, odd), y[k,l] (s x q, even); indices are 1-based in names.
struct GenericCoordinateMatrix {
  MatrixShape shape;
  ContextPtr ctx;
  SuperMatrix matrix;
};
GenericCoordinateMatrix generic_matrix(std::size_t r, std::size_t s, std::size_t p, std::size_t q);

// A column label of the big matrix: an even column j or an odd column j-hat (1-based).
struct ColumnLabel {
  Parity parity = Parity::Even;
  std::size_t index = 1;
  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
  friend auto operator<=>(const ColumnLabel&, const ColumnLabel&) = default;
};

enum class MinorKind { Plain, FakeI, FakeII };

// X[..|..] (Berezinian of the selected columns) or Xs[..|..] (its Ber*). Indices
// listed in slot order; a fake-I symbol carries one odd column in an even slot,
// a fake-II symbol one even column in an odd slot.
struct MinorSymbol {
  bool starred = false;
  std::vector<ColumnLabel> even_slots;
  std::vector<ColumnLabel> odd_slots;

  MinorKind kind() const;
  // Throws std::invalid_argument describing the first violated rule.
  void validate(const MatrixShape& shape) const;
  std::string to_string() const;  // X[1,^2|1], Xs[1|2,^1]
  std::string to_latex() const;   // X_{1\hat{2}|\hat{1}}, X^*_{...}
  friend bool operator==(const MinorSymbol&, const MinorSymbol&) = default;
  friend auto operator<=>(const MinorSymbol&, const MinorSymbol&) = default;

  static MinorSymbol plain(bool starred, const std::vector<std::size_t>& even, const std::vector<std::size_t>& odd);
};

// Columns of `a` picked by the symbol, laid out as an (r|s) x (r|s) supermatrix.
SuperMatrix minor_matrix(const SuperMatrix& a, const MinorSymbol& m);
Scalar super_minor(const SuperMatrix& a, const MinorSymbol& m);

enum class ModelKind { Generic, Slice, Numeric, Explicit };
const char* model_kind_name(ModelKind k);

// A coordinate matrix on which minors are evaluated, with a memo of computed minors.
class CoordinateModel {
 public:
  static CoordinateModel generic(const MatrixShape& shape);
  // First r|s columns fixed to diag(t, 1, ..., 1), remaining columns generic.
  static CoordinateModel fft_slice(const MatrixShape& shape);
  // Generic matrix at a random numeric point over a finite Grassmann algebra.
  static CoordinateModel numeric(const MatrixShape& shape, std::uint64_t seed);
  static CoordinateModel from_matrix(SuperMatrix a, ModelKind kind = ModelKind::Explicit);

  ModelKind kind() const noexcept { return kind_; }
  const MatrixShape& shape() const noexcept { return shape_; }
  const SuperMatrix& matrix() const noexcept { return matrix_; }
  const ContextPtr& context() const noexcept { return matrix_.context(); }

  const Scalar& minor(const MinorSymbol& m);
  void clear_cache() { cache_.clear(); }

 private:
  CoordinateModel(ModelKind kind, MatrixShape shape, SuperMatrix a);

  ModelKind kind_;
  MatrixShape shape_;
  SuperMatrix matrix_;
  std::map<MinorSymbol, Scalar> cache_;
};

// Random element of SL(r|s) over the Grassmann algebra `ctx`: a product
// (I X; 0 I)(V 0; 0 W)(I 0; Z I) with rational V, W (det V = det W) and odd
// blocks built from the generators first_odd, first_odd + 1, ...
SuperMatrix random_unimodular(const ContextPtr& ctx, std::size_t r, std::size_t s, std::size_t first_odd, Rng& rng);
std::size_t unimodular_odd_count(std::size_t r, std::size_t s);

struct FftDecomposition {
  SuperMatrix a_tilde;  // first r|s columns, first column divided by X[1..r|1..s]
  SuperMatrix b;        // a_tilde^{-1} a
  Scalar ber_a_tilde;
  bool product_matches = false;  // a_tilde * b == a
  bool unimodular = false;       // Ber(a_tilde) == 1
};
FftDecomposition fft_decompose(const SuperMatrix& a, const MatrixShape& shape);

struct FftEntryReport {
  std::string block;    // U, V, W or Z
  std::size_t row = 0;  // 1-based within the row parity
  std::size_t col = 0;  // 1-based within the column parity
  std::string formula;  // closed form as minors
  bool matches = false;
  std::string note;
};
// Compares each entry of b with its closed form in minors of a.
std::vector<FftEntryReport> verify_fft_entries(const SuperMatrix& a, const MatrixShape& shape,
                                               const FftDecomposition& d);

}  // namespace superinv
