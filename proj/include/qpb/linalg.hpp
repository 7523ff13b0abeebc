#pragma once

#include <functional>
#include <vector>

#include "qpb/scalar.hpp"

namespace qpb {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  /// Builds the matrix of a linear map from its images of the standard
  /// basis: column j = image(j), which must have `rows` entries.
  static Matrix from_columns(int rows, int cols, const std::function<Vector(int)>& image);
  static Matrix from_rows(const std::vector<Vector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  Scalar* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const Scalar* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vector data_;
};

/// Linearly independent vectors in reduced row echelon form, pivots in
/// ascending column order. The representation of a subspace is canonical.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(int ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Echelon-reduces an arbitrary spanning family.
  static SubspaceBasis span_of(int ambient_dim, const std::vector<Vector>& generators);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Vector>& vectors() const { return vectors_; }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vectors_ == b.vectors_;
  }

 private:
  int ambient_dim_ = 0;
  std::vector<Vector> vectors_;
  std::vector<int> pivots_;
};

struct RankKernel {
  int rank = 0;
  SubspaceBasis kernel;
};

/// Exact rank and canonical kernel basis over the Gaussian rationals.
RankKernel rank_and_kernel(const Matrix& m);
int rank_of(const Matrix& m);

}  // namespace qpb
