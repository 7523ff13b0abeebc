#include "qpb/linalg.hpp"

#include "qpb/error.hpp"
#include "qpb/kernels.hpp"

namespace qpb {

Matrix Matrix::from_columns(int rows, int cols, const std::function<Vector(int)>& image) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    Vector v = image(j);
    if (static_cast<int>(v.size()) != rows)
      throw StructuralError("from_columns: image of basis vector has wrong length");
    for (int i = 0; i < rows; ++i)
      if (!v[i].is_zero()) m(i, j) = std::move(v[i]);
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw StructuralError("from_rows: row has wrong length");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw StructuralError("matrix-vector shape mismatch");
  Vector y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i].add_product((*this)(i, j), x[j]);
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j).add_product(a, o(k, j));
    }
  return out;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

SubspaceBasis SubspaceBasis::span_of(int ambient_dim, const std::vector<Vector>& generators) {
  SubspaceBasis b(ambient_dim);
  if (generators.empty()) return b;
  Matrix m = Matrix::from_rows(generators, ambient_dim);
  b.pivots_ = kernels::rref(m);
  for (int i = 0; i < static_cast<int>(b.pivots_.size()); ++i)
    b.vectors_.emplace_back(m.row(i), m.row(i) + ambient_dim);
  return b;
}

bool SubspaceBasis::contains(const Vector& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_)
    throw StructuralError("subspace membership: vector has wrong length");
  Vector w = v;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const Scalar coeff = w[pivots_[i]];
    if (coeff.is_zero()) continue;
    for (int j = 0; j < ambient_dim_; ++j)
      if (!vectors_[i][j].is_zero()) w[j] -= coeff * vectors_[i][j];
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  for (const auto& v : other.vectors_)
    if (!contains(v)) return false;
  return true;
}

RankKernel rank_and_kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = kernels::rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<int>(i), f);
    kernel.push_back(std::move(v));
  }
  return RankKernel{static_cast<int>(pivots.size()), SubspaceBasis::span_of(m.cols(), kernel)};
}

int rank_of(const Matrix& m) {
  Matrix r = m;
  return static_cast<int>(kernels::rref(r).size());
}

}  // namespace qpb
