#include <cstdint>
#include <utility>

#include "detail.hpp"

namespace qpb::kernels::parallel {

std::vector<Scalar> differential(int npoints, int degree, int inner, std::span<const Scalar> in) {
  const int len = degree + 2;
  const auto n_out = static_cast<std::int64_t>(power(npoints, len));
  if (in.size() != power(npoints, degree + 1) * inner)
    throw StructuralError("differential: table size does not match degree");
  std::vector<Scalar> out(static_cast<std::size_t>(n_out) * inner);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < n_out; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    for (int j = 0; j < len; ++j) {
      const std::size_t src = detail::drop_position(ut, len, j, npoints);
      for (int c = 0; c < inner; ++c) {
        const Scalar& v = in[src * inner + c];
        if (v.is_zero()) continue;
        if (j % 2 == 0) out[ut * inner + c] += v;
        else out[ut * inner + c] -= v;
      }
    }
  }
  return out;
}

std::vector<Scalar> star(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                         std::span<const Scalar> a, std::span<const Scalar> c) {
  detail::check_star_inputs(npoints, deg_a, deg_c, g, a, c);
  const int order = g.order();
  const auto n_out = static_cast<std::int64_t>(power(npoints, deg_a + deg_c + 1));
  const std::size_t tail = power(npoints, deg_c);
  const std::size_t c_span = tail * npoints;
  std::vector<Scalar> out(static_cast<std::size_t>(n_out) * order);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < n_out; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    const Scalar* ra = a.data() + (ut / tail) * order;
    const Scalar* rc = c.data() + (ut % c_span) * order;
    Scalar* ro = out.data() + ut * order;
    for (int x = 0; x < order; ++x) {
      if (ra[x].is_zero()) continue;
      for (int y = 0; y < order; ++y) ro[g.mul(x, y)].add_product(ra[x], rc[y]);
    }
  }
  return out;
}

// Pivot search and normalization are sequential; elimination of the other
// rows against the pivot row is independent per row.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = m.rows();
  const int cols = m.cols();
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    const Scalar inv = m(r, col).inverse();
    for (int j = col; j < cols; ++j) m(r, j) *= inv;
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (int j = col; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace qpb::kernels::parallel
