#include <utility>

#include "detail.hpp"

namespace qpb::kernels {

std::size_t power(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

namespace serial {

std::vector<Scalar> differential(int npoints, int degree, int inner, std::span<const Scalar> in) {
  const int len = degree + 2;
  const std::size_t n_out = power(npoints, len);
  if (in.size() != power(npoints, degree + 1) * inner)
    throw StructuralError("differential: table size does not match degree");
  std::vector<Scalar> out(n_out * inner);
  for (std::size_t t = 0; t < n_out; ++t)
    for (int j = 0; j < len; ++j) {
      const std::size_t src = detail::drop_position(t, len, j, npoints);
      for (int c = 0; c < inner; ++c) {
        const Scalar& v = in[src * inner + c];
        if (v.is_zero()) continue;
        if (j % 2 == 0) out[t * inner + c] += v;
        else out[t * inner + c] -= v;
      }
    }
  return out;
}

std::vector<Scalar> star(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                         std::span<const Scalar> a, std::span<const Scalar> c) {
  detail::check_star_inputs(npoints, deg_a, deg_c, g, a, c);
  const int order = g.order();
  const std::size_t n_out = power(npoints, deg_a + deg_c + 1);
  const std::size_t tail = power(npoints, deg_c);
  const std::size_t c_span = tail * npoints;
  std::vector<Scalar> out(n_out * order);
  for (std::size_t t = 0; t < n_out; ++t) {
    const Scalar* ra = a.data() + (t / tail) * order;
    const Scalar* rc = c.data() + (t % c_span) * order;
    Scalar* ro = out.data() + t * order;
    for (int x = 0; x < order; ++x) {
      if (ra[x].is_zero()) continue;
      for (int y = 0; y < order; ++y) ro[g.mul(x, y)].add_product(ra[x], rc[y]);
    }
  }
  return out;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    const Scalar inv = m(r, col).inverse();
    for (int j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace serial

std::vector<Scalar> differential(int npoints, int degree, int inner, std::span<const Scalar> in,
                                 Exec exec) {
  return exec == Exec::serial ? serial::differential(npoints, degree, inner, in)
                              : parallel::differential(npoints, degree, inner, in);
}

std::vector<Scalar> star(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                         std::span<const Scalar> a, std::span<const Scalar> c, Exec exec) {
  return exec == Exec::serial ? serial::star(npoints, deg_a, deg_c, g, a, c)
                              : parallel::star(npoints, deg_a, deg_c, g, a, c);
}

std::vector<int> rref(Matrix& m, Exec exec) {
  return exec == Exec::serial ? serial::rref(m) : parallel::rref(m);
}

}  // namespace qpb::kernels
