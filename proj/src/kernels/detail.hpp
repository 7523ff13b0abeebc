#pragma once

#include <cstddef>
#include <span>

#include "qpb/error.hpp"
#include "qpb/kernels.hpp"

namespace qpb::kernels::detail {

// Flat index of the tuple obtained from `t` (an (n+2)-tuple in base N) by
// deleting position j.
inline std::size_t drop_position(std::size_t t, int len, int j, int npoints) {
  // split t = high * N^(len-j) + digit * N^(len-j-1) + low
  std::size_t low_span = power(npoints, len - j - 1);
  std::size_t low = t % low_span;
  std::size_t high = t / (low_span * npoints);
  return high * low_span + low;
}

inline void check_star_inputs(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                              std::span<const Scalar> a, std::span<const Scalar> c) {
  if (a.size() != power(npoints, deg_a + 1) * g.order() ||
      c.size() != power(npoints, deg_c + 1) * g.order())
    throw StructuralError("star: table sizes do not match degrees and group order");
}

}  // namespace qpb::kernels::detail
