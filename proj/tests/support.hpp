#pragma once

#include <random>

#include "qpb/calculus.hpp"
#include "qpb/connection.hpp"
#include "qpb/scalar.hpp"

namespace qpb::testing {

/// Small Gaussian rationals with numerators in [-4,4] and denominators 1..5.
inline Scalar random_scalar(std::mt19937& rng, bool complex = true) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 5), coin(0, 2);
  Scalar s = Scalar::rational(num(rng), den(rng));
  if (complex && coin(rng) == 0) s += Scalar::rational(num(rng), den(rng)) * Scalar::parse("i");
  return s;
}

inline Func random_func(std::mt19937& rng, std::vector<int> shape) {
  Func f(std::move(shape));
  for (auto& v : f.values()) v = random_scalar(rng);
  return f;
}

/// A random n-form: random values off the adjacent diagonals.
inline calculus::Form random_form(std::mt19937& rng, int npoints, int degree) {
  calculus::Form f(npoints, degree);
  std::vector<int> idx(degree + 1);
  for (std::size_t t = 0; t < f.values().size(); ++t) {
    f.values().unflatten(t, idx);
    bool degenerate = false;
    for (int j = 0; j < degree; ++j) degenerate = degenerate || idx[j] == idx[j + 1];
    if (!degenerate) f.values()[t] = random_scalar(rng);
  }
  return f;
}

/// A random valid γ̂: zero on the diagonal, each (x,x′) row summing to zero.
inline SpectralMap random_gamma_hat(std::mt19937& rng, int base_size, int order) {
  SpectralMap out(base_size, 1, order);
  for (int x = 0; x < base_size; ++x)
    for (int y = 0; y < base_size; ++y) {
      if (x == y) continue;
      Scalar sum;
      for (int a = 1; a < order; ++a) {
        out.at({x, y, a}) = random_scalar(rng);
        sum += out.at({x, y, a});
      }
      out.at({x, y, 0}) = -sum;
    }
  return out;
}

inline SpectralMap random_spectral(std::mt19937& rng, int npoints, int degree, int order) {
  SpectralMap out(npoints, degree, order);
  for (auto& v : out.density().values()) v = random_scalar(rng);
  return out;
}

}  // namespace qpb::testing
