#pragma once

#include <vector>

#include "qpb/func.hpp"
#include "qpb/group.hpp"
#include "qpb/kernels.hpp"

namespace qpb {

inline constexpr int kMaxFormDegree = 3;

/// A linear map A: C(G) -> Ω^n stored by its spectral density
///   A(α)(p_0..p_n) = Σ_c ρ(p_0..p_n; c) α(c).
/// Degree 0 densities are the linear maps H -> P (HPMap); degree 1 houses
/// connection forms, degree 2 curvatures. The density is a Func of shape
/// {npoints × (n+1), order}.
class SpectralMap {
 public:
  SpectralMap() = default;
  SpectralMap(int npoints, int degree, int order, std::size_t max_entries = kDefaultMaxEntries);
  /// Takes ownership of a density table; its shape fixes the degree.
  explicit SpectralMap(Func density);

  int npoints() const { return npoints_; }
  int degree() const { return degree_; }
  int order() const { return order_; }

  Func& density() { return density_; }
  const Func& density() const { return density_; }
  Scalar& at(std::initializer_list<int> idx) { return density_.at(idx); }
  const Scalar& at(std::initializer_list<int> idx) const { return density_.at(idx); }

  /// Evaluates the map on α ∈ C(G); the result is a Func over points^(n+1).
  Func apply(const Func& alpha) const;
  /// The slice ρ(·; c) as a Func over points^(n+1).
  Func slice(int c) const;
  void set_slice(int c, const Func& values);

  std::size_t tuple_count() const { return density_.size() / static_cast<std::size_t>(order_); }

  friend bool operator==(const SpectralMap& a, const SpectralMap& b) {
    return a.density_ == b.density_;
  }
  SpectralMap& operator+=(const SpectralMap& o);
  SpectralMap& operator-=(const SpectralMap& o);
  friend SpectralMap operator+(SpectralMap a, const SpectralMap& b) { return a += b; }
  friend SpectralMap operator-(SpectralMap a, const SpectralMap& b) { return a -= b; }

 private:
  int npoints_ = 0;
  int degree_ = 0;
  int order_ = 0;
  Func density_;
};

using HPMap = SpectralMap;

/// Sweedler convolution with the concatenation product,
///   (A ⋆_Δ C)(p_0..p_{n+m}; c) = Σ_{ab=c} A(p_0..p_n; a) C(p_n..p_{n+m}; b).
/// For n = m = 0 this is the convolution of linear maps H -> P.
SpectralMap star_delta(const FiniteGroup& g, const SpectralMap& a, const SpectralMap& c,
                       kernels::Exec exec = kernels::Exec::parallel,
                       std::size_t max_entries = kDefaultMaxEntries);

/// Slice-wise universal differential, (dA)(α) = d(A(α)).
SpectralMap differential(const SpectralMap& a, kernels::Exec exec = kernels::Exec::parallel,
                         std::size_t max_entries = kDefaultMaxEntries);

/// Shape {npoints, ..., npoints} with `degree + 1` legs.
std::vector<int> tuple_shape(int npoints, int degree);

}  // namespace qpb
