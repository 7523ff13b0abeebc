#pragma once

#include <span>
#include <vector>

#include "qpb/group.hpp"
#include "qpb/linalg.hpp"
#include "qpb/scalar.hpp"

// Data-parallel table kernels. Each kernel exists as a serial reference and
// an OpenMP version; both produce identical results entry by entry.
//
// Tables are laid out as [p_0][p_1]...[p_n][c]: n+1 point indices (each in
// 0..npoints-1) followed by an inner fibre of width `inner` (1 for plain
// forms, |G| for spectral densities).
namespace qpb::kernels {

enum class Exec { serial, parallel };

/// (dF)(p_0..p_{n+1}; c) = Σ_j (-1)^j F(p_0..p̂_j..p_{n+1}; c).
std::vector<Scalar> differential(int npoints, int degree, int inner, std::span<const Scalar> in,
                                 Exec exec = Exec::parallel);

/// Concatenation product convolved over the group:
/// out(p_0..p_{n+m}; c) = Σ_{ab=c} A(p_0..p_n; a) C(p_n..p_{n+m}; b).
/// With the trivial group this is the plain concatenation product.
std::vector<Scalar> star(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                         std::span<const Scalar> a, std::span<const Scalar> c,
                         Exec exec = Exec::parallel);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, Exec exec = Exec::parallel);

namespace serial {
std::vector<Scalar> differential(int npoints, int degree, int inner, std::span<const Scalar> in);
std::vector<Scalar> star(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                         std::span<const Scalar> a, std::span<const Scalar> c);
std::vector<int> rref(Matrix& m);
}  // namespace serial

namespace parallel {
std::vector<Scalar> differential(int npoints, int degree, int inner, std::span<const Scalar> in);
std::vector<Scalar> star(int npoints, int deg_a, int deg_c, const FiniteGroup& g,
                         std::span<const Scalar> a, std::span<const Scalar> c);
std::vector<int> rref(Matrix& m);
}  // namespace parallel

std::size_t power(int base, int exp);

}  // namespace qpb::kernels
