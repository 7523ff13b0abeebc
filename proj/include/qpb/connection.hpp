#pragma once

#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/calculus.hpp"
#include "qpb/gauge.hpp"
#include "qpb/linalg.hpp"
#include "qpb/report.hpp"
#include "qpb/spectral.hpp"

namespace qpb::connection {

/// Θ(α)(p,p′) = Σ_c θ(p,p′;c) α(c): a degree-1 spectral map over P.
using ConnectionForm = SpectralMap;
/// Γ(α)(p,p′) = Σ_a γ(p,p′;a) α(a) over P.
using GammaMap = SpectralMap;
/// γ̂(x,x′;a) over the base.
using GammaHat = SpectralMap;
/// Degree-n form-valued map; curvatures are degree 2.
using FormValuedMap = SpectralMap;

/// ĝ: B×B -> G, row-major.
struct TransitionMap {
  int base_size = 0;
  std::vector<int> table;
  int operator()(int x, int y) const { return table[static_cast<std::size_t>(x) * base_size + y]; }
  friend bool operator==(const TransitionMap&, const TransitionMap&) = default;
};

/// σ: P⊗Ker ε -> Ω¹(P) on indicator bases. Columns are δ_p⊗δ_c with c ≠ e,
/// p-major and c ascending; rows are the pairs (q,q′) of C(P×P).
struct Splitting {
  Matrix matrix;
};

/// Group elements other than the identity, ascending. Indexes the Ker ε
/// basis used by Splitting.
std::vector<int> ker_counit_elements(const FiniteGroup& g);

// Density invariants ---------------------------------------------------------

/// θ(p,p;c) = 0, Σ_c θ = 0, θ(p,p◁a;c) = δ(a,c) − δ(e,c) and
/// θ(p◁b,p′◁b;b⁻¹cb) = θ(p,p′;c).
Report check_connection_form(const bundle::Bundle& b, const ConnectionForm& theta);
/// Σ_c γ = 0, γ(p,p◁a;c) = 0, γ(p◁a,p′◁a;c) = γ(p,p′;c).
Report check_gamma(const bundle::Bundle& b, const GammaMap& gamma);
/// γ̂(x,x;a) = 0 and Σ_a γ̂(x,x′;a) = 0.
Report check_gamma_hat(const FiniteGroup& g, const GammaHat& gamma_hat);
/// ĝ(x,x) = e and every entry a group element.
Report check_transition(const FiniteGroup& g, const TransitionMap& g_hat);

// Splittings -----------------------------------------------------------------

/// σ(A) for A over P×G with A(·,e) = 0.
Func apply_splitting(const bundle::Bundle& b, const Splitting& sigma, const Func& a);
/// Δ_R1∘σ = id, σ(f·A) = f·σ(A), and (σ⊗id)∘Δ̃_R = Δ′_R∘σ on the basis.
/// Throws StructuralError on a matrix of the wrong shape.
Report validate_splitting(const bundle::Bundle& b, const Splitting& sigma);
/// Π_ver(F₁) = σ(Δ_R1 F₁).
calculus::Form vertical_projection(const bundle::Bundle& b, const Splitting& sigma,
                                   const calculus::Form& f1);
/// Π_ver is idempotent, kills Γ¹_hor, and id − Π_ver maps Ω¹(P) onto Γ¹_hor.
Report check_vertical_projection(const bundle::Bundle& b, const Splitting& sigma);
/// (Δ̃_R A)(p,a,b) = A(p◁b, b⁻¹ab).
Func tilde_coaction(const bundle::Bundle& b, const Func& a);
/// Coassociativity and counit law of Δ̃_R on the basis of P⊗Ker ε.
Report check_tilde_coaction(const bundle::Bundle& b);
/// (Δ′_R F₁)(p,p′,a) = F₁(p◁a, p′◁a).
Func prime_coaction(const bundle::Bundle& b, const calculus::Form& f1);

/// θ read off σ: Θ(δ_c) = σ(1_P⊗δ_c) for c ≠ e, Θ(δ_e) fixed by Θ(1_H) = 0.
ConnectionForm theta_from_splitting(const bundle::Bundle& b, const Splitting& sigma);
/// σ(δ_p⊗δ_c) = δ_p·Θ(δ_c). Throws PreconditionError naming the first
/// violated density invariant.
Splitting splitting_from_theta(const bundle::Bundle& b, const ConnectionForm& theta);

// Constructions --------------------------------------------------------------

/// Θ^Φ = Φ^{[-1]}⋆dΦ.
ConnectionForm trivial_connection(const bundle::Bundle& b);
/// θ^Φ(p,p′;c) = δ(φ(p)⁻¹φ(p′),c) − δ(e,c), tabulated directly.
ConnectionForm trivial_connection_closed_form(const bundle::Bundle& b);
/// Θ = Φ^{[-1]}⋆dΦ + Φ^{[-1]}⋆Γ⋆Φ. Throws PreconditionError if Γ is invalid.
ConnectionForm connection_from_gamma(const bundle::Bundle& b, const GammaMap& gamma);
/// Γ = Φ⋆(Θ − Θ^Φ)⋆Φ^{[-1]}, the inverse of connection_from_gamma.
GammaMap gamma_from_connection(const bundle::Bundle& b, const ConnectionForm& theta);
/// γ(p,p′;a) = γ̂(π(p),π(p′);a).
GammaMap strong_from_gamma_hat(const bundle::Bundle& b, const GammaHat& gamma_hat);
/// Θ(α)(p,p′) = Σ_a [δ(e,a) + γ̂(x,x′;a)] α(φ(p)⁻¹aφ(p′)) − α(e).
ConnectionForm strong_connection_closed_form(const bundle::Bundle& b, const GammaHat& gamma_hat);
/// θ(p,p′;c) = δ(φ(p)⁻¹ĝ(π(p),π(p′))φ(p′), c) − δ(e,c).
ConnectionForm classical_connection(const bundle::Bundle& b, const TransitionMap& g_hat);
/// γ̂(x,x′;a) = δ(ĝ(x,x′),a) − δ(e,a).
GammaHat gamma_hat_from_transition(const FiniteGroup& g, const TransitionMap& g_hat);

/// Transition maps with ĝ(x,x) = e, lexicographic in the off-diagonal
/// entries. Throws SizeLimitError beyond `limit` maps.
std::vector<TransitionMap> enumerate_transition_maps(const FiniteGroup& g, int base_size,
                                                     std::size_t limit = 10'000);
bool is_cocycle(const FiniteGroup& g, const TransitionMap& g_hat);

// Gauge transformations ------------------------------------------------------

/// ^τγ̂(x,x′;a) = δ(e;τ̂(x)aτ̂(x′)⁻¹) − δ(e;a) + γ̂(x,x′;τ̂(x)aτ̂(x′)⁻¹).
GammaHat gauge_transform_gamma_hat(const FiniteGroup& g, const GammaHat& gamma_hat,
                                   const gauge::GaugeMap& tau);
/// τ^{[-1]}⋆dτ + τ^{[-1]}⋆Γ̂⋆τ over the base.
GammaHat gauge_transform_gamma_hat_abstract(const FiniteGroup& g, const GammaHat& gamma_hat,
                                            const gauge::GaugeMap& tau);
/// The same abstract formula over P with τ pulled back along π.
GammaMap gauge_transform_gamma(const bundle::Bundle& b, const GammaMap& gamma,
                               const gauge::GaugeMap& tau);
/// ^τĝ(x,x′) = τ̂(x)⁻¹ĝ(x,x′)τ̂(x′).
TransitionMap gauge_transform_transition(const FiniteGroup& g, const TransitionMap& g_hat,
                                         const gauge::GaugeMap& tau);

// Curvature ------------------------------------------------------------------

/// F = dΘ + Θ⋆_ΔΘ.
FormValuedMap curvature(const bundle::Bundle& b, const ConnectionForm& theta);
/// F = Φ^{[-1]}⋆(dΓ + Γ⋆_ΔΓ)⋆Φ.
FormValuedMap curvature_via_gamma(const bundle::Bundle& b, const GammaMap& gamma);
/// f(p,p′,p″;c) = δ(a⁻¹ĝ(x,x′)ĝ(x′,x″)a″,c) − δ(a⁻¹ĝ(x,x″)a″,c).
FormValuedMap curvature_classical(const bundle::Bundle& b, const TransitionMap& g_hat);

// Verification suites ---------------------------------------------------------

/// Density invariants, the splitting built from θ, the Π_ver properties, the
/// σ ↔ Θ round trip and the Γ decomposition of θ.
Report check_connection(const bundle::Bundle& b, const ConnectionForm& theta);
/// Both expressions of the curvature, F(1_H) = 0, form-valuedness, and for
/// classical input the closed form. Data: nonzero flag and entry count.
Report check_curvature(const bundle::Bundle& b, const ConnectionForm& theta,
                       const TransitionMap* g_hat = nullptr);
/// Density versus abstract transform, invariants of the result, the inverse
/// round trip, gauge compatibility of the curvature with the τ-shifted
/// trivialization, and for classical input agreement with ^τĝ.
Report check_gauge_transform(const bundle::Bundle& b, const ConnectionForm& theta,
                             const gauge::GaugeMap& tau, const TransitionMap* g_hat = nullptr);

}  // namespace qpb::connection
