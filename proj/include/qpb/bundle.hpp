#pragma once

#include <optional>
#include <vector>

#include "qpb/func.hpp"
#include "qpb/group.hpp"
#include "qpb/hopf.hpp"
#include "qpb/linalg.hpp"
#include "qpb/report.hpp"
#include "qpb/spectral.hpp"

namespace qpb::bundle {

/// Orbit space of the action. Orbits are ordered by their minimal point,
/// which is also the representative s₀(x).
struct BaseSpace {
  std::vector<std::vector<int>> orbits;
  std::vector<int> projection;      // π: P -> B
  std::vector<int> representative;  // s₀: B -> P

  int size() const { return static_cast<int>(orbits.size()); }
};

/// A finite group acting on the right of a finite total space, with an
/// optional trivialization φ: P -> G. Only table shapes are checked here;
/// the axioms are reported by the validation operations.
class Bundle {
 public:
  Bundle(FiniteGroup group, RightAction action, std::optional<std::vector<int>> phi = std::nullopt,
         std::size_t max_entries = kDefaultMaxEntries);

  const FiniteGroup& group() const { return group_; }
  const RightAction& action() const { return action_; }
  int total_size() const { return action_.size(); }
  int order() const { return group_.order(); }
  int act(int p, int a) const { return action_.act(p, a); }
  const BaseSpace& base() const { return base_; }
  int base_size() const { return base_.size(); }
  int project(int p) const { return base_.projection[p]; }

  hopf::HopfAlgebra hopf() const { return hopf::HopfAlgebra(group_); }

  bool has_trivialization() const { return phi_.has_value(); }
  /// Throws ConfigurationError when no trivialization is present.
  const std::vector<int>& trivialization() const;
  Bundle with_trivialization(std::vector<int> phi) const;

  std::size_t max_entries() const { return max_entries_; }
  void set_max_entries(std::size_t cap) { max_entries_ = cap; }

  /// Direct freeness: p◁a = p only for a = e.
  bool is_free() const;

 private:
  FiniteGroup group_;
  RightAction action_;
  std::optional<std::vector<int>> phi_;
  std::size_t max_entries_;
  BaseSpace base_;
};

// Comodule algebra ---------------------------------------------------------

/// (Δ_R f)(p, a) = f(p◁a).
Func coaction(const Bundle& b, const Func& f);

/// Coassociativity, counit law, multiplicativity and unit law of Δ_R on the
/// indicator basis of C(P).
Report check_comodule_algebra(const Bundle& b);

// Freeness -----------------------------------------------------------------

/// (Δ_R1 F)(p, a) = F(p, p◁a) for F on P×P.
Func canonical_map(const Bundle& b, const Func& F);
/// Matrix of Δ_R1: C(P×P) -> C(P×G), N|G| rows and N² columns.
Matrix canonical_map_matrix(const Bundle& b);
/// Matrix of Δ_R1 restricted to Ω¹(P), mapping into P⊗Ker ε. Columns are the
/// off-diagonal pairs (p,q) in lexicographic order, rows the pairs (p,a),
/// a ≠ e.
Matrix restricted_canonical_map_matrix(const Bundle& b);

/// Direct fixed-point check, rank of Δ_R1 onto P⊗H and rank of its
/// restriction onto P⊗Ker ε.
Report check_freeness(const Bundle& b);

// Invariants and base ------------------------------------------------------

/// P^H computed as the kernel of f ↦ Δ_R f - f⊗1_H. In canonical echelon
/// form this is the list of orbit indicators ordered by representative.
SubspaceBasis invariants(const Bundle& b);

/// (ȷ ĥ)(p) = ĥ(π(p)).
Func inject_base(const Bundle& b, const Func& h);

struct BaseAndInjection {
  BaseSpace base;
  Report report;  // injectivity, multiplicativity, image = P^H
};
BaseAndInjection base_and_injection(const Bundle& b);

/// Product bundle B×G with (x,a)◁b = (x,ab); points indexed x·|G| + a and
/// the canonical trivialization φ(x,a) = a.
Bundle make_product(int base_size, const FiniteGroup& g);

// Trivializations ----------------------------------------------------------

/// Equivariance φ(p◁a) = φ(p)a and invariance of the section
/// s(x) = p◁φ(p)⁻¹ along each fiber. Data carries the section table.
Report validate_trivialization(const Bundle& b);

/// s(x) = p◁φ(p)⁻¹ evaluated at the orbit representative.
std::vector<int> section(const Bundle& b);

/// φ(p) = the unique a with s₀(π(p))◁a = p. Requires a free action.
std::vector<int> synthesize_trivialization(const Bundle& b);

/// (Ψ F)(p) = F(π(p), φ(p)) for F on B×G; Ψ(ĥ⊗α) is the simple-tensor case.
Func psi_apply(const Bundle& b, const Func& F);
/// (Ψ⁻¹ f)(x, a) = f(s(x)◁a).
Func psi_inverse(const Bundle& b, const Func& f);
/// Coaction of the product bundle: (Δ_R× F)(x, a; c) = F(x, ac).
Func product_coaction(const FiniteGroup& g, const Func& F);

/// Ψ is an algebra isomorphism intertwining the coactions, with
/// Ψ(ĥ⊗1_H) = ȷ(ĥ) and Ψ∘Ψ⁻¹ = id = Ψ⁻¹∘Ψ.
Report check_psi_isomorphism(const Bundle& b);

// Convolution algebra of linear maps H -> P ---------------------------------

/// (u⋆v)(p; c) = Σ_{ab=c} u(p;a) v(p;b).
HPMap star(const Bundle& b, const HPMap& u, const HPMap& v);
/// 1_⋆ with density δ(e, a).
HPMap convolution_unit(const Bundle& b);
/// Φ with density δ(φ(p), a).
HPMap phi_from_trivialization(const Bundle& b);
/// Delta density δ(w(p), a) → δ(w(p)⁻¹, a). Throws PreconditionError for
/// densities that are not of delta form.
HPMap conv_inverse_of_hom(const Bundle& b, const HPMap& h);
/// The map w with h(p; a) = δ(w(p), a), if h has that form.
std::optional<std::vector<int>> delta_support(const HPMap& h);

/// Φ⋆Φ^{[-1]} = 1_⋆ = Φ^{[-1]}⋆Φ, Φ is an algebra homomorphism, and the
/// coaction identities Δ_R Φ(α)(p;a) = α(φ(p)a) and
/// Δ_R Φ^{[-1]}(α)(p;a) = α(a⁻¹φ(p)⁻¹) on the basis.
Report check_convolution_identities(const Bundle& b);

}  // namespace qpb::bundle
