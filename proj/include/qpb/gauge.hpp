#pragma once

#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/func.hpp"
#include "qpb/group.hpp"
#include "qpb/report.hpp"
#include "qpb/spectral.hpp"

namespace qpb::gauge {

/// τ̂: B -> G. Since C(B) is commutative every table is a gauge map.
struct GaugeMap {
  std::vector<int> tau_hat;

  int base_size() const { return static_cast<int>(tau_hat.size()); }
  friend bool operator==(const GaugeMap&, const GaugeMap&) = default;
};

/// An algebra automorphism of C(B×G) acting by pullback along a point map
/// t on B×G (flat index x·|G| + a): (Ξ F)(x, a) = F(t(x, a)).
class BundleAutomorphism {
 public:
  BundleAutomorphism(int base_size, int order, std::vector<int> target);
  static BundleAutomorphism identity(int base_size, int order);

  int base_size() const { return base_size_; }
  int order() const { return order_; }
  /// t(x, a) as a pair (x', a').
  std::pair<int, int> target(int x, int a) const;
  const std::vector<int>& targets() const { return target_; }

  Func apply(const Func& F) const;
  /// (Ξ₁∘Ξ₂)(F) = Ξ₁(Ξ₂(F)) as maps on C(B×G).
  friend BundleAutomorphism compose(const BundleAutomorphism& first, const BundleAutomorphism& second);
  /// Throws PreconditionError if the point map is not bijective.
  BundleAutomorphism inverse() const;

  friend bool operator==(const BundleAutomorphism&, const BundleAutomorphism&) = default;

 private:
  int base_size_;
  int order_;
  std::vector<int> target_;
};

/// Bijectivity, fiber preservation, intertwining with the product coaction
/// Δ_R×∘Ξ = (Ξ⊗id)∘Δ_R×, and Ξ(ĥ⊗1_H) = ĥ⊗1_H.
Report check_automorphism(const FiniteGroup& g, const BundleAutomorphism& xi);

/// Ξ = Ψ⁻¹∘Ψ′, computed by composing the two trivialization isomorphisms
/// on the basis of C(B×G). Both trivializations must be valid for b.
BundleAutomorphism xi_from_trivializations(const bundle::Bundle& b, const std::vector<int>& phi,
                                           const std::vector<int>& phi_prime);

/// Cross-checks xi_from_trivializations against
/// (Ξ(ĥ⊗α))(x,a) = ĥ(x) α(φ′(p)φ(p)⁻¹ a) for every p in the fiber over x.
Report check_xi_formula(const bundle::Bundle& b, const std::vector<int>& phi,
                        const std::vector<int>& phi_prime);

/// τ(α) = (id⊗ε)(Ξ(1_B⊗α)); throws PreconditionError if Ξ is not a left
/// translation along each fiber.
GaugeMap tau_extract(const FiniteGroup& g, const BundleAutomorphism& xi);

/// (^τΞ(ĥ⊗α))(x, a) = ĥ(x) α(τ̂(x) a).
BundleAutomorphism xi_from_tau(const FiniteGroup& g, const GaugeMap& tau);

/// τ = ȷ⁻¹((Φ′⋆Φ^{[-1]})(α)), read off the convolution of the two
/// trivialization homomorphisms.
GaugeMap tau_from_convolution(const bundle::Bundle& b, const std::vector<int>& phi,
                              const std::vector<int>& phi_prime);

/// ȷ(ĥ)·(Φ′⋆Φ^{[-1]})(α) = (Φ′⋆Φ^{[-1]})(α)·ȷ(ĥ) on basis elements.
Report check_tau_centrality(const bundle::Bundle& b, const std::vector<int>& phi,
                            const std::vector<int>& phi_prime);

GaugeMap gauge_compose(const FiniteGroup& g, const GaugeMap& t1, const GaugeMap& t2);
GaugeMap gauge_inverse(const FiniteGroup& g, const GaugeMap& t);
GaugeMap gauge_neutral(const FiniteGroup& g, int base_size);

/// τ as a linear map H -> C(B), density δ(τ̂(x), a).
SpectralMap tau_density(const FiniteGroup& g, const GaugeMap& t);
/// τ∘S, density δ(τ̂(x)⁻¹, a).
SpectralMap tau_antipode_density(const FiniteGroup& g, const GaugeMap& t);

/// All |G|^{|B|} gauge maps in lexicographic order.
std::vector<GaugeMap> enumerate_gauge_maps(const FiniteGroup& g, int base_size,
                                           std::size_t limit = 10'000);

/// Group laws of the gauge group checked over all gauge maps (pairs for the
/// composition laws): ^{(τ₁⋆τ₂)}Ξ = ^{τ₁}Ξ∘^{τ₂}Ξ, ^{(τ∘S)}Ξ = (^τΞ)⁻¹,
/// the pointwise product agrees with the convolution product, and the
/// round trips between τ and Ξ.
Report check_gauge_group(const FiniteGroup& g, int base_size);

/// φ_τ(p) = τ̂(π(p)) φ(p), the trivialization of τ⋆Φ.
std::vector<int> shifted_trivialization(const bundle::Bundle& b, const GaugeMap& tau);

}  // namespace qpb::gauge
