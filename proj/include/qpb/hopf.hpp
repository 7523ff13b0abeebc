#pragma once

#include <vector>

#include "qpb/func.hpp"
#include "qpb/group.hpp"
#include "qpb/report.hpp"

namespace qpb::hopf {

/// The commutative Hopf algebra H = C(G) of functions on a finite group:
/// Δ(α)(a,b) = α(ab), ε(α) = α(e), S(α)(a) = α(a⁻¹).
class HopfAlgebra {
 public:
  explicit HopfAlgebra(FiniteGroup g);

  const FiniteGroup& group() const { return group_; }
  int order() const { return group_.order(); }

  Func unit() const;
  Func delta(int a) const;
  std::vector<Func> basis() const;

  Func coproduct(const Func& alpha) const;
  Scalar counit(const Func& alpha) const;
  Func antipode(const Func& alpha) const;
  /// α̃ = α - ε(α)1_H, the projection onto Ker ε.
  Func project_ker_counit(const Func& alpha) const;
  /// (Ad_R α)(a,b) = α(b⁻¹ab).
  Func adjoint_coaction(const Func& alpha) const;

 private:
  void require_on_group(const Func& alpha) const;

  FiniteGroup group_;
};

/// Coassociativity, counit, antipode, multiplicativity of Δ, the Ad_R
/// coaction laws and the H = Ker ε ⊕ C1_H decomposition, all checked
/// exactly on the indicator basis.
Report check_hopf_axioms(const HopfAlgebra& h);

}  // namespace qpb::hopf
