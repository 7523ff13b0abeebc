#include "qpb/hopf.hpp"

#include "qpb/error.hpp"

namespace qpb::hopf {

HopfAlgebra::HopfAlgebra(FiniteGroup g) : group_(std::move(g)) {
  if (!validate_group(group_).passed())
    throw PreconditionError("Hopf algebra requires a valid group table");
}

void HopfAlgebra::require_on_group(const Func& alpha) const {
  if (alpha.shape() != std::vector<int>{order()})
    throw StructuralError("expected a function on the structure group");
}

Func HopfAlgebra::unit() const { return Func::constant({order()}, 1); }

Func HopfAlgebra::delta(int a) const { return Func::indicator({order()}, {a}); }

std::vector<Func> HopfAlgebra::basis() const {
  std::vector<Func> out;
  for (int a = 0; a < order(); ++a) out.push_back(delta(a));
  return out;
}

Func HopfAlgebra::coproduct(const Func& alpha) const {
  require_on_group(alpha);
  const int n = order();
  Func out({n, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.at({a, b}) = alpha[group_.mul(a, b)];
  return out;
}

Scalar HopfAlgebra::counit(const Func& alpha) const {
  require_on_group(alpha);
  return alpha[group_.identity()];
}

Func HopfAlgebra::antipode(const Func& alpha) const {
  require_on_group(alpha);
  Func out({order()});
  for (int a = 0; a < order(); ++a) out[a] = alpha[group_.inv(a)];
  return out;
}

Func HopfAlgebra::project_ker_counit(const Func& alpha) const {
  return alpha - counit(alpha) * unit();
}

Func HopfAlgebra::adjoint_coaction(const Func& alpha) const {
  require_on_group(alpha);
  const int n = order();
  Func out({n, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.at({a, b}) = alpha[group_.mul(group_.mul(group_.inv(b), a), b)];
  return out;
}

namespace {

std::string basis_witness(const HopfAlgebra& h, int a) { return "delta(" + h.group().label(a) + ")"; }

}  // namespace

Report check_hopf_axioms(const HopfAlgebra& h) {
  Report r;
  auto cop = [&](const Func& f) { return h.coproduct(f); };
  auto eps = [&](const Func& f) { return Func::constant({}, h.counit(f)); };
  auto S = [&](const Func& f) { return h.antipode(f); };
  auto ad = [&](const Func& f) { return h.adjoint_coaction(f); };

  std::string coassoc, counit, antipode, mult, ad_coassoc, ad_counit, ad_ker, decomposition;
  for (int a = 0; a < h.order(); ++a) {
    const Func alpha = h.delta(a);
    const Func d = h.coproduct(alpha);
    if (coassoc.empty() && apply_to_legs(d, 0, 1, cop) != apply_to_legs(d, 1, 1, cop))
      coassoc = basis_witness(h, a);
    if (counit.empty() &&
        (apply_to_legs(d, 0, 1, eps) != alpha || apply_to_legs(d, 1, 1, eps) != alpha))
      counit = basis_witness(h, a);
    const Func eps_unit = h.counit(alpha) * h.unit();
    if (antipode.empty() && (multiply_legs(apply_to_legs(d, 0, 1, S), 0) != eps_unit ||
                             multiply_legs(apply_to_legs(d, 1, 1, S), 0) != eps_unit))
      antipode = basis_witness(h, a);
    for (int b = 0; b < h.order() && mult.empty(); ++b) {
      const Func beta = h.delta(b);
      if (h.coproduct(pointwise_mul(alpha, beta)) != pointwise_mul(d, h.coproduct(beta)))
        mult = "(" + h.group().label(a) + "," + h.group().label(b) + ")";
    }
    const Func adj = h.adjoint_coaction(alpha);
    if (ad_coassoc.empty() && apply_to_legs(adj, 0, 1, ad) != apply_to_legs(adj, 1, 1, cop))
      ad_coassoc = basis_witness(h, a);
    if (ad_counit.empty() && apply_to_legs(adj, 1, 1, eps) != alpha)
      ad_counit = basis_witness(h, a);
    const Func tilde = h.project_ker_counit(alpha);
    const Func adj_tilde = h.adjoint_coaction(tilde);
    for (int b = 0; b < h.order() && ad_ker.empty(); ++b)
      if (!adj_tilde.at({h.group().identity(), b}).is_zero()) ad_ker = basis_witness(h, a);
    if (decomposition.empty() &&
        (!h.counit(tilde).is_zero() || tilde + h.counit(alpha) * h.unit() != alpha))
      decomposition = basis_witness(h, a);
  }
  r.add("coassociativity", coassoc.empty(), coassoc).with("order", static_cast<long long>(h.order()));
  r.add("counit", counit.empty(), counit);
  r.add("antipode", antipode.empty(), antipode);
  r.add("coproduct_multiplicative", mult.empty(), mult);
  r.add("adjoint_coassociativity", ad_coassoc.empty(), ad_coassoc);
  r.add("adjoint_counit", ad_counit.empty(), ad_counit);
  r.add("adjoint_preserves_ker_counit", ad_ker.empty(), ad_ker);
  r.add("ker_counit_decomposition", decomposition.empty(), decomposition);
  return r;
}

}  // namespace qpb::hopf
