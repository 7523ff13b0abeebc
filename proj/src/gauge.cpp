#include "qpb/gauge.hpp"

#include <string>

#include "qpb/error.hpp"
#include "qpb/kernels.hpp"

namespace qpb::gauge {

using bundle::Bundle;

BundleAutomorphism::BundleAutomorphism(int base_size, int order, std::vector<int> target)
    : base_size_(base_size), order_(order), target_(std::move(target)) {
  if (static_cast<int>(target_.size()) != base_size * order)
    throw StructuralError("automorphism table has the wrong size");
  for (int t : target_)
    if (t < 0 || t >= base_size * order) throw StructuralError("automorphism target out of range");
}

BundleAutomorphism BundleAutomorphism::identity(int base_size, int order) {
  std::vector<int> t(static_cast<std::size_t>(base_size) * order);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
  return BundleAutomorphism(base_size, order, std::move(t));
}

std::pair<int, int> BundleAutomorphism::target(int x, int a) const {
  int t = target_[static_cast<std::size_t>(x) * order_ + a];
  return {t / order_, t % order_};
}

Func BundleAutomorphism::apply(const Func& F) const {
  if (F.shape() != std::vector<int>{base_size_, order_})
    throw StructuralError("automorphism applied to a function not on B×G");
  Func out(F.shape());
  for (std::size_t i = 0; i < target_.size(); ++i) out[i] = F[target_[i]];
  return out;
}

BundleAutomorphism compose(const BundleAutomorphism& first, const BundleAutomorphism& second) {
  if (first.base_size_ != second.base_size_ || first.order_ != second.order_)
    throw StructuralError("composing automorphisms of different bundles");
  // first(second(F))(i) = second(F)(t1[i]) = F(t2[t1[i]])
  std::vector<int> t(first.target_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = second.target_[first.target_[i]];
  return BundleAutomorphism(first.base_size_, first.order_, std::move(t));
}

BundleAutomorphism BundleAutomorphism::inverse() const {
  std::vector<int> inv(target_.size(), -1);
  for (std::size_t i = 0; i < target_.size(); ++i) {
    if (inv[target_[i]] >= 0) throw PreconditionError("automorphism point map is not bijective");
    inv[target_[i]] = static_cast<int>(i);
  }
  return BundleAutomorphism(base_size_, order_, std::move(inv));
}

Report check_automorphism(const FiniteGroup& g, const BundleAutomorphism& xi) {
  const int nb = xi.base_size();
  const int order = xi.order();
  Report r;
  std::vector<int> hits(xi.targets().size(), 0);
  for (int t : xi.targets()) ++hits[t];
  bool bijective = true;
  for (int h : hits) bijective = bijective && h == 1;
  r.add("bijective", bijective, "point map is not a permutation");

  std::string fiber, intertwine, base;
  for (int x = 0; x < nb && fiber.empty(); ++x)
    for (int a = 0; a < order; ++a)
      if (xi.target(x, a).first != x) {
        fiber = "(" + std::to_string(x) + "," + g.label(a) + ")";
        break;
      }
  r.add("fiber_preserving", fiber.empty(), fiber);

  auto apply = [&](const Func& F) { return xi.apply(F); };
  for (int i = 0; i < nb * order && intertwine.empty(); ++i) {
    const Func e = Func::indicator({nb, order}, {i / order, i % order});
    if (bundle::product_coaction(g, xi.apply(e)) !=
        apply_to_legs(bundle::product_coaction(g, e), 0, 2, apply))
      intertwine = "basis " + std::to_string(i);
  }
  r.add("intertwines_coaction", intertwine.empty(), intertwine);

  const Func one = Func::constant({order}, 1);
  for (int x = 0; x < nb && base.empty(); ++x) {
    const Func h = tensor_identify(Func::indicator({nb}, {x}), one);
    if (xi.apply(h) != h) base = "x=" + std::to_string(x);
  }
  r.add("preserves_base", base.empty(), base);
  return r;
}

namespace {

void require_valid_trivialization(const Bundle& b, const std::vector<int>& phi, const char* which) {
  Bundle t = b.with_trivialization(phi);
  if (!bundle::validate_trivialization(t).passed())
    throw PreconditionError(std::string(which) + " trivialization is not valid for this bundle");
}

}  // namespace

BundleAutomorphism xi_from_trivializations(const Bundle& b, const std::vector<int>& phi,
                                           const std::vector<int>& phi_prime) {
  require_valid_trivialization(b, phi, "first");
  require_valid_trivialization(b, phi_prime, "second");
  const Bundle with_phi = b.with_trivialization(phi);
  const Bundle with_prime = b.with_trivialization(phi_prime);
  const int nb = b.base_size();
  const int order = b.order();
  const int dim = nb * order;
  // Ξ(e_j)(i) = [t(i) = j]
  std::vector<int> target(dim, -1);
  for (int j = 0; j < dim; ++j) {
    const Func e = Func::indicator({nb, order}, {j / order, j % order});
    const Func image = bundle::psi_inverse(with_phi, bundle::psi_apply(with_prime, e));
    for (int i = 0; i < dim; ++i) {
      if (image[i].is_zero()) continue;
      if (image[i] != Scalar(1) || target[i] >= 0)
        throw PreconditionError("Psi^-1 o Psi' is not induced by a point map");
      target[i] = j;
    }
  }
  for (int t : target)
    if (t < 0) throw PreconditionError("Psi^-1 o Psi' is not induced by a point map");
  return BundleAutomorphism(nb, order, std::move(target));
}

Report check_xi_formula(const Bundle& b, const std::vector<int>& phi,
                        const std::vector<int>& phi_prime) {
  const BundleAutomorphism xi = xi_from_trivializations(b, phi, phi_prime);
  const auto& g = b.group();
  std::string witness;
  for (int x = 0; x < b.base_size() && witness.empty(); ++x)
    for (int p : b.base().orbits[x]) {
      const int shift = g.mul(phi_prime[p], g.inv(phi[p]));
      for (int a = 0; a < b.order() && witness.empty(); ++a)
        if (xi.target(x, a) != std::pair<int, int>{x, g.mul(shift, a)})
          witness = "(x=" + std::to_string(x) + ", p=" + std::to_string(p) + ", a=" + g.label(a) + ")";
      if (!witness.empty()) break;
    }
  Report r;
  r.add("xi_matches_formula", witness.empty(), witness);
  r.append(check_automorphism(g, xi));
  return r;
}

GaugeMap tau_extract(const FiniteGroup& g, const BundleAutomorphism& xi) {
  const int nb = xi.base_size();
  const int order = xi.order();
  const Func one_b = Func::constant({nb}, 1);
  GaugeMap tau{std::vector<int>(nb, -1)};
  for (int c = 0; c < order; ++c) {
    const Func image = xi.apply(tensor_identify(one_b, Func::indicator({order}, {c})));
    for (int x = 0; x < nb; ++x) {
      const Scalar& v = image.at({x, g.identity()});
      if (v.is_zero()) continue;
      if (v != Scalar(1) || tau.tau_hat[x] >= 0)
        throw PreconditionError("tau is not an algebra homomorphism");
      tau.tau_hat[x] = c;
    }
  }
  for (int x = 0; x < nb; ++x) {
    if (tau.tau_hat[x] < 0) throw PreconditionError("tau is not an algebra homomorphism");
    for (int a = 0; a < order; ++a)
      if (xi.target(x, a) != std::pair<int, int>{x, g.mul(tau.tau_hat[x], a)})
        throw PreconditionError("fiber-dependent shift over base point " + std::to_string(x) +
                                ": not a bundle automorphism");
  }
  return tau;
}

BundleAutomorphism xi_from_tau(const FiniteGroup& g, const GaugeMap& tau) {
  const int nb = tau.base_size();
  const int order = g.order();
  std::vector<int> target(static_cast<std::size_t>(nb) * order);
  for (int x = 0; x < nb; ++x) {
    if (tau.tau_hat[x] < 0 || tau.tau_hat[x] >= order)
      throw StructuralError("gauge map entry out of range");
    for (int a = 0; a < order; ++a) target[x * order + a] = x * order + g.mul(tau.tau_hat[x], a);
  }
  return BundleAutomorphism(nb, order, std::move(target));
}

GaugeMap tau_from_convolution(const Bundle& b, const std::vector<int>& phi,
                              const std::vector<int>& phi_prime) {
  const Bundle with_phi = b.with_trivialization(phi);
  const Bundle with_prime = b.with_trivialization(phi_prime);
  const HPMap inv = bundle::conv_inverse_of_hom(with_phi, bundle::phi_from_trivialization(with_phi));
  const HPMap prod = bundle::star(b, bundle::phi_from_trivialization(with_prime), inv);
  auto w = bundle::delta_support(prod);
  if (!w) throw PreconditionError("Phi' * Phi^[-1] is not an algebra homomorphism");
  GaugeMap tau{std::vector<int>(b.base_size(), -1)};
  for (int p = 0; p < b.total_size(); ++p) {
    int& slot = tau.tau_hat[b.project(p)];
    if (slot >= 0 && slot != (*w)[p])
      throw PreconditionError("Phi' * Phi^[-1] is not constant along the fiber of " + std::to_string(p));
    slot = (*w)[p];
  }
  return tau;
}

Report check_tau_centrality(const Bundle& b, const std::vector<int>& phi,
                            const std::vector<int>& phi_prime) {
  const Bundle with_phi = b.with_trivialization(phi);
  const Bundle with_prime = b.with_trivialization(phi_prime);
  const HPMap inv = bundle::conv_inverse_of_hom(with_phi, bundle::phi_from_trivialization(with_phi));
  const HPMap prod = bundle::star(b, bundle::phi_from_trivialization(with_prime), inv);
  const auto h = b.hopf();
  std::string witness;
  for (int x = 0; x < b.base_size() && witness.empty(); ++x) {
    const Func jh = bundle::inject_base(b, Func::indicator({b.base_size()}, {x}));
    for (int c = 0; c < b.order(); ++c) {
      const Func t = prod.apply(h.delta(c));
      if (pointwise_mul(jh, t) != pointwise_mul(t, jh)) {
        witness = "(x=" + std::to_string(x) + ", c=" + b.group().label(c) + ")";
        break;
      }
    }
  }
  Report r;
  r.add("tau_central", witness.empty(), witness);
  bool in_base = true;
  try {
    tau_from_convolution(b, phi, phi_prime);
  } catch (const PreconditionError&) {
    in_base = false;
  }
  r.add("tau_takes_base_values", in_base, "Phi' * Phi^[-1] does not descend to the base");
  return r;
}

GaugeMap gauge_compose(const FiniteGroup& g, const GaugeMap& t1, const GaugeMap& t2) {
  if (t1.base_size() != t2.base_size()) throw StructuralError("gauge maps over different bases");
  GaugeMap out{std::vector<int>(t1.base_size())};
  for (int x = 0; x < t1.base_size(); ++x) out.tau_hat[x] = g.mul(t1.tau_hat[x], t2.tau_hat[x]);
  return out;
}

GaugeMap gauge_inverse(const FiniteGroup& g, const GaugeMap& t) {
  GaugeMap out{std::vector<int>(t.base_size())};
  for (int x = 0; x < t.base_size(); ++x) out.tau_hat[x] = g.inv(t.tau_hat[x]);
  return out;
}

GaugeMap gauge_neutral(const FiniteGroup& g, int base_size) {
  return GaugeMap{std::vector<int>(base_size, g.identity())};
}

SpectralMap tau_density(const FiniteGroup& g, const GaugeMap& t) {
  SpectralMap out(t.base_size(), 0, g.order());
  for (int x = 0; x < t.base_size(); ++x) out.at({x, t.tau_hat[x]}) = 1;
  return out;
}

SpectralMap tau_antipode_density(const FiniteGroup& g, const GaugeMap& t) {
  // (τ∘S)(α)(x) = α(τ̂(x)⁻¹)
  SpectralMap out(t.base_size(), 0, g.order());
  for (int x = 0; x < t.base_size(); ++x) out.at({x, g.inv(t.tau_hat[x])}) = 1;
  return out;
}

std::vector<GaugeMap> enumerate_gauge_maps(const FiniteGroup& g, int base_size, std::size_t limit) {
  const std::size_t count = kernels::power(g.order(), base_size);
  if (count > limit)
    throw SizeLimitError(std::to_string(count) + " gauge maps exceed the enumeration limit");
  std::vector<GaugeMap> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GaugeMap t{std::vector<int>(base_size)};
    std::size_t rest = k;
    for (int x = base_size; x-- > 0;) {
      t.tau_hat[x] = static_cast<int>(rest % g.order());
      rest /= g.order();
    }
    out.push_back(std::move(t));
  }
  return out;
}

Report check_gauge_group(const FiniteGroup& g, int base_size) {
  const auto maps = enumerate_gauge_maps(g, base_size);
  const int order = g.order();
  std::string law, opposite, inverse, convolution, neutral, round_trip;
  auto name = [&](const GaugeMap& t) {
    std::string s = "(";
    for (int x = 0; x < t.base_size(); ++x) s += (x ? "," : "") + g.label(t.tau_hat[x]);
    return s + ")";
  };
  const BundleAutomorphism id = BundleAutomorphism::identity(base_size, order);
  for (const auto& t1 : maps) {
    const BundleAutomorphism x1 = xi_from_tau(g, t1);
    if (inverse.empty() && xi_from_tau(g, gauge_inverse(g, t1)) != x1.inverse())
      inverse = name(t1);
    // τ∘S as a convolution inverse: τ⋆(τ∘S) = ν
    const SpectralMap prod_inv = star_delta(g, tau_density(g, t1), tau_antipode_density(g, t1));
    if (neutral.empty() && prod_inv != tau_density(g, gauge_neutral(g, base_size)))
      neutral = name(t1);
    if (round_trip.empty() &&
        (tau_extract(g, x1) != t1 || compose(x1, xi_from_tau(g, gauge_inverse(g, t1))) != id))
      round_trip = name(t1);
    for (const auto& t2 : maps) {
      const BundleAutomorphism x2 = xi_from_tau(g, t2);
      const GaugeMap t12 = gauge_compose(g, t1, t2);
      if (law.empty() && xi_from_tau(g, t12) != compose(x1, x2)) law = name(t1) + "," + name(t2);
      if (opposite.empty() && xi_from_tau(g, gauge_compose(g, t2, t1)) != compose(x1, x2))
        opposite = name(t1) + "," + name(t2);
      if (convolution.empty() &&
          star_delta(g, tau_density(g, t1), tau_density(g, t2)) != tau_density(g, t12))
        convolution = name(t1) + "," + name(t2);
    }
  }
  Report r;
  r.add("composition_law", law.empty(), law).with("gauge_maps", static_cast<long long>(maps.size()));
  r.add("composition_law_opposite_order", opposite.empty(), opposite);
  r.add("inverse_law", inverse.empty(), inverse);
  r.add("pointwise_equals_convolution", convolution.empty(), convolution);
  r.add("antipode_is_convolution_inverse", neutral.empty(), neutral);
  r.add("tau_xi_round_trip", round_trip.empty(), round_trip);
  return r;
}

std::vector<int> shifted_trivialization(const Bundle& b, const GaugeMap& tau) {
  if (tau.base_size() != b.base_size()) throw StructuralError("gauge map over a different base");
  const auto& phi = b.trivialization();
  std::vector<int> out(b.total_size());
  for (int p = 0; p < b.total_size(); ++p)
    out[p] = b.group().mul(tau.tau_hat[b.project(p)], phi[p]);
  return out;
}

}  // namespace qpb::gauge
