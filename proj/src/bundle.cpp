#include "qpb/bundle.hpp"

#include <numeric>
#include <string>

#include "qpb/error.hpp"
#include "qpb/kernels.hpp"

namespace qpb::bundle {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

BaseSpace orbit_space(const RightAction& act) {
  const int n = act.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < act.group_order(); ++a) {
      int r1 = find_root(parent, p);
      int r2 = find_root(parent, act.act(p, a));
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  BaseSpace base;
  base.projection.assign(n, -1);
  std::vector<int> root_to_orbit(n, -1);
  for (int p = 0; p < n; ++p) {
    int r = find_root(parent, p);
    if (root_to_orbit[r] < 0) {
      root_to_orbit[r] = base.size();
      base.orbits.emplace_back();
      base.representative.push_back(p);
    }
    base.projection[p] = root_to_orbit[r];
    base.orbits[root_to_orbit[r]].push_back(p);
  }
  return base;
}

std::string pt(int p) { return std::to_string(p); }

void require_shape(const Func& f, std::vector<int> shape, const char* what) {
  if (f.shape() != shape) throw StructuralError(std::string(what) + ": argument has the wrong shape");
}

}  // namespace

Bundle::Bundle(FiniteGroup group, RightAction action, std::optional<std::vector<int>> phi,
               std::size_t max_entries)
    : group_(std::move(group)),
      action_(std::move(action)),
      phi_(std::move(phi)),
      max_entries_(max_entries) {
  if (action_.group_order() != group_.order())
    throw StructuralError("action table width does not match group order");
  if (phi_) {
    if (static_cast<int>(phi_->size()) != action_.size())
      throw StructuralError("trivialization table has " + std::to_string(phi_->size()) +
                            " entries, expected " + std::to_string(action_.size()));
    for (std::size_t p = 0; p < phi_->size(); ++p)
      if ((*phi_)[p] < 0 || (*phi_)[p] >= group_.order())
        throw StructuralError("index out of range at trivialization[" + std::to_string(p) + "]");
  }
  base_ = orbit_space(action_);
}

const std::vector<int>& Bundle::trivialization() const {
  if (!phi_) throw ConfigurationError("bundle has no trivialization");
  return *phi_;
}

Bundle Bundle::with_trivialization(std::vector<int> phi) const {
  return Bundle(group_, action_, std::move(phi), max_entries_);
}

bool Bundle::is_free() const {
  for (int p = 0; p < total_size(); ++p)
    for (int a = 0; a < order(); ++a)
      if (a != group_.identity() && act(p, a) == p) return false;
  return true;
}

// Comodule algebra ---------------------------------------------------------

Func coaction(const Bundle& b, const Func& f) {
  require_shape(f, {b.total_size()}, "coaction");
  Func out({b.total_size(), b.order()});
  for (int p = 0; p < b.total_size(); ++p)
    for (int a = 0; a < b.order(); ++a) out.at({p, a}) = f[b.act(p, a)];
  return out;
}

Report check_comodule_algebra(const Bundle& b) {
  const int n = b.total_size();
  const auto h = b.hopf();
  auto dr = [&](const Func& f) { return coaction(b, f); };
  auto cop = [&](const Func& f) { return h.coproduct(f); };
  auto eps = [&](const Func& f) { return Func::constant({}, h.counit(f)); };

  std::string coassoc, counit, mult;
  for (int p = 0; p < n; ++p) {
    const Func f = Func::indicator({n}, {p});
    const Func d = coaction(b, f);
    if (coassoc.empty() && apply_to_legs(d, 0, 1, dr) != apply_to_legs(d, 1, 1, cop))
      coassoc = "p=" + pt(p);
    if (counit.empty() && apply_to_legs(d, 1, 1, eps) != f) counit = "p=" + pt(p);
    for (int q = 0; q < n && mult.empty(); ++q) {
      const Func g = Func::indicator({n}, {q});
      if (coaction(b, pointwise_mul(f, g)) != pointwise_mul(d, coaction(b, g)))
        mult = "(" + pt(p) + "," + pt(q) + ")";
    }
  }
  const Func one = Func::constant({n}, 1);
  const bool unit = coaction(b, one) == tensor_identify(one, h.unit());

  Report r;
  r.add("coassociativity", coassoc.empty(), coassoc);
  r.add("counit", counit.empty(), counit);
  r.add("multiplicativity", mult.empty(), mult);
  r.add("unit", unit, "delta_R(1_P) != 1_P (x) 1_H");
  return r;
}

// Freeness -----------------------------------------------------------------

Func canonical_map(const Bundle& b, const Func& F) {
  const int n = b.total_size();
  require_shape(F, {n, n}, "canonical_map");
  Func out({n, b.order()});
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < b.order(); ++a) out.at({p, a}) = F.at({p, b.act(p, a)});
  return out;
}

Matrix canonical_map_matrix(const Bundle& b) {
  const int n = b.total_size();
  check_entry_cap(static_cast<std::size_t>(n) * n * n * b.order(), b.max_entries(),
                  "canonical map matrix");
  return Matrix::from_columns(n * b.order(), n * n, [&](int j) {
    return canonical_map(b, Func::indicator({n, n}, {j / n, j % n})).values();
  });
}

Matrix restricted_canonical_map_matrix(const Bundle& b) {
  const int n = b.total_size();
  const int order = b.order();
  const int e = b.group().identity();
  check_entry_cap(static_cast<std::size_t>(n) * (n - 1) * n * (order - 1), b.max_entries(),
                  "restricted canonical map matrix");
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q) pairs.emplace_back(p, q);
  return Matrix::from_columns(n * (order - 1), static_cast<int>(pairs.size()), [&](int j) {
    Func img = canonical_map(b, Func::indicator({n, n}, {pairs[j].first, pairs[j].second}));
    Vector v;
    v.reserve(static_cast<std::size_t>(n) * (order - 1));
    for (int p = 0; p < n; ++p)
      for (int a = 0; a < order; ++a)
        if (a != e) v.push_back(img.at({p, a}));
    return v;
  });
}

Report check_freeness(const Bundle& b) {
  const int n = b.total_size();
  const int order = b.order();
  std::string witness;
  for (int p = 0; p < n && witness.empty(); ++p)
    for (int a = 0; a < order; ++a)
      if (a != b.group().identity() && b.act(p, a) == p) {
        witness = "(" + pt(p) + "," + b.group().label(a) + ")";
        break;
      }
  Report r;
  r.add("free", witness.empty(), witness);

  const int rank = rank_of(canonical_map_matrix(b));
  const int target = n * order;
  r.add("canonical_map_surjective", rank == target,
        "rank " + std::to_string(rank) + " < " + std::to_string(target) +
            (witness.empty() ? "" : ", fixed point " + witness))
      .with("rank", static_cast<long long>(rank))
      .with("target_dim", static_cast<long long>(target));

  const int rrank = rank_of(restricted_canonical_map_matrix(b));
  const int rtarget = n * (order - 1);
  r.add("restricted_map_surjective", rrank == rtarget,
        "rank " + std::to_string(rrank) + " < " + std::to_string(rtarget))
      .with("rank", static_cast<long long>(rrank))
      .with("target_dim", static_cast<long long>(rtarget));
  return r;
}

// Invariants and base ------------------------------------------------------

SubspaceBasis invariants(const Bundle& b) {
  const int n = b.total_size();
  const auto h = b.hopf();
  Matrix m = Matrix::from_columns(n * b.order(), n, [&](int j) {
    Func f = Func::indicator({n}, {j});
    return (coaction(b, f) - tensor_identify(f, h.unit())).values();
  });
  return rank_and_kernel(m).kernel;
}

Func inject_base(const Bundle& b, const Func& h) {
  require_shape(h, {b.base_size()}, "inject_base");
  Func out({b.total_size()});
  for (int p = 0; p < b.total_size(); ++p) out[p] = h[b.project(p)];
  return out;
}

BaseAndInjection base_and_injection(const Bundle& b) {
  const int nb = b.base_size();
  BaseAndInjection out{b.base(), {}};
  std::vector<Vector> images;
  for (int x = 0; x < nb; ++x) images.push_back(inject_base(b, Func::indicator({nb}, {x})).values());
  const SubspaceBasis image = SubspaceBasis::span_of(b.total_size(), images);
  out.report.add("injective", image.dim() == nb).with("base_size", static_cast<long long>(nb));

  std::string mult;
  for (int x = 0; x < nb && mult.empty(); ++x)
    for (int y = 0; y < nb; ++y) {
      Func hx = Func::indicator({nb}, {x});
      Func hy = Func::indicator({nb}, {y});
      if (inject_base(b, pointwise_mul(hx, hy)) !=
          pointwise_mul(inject_base(b, hx), inject_base(b, hy))) {
        mult = "(" + pt(x) + "," + pt(y) + ")";
        break;
      }
    }
  out.report.add("multiplicative", mult.empty(), mult);
  const SubspaceBasis inv = invariants(b);
  out.report.add("image_equals_invariants", image == inv,
                 "dim image " + std::to_string(image.dim()) + ", dim invariants " +
                     std::to_string(inv.dim()))
      .with("invariants_dim", static_cast<long long>(inv.dim()));
  return out;
}

Bundle make_product(int base_size, const FiniteGroup& g) {
  if (base_size < 1) throw StructuralError("product bundle needs a nonempty base");
  const int order = g.order();
  std::vector<std::vector<int>> act(static_cast<std::size_t>(base_size) * order,
                                    std::vector<int>(order));
  std::vector<int> phi(act.size());
  for (int x = 0; x < base_size; ++x)
    for (int a = 0; a < order; ++a) {
      phi[x * order + a] = a;
      for (int c = 0; c < order; ++c) act[x * order + a][c] = x * order + g.mul(a, c);
    }
  return Bundle(g, RightAction::from_table(act, order), std::move(phi));
}

// Trivializations ----------------------------------------------------------

std::vector<int> section(const Bundle& b) {
  const auto& phi = b.trivialization();
  std::vector<int> s(b.base_size());
  for (int x = 0; x < b.base_size(); ++x) {
    int r = b.base().representative[x];
    s[x] = b.act(r, b.group().inv(phi[r]));
  }
  return s;
}

Report validate_trivialization(const Bundle& b) {
  const auto& phi = b.trivialization();
  const auto& g = b.group();
  std::string witness;
  for (int p = 0; p < b.total_size() && witness.empty(); ++p)
    for (int a = 0; a < b.order(); ++a)
      if (phi[b.act(p, a)] != g.mul(phi[p], a)) {
        witness = "(" + pt(p) + "," + g.label(a) + ")";
        break;
      }
  Report r;
  r.add("equivariance", witness.empty(), witness);

  const std::vector<int> s = section(b);
  witness.clear();
  for (int p = 0; p < b.total_size(); ++p)
    if (b.act(p, g.inv(phi[p])) != s[b.project(p)]) {
      witness = "p=" + pt(p);
      break;
    }
  std::string table;
  for (int x = 0; x < b.base_size(); ++x) table += (x ? "," : "") + pt(s[x]);
  r.add("section_invariant", witness.empty(), witness).with("section", table);
  return r;
}

std::vector<int> synthesize_trivialization(const Bundle& b) {
  if (!b.is_free()) throw PreconditionError("cannot synthesize a trivialization: action is not free");
  std::vector<int> phi(b.total_size(), -1);
  for (int p = 0; p < b.total_size(); ++p) {
    const int r = b.base().representative[b.project(p)];
    for (int a = 0; a < b.order(); ++a)
      if (b.act(r, a) == p) {
        phi[p] = a;
        break;
      }
    if (phi[p] < 0)
      throw PreconditionError("cannot synthesize a trivialization: orbit of " + pt(r) +
                              " does not reach " + pt(p));
  }
  return phi;
}

Func psi_apply(const Bundle& b, const Func& F) {
  require_shape(F, {b.base_size(), b.order()}, "psi_apply");
  const auto& phi = b.trivialization();
  Func out({b.total_size()});
  for (int p = 0; p < b.total_size(); ++p) out[p] = F.at({b.project(p), phi[p]});
  return out;
}

Func psi_inverse(const Bundle& b, const Func& f) {
  require_shape(f, {b.total_size()}, "psi_inverse");
  const std::vector<int> s = section(b);
  Func out({b.base_size(), b.order()});
  for (int x = 0; x < b.base_size(); ++x)
    for (int a = 0; a < b.order(); ++a) out.at({x, a}) = f[b.act(s[x], a)];
  return out;
}

Func product_coaction(const FiniteGroup& g, const Func& F) {
  if (F.rank() != 2 || F.shape()[1] != g.order())
    throw StructuralError("product_coaction: argument must live on B×G");
  const int nb = F.shape()[0];
  Func out({nb, g.order(), g.order()});
  for (int x = 0; x < nb; ++x)
    for (int a = 0; a < g.order(); ++a)
      for (int c = 0; c < g.order(); ++c) out.at({x, a, c}) = F.at({x, g.mul(a, c)});
  return out;
}

Report check_psi_isomorphism(const Bundle& b) {
  const int nb = b.base_size();
  const int order = b.order();
  const int n = b.total_size();
  const int dim = nb * order;
  auto basis = [&](int i) { return Func::indicator({nb, order}, {i / order, i % order}); };
  auto psi = [&](const Func& F) { return psi_apply(b, F); };

  std::string mult, intertwine, injection, round_trip;
  for (int i = 0; i < dim; ++i) {
    const Func ei = basis(i);
    const Func pi = psi_apply(b, ei);
    for (int j = 0; j < dim && mult.empty(); ++j) {
      const Func ej = basis(j);
      if (psi_apply(b, pointwise_mul(ei, ej)) != pointwise_mul(pi, psi_apply(b, ej)))
        mult = "(" + pt(i) + "," + pt(j) + ")";
    }
    if (intertwine.empty() &&
        coaction(b, pi) != apply_to_legs(product_coaction(b.group(), ei), 0, 2, psi))
      intertwine = "basis " + pt(i);
    if (round_trip.empty() && psi_inverse(b, pi) != ei) round_trip = "basis " + pt(i);
  }
  for (int p = 0; p < n && round_trip.empty(); ++p) {
    const Func f = Func::indicator({n}, {p});
    if (psi_apply(b, psi_inverse(b, f)) != f) round_trip = "p=" + pt(p);
  }
  const Func one_h = Func::constant({order}, 1);
  for (int x = 0; x < nb && injection.empty(); ++x) {
    const Func h = Func::indicator({nb}, {x});
    if (psi_apply(b, tensor_identify(h, one_h)) != inject_base(b, h)) injection = "x=" + pt(x);
  }
  Report r;
  r.add("psi_multiplicative", mult.empty(), mult);
  r.add("psi_intertwines_coaction", intertwine.empty(), intertwine);
  r.add("psi_restricts_to_injection", injection.empty(), injection);
  r.add("psi_round_trip", round_trip.empty(), round_trip);
  return r;
}

// Convolution --------------------------------------------------------------

HPMap star(const Bundle& b, const HPMap& u, const HPMap& v) {
  if (u.degree() != 0 || v.degree() != 0 || u.npoints() != b.total_size() ||
      v.npoints() != b.total_size() || u.order() != b.order() || v.order() != b.order())
    throw StructuralError("star: operands are not linear maps H -> P of this bundle");
  HPMap out(b.total_size(), 0, b.order(), b.max_entries());
  out.density().values() =
      kernels::star(b.total_size(), 0, 0, b.group(), u.density().values(), v.density().values());
  return out;
}

HPMap convolution_unit(const Bundle& b) {
  HPMap out(b.total_size(), 0, b.order(), b.max_entries());
  for (int p = 0; p < b.total_size(); ++p) out.at({p, b.group().identity()}) = 1;
  return out;
}

HPMap phi_from_trivialization(const Bundle& b) {
  const auto& phi = b.trivialization();
  HPMap out(b.total_size(), 0, b.order(), b.max_entries());
  for (int p = 0; p < b.total_size(); ++p) out.at({p, phi[p]}) = 1;
  return out;
}

std::optional<std::vector<int>> delta_support(const HPMap& h) {
  if (h.degree() != 0) return std::nullopt;
  std::vector<int> w(h.npoints(), -1);
  for (int p = 0; p < h.npoints(); ++p)
    for (int a = 0; a < h.order(); ++a) {
      const Scalar& v = h.at({p, a});
      if (v.is_zero()) continue;
      if (v != Scalar(1) || w[p] >= 0) return std::nullopt;
      w[p] = a;
    }
  for (int x : w)
    if (x < 0) return std::nullopt;
  return w;
}

HPMap conv_inverse_of_hom(const Bundle& b, const HPMap& h) {
  auto w = delta_support(h);
  if (!w)
    throw PreconditionError("not an algebra homomorphism; convolution inverse formula inapplicable");
  HPMap out(b.total_size(), 0, b.order(), b.max_entries());
  for (int p = 0; p < b.total_size(); ++p) out.at({p, b.group().inv((*w)[p])}) = 1;
  return out;
}

Report check_convolution_identities(const Bundle& b) {
  const auto& g = b.group();
  const auto& phi = b.trivialization();
  const int n = b.total_size();
  const HPMap Phi = phi_from_trivialization(b);
  const HPMap inv = conv_inverse_of_hom(b, Phi);
  const HPMap unit = convolution_unit(b);
  const auto h = b.hopf();

  Report r;
  r.add("phi_star_inverse_is_unit", star(b, Phi, inv) == unit);
  r.add("inverse_star_phi_is_unit", star(b, inv, Phi) == unit);

  std::string hom;
  if (Phi.apply(h.unit()) != Func::constant({n}, 1)) hom = "Phi(1_H) != 1_P";
  for (int a = 0; a < b.order() && hom.empty(); ++a)
    for (int c = 0; c < b.order(); ++c)
      if (Phi.apply(pointwise_mul(h.delta(a), h.delta(c))) !=
          pointwise_mul(Phi.apply(h.delta(a)), Phi.apply(h.delta(c)))) {
        hom = "(" + g.label(a) + "," + g.label(c) + ")";
        break;
      }
  r.add("phi_algebra_homomorphism", hom.empty(), hom);

  std::string co_phi, co_inv;
  for (int c = 0; c < b.order(); ++c) {
    const Func alpha = h.delta(c);
    const Func lhs = coaction(b, Phi.apply(alpha));
    const Func lhs_inv = coaction(b, inv.apply(alpha));
    for (int p = 0; p < n; ++p)
      for (int a = 0; a < b.order(); ++a) {
        if (co_phi.empty() && lhs.at({p, a}) != alpha[g.mul(phi[p], a)])
          co_phi = "(" + pt(p) + "," + g.label(a) + ")";
        if (co_inv.empty() && lhs_inv.at({p, a}) != alpha[g.mul(g.inv(a), g.inv(phi[p]))])
          co_inv = "(" + pt(p) + "," + g.label(a) + ")";
      }
  }
  r.add("coaction_of_phi", co_phi.empty(), co_phi);
  r.add("coaction_of_phi_inverse", co_inv.empty(), co_inv);
  return r;
}

}  // namespace qpb::bundle
