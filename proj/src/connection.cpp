#include "qpb/connection.hpp"

#include <string>

#include "qpb/error.hpp"
#include "qpb/kernels.hpp"

namespace qpb::connection {

using bundle::Bundle;
using calculus::Form;

namespace {

std::string tuple(std::initializer_list<int> points, const std::string& label) {
  std::string s = "(";
  for (int p : points) s += std::to_string(p) + ",";
  return s + label + ")";
}

Scalar delta(int a, int b) { return Scalar(a == b ? 1 : 0); }

void require_density(const SpectralMap& m, int npoints, int degree, int order, const char* what) {
  if (m.npoints() != npoints || m.degree() != degree || m.order() != order)
    throw StructuralError(std::string(what) + " density has the wrong shape");
}

void require(const Report& r, const char* what) {
  if (const Check* f = r.first_failure())
    throw PreconditionError(std::string(what) + " violates " + f->name +
                            (f->witness.empty() ? "" : " at " + f->witness));
}

// Column of δ_p⊗δ_c in the Splitting matrix, or -1 for c = e.
int splitting_column(const FiniteGroup& g, int p, int c) {
  if (c == g.identity()) return -1;
  const int k = c < g.identity() ? c : c - 1;
  return p * (g.order() - 1) + k;
}

// A pulled back along π as a degree-0 map over P.
SpectralMap lift_to_total(const Bundle& b, const SpectralMap& base_map) {
  SpectralMap out(b.total_size(), 0, b.order(), b.max_entries());
  for (int p = 0; p < b.total_size(); ++p)
    for (int a = 0; a < b.order(); ++a) out.at({p, a}) = base_map.at({b.project(p), a});
  return out;
}

bool is_form_valued(const SpectralMap& m) {
  for (int c = 0; c < m.order(); ++c)
    if (!calculus::validate_form(Form(m.slice(c))).passed()) return false;
  return true;
}

}  // namespace

std::vector<int> ker_counit_elements(const FiniteGroup& g) {
  std::vector<int> out;
  for (int c = 0; c < g.order(); ++c)
    if (c != g.identity()) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------

Report check_connection_form(const Bundle& b, const ConnectionForm& theta) {
  const auto& g = b.group();
  const int n = b.total_size();
  const int order = b.order();
  require_density(theta, n, 1, order, "connection form");
  const int e = g.identity();
  std::string diag, sum, vertical, covariant;
  for (int p = 0; p < n; ++p) {
    for (int c = 0; c < order && diag.empty(); ++c)
      if (!theta.at({p, p, c}).is_zero()) diag = tuple({p, p}, g.label(c));
    for (int q = 0; q < n && sum.empty(); ++q) {
      Scalar s;
      for (int c = 0; c < order; ++c) s += theta.at({p, q, c});
      if (!s.is_zero()) sum = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    for (int a = 0; a < order && vertical.empty(); ++a)
      for (int c = 0; c < order; ++c)
        if (theta.at({p, b.act(p, a), c}) != delta(a, c) - delta(e, c)) {
          vertical = tuple({p, b.act(p, a)}, g.label(c));
          break;
        }
    for (int q = 0; q < n && covariant.empty(); ++q)
      for (int bb = 0; bb < order && covariant.empty(); ++bb)
        for (int c = 0; c < order; ++c)
          if (theta.at({b.act(p, bb), b.act(q, bb), g.mul(g.mul(g.inv(bb), c), bb)}) !=
              theta.at({p, q, c})) {
            covariant = tuple({p, q}, g.label(c)) + " under " + g.label(bb);
            break;
          }
  }
  Report r;
  r.add("vanishes_on_diagonal", diag.empty(), diag);
  r.add("annihilates_unit", sum.empty(), sum);
  r.add("canonical_map_condition", vertical.empty(), vertical);
  r.add("adjoint_covariance", covariant.empty(), covariant);
  return r;
}

Report check_gamma(const Bundle& b, const GammaMap& gamma) {
  const auto& g = b.group();
  const int n = b.total_size();
  const int order = b.order();
  require_density(gamma, n, 1, order, "gamma");
  std::string sum, vertical, invariant;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n && sum.empty(); ++q) {
      Scalar s;
      for (int c = 0; c < order; ++c) s += gamma.at({p, q, c});
      if (!s.is_zero()) sum = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    for (int a = 0; a < order && vertical.empty(); ++a)
      for (int c = 0; c < order; ++c)
        if (!gamma.at({p, b.act(p, a), c}).is_zero()) {
          vertical = tuple({p, b.act(p, a)}, g.label(c));
          break;
        }
    for (int q = 0; q < n && invariant.empty(); ++q)
      for (int a = 0; a < order && invariant.empty(); ++a)
        for (int c = 0; c < order; ++c)
          if (gamma.at({b.act(p, a), b.act(q, a), c}) != gamma.at({p, q, c})) {
            invariant = tuple({p, q}, g.label(c)) + " under " + g.label(a);
            break;
          }
  }
  Report r;
  r.add("gamma_sum_zero", sum.empty(), sum);
  r.add("gamma_vertical_zero", vertical.empty(), vertical);
  r.add("gamma_invariant", invariant.empty(), invariant);
  return r;
}

Report check_gamma_hat(const FiniteGroup& g, const GammaHat& gamma_hat) {
  if (gamma_hat.degree() != 1 || gamma_hat.order() != g.order())
    throw StructuralError("gamma_hat density has the wrong shape");
  const int nb = gamma_hat.npoints();
  std::string diag, sum;
  for (int x = 0; x < nb; ++x) {
    for (int a = 0; a < g.order() && diag.empty(); ++a)
      if (!gamma_hat.at({x, x, a}).is_zero()) diag = tuple({x, x}, g.label(a));
    for (int y = 0; y < nb && sum.empty(); ++y) {
      Scalar s;
      for (int a = 0; a < g.order(); ++a) s += gamma_hat.at({x, y, a});
      if (!s.is_zero()) sum = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
  }
  Report r;
  r.add("gamma_hat_diagonal", diag.empty(), diag);
  r.add("gamma_hat_sum_zero", sum.empty(), sum);
  return r;
}

Report check_transition(const FiniteGroup& g, const TransitionMap& g_hat) {
  const int nb = g_hat.base_size;
  if (static_cast<int>(g_hat.table.size()) != nb * nb)
    throw StructuralError("transition map table has the wrong size");
  std::string range, diag;
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y) {
      const int v = g_hat(x, y);
      if (range.empty() && (v < 0 || v >= g.order()))
        range = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (diag.empty() && x == y && v != g.identity()) diag = "(" + std::to_string(x) + ")";
    }
  Report r;
  r.add("transition_in_range", range.empty(), range);
  r.add("transition_diagonal_identity", diag.empty(), diag);
  return r;
}

// ---------------------------------------------------------------------------

Func apply_splitting(const Bundle& b, const Splitting& sigma, const Func& a) {
  const auto& g = b.group();
  const int n = b.total_size();
  if (a.shape() != std::vector<int>{n, b.order()})
    throw StructuralError("splitting applied to a function not on P×G");
  Vector coords(static_cast<std::size_t>(sigma.matrix.cols()));
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < b.order(); ++c) {
      const int col = splitting_column(g, p, c);
      if (col < 0) {
        if (!a.at({p, c}).is_zero()) throw PreconditionError("splitting argument not in P⊗Ker ε");
        continue;
      }
      coords[col] = a.at({p, c});
    }
  Func out({n, n});
  out.values() = sigma.matrix.apply(coords);
  return out;
}

namespace {

void require_splitting_shape(const Bundle& b, const Splitting& sigma) {
  const int n = b.total_size();
  if (sigma.matrix.rows() != n * n || sigma.matrix.cols() != n * (b.order() - 1))
    throw StructuralError("splitting matrix must be " + std::to_string(n * n) + "x" +
                          std::to_string(n * (b.order() - 1)));
}

}  // namespace

Report validate_splitting(const Bundle& b, const Splitting& sigma) {
  require_splitting_shape(b, sigma);
  const auto& g = b.group();
  const int n = b.total_size();
  const int order = b.order();
  auto sigma_map = [&](const Func& a) { return apply_splitting(b, sigma, a); };

  std::string split, module, covariance;
  for (int p = 0; p < n; ++p)
    for (int c : ker_counit_elements(g)) {
      const Func basis = Func::indicator({n, order}, {p, c});
      const Func image = sigma_map(basis);
      const std::string where = "(" + std::to_string(p) + "," + g.label(c) + ")";
      if (split.empty() && bundle::canonical_map(b, image) != basis) split = where;
      for (int q = 0; q < n && module.empty(); ++q) {
        const Func f = Func::indicator({n}, {q});
        Func fa = basis;
        for (int a = 0; a < order; ++a) fa.at({p, a}) *= f[p];
        Func f_image = image;
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) f_image.at({r, s}) *= f[r];
        if (sigma_map(fa) != f_image) module = where + " with f = δ_" + std::to_string(q);
      }
      if (covariance.empty() &&
          apply_to_legs(tilde_coaction(b, basis), 0, 2, sigma_map) != prime_coaction(b, Form(image)))
        covariance = where;
    }
  Report r;
  r.add("splitting", split.empty(), split);
  r.add("left_module", module.empty(), module);
  r.add("right_covariance", covariance.empty(), covariance);
  return r;
}

Form vertical_projection(const Bundle& b, const Splitting& sigma, const Form& f1) {
  Func a = calculus::canonical_map_forms(b, f1);
  return Form(apply_splitting(b, sigma, a));
}

Report check_vertical_projection(const Bundle& b, const Splitting& sigma) {
  require_splitting_shape(b, sigma);
  const int n = b.total_size();
  const Matrix pv = Matrix::from_columns(n * n, n * n, [&](int j) {
    if (j / n == j % n) return Vector(static_cast<std::size_t>(n) * n);
    Func f({n, n});
    f[j] = 1;
    return vertical_projection(b, sigma, Form(f)).values().values();
  });
  const SubspaceBasis hor = calculus::horizontal_basis(b);

  std::string kills;
  for (std::size_t i = 0; i < hor.vectors().size() && kills.empty(); ++i) {
    const Vector v = pv.apply(hor.vectors()[i]);
    for (const auto& s : v)
      if (!s.is_zero()) {
        kills = "horizontal basis vector " + std::to_string(i);
        break;
      }
  }
  // Image of id − Π_ver on Ω¹(P), i.e. on the off-diagonal basis vectors.
  std::vector<Vector> complement;
  for (int j = 0; j < n * n; ++j) {
    if (j / n == j % n) continue;
    Vector v(static_cast<std::size_t>(n) * n);
    v[j] = 1;
    const Vector w = pv.apply(v);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= w[k];
    complement.push_back(std::move(v));
  }
  const SubspaceBasis image = SubspaceBasis::span_of(n * n, complement);

  Report r;
  r.add("projection_idempotent", pv * pv == pv);
  r.add("projection_kills_horizontal", kills.empty(), kills);
  r.add("complement_onto_horizontal", image == hor,
        "dim image = " + std::to_string(image.dim()) + ", dim Gamma_hor = " + std::to_string(hor.dim()))
      .with("horizontal_dim", static_cast<long long>(hor.dim()));
  return r;
}

Func tilde_coaction(const Bundle& b, const Func& a) {
  const auto& g = b.group();
  const int n = b.total_size();
  const int order = b.order();
  if (a.shape() != std::vector<int>{n, order}) throw StructuralError("tilde_coaction expects P×G");
  Func out({n, order, order});
  for (int p = 0; p < n; ++p)
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        out.at({p, x, y}) = a.at({b.act(p, y), g.mul(g.mul(g.inv(y), x), y)});
  return out;
}

Report check_tilde_coaction(const Bundle& b) {
  const auto& g = b.group();
  const int n = b.total_size();
  const int order = b.order();
  const auto h = b.hopf();
  auto tilde = [&](const Func& a) { return tilde_coaction(b, a); };
  auto coproduct = [&](const Func& alpha) { return h.coproduct(alpha); };
  auto counit = [&](const Func& alpha) {
    Func s(std::vector<int>{});
    s[0] = h.counit(alpha);
    return s;
  };
  std::string assoc, unit;
  for (int p = 0; p < n; ++p)
    for (int c : ker_counit_elements(g)) {
      const Func basis = Func::indicator({n, order}, {p, c});
      const Func once = tilde(basis);
      const std::string where = "(" + std::to_string(p) + "," + g.label(c) + ")";
      if (assoc.empty() && apply_to_legs(once, 0, 2, tilde) != apply_to_legs(once, 2, 1, coproduct))
        assoc = where;
      if (unit.empty() && apply_to_legs(once, 2, 1, counit) != basis) unit = where;
    }
  Report r;
  r.add("tilde_coassociativity", assoc.empty(), assoc);
  r.add("tilde_counit", unit.empty(), unit);
  return r;
}

Func prime_coaction(const Bundle& b, const Form& f1) {
  const int n = b.total_size();
  if (f1.degree() != 1 || f1.npoints() != n) throw StructuralError("prime_coaction expects a 1-form on P");
  Func out({n, n, b.order()});
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int a = 0; a < b.order(); ++a) out.at({p, q, a}) = f1.at({b.act(p, a), b.act(q, a)});
  return out;
}

ConnectionForm theta_from_splitting(const Bundle& b, const Splitting& sigma) {
  require_splitting_shape(b, sigma);
  const auto& g = b.group();
  const int n = b.total_size();
  ConnectionForm theta(n, 1, b.order(), b.max_entries());
  Func sum_rest({n, n});
  for (int c : ker_counit_elements(g)) {
    Func a({n, b.order()});
    for (int p = 0; p < n; ++p) a.at({p, c}) = 1;
    const Func image = apply_splitting(b, sigma, a);
    theta.set_slice(c, image);
    sum_rest += image;
  }
  theta.set_slice(g.identity(), Scalar(-1) * sum_rest);
  return theta;
}

Splitting splitting_from_theta(const Bundle& b, const ConnectionForm& theta) {
  require(check_connection_form(b, theta), "connection form");
  const auto& g = b.group();
  const int n = b.total_size();
  Splitting sigma{Matrix(n * n, n * (b.order() - 1))};
  for (int c : ker_counit_elements(g)) {
    const Func slice = theta.slice(c);
    for (int p = 0; p < n; ++p) {
      const int col = splitting_column(g, p, c);
      for (int q = 0; q < n; ++q) sigma.matrix(p * n + q, col) = slice.at({p, q});
    }
  }
  return sigma;
}

// ---------------------------------------------------------------------------

ConnectionForm trivial_connection(const Bundle& b) {
  const HPMap phi = bundle::phi_from_trivialization(b);
  const HPMap inv = bundle::conv_inverse_of_hom(b, phi);
  return star_delta(b.group(), inv, differential(phi, kernels::Exec::parallel, b.max_entries()),
                    kernels::Exec::parallel, b.max_entries());
}

ConnectionForm trivial_connection_closed_form(const Bundle& b) {
  const auto& g = b.group();
  const auto& phi = b.trivialization();
  const int n = b.total_size();
  ConnectionForm theta(n, 1, b.order(), b.max_entries());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int c = 0; c < b.order(); ++c)
        theta.at({p, q, c}) = delta(g.mul(g.inv(phi[p]), phi[q]), c) - delta(g.identity(), c);
  return theta;
}

ConnectionForm connection_from_gamma(const Bundle& b, const GammaMap& gamma) {
  require(check_gamma(b, gamma), "gamma");
  const auto& g = b.group();
  const HPMap phi = bundle::phi_from_trivialization(b);
  const HPMap inv = bundle::conv_inverse_of_hom(b, phi);
  const auto cap = b.max_entries();
  const auto exec = kernels::Exec::parallel;
  ConnectionForm theta = trivial_connection(b);
  theta += star_delta(g, star_delta(g, inv, gamma, exec, cap), phi, exec, cap);
  require(check_connection_form(b, theta), "constructed connection form");
  return theta;
}

GammaMap gamma_from_connection(const Bundle& b, const ConnectionForm& theta) {
  const auto& g = b.group();
  const HPMap phi = bundle::phi_from_trivialization(b);
  const HPMap inv = bundle::conv_inverse_of_hom(b, phi);
  const auto cap = b.max_entries();
  const auto exec = kernels::Exec::parallel;
  return star_delta(g, star_delta(g, phi, theta - trivial_connection(b), exec, cap), inv, exec, cap);
}

GammaMap strong_from_gamma_hat(const Bundle& b, const GammaHat& gamma_hat) {
  require(check_gamma_hat(b.group(), gamma_hat), "gamma_hat");
  if (gamma_hat.npoints() != b.base_size()) throw StructuralError("gamma_hat does not live on the base");
  const int n = b.total_size();
  GammaMap gamma(n, 1, b.order(), b.max_entries());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int a = 0; a < b.order(); ++a)
        gamma.at({p, q, a}) = gamma_hat.at({b.project(p), b.project(q), a});
  return gamma;
}

ConnectionForm strong_connection_closed_form(const Bundle& b, const GammaHat& gamma_hat) {
  require(check_gamma_hat(b.group(), gamma_hat), "gamma_hat");
  const auto& g = b.group();
  const auto& phi = b.trivialization();
  const int n = b.total_size();
  const int e = g.identity();
  ConnectionForm theta(n, 1, b.order(), b.max_entries());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      for (int a = 0; a < b.order(); ++a) {
        const Scalar w = delta(e, a) + gamma_hat.at({b.project(p), b.project(q), a});
        if (!w.is_zero()) theta.at({p, q, g.mul(g.mul(g.inv(phi[p]), a), phi[q])}) += w;
      }
      theta.at({p, q, e}) -= Scalar(1);
    }
  return theta;
}

ConnectionForm classical_connection(const Bundle& b, const TransitionMap& g_hat) {
  require(check_transition(b.group(), g_hat), "transition map");
  if (g_hat.base_size != b.base_size()) throw StructuralError("transition map does not live on the base");
  const auto& g = b.group();
  const auto& phi = b.trivialization();
  const int n = b.total_size();
  ConnectionForm theta(n, 1, b.order(), b.max_entries());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int m = g.mul(g.mul(g.inv(phi[p]), g_hat(b.project(p), b.project(q))), phi[q]);
      theta.at({p, q, m}) += Scalar(1);
      theta.at({p, q, g.identity()}) -= Scalar(1);
    }
  return theta;
}

GammaHat gamma_hat_from_transition(const FiniteGroup& g, const TransitionMap& g_hat) {
  require(check_transition(g, g_hat), "transition map");
  const int nb = g_hat.base_size;
  GammaHat out(nb, 1, g.order());
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y) {
      out.at({x, y, g_hat(x, y)}) += Scalar(1);
      out.at({x, y, g.identity()}) -= Scalar(1);
    }
  return out;
}

std::vector<TransitionMap> enumerate_transition_maps(const FiniteGroup& g, int base_size,
                                                     std::size_t limit) {
  const int free_entries = base_size * base_size - base_size;
  const std::size_t count = kernels::power(g.order(), free_entries);
  if (count > limit)
    throw SizeLimitError(std::to_string(count) + " transition maps exceed the enumeration limit");
  std::vector<TransitionMap> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    TransitionMap m{base_size, std::vector<int>(static_cast<std::size_t>(base_size) * base_size, g.identity())};
    std::size_t rest = k;
    for (int idx = base_size * base_size - 1; idx >= 0; --idx) {
      if (idx / base_size == idx % base_size) continue;
      m.table[idx] = static_cast<int>(rest % g.order());
      rest /= g.order();
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool is_cocycle(const FiniteGroup& g, const TransitionMap& g_hat) {
  const int nb = g_hat.base_size;
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < nb; ++z)
        if (g.mul(g_hat(x, y), g_hat(y, z)) != g_hat(x, z)) return false;
  return true;
}

// ---------------------------------------------------------------------------

GammaHat gauge_transform_gamma_hat(const FiniteGroup& g, const GammaHat& gamma_hat,
                                   const gauge::GaugeMap& tau) {
  const int nb = gamma_hat.npoints();
  if (tau.base_size() != nb) throw StructuralError("gauge map and gamma_hat live on different bases");
  const int e = g.identity();
  GammaHat out(nb, 1, g.order());
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y)
      for (int a = 0; a < g.order(); ++a) {
        const int m = g.mul(g.mul(tau.tau_hat[x], a), g.inv(tau.tau_hat[y]));
        out.at({x, y, a}) = delta(e, m) - delta(e, a) + gamma_hat.at({x, y, m});
      }
  return out;
}

GammaHat gauge_transform_gamma_hat_abstract(const FiniteGroup& g, const GammaHat& gamma_hat,
                                            const gauge::GaugeMap& tau) {
  const SpectralMap t = gauge::tau_density(g, tau);
  const SpectralMap t_inv = gauge::tau_antipode_density(g, tau);
  return star_delta(g, t_inv, differential(t)) + star_delta(g, star_delta(g, t_inv, gamma_hat), t);
}

GammaMap gauge_transform_gamma(const Bundle& b, const GammaMap& gamma, const gauge::GaugeMap& tau) {
  const auto& g = b.group();
  const auto cap = b.max_entries();
  const auto exec = kernels::Exec::parallel;
  const SpectralMap t = lift_to_total(b, gauge::tau_density(g, tau));
  const SpectralMap t_inv = lift_to_total(b, gauge::tau_antipode_density(g, tau));
  return star_delta(g, t_inv, differential(t, exec, cap), exec, cap) +
         star_delta(g, star_delta(g, t_inv, gamma, exec, cap), t, exec, cap);
}

TransitionMap gauge_transform_transition(const FiniteGroup& g, const TransitionMap& g_hat,
                                         const gauge::GaugeMap& tau) {
  TransitionMap out = g_hat;
  for (int x = 0; x < g_hat.base_size; ++x)
    for (int y = 0; y < g_hat.base_size; ++y)
      out.table[static_cast<std::size_t>(x) * g_hat.base_size + y] =
          g.mul(g.mul(g.inv(tau.tau_hat[x]), g_hat(x, y)), tau.tau_hat[y]);
  return out;
}

// ---------------------------------------------------------------------------

FormValuedMap curvature(const Bundle& b, const ConnectionForm& theta) {
  const auto cap = b.max_entries();
  const auto exec = kernels::Exec::parallel;
  return differential(theta, exec, cap) + star_delta(b.group(), theta, theta, exec, cap);
}

FormValuedMap curvature_via_gamma(const Bundle& b, const GammaMap& gamma) {
  const auto& g = b.group();
  const auto cap = b.max_entries();
  const auto exec = kernels::Exec::parallel;
  const HPMap phi = bundle::phi_from_trivialization(b);
  const HPMap inv = bundle::conv_inverse_of_hom(b, phi);
  const SpectralMap inner = differential(gamma, exec, cap) + star_delta(g, gamma, gamma, exec, cap);
  return star_delta(g, star_delta(g, inv, inner, exec, cap), phi, exec, cap);
}

FormValuedMap curvature_classical(const Bundle& b, const TransitionMap& g_hat) {
  require(check_transition(b.group(), g_hat), "transition map");
  const auto& g = b.group();
  const auto& phi = b.trivialization();
  const int n = b.total_size();
  FormValuedMap f(n, 2, b.order(), b.max_entries());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        const int x = b.project(p), y = b.project(q), z = b.project(r);
        const int left = g.inv(phi[p]);
        const int via = g.mul(g.mul(left, g.mul(g_hat(x, y), g_hat(y, z))), phi[r]);
        const int direct = g.mul(g.mul(left, g_hat(x, z)), phi[r]);
        f.at({p, q, r, via}) += Scalar(1);
        f.at({p, q, r, direct}) -= Scalar(1);
      }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t nonzero_entries(const SpectralMap& m) {
  std::size_t k = 0;
  for (const auto& s : m.density().values()) k += !s.is_zero();
  return k;
}

std::string first_difference(const SpectralMap& a, const SpectralMap& c) {
  const std::size_t i = a.density().first_difference(c.density());
  if (i >= a.density().size()) return {};
  std::vector<int> idx(a.density().rank());
  a.density().unflatten(i, idx);
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

// γ̂ with γ = strong_from_gamma_hat(γ̂), if Γ is pulled back from the base.
std::optional<GammaHat> descend(const Bundle& b, const GammaMap& gamma) {
  const auto& reps = b.base().representative;
  GammaHat out(b.base_size(), 1, b.order());
  for (int x = 0; x < b.base_size(); ++x)
    for (int y = 0; y < b.base_size(); ++y)
      for (int a = 0; a < b.order(); ++a) out.at({x, y, a}) = gamma.at({reps[x], reps[y], a});
  if (!check_gamma_hat(b.group(), out).passed()) return std::nullopt;
  for (int p = 0; p < b.total_size(); ++p)
    for (int q = 0; q < b.total_size(); ++q)
      for (int a = 0; a < b.order(); ++a)
        if (gamma.at({p, q, a}) != out.at({b.project(p), b.project(q), a})) return std::nullopt;
  return out;
}

}  // namespace

Report check_connection(const Bundle& b, const ConnectionForm& theta) {
  Report r = check_connection_form(b, theta);
  if (!r.passed()) return r;
  const Splitting sigma = splitting_from_theta(b, theta);
  r.append(validate_splitting(b, sigma));
  r.append(check_vertical_projection(b, sigma));
  r.add("splitting_round_trip", theta_from_splitting(b, sigma) == theta);
  const GammaMap gamma = gamma_from_connection(b, theta);
  const Report gr = check_gamma(b, gamma);
  const Check* gf = gr.first_failure();
  r.add("gamma_decomposition_valid", gf == nullptr, gf ? gf->name + " " + gf->witness : "");
  if (!gf)
    r.add("gamma_decomposition_round_trip", connection_from_gamma(b, gamma) == theta)
        .with("strong", descend(b, gamma).has_value());
  return r;
}

Report check_curvature(const Bundle& b, const ConnectionForm& theta, const TransitionMap* g_hat) {
  Report r;
  const FormValuedMap f = curvature(b, theta);
  const GammaMap gamma = gamma_from_connection(b, theta);
  const FormValuedMap via = curvature_via_gamma(b, gamma);
  const std::size_t nz = nonzero_entries(f);
  r.add("curvature_equals_via_gamma", f == via, first_difference(f, via))
      .with("nonzero", nz > 0)
      .with("nonzero_entries", static_cast<long long>(nz));
  r.add("curvature_annihilates_unit", f.apply(b.hopf().unit()).is_zero());
  r.add("curvature_form_valued", is_form_valued(f));
  if (g_hat) {
    const FormValuedMap closed = curvature_classical(b, *g_hat);
    r.add("curvature_classical_closed_form", f == closed, first_difference(f, closed));
    r.add("flat_iff_cocycle", (nz == 0) == is_cocycle(b.group(), *g_hat))
        .with("cocycle", is_cocycle(b.group(), *g_hat));
  }
  return r;
}

Report check_gauge_transform(const Bundle& b, const ConnectionForm& theta, const gauge::GaugeMap& tau,
                             const TransitionMap* g_hat) {
  const auto& g = b.group();
  if (tau.base_size() != b.base_size()) throw StructuralError("gauge map does not live on the base");
  Report r;
  const GammaMap gamma = gamma_from_connection(b, theta);
  const GammaMap transformed = gauge_transform_gamma(b, gamma, tau);
  const Check* gf = check_gamma(b, transformed).first_failure();
  r.add("transformed_gamma_valid", gf == nullptr, gf ? gf->name + " " + gf->witness : "");

  const Bundle shifted = b.with_trivialization(gauge::shifted_trivialization(b, tau));
  const FormValuedMap lhs = curvature_via_gamma(b, transformed);
  const FormValuedMap rhs = curvature(shifted, connection_from_gamma(shifted, gamma));
  r.add("curvature_gauge_compatible", lhs == rhs, first_difference(lhs, rhs));

  const GammaMap back = gauge_transform_gamma(b, transformed, gauge::gauge_inverse(g, tau));
  r.add("inverse_round_trip", back == gamma, first_difference(back, gamma));

  if (auto hat = descend(b, gamma)) {
    const GammaHat density = gauge_transform_gamma_hat(g, *hat, tau);
    const GammaHat abstract = gauge_transform_gamma_hat_abstract(g, *hat, tau);
    r.add("density_matches_abstract", density == abstract, first_difference(density, abstract));
    const Check* hf = check_gamma_hat(g, density).first_failure();
    r.add("transformed_gamma_hat_valid", hf == nullptr, hf ? hf->name + " " + hf->witness : "");
    if (!hf) r.add("lifted_density_matches", strong_from_gamma_hat(b, density) == transformed);
  }
  if (g_hat) {
    const TransitionMap moved = gauge_transform_transition(g, *g_hat, tau);
    const GammaMap expected = strong_from_gamma_hat(b, gamma_hat_from_transition(g, moved));
    r.add("classical_transition_law", expected == transformed, first_difference(expected, transformed));
  }
  return r;
}

}  // namespace qpb::connection
