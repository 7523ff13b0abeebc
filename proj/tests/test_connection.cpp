#include <doctest.h>

#include "qpb/connection.hpp"
#include "qpb/error.hpp"
#include "qpb/fixtures.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::connection;
using calculus::Form;

namespace {

Scalar delta(int a, int b) { return Scalar(a == b ? 1 : 0); }

// Direct double group sum for (A ⋆_Δ C) with A, C of degree 1.
SpectralMap oracle_star_11(const FiniteGroup& g, const SpectralMap& a, const SpectralMap& c) {
  const int n = a.npoints(), order = g.order();
  SpectralMap out(n, 2, order);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int x = 0; x < order; ++x)
          for (int y = 0; y < order; ++y) out.at({p, q, r, g.mul(x, y)}) += a.at({p, q, x}) * c.at({q, r, y});
  return out;
}

}  // namespace

TEST_CASE("trivial connection density") {
  for (const auto& b : {fixtures::z2(), fixtures::s3(), fixtures::prod()}) {
    const ConnectionForm theta = trivial_connection(b);
    CHECK(theta == trivial_connection_closed_form(b));
    CHECK(check_connection_form(b, theta).passed());
    CHECK(theta.apply(b.hopf().unit()).is_zero());
  }
  const auto b = fixtures::z2();
  const ConnectionForm theta = trivial_connection(b);
  CHECK(theta.apply(Func::indicator({2}, {1})).at({0, 3}) == Scalar(1));
  // Δ_R1 Θ(α)(p;a) = α(a) − α(e)
  std::mt19937 rng(8);
  const Func alpha = testing::random_func(rng, {2});
  const Func image = bundle::canonical_map(b, theta.apply(alpha));
  for (int p = 0; p < 4; ++p)
    for (int a = 0; a < 2; ++a) CHECK(image.at({p, a}) == alpha[a] - alpha[0]);
}

TEST_CASE("splitting from the trivial connection") {
  const auto b = fixtures::z2();
  const ConnectionForm theta = trivial_connection(b);
  const Splitting sigma = splitting_from_theta(b, theta);
  CHECK(validate_splitting(b, sigma).passed());
  CHECK(theta_from_splitting(b, sigma) == theta);
  CHECK(splitting_from_theta(b, theta_from_splitting(b, sigma)).matrix == sigma.matrix);

  Splitting doubled = sigma;
  doubled.matrix *= Scalar(2);
  const Report r = validate_splitting(b, doubled);
  CHECK_FALSE(r.at("splitting").passed);

  CHECK_THROWS_AS(validate_splitting(b, Splitting{Matrix(3, 3)}), StructuralError);
}

TEST_CASE("splittings from random classical connections") {
  std::mt19937 rng(12);
  for (const auto& b : {fixtures::z2(), fixtures::prod()}) {
    const auto maps = enumerate_transition_maps(b.group(), b.base_size());
    for (int k = 0; k < 3; ++k) {
      const auto& g_hat = maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
      const Splitting sigma = splitting_from_theta(b, classical_connection(b, g_hat));
      CHECK(validate_splitting(b, sigma).passed());
      CHECK(check_vertical_projection(b, sigma).passed());
    }
  }
}

TEST_CASE("vertical projection") {
  const auto b = fixtures::z2();
  const ConnectionForm theta = classical_connection(b, fixtures::z2_transition());
  const Splitting sigma = splitting_from_theta(b, theta);
  std::mt19937 rng(13);
  const Form dh = calculus::lift_base_form(
      b, calculus::differential(Form::from_function(testing::random_func(rng, {2}))));
  CHECK(vertical_projection(b, sigma, dh).is_zero());
  const Func alpha = b.hopf().project_ker_counit(testing::random_func(rng, {2}));
  const Form fixed(theta.apply(alpha));
  CHECK(vertical_projection(b, sigma, fixed) == fixed);
  const Form f = testing::random_form(rng, 4, 1);
  const Form once = vertical_projection(b, sigma, f);
  CHECK(vertical_projection(b, sigma, once) == once);
}

TEST_CASE("tilde and prime coactions") {
  const auto b = fixtures::z2();
  const Func t = tilde_coaction(b, Func::indicator({4, 2}, {0, 1}));
  CHECK(t == Func::indicator({4, 2, 2}, {0, 1, 0}) + Func::indicator({4, 2, 2}, {2, 1, 1}));
  std::mt19937 rng(14);
  Func a = testing::random_func(rng, {4, 2});
  for (int p = 0; p < 4; ++p) a.at({p, 0}) = 0;
  const Func ta = tilde_coaction(b, a);
  for (int p = 0; p < 4; ++p)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) CHECK(ta.at({p, x, y}) == a.at({b.act(p, y), x}));
  for (const auto& bb : {fixtures::z2(), fixtures::s3(), fixtures::prod()}) CHECK(check_tilde_coaction(bb).passed());

  const Func f = testing::random_func(rng, {4});
  const Func pd = prime_coaction(b, calculus::differential(Form::from_function(f)));
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int x = 0; x < 2; ++x) CHECK(pd.at({p, q, x}) == f[b.act(q, x)] - f[b.act(p, x)]);
}

TEST_CASE("classical connection on FIX-Z2") {
  const auto b = fixtures::z2();
  const auto g_hat = fixtures::z2_transition();
  const ConnectionForm theta = classical_connection(b, g_hat);
  CHECK(theta.apply(Func::indicator({2}, {1})).at({0, 1}) == Scalar(1));
  const GammaHat gh = gamma_hat_from_transition(b.group(), g_hat);
  CHECK(gh.at({0, 1, 1}) == Scalar(1));
  CHECK(gh.at({0, 1, 0}) == Scalar(-1));
  CHECK(connection_from_gamma(b, strong_from_gamma_hat(b, gh)) == theta);
  CHECK(strong_connection_closed_form(b, gh) == theta);

  const auto all = enumerate_transition_maps(b.group(), 2);
  CHECK(all.size() == 4);
  for (const auto& m : all) CHECK(check_connection_form(b, classical_connection(b, m)).passed());
  CHECK(classical_connection(b, TransitionMap{2, {0, 0, 0, 0}}) == trivial_connection(b));
  CHECK_THROWS_AS(classical_connection(b, TransitionMap{2, {1, 0, 0, 0}}), PreconditionError);
}

TEST_CASE("strong connections from random gamma_hat") {
  std::mt19937 rng(15);
  for (const auto& b : {fixtures::z2(), fixtures::prod()}) {
    for (int k = 0; k < 5; ++k) {
      const GammaHat gh = testing::random_gamma_hat(rng, b.base_size(), b.order());
      const GammaMap gamma = strong_from_gamma_hat(b, gh);
      CHECK(check_gamma(b, gamma).passed());
      const ConnectionForm theta = connection_from_gamma(b, gamma);
      CHECK(check_connection_form(b, theta).passed());
      CHECK(theta == strong_connection_closed_form(b, gh));
      CHECK(gamma_from_connection(b, theta) == gamma);
      for (int a = 0; a < b.order(); ++a)
        CHECK(calculus::strongly_horizontal_membership(b, Form(gamma.apply(b.hopf().delta(a)))));
    }
  }
  SpectralMap bad(2, 1, 2);
  bad.at({0, 0, 1}) = 1;
  bad.at({0, 0, 0}) = -1;
  CHECK_THROWS_WITH_AS(strong_from_gamma_hat(fixtures::z2(), bad), doctest::Contains("gamma_hat_diagonal"),
                       PreconditionError);
}

TEST_CASE("star_delta against a double sum") {
  const auto b = fixtures::z2();
  const ConnectionForm theta = trivial_connection(b);
  CHECK(star_delta(b.group(), theta, theta) == oracle_star_11(b.group(), theta, theta));
  std::mt19937 rng(16);
  const auto s3 = FiniteGroup::symmetric(3);
  const SpectralMap x = testing::random_spectral(rng, 3, 1, 6), y = testing::random_spectral(rng, 3, 1, 6);
  CHECK(star_delta(s3, x, y) == oracle_star_11(s3, x, y));
  SpectralMap unit(3, 0, 6);
  for (int p = 0; p < 3; ++p) unit.at({p, s3.identity()}) = 1;
  CHECK(star_delta(s3, unit, x) == x);
  const SpectralMap z = testing::random_spectral(rng, 3, 0, 6);
  CHECK(star_delta(s3, star_delta(s3, x, z), y) == star_delta(s3, x, star_delta(s3, z, y)));
}

TEST_CASE("curvature") {
  const auto b = fixtures::z2();
  CHECK(curvature(b, trivial_connection(b)).density().is_zero());
  const auto g_hat = fixtures::z2_transition();
  const FormValuedMap f = curvature(b, classical_connection(b, g_hat));
  // x = x₀, x′ = x₁, x″ = x₀ with a = a″ = e: points 0, 1, 0.
  CHECK(f.apply(Func::indicator({2}, {1})).at({0, 1, 0}) == Scalar(1));
  CHECK(f == curvature_classical(b, g_hat));
  CHECK(f.apply(b.hopf().unit()).is_zero());
  CHECK_FALSE(is_cocycle(b.group(), g_hat));
  const TransitionMap flat{2, {0, 1, 1, 0}};
  CHECK(is_cocycle(b.group(), flat));
  CHECK(curvature(b, classical_connection(b, flat)).density().is_zero());

  // Closed form evaluated by hand for every entry.
  const auto& g = b.group();
  const auto& phi = b.trivialization();
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 2; ++c) {
          const int x = b.project(p), y = b.project(q), z = b.project(r);
          const Scalar expected =
              delta(g.mul(g.mul(g.inv(phi[p]), g.mul(g_hat(x, y), g_hat(y, z))), phi[r]), c) -
              delta(g.mul(g.mul(g.inv(phi[p]), g_hat(x, z)), phi[r]), c);
          CHECK(f.at({p, q, r, c}) == expected);
        }
}

TEST_CASE("curvature via gamma equals the definition") {
  std::mt19937 rng(17);
  for (const auto& b : {fixtures::z2(), fixtures::prod(), fixtures::s3()}) {
    const GammaMap gamma = strong_from_gamma_hat(b, testing::random_gamma_hat(rng, b.base_size(), b.order()));
    CHECK(curvature_via_gamma(b, gamma) == curvature(b, connection_from_gamma(b, gamma)));
  }
  const auto b = fixtures::z2();
  CHECK(curvature_via_gamma(b, GammaMap(4, 1, 2)).density().is_zero());
}

TEST_CASE("flat iff cocycle on FIX-PROD") {
  const auto b = fixtures::prod();
  int flat = 0;
  for (const auto& m : enumerate_transition_maps(b.group(), 2)) {
    const bool zero = curvature(b, classical_connection(b, m)).density().is_zero();
    CHECK(zero == is_cocycle(b.group(), m));
    flat += zero;
  }
  CHECK(flat == 3);  // ĝ(y,x) = ĝ(x,y)⁻¹
}

TEST_CASE("gauge transformation of gamma_hat") {
  std::mt19937 rng(18);
  const auto b = fixtures::prod();
  const auto& g = b.group();
  const GammaHat gh = testing::random_gamma_hat(rng, 2, 3);
  CHECK(gauge_transform_gamma_hat(g, gh, gauge::GaugeMap{{0, 0}}) == gh);
  const gauge::GaugeMap tau{{1, 2}};
  const GammaHat moved = gauge_transform_gamma_hat(g, gh, tau);
  CHECK(moved == gauge_transform_gamma_hat_abstract(g, gh, tau));
  CHECK(check_gamma_hat(g, moved).passed());
  CHECK(gauge_transform_gamma_hat(g, moved, gauge::gauge_inverse(g, tau)) == gh);

  const TransitionMap m{2, {0, 1, 2, 0}};
  CHECK(gauge_transform_gamma_hat(g, gamma_hat_from_transition(g, m), tau) ==
        gamma_hat_from_transition(g, gauge_transform_transition(g, m, tau)));
  CHECK(check_gauge_transform(b, classical_connection(b, m), tau, &m).passed());

  const auto s3 = FiniteGroup::symmetric(3);
  const GammaHat gs = testing::random_gamma_hat(rng, 2, 6);
  const gauge::GaugeMap ts{{3, 5}};
  CHECK(gauge_transform_gamma_hat(s3, gs, ts) == gauge_transform_gamma_hat_abstract(s3, gs, ts));
  const TransitionMap ms{2, {0, 4, 1, 0}};
  CHECK(gauge_transform_gamma_hat(s3, gamma_hat_from_transition(s3, ms), ts) ==
        gamma_hat_from_transition(s3, gauge_transform_transition(s3, ms, ts)));
}

TEST_CASE("curvature is gauge compatible") {
  std::mt19937 rng(19);
  for (const auto& b : {fixtures::z2(), fixtures::prod()}) {
    const GammaMap gamma = strong_from_gamma_hat(b, testing::random_gamma_hat(rng, b.base_size(), b.order()));
    for (const auto& tau : gauge::enumerate_gauge_maps(b.group(), b.base_size())) {
      const auto shifted = b.with_trivialization(gauge::shifted_trivialization(b, tau));
      CHECK(curvature_via_gamma(b, gauge_transform_gamma(b, gamma, tau)) ==
            curvature(shifted, connection_from_gamma(shifted, gamma)));
    }
  }
}

TEST_CASE("connection suite reports") {
  const auto b = fixtures::z2();
  const auto g_hat = fixtures::z2_transition();
  const ConnectionForm theta = classical_connection(b, g_hat);
  CHECK(check_connection(b, theta).passed());
  const Report c = check_curvature(b, theta, &g_hat);
  CHECK(c.passed());
  CHECK(std::get<bool>(*c.at("curvature_equals_via_gamma").value("nonzero")));

  ConnectionForm broken = theta;
  broken.at({0, 1, 1}) += Scalar(1);
  const Report r = check_connection(b, broken);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.at("annihilates_unit").passed);
  CHECK_THROWS_WITH_AS(splitting_from_theta(b, broken), doctest::Contains("annihilates_unit"), PreconditionError);
}
