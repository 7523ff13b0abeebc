#include <doctest.h>

#include "qpb/error.hpp"
#include "qpb/fixtures.hpp"
#include "qpb/gauge.hpp"

using namespace qpb;
using namespace qpb::gauge;

TEST_CASE("Xi from two trivializations of FIX-Z2") {
  const auto b = fixtures::z2();
  const std::vector<int> phi = b.trivialization();
  std::vector<int> shifted(phi.size());
  for (std::size_t p = 0; p < phi.size(); ++p) shifted[p] = b.group().mul(phi[p], 1);
  const BundleAutomorphism xi = xi_from_trivializations(b, phi, shifted);
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) CHECK(xi.target(x, a) == std::pair<int, int>{x, b.group().mul(1, a)});
  CHECK(check_xi_formula(b, phi, shifted).passed());
  CHECK(check_automorphism(b.group(), xi).passed());
  CHECK(tau_extract(b.group(), xi) == GaugeMap{{1, 1}});
  CHECK(tau_from_convolution(b, phi, shifted) == GaugeMap{{1, 1}});
  CHECK(check_tau_centrality(b, phi, shifted).passed());
}

TEST_CASE("Xi on FIX-PROD changing one orbit") {
  const auto b = fixtures::prod();
  const std::vector<int> phi = b.trivialization();
  std::vector<int> other = phi;
  for (int a = 0; a < 3; ++a) other[a] = (phi[a] + 1) % 3;  // orbit x only
  const BundleAutomorphism xi = xi_from_trivializations(b, phi, other);
  for (int a = 0; a < 3; ++a) {
    CHECK(xi.target(0, a) == std::pair<int, int>{0, (a + 1) % 3});
    CHECK(xi.target(1, a) == std::pair<int, int>{1, a});
  }
  CHECK(check_xi_formula(b, phi, other).passed());
}

TEST_CASE("left translation by tau on FIX-PROD") {
  const auto g = FiniteGroup::cyclic(3);
  const BundleAutomorphism xi = xi_from_tau(g, GaugeMap{{1, 0}});
  for (int a = 0; a < 3; ++a) {
    CHECK(xi.target(0, a).second == g.mul(1, a));
    CHECK(xi.target(1, a).second == a);
  }
  CHECK(check_automorphism(g, xi).passed());
}

TEST_CASE("gauge maps compose pointwise") {
  const auto g = FiniteGroup::cyclic(2);
  CHECK(gauge_compose(g, GaugeMap{{1, 0}}, GaugeMap{{1, 1}}) == GaugeMap{{0, 1}});
  CHECK(gauge_inverse(g, GaugeMap{{1, 0}}) == GaugeMap{{1, 0}});
  const auto s3 = FiniteGroup::symmetric(3);
  const GaugeMap t{{3, 4}};
  CHECK(gauge_compose(s3, t, gauge_inverse(s3, t)) == gauge_neutral(s3, 2));
}

TEST_CASE("gauge group laws") {
  CHECK(check_gauge_group(FiniteGroup::cyclic(2), 2).passed());
  CHECK(check_gauge_group(FiniteGroup::cyclic(3), 2).passed());
  const Report r = check_gauge_group(FiniteGroup::cyclic(3), 2);
  CHECK(std::get<long long>(*r.at("composition_law").value("gauge_maps")) == 9);
  // For a nonabelian group pullback composition reverses the order.
  const Report s = check_gauge_group(FiniteGroup::symmetric(3), 1);
  CHECK_FALSE(s.at("composition_law").passed);
  CHECK(s.at("composition_law_opposite_order").passed);
  CHECK(s.at("inverse_law").passed);
}

TEST_CASE("tau_extract refuses a fiber-dependent shift") {
  const auto g = FiniteGroup::cyclic(3);
  // (x,a) -> (x, a²): bijective on Z3 but not a left translation.
  const BundleAutomorphism squaring(1, 3, {0, 2, 1});
  CHECK_THROWS_AS(tau_extract(g, squaring), PreconditionError);
}

TEST_CASE("enumeration limit") {
  CHECK(enumerate_gauge_maps(FiniteGroup::cyclic(2), 2).size() == 4);
  CHECK_THROWS_AS(enumerate_gauge_maps(FiniteGroup::cyclic(10), 5), SizeLimitError);
}

TEST_CASE("shifted trivialization stays valid") {
  const auto b = fixtures::s3();
  const auto shifted = b.with_trivialization(shifted_trivialization(b, GaugeMap{{4}}));
  CHECK(bundle::validate_trivialization(shifted).passed());
}
