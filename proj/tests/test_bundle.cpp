#include <doctest.h>

#include "qpb/bundle.hpp"
#include "qpb/error.hpp"
#include "qpb/fixtures.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::bundle;

TEST_CASE("coaction examples") {
  const Bundle z2 = fixtures::z2();
  const Func d = coaction(z2, Func::indicator({4}, {0}));
  CHECK(d == Func::indicator({4, 2}, {0, 0}) + Func::indicator({4, 2}, {2, 1}));
  CHECK(coaction(z2, Func::constant({4}, 1)) == Func::constant({4, 2}, 1));

  const Bundle s3 = fixtures::s3();
  const FiniteGroup& g = s3.group();
  const Func ds = coaction(s3, Func::indicator({6}, {g.identity()}));
  Func expected({6, 6});
  for (int a = 0; a < 6; ++a) expected.at({a, g.inv(a)}) = 1;
  CHECK(ds == expected);
}

TEST_CASE("comodule algebra axioms") {
  for (const auto& b : {fixtures::z2(), fixtures::s3(), fixtures::prod()}) CHECK(check_comodule_algebra(b).passed());
  const Report bad = check_comodule_algebra(fixtures::corrupted_z2());
  CHECK_FALSE(bad.at("counit").passed);
  CHECK(bad.at("counit").witness.rfind("p=", 0) == 0);
}

TEST_CASE("canonical map and freeness ranks") {
  const Bundle z2 = fixtures::z2();
  CHECK(canonical_map(z2, Func::indicator({4, 4}, {0, 2})) == Func::indicator({4, 2}, {0, 1}));
  const Matrix m = canonical_map_matrix(z2);
  CHECK(m.rows() == 8);
  CHECK(m.cols() == 16);
  CHECK(rank_of(m) == 8);
  CHECK(rank_of(canonical_map_matrix(fixtures::s3())) == 36);
  CHECK(rank_of(canonical_map_matrix(fixtures::prod())) == 18);

  const Report nf = check_freeness(fixtures::nonfree());
  CHECK_FALSE(nf.at("free").passed);
  CHECK(nf.at("free").witness == "(0,g)");
  CHECK(std::get<long long>(*nf.at("canonical_map_surjective").value("rank")) == 2);
  CHECK(std::get<long long>(*nf.at("canonical_map_surjective").value("target_dim")) == 4);
}

TEST_CASE("invariants and the base injection") {
  const Bundle z2 = fixtures::z2();
  const SubspaceBasis inv = invariants(z2);
  REQUIRE(inv.dim() == 2);
  CHECK(inv.vectors()[0] == (Func::indicator({4}, {0}) + Func::indicator({4}, {2})).values());
  CHECK(inv.vectors()[1] == (Func::indicator({4}, {1}) + Func::indicator({4}, {3})).values());
  CHECK(invariants(fixtures::s3()).dim() == 1);
  CHECK(invariants(fixtures::s3()).vectors()[0] == Func::constant({6}, 1).values());
  CHECK(invariants(fixtures::nonfree()).dim() == 2);

  CHECK(inject_base(z2, Func::indicator({2}, {0})) == Func::indicator({4}, {0}) + Func::indicator({4}, {2}));
  for (const auto& b : {fixtures::z2(), fixtures::s3(), fixtures::prod(), fixtures::nonfree()})
    CHECK(base_and_injection(b).report.passed());
}

TEST_CASE("product bundle") {
  const Bundle p = fixtures::prod();
  CHECK(p.total_size() == 6);
  CHECK(p.base_size() == 2);
  CHECK(p.is_free());
  CHECK(p.act(1, 2) == 0);  // (x,c1)◁c2 = (x,e)
}

TEST_CASE("trivializations and sections") {
  const Bundle z2 = fixtures::z2();
  const Report r = validate_trivialization(z2);
  CHECK(r.passed());
  CHECK(section(z2) == std::vector<int>{0, 1});
  CHECK(validate_trivialization(fixtures::s3()).passed());
  CHECK(section(fixtures::s3()) == std::vector<int>{fixtures::s3().group().identity()});

  const Bundle broken = z2.with_trivialization({0, 0, 0, 1});
  const Report rb = validate_trivialization(broken);
  CHECK_FALSE(rb.passed());
  const std::string w = rb.at("equivariance").witness;
  CHECK((w == "(0,g)" || w == "(2,g)"));

  for (const auto& b : {fixtures::z2(), fixtures::s3(), fixtures::prod()})
    CHECK(validate_trivialization(b.with_trivialization(synthesize_trivialization(b))).passed());
  CHECK_THROWS_AS(fixtures::nonfree().trivialization(), ConfigurationError);
}

TEST_CASE("Psi and its inverse") {
  const Bundle z2 = fixtures::z2();
  CHECK(psi_apply(z2, tensor_identify(Func::indicator({2}, {0}), Func::indicator({2}, {1}))) ==
        Func::indicator({4}, {2}));
  CHECK(psi_inverse(z2, Func::indicator({4}, {2})) == Func::indicator({2, 2}, {0, 1}));
  for (const auto& b : {fixtures::z2(), fixtures::s3(), fixtures::prod()}) CHECK(check_psi_isomorphism(b).passed());
}

TEST_CASE("convolution algebra") {
  const Bundle z2 = fixtures::z2();
  const HPMap phi = phi_from_trivialization(z2);
  for (int p = 0; p < 4; ++p) CHECK(phi.at({p, p < 2 ? 0 : 1}) == Scalar(1));
  CHECK(conv_inverse_of_hom(z2, phi) == phi);
  CHECK(star(z2, phi, conv_inverse_of_hom(z2, phi)) == convolution_unit(z2));

  const Bundle s3 = fixtures::s3();
  const HPMap inv = conv_inverse_of_hom(s3, phi_from_trivialization(s3));
  for (int p = 0; p < 6; ++p) CHECK(inv.at({p, s3.group().inv(p)}) == Scalar(1));

  for (const auto& b : {fixtures::z2(), fixtures::s3(), fixtures::prod()}) CHECK(check_convolution_identities(b).passed());

  std::mt19937 rng(21);
  const HPMap bad = testing::random_spectral(rng, 4, 0, 2);
  CHECK_THROWS_AS(conv_inverse_of_hom(z2, bad), PreconditionError);

  // Associativity and unit on random maps, against a direct double sum.
  for (const auto& b : {fixtures::z2(), fixtures::s3()}) {
    const int n = b.total_size(), order = b.order();
    const auto& g = b.group();
    for (int k = 0; k < 5; ++k) {
      const HPMap u = testing::random_spectral(rng, n, 0, order);
      const HPMap v = testing::random_spectral(rng, n, 0, order);
      const HPMap w = testing::random_spectral(rng, n, 0, order);
      CHECK(star(b, star(b, u, v), w) == star(b, u, star(b, v, w)));
      CHECK(star(b, convolution_unit(b), u) == u);
      CHECK(star(b, u, convolution_unit(b)) == u);
      const HPMap uv = star(b, u, v);
      for (int p = 0; p < n; ++p)
        for (int c = 0; c < order; ++c) {
          Scalar s;
          for (int a = 0; a < order; ++a) s += u.at({p, a}) * v.at({p, g.mul(g.inv(a), c)});
          CHECK(uv.at({p, c}) == s);
        }
    }
  }
}
