#include <doctest.h>

#include "qpb/error.hpp"
#include "qpb/hopf.hpp"
#include "support.hpp"

using namespace qpb;
using hopf::HopfAlgebra;

TEST_CASE("Hopf axioms on small groups") {
  const FiniteGroup groups[] = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                                FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
                                FiniteGroup::symmetric(3)};
  for (const auto& g : groups) {
    const Report r = hopf::check_hopf_axioms(HopfAlgebra(g));
    CHECK(r.passed());
    CHECK(r.size() == 8);
  }
}

TEST_CASE("coproduct, counit and antipode on Z3 evaluated directly") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const HopfAlgebra h(z3);
  std::mt19937 rng(5);
  const Func alpha = testing::random_func(rng, {3});
  const Func d = h.coproduct(alpha);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(d.at({a, b}) == alpha[(a + b) % 3]);
  CHECK(h.counit(alpha) == alpha[0]);
  const Func s = h.antipode(alpha);
  for (int a = 0; a < 3; ++a) CHECK(s[a] == alpha[(3 - a) % 3]);
  const Func tilde = h.project_ker_counit(alpha);
  CHECK(h.counit(tilde).is_zero());
  CHECK(tilde + h.counit(alpha) * h.unit() == alpha);
}

TEST_CASE("adjoint coaction on S3 matches conjugation") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const HopfAlgebra h(s3);
  for (int c = 0; c < 6; ++c) {
    const Func ad = h.adjoint_coaction(h.delta(c));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        CHECK(ad.at({a, b}) == Scalar(s3.mul(s3.mul(s3.inv(b), a), b) == c ? 1 : 0));
  }
  // Abelian: Ad_R(α) = α ⊗ 1.
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const HopfAlgebra hz(z4);
  std::mt19937 rng(9);
  const Func alpha = testing::random_func(rng, {4});
  CHECK(hz.adjoint_coaction(alpha) == tensor_identify(alpha, hz.unit()));
}

TEST_CASE("an invalid group is refused") {
  const FiniteGroup bad = FiniteGroup::from_table({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(HopfAlgebra{bad}, PreconditionError);
}
