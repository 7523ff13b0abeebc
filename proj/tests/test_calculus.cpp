#include <doctest.h>

#include "qpb/calculus.hpp"
#include "qpb/error.hpp"
#include "qpb/fixtures.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::calculus;

namespace {

Scalar sign(int j) { return Scalar(j % 2 == 0 ? 1 : -1); }

// d by the alternating-sum formula, written out per degree.
Form oracle_d(const Form& f) {
  const int n = f.npoints();
  Form out(n, f.degree() + 1);
  std::vector<int> idx(f.degree() + 2), dropped;
  for (std::size_t t = 0; t < out.values().size(); ++t) {
    out.values().unflatten(t, idx);
    Scalar s;
    for (int j = 0; j <= f.degree() + 1; ++j) {
      dropped.clear();
      for (int k = 0; k <= f.degree() + 1; ++k)
        if (k != j) dropped.push_back(idx[k]);
      s += sign(j) * f.values().at(dropped);
    }
    out.values()[t] = s;
  }
  return out;
}

}  // namespace

TEST_CASE("d of a function is a difference") {
  std::mt19937 rng(1);
  const Func f = testing::random_func(rng, {4});
  const Form df = differential(Form::from_function(f));
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) CHECK(df.at({p, q}) == f[q] - f[p]);
  CHECK(validate_form(df).passed());
}

TEST_CASE("d squares to zero and matches the alternating sum") {
  std::mt19937 rng(2);
  for (int deg = 0; deg <= 1; ++deg) {
    const Form f = testing::random_form(rng, 4, deg);
    const Form df = differential(f);
    CHECK(df == oracle_d(f));
    CHECK(differential(df).is_zero());
  }
  const Form f2 = testing::random_form(rng, 4, 2);
  CHECK(differential(f2) == oracle_d(f2));
  CHECK(check_d_squared(f2).passed());
  CHECK_THROWS_AS(differential(differential(f2)), StructuralError);
  // A non-form (nonzero on a diagonal) still has d² = 0: d² vanishes on all cochains.
  Form g(3, 1);
  g.at({1, 1}) = 1;
  CHECK(check_d_squared(g).passed());
}

TEST_CASE("product of exact one-forms") {
  std::mt19937 rng(3);
  const Func f = testing::random_func(rng, {4}), g = testing::random_func(rng, {4});
  const Form prod = concat_product(differential(Form::from_function(f)), differential(Form::from_function(g)));
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r) CHECK(prod.at({p, q, r}) == (f[q] - f[p]) * (g[r] - g[q]));
}

TEST_CASE("graded Leibniz rule and associativity") {
  std::mt19937 rng(4);
  for (int k = 0; k < 10; ++k) {
    const Form a = testing::random_form(rng, 4, k % 2), b = testing::random_form(rng, 4, (k / 2) % 2);
    const Form lhs = differential(concat_product(a, b));
    const Form rhs = concat_product(differential(a), b) + sign(a.degree()) * concat_product(a, differential(b));
    CHECK(lhs == rhs);
    const Form c = testing::random_form(rng, 4, 0);
    CHECK(concat_product(concat_product(a, b), c) == concat_product(a, concat_product(b, c)));
  }
}

TEST_CASE("form validation and degree bound") {
  Form f(3, 1);
  f.at({1, 1}) = 1;
  const Report r = validate_form(f);
  CHECK_FALSE(r.passed());
  CHECK(r.at("adjacent_diagonals").witness == "(1,1)");
  CHECK_THROWS_AS(Form(3, 4), StructuralError);
  CHECK_THROWS_AS(Form(100, 3, 1000), SizeLimitError);
}

TEST_CASE("lifting base forms") {
  const auto b = fixtures::z2();
  Form base(2, 1);
  base.at({0, 1}) = 1;
  const Form lifted = lift_base_form(b, base);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) CHECK(lifted.at({p, q}) == Scalar(b.project(p) == 0 && b.project(q) == 1 ? 1 : 0));
}

TEST_CASE("canonical map on one-forms") {
  const auto b = fixtures::z2();
  Form f(4, 1);
  f.at({0, 2}) = 1;
  CHECK(canonical_map_forms(b, f) == Func::indicator({4, 2}, {0, 1}));
}

TEST_CASE("horizontal forms") {
  const auto b = fixtures::z2();
  const SubspaceBasis hor = horizontal_basis(b);
  CHECK(hor.dim() == 8);
  std::mt19937 rng(5);
  const Form dh = lift_base_form(b, differential(Form::from_function(testing::random_func(rng, {2}))));
  CHECK(horizontal_membership(b, dh));
  Form vertical(4, 1);
  vertical.at({0, 2}) = 1;
  CHECK_FALSE(horizontal_membership(b, vertical));
  CHECK(canonical_map_forms(b, dh).is_zero());
}

TEST_CASE("strongly horizontal forms") {
  const auto b = fixtures::prod();
  std::mt19937 rng(6);
  const Form base2 = testing::random_form(rng, 2, 2);
  const Func f = testing::random_func(rng, {6});
  const Form shor = concat_product(lift_base_form(b, base2), Form::from_function(f));
  CHECK(strongly_horizontal_membership(b, shor));
  Form other(6, 1);
  other.at({0, 3}) = 1;
  other.at({1, 3}) = 2;
  CHECK_FALSE(strongly_horizontal_membership(b, other));
}

TEST_CASE("exact sequence dimensions") {
  struct Expected {
    bundle::Bundle b;
    long long dims[4];
  };
  for (const auto& [b, dims] : {Expected{fixtures::z2(), {12, 4, 8, 8}}, Expected{fixtures::s3(), {30, 30, 0, 0}},
                                Expected{fixtures::prod(), {30, 12, 18, 18}}}) {
    const Report r = check_exactness(b);
    CHECK(r.passed());
    const Check& c = r.at("restricted_map_surjective");
    CHECK(std::get<long long>(*c.value("omega1_dim")) == dims[0]);
    CHECK(std::get<long long>(*c.value("rank")) == dims[1]);
    CHECK(std::get<long long>(*c.value("kernel_dim")) == dims[2]);
    CHECK(std::get<long long>(*c.value("horizontal_dim")) == dims[3]);
  }
  CHECK_THROWS_WITH_AS(check_exactness(fixtures::nonfree()), doctest::Contains("(0,g)"), PreconditionError);
}
