#include <doctest.h>

#include <algorithm>
#include <array>

#include "qpb/error.hpp"
#include "qpb/func.hpp"
#include "qpb/group.hpp"
#include "qpb/linalg.hpp"
#include "qpb/scalar.hpp"
#include "support.hpp"

using namespace qpb;

TEST_CASE("scalar literals round trip") {
  CHECK(Scalar::parse("3").str() == "3");
  CHECK(Scalar::parse("-1/2").str() == "-1/2");
  CHECK(Scalar::parse("2/5i").str() == "2/5i");
  CHECK(Scalar::parse("-i").str() == "-i");
  CHECK(Scalar::parse("2/4").str() == "1/2");
  const Scalar z = Scalar::parse("1/3+2/5i");
  CHECK(z.re() == mpq_class(1, 3));
  CHECK(z.im() == mpq_class(2, 5));
  CHECK(z.str() == "1/3+2/5i");
  CHECK_THROWS_AS(Scalar::parse("0.5"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(""), Error);
}

TEST_CASE("scalar field arithmetic is exact") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.inverse() == Scalar(1));
    }
    // (x+iy)(x-iy) = x² + y²
    CHECK(a * a.conj() == Scalar(a.re() * a.re() + a.im() * a.im()));
  }
  CHECK(Scalar::parse("i") * Scalar::parse("i") == Scalar(-1));
}

TEST_CASE("Z2 group table passes, broken identity is caught") {
  const FiniteGroup z2 = FiniteGroup::from_table({{0, 1}, {1, 0}}, 0, {"e", "g"});
  CHECK(validate_group(z2).passed());
  const FiniteGroup bad = FiniteGroup::from_table({{0, 0}, {1, 0}}, 0, {"e", "g"});
  const Report r = validate_group(bad);
  CHECK_FALSE(r.at("identity").passed);
  CHECK(r.at("identity").witness == "(e,g)");
}

TEST_CASE("malformed group table names the row") {
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1}, {1}}), doctest::Contains("row 1"), StructuralError);
}

TEST_CASE("S3 agrees with direct permutation composition") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.label(s3.identity()) == "e");
  CHECK(validate_group(s3).passed());
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      CHECK(perms[s3.mul(a, b)] == ab);
    }
}

TEST_CASE("cyclic and product groups") {
  for (int n : {1, 2, 3, 4, 5}) CHECK(validate_group(FiniteGroup::cyclic(n)).passed());
  const FiniteGroup k4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(k4.order() == 4);
  CHECK(validate_group(k4).passed());
  for (int a = 0; a < 4; ++a) CHECK(k4.mul(a, a) == k4.identity());
}

TEST_CASE("action validation") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const RightAction fix_z2 = RightAction::from_table({{0, 2}, {1, 3}, {2, 0}, {3, 1}}, 2);
  CHECK(validate_action(z2, fix_z2).passed());
  const Report trivial = validate_action(z2, RightAction::trivial(2, z2));
  CHECK(trivial.at("unit").passed);
  CHECK(trivial.at("compatibility").passed);
  CHECK_FALSE(trivial.at("free").passed);
  CHECK(trivial.at("free").witness == "(0,g)");
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(validate_action(s3, RightAction::right_multiplication(s3)).passed());
  CHECK_THROWS_WITH(RightAction::from_table({{0, 2}, {1, 3}, {2, 0}, {3, 7}}, 2),
                    "index out of range at action[3][1]");
}

TEST_CASE("pointwise product and tensor identification") {
  std::mt19937 rng(11);
  const Func f = testing::random_func(rng, {4}), g = testing::random_func(rng, {4});
  const Func fg = pointwise_mul(f, g);
  for (int i = 0; i < 4; ++i) CHECK(fg[i] == f[i] * g[i]);
  CHECK(pointwise_mul(Func::constant({4}, 1), g) == g);
  CHECK(pointwise_mul(Func::indicator({4}, {0}), Func::indicator({4}, {1})).is_zero());
  CHECK_THROWS_AS(pointwise_mul(f, Func({3})), StructuralError);

  const Func x = testing::random_func(rng, {2}), y = testing::random_func(rng, {3});
  const Func xy = tensor_identify(x, y);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(xy.at({i, j}) == x[i] * y[j]);
  CHECK(tensor_identify(Func::constant({2}, 1), Func::constant({3}, 1)) == Func::constant({2, 3}, 1));
  CHECK(tensor_identify(Func::indicator({2}, {1}), Func::indicator({3}, {2})) == Func::indicator({2, 3}, {1, 2}));
  const Func x2 = testing::random_func(rng, {2});
  CHECK(tensor_identify(x + x2, y) == tensor_identify(x, y) + tensor_identify(x2, y));
}

TEST_CASE("entry cap guards dense tables") {
  CHECK_THROWS_AS(check_entry_cap(11, 10, "table"), SizeLimitError);
  CHECK_NOTHROW(check_entry_cap(10, 10, "table"));
}

TEST_CASE("rank and kernel") {
  Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  auto rk = rank_and_kernel(id);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.dim() == 0);

  rk = rank_and_kernel(Matrix(2, 5));
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.dim() == 5);

  Matrix ones(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ones(i, j) = 1;
  rk = rank_and_kernel(ones);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.dim() == 1);
  CHECK(rk.kernel.vectors()[0] == Vector{Scalar(1), Scalar(-1)});

  std::mt19937 rng(3);
  for (int k = 0; k < 20; ++k) {
    Matrix m(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = (i + j + k) % 3 == 0 ? Scalar(0) : testing::random_scalar(rng);
    rk = rank_and_kernel(m);
    CHECK(rk.rank + rk.kernel.dim() == 6);
    for (const auto& v : rk.kernel.vectors())
      for (const auto& s : m.apply(v)) CHECK(s.is_zero());
  }
}

TEST_CASE("subspace membership is canonical") {
  const Vector a{Scalar(1), Scalar(2), Scalar(0)}, b{Scalar(0), Scalar(1), Scalar(1)};
  const auto s1 = SubspaceBasis::span_of(3, {a, b});
  const auto s2 = SubspaceBasis::span_of(3, {a, Vector{Scalar(1), Scalar(3), Scalar(1)}});
  CHECK(s1 == s2);
  CHECK(s1.contains(Vector{Scalar(2), Scalar(5), Scalar(1)}));
  CHECK_FALSE(s1.contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));
}
