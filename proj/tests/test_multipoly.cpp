#include <doctest.h>

#include <random>

#include "chowbound/multipoly.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace chowbound;
using test::mono;

namespace {

const Shape kPlane{0, 2};

ZPoly plane(int d, std::vector<std::pair<std::initializer_list<int>, long>> terms) {
  std::vector<ZPoly::Term> t;
  for (auto& [e, c] : terms) t.push_back({mono(e), BigInt(c)});
  return ZPoly::from_terms(Integers{}, kPlane, {d}, std::move(t));
}

ZPoly X(int i) { return ZPoly::variable(Integers{}, kPlane, 0, i); }

std::vector<int> random_md(std::mt19937_64& rng, const Shape& shape, int maxdeg) {
  std::vector<int> md(shape.blocks());
  for (auto& x : md) x = static_cast<int>(rng() % (maxdeg + 1));
  return md;
}

}  // namespace

TEST_CASE("mh_mul examples") {
  CHECK((X(0) + X(1)) * (X(0) - X(1)) == plane(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}}));
  const Shape two{1, 1};
  const ZPoly u0 = ZPoly::variable(Integers{}, two, 0, 0), v1 = ZPoly::variable(Integers{}, two, 1, 1);
  const ZPoly prod = u0 * v1;
  CHECK(prod.multidegree() == std::vector<int>{1, 1});
  CHECK(prod.size() == 1);
  CHECK(prod.leading().exps == mono({1, 0, 0, 1}));
  CHECK_THROWS_AS(X(0) * u0, StructuralError);
  CHECK_THROWS_AS(X(0) + X(0) * X(1), StructuralError);
}

TEST_CASE("mh_mul over F_9 splits X0^2 + X1^2") {
  const FiniteField K = FiniteField::construct(3, 2);
  const FPoly x0 = FPoly::variable(K, kPlane, 0, 0), x1 = FPoly::variable(K, kPlane, 0, 1);
  const auto a = K.generator();
  const FPoly prod = (x0 + x1.scaled(a)) * (x0 - x1.scaled(a));
  CHECK(prod == x0 * x0 + x1 * x1);
  // Frobenius in characteristic 2: (X0 + X1)^2 = X0^2 + X1^2
  const FiniteField F2 = FiniteField::construct(2, 1);
  const FPoly y0 = FPoly::variable(F2, kPlane, 0, 0), y1 = FPoly::variable(F2, kPlane, 0, 1);
  CHECK((y0 + y1).pow(2) == y0 * y0 + y1 * y1);
}

TEST_CASE("from_terms rejects non-homogeneous terms and collects like terms") {
  CHECK_THROWS_AS(plane(2, {{{2, 0, 0}, 1}, {{1, 0, 0}, 1}}), StructuralError);
  const ZPoly f = plane(1, {{{1, 0, 0}, 2}, {{1, 0, 0}, -2}, {{0, 1, 0}, 3}});
  CHECK(f.size() == 1);
  CHECK(f.coeff(mono({0, 1, 0})) == 3);
  CHECK(f.coeff(mono({1, 0, 0})) == 0);
  CHECK_THROWS_AS(ZPoly::from_terms(Integers{}, Shape{3, 3}, {1, 1, 1, 1}, {}), InputError);
}

TEST_CASE("content_primitive examples") {
  auto [c, g] = content_primitive(plane(2, {{{2, 0, 0}, 6}, {{0, 1, 1}, -4}}));
  CHECK(c == 2);
  CHECK(g == plane(2, {{{2, 0, 0}, 3}, {{0, 1, 1}, -2}}));
  auto [c2, g2] = content_primitive(plane(1, {{{1, 0, 0}, -5}, {{0, 0, 1}, 10}}));
  CHECK(c2 == 5);
  CHECK(g2 == plane(1, {{{1, 0, 0}, -1}, {{0, 0, 1}, 2}}) * ZPoly::constant(Integers{}, kPlane, -1));
  CHECK_THROWS(content_primitive(ZPoly(Integers{}, kPlane, {2})));
}

TEST_CASE("substitute examples") {
  // X0 -> X1 + X2, X1 -> X0, X2 -> X2 applied to X0^2 - X1 X2
  const ZPoly f = X(0) * X(0) - X(1) * X(2);
  const ZPoly g = substitute(f, {X(1) + X(2), X(0), X(2)});
  CHECK(g == (X(1) + X(2)).pow(2) - X(0) * X(2));
  // images of mixed degree inside one block are rejected
  CHECK_THROWS_AS(substitute(f, {X(1) * X(1), X(0), X(2)}), StructuralError);
  CHECK_THROWS_AS(substitute(f, {X(1), X(0)}), StructuralError);
}

TEST_CASE("reduce_mod_p examples") {
  const ZPoly f = plane(2, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 2, 0}, 6}});
  const FiniteField F3 = FiniteField::construct(3, 1);
  const FPoly fr = reduce_mod_p(f, F3);
  CHECK(fr.size() == 2);
  const FiniteField F5 = FiniteField::construct(5, 1);
  const FPoly conic = reduce_mod_p(plane(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -6}}), F5);
  CHECK(conic.coeff(mono({0, 0, 2})) == F5.from_int(4));
  CHECK(reduce_mod_p(plane(1, {{{1, 0, 0}, 6}}), F3).is_zero());
}

TEST_CASE("coeff_vector examples") {
  const CoeffVector v = coeff_vector(ZPoly::from_terms(Integers{}, Shape{0, 1}, {2},
                                                       {{mono({2, 0}), 1}, {mono({1, 1}), 1}}));
  CHECK(v.coords == std::vector<BigInt>{1, 1, 0});
  CHECK(coeff_vector(X(2)).coords == std::vector<BigInt>{0, 0, 1});
  CHECK(basis_monomials(Shape{1, 2}, 2).size() == 36);
  CHECK(basis_size(Shape{1, 2}, 2) == 36);
  for (int r = 0; r <= 2; ++r)
    for (int s = 1; s <= 3; ++s)
      for (int x = 0; x <= 3; ++x) {
        if ((r + 1) * (s + 1) > kMaxVars) continue;
        CHECK(basis_size(Shape{r, s}, x) == oracle::count_monomials(x, r, s));
        CHECK(basis_monomials(Shape{r, s}, x).size() == oracle::count_monomials(x, r, s));
      }
  const ZPoly mixed = ZPoly::variable(Integers{}, Shape{1, 1}, 0, 0);
  CHECK_THROWS_AS(coeff_vector(mixed), StructuralError);
  CHECK(is_primitive_normalized(CoeffVector{0, 1, 1, {0, 2, 3}}));
  CHECK_FALSE(is_primitive_normalized(CoeffVector{0, 1, 1, {0, -2, 3}}));
  CHECK(primitive_normalized(CoeffVector{0, 1, 1, {0, -4, 6}}).coords == std::vector<BigInt>{0, 2, -3});
  CHECK_THROWS(primitive_normalized(CoeffVector{0, 1, 1, {0, 0, 0}}));
}

TEST_CASE("ring axioms on random forms") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Shape shape{static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2)};
    const auto md1 = random_md(rng, shape, 2), md2 = random_md(rng, shape, 2), md3 = random_md(rng, shape, 2);
    const ZPoly f = oracle::random_form(rng, shape, md1, 9);
    const ZPoly g = oracle::random_form(rng, shape, md2, 9);
    const ZPoly g2 = oracle::random_form(rng, shape, md2, 9);
    const ZPoly h = oracle::random_form(rng, shape, md3, 9);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + g2) == f * g + f * g2);
    CHECK((g + g2) - g2 == g);
    const auto q = (f * g).divide_exact(g);
    REQUIRE(q);
    CHECK(*q == f);
  }
}

TEST_CASE("divide_exact reports non-divisibility") {
  CHECK_FALSE((X(0) * X(0) + X(1) * X(1)).divide_exact(X(0) + X(1)).has_value());
  CHECK_FALSE((X(0) * X(1)).divide_exact(X(2)).has_value());
  CHECK_FALSE((X(0).scaled(3)).divide_exact(X(0).scaled(2)).has_value());
  CHECK_THROWS_AS((void)X(0).divide_exact(ZPoly(Integers{}, kPlane, {1})), std::domain_error);
}

TEST_CASE("Gauss's lemma: content is multiplicative") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Shape shape{static_cast<int>(rng() % 2), 2};
    const ZPoly f = oracle::random_form(rng, shape, random_md(rng, shape, 2), 12);
    const ZPoly g = oracle::random_form(rng, shape, random_md(rng, shape, 2), 12);
    CHECK(content(f * g) == content(f) * content(g));
  }
}

TEST_CASE("reduction mod p is a ring homomorphism") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField K = FiniteField::construct(p, 1);
    for (int i = 0; i < 60; ++i) {
      const Shape shape{static_cast<int>(rng() % 2), 2};
      const auto md = random_md(rng, shape, 2);
      const ZPoly f = oracle::random_form(rng, shape, md, 20);
      const ZPoly f2 = oracle::random_form(rng, shape, md, 20);
      const ZPoly g = oracle::random_form(rng, shape, random_md(rng, shape, 2), 20);
      CHECK(reduce_mod_p(f * g, K) == reduce_mod_p(f, K) * reduce_mod_p(g, K));
      CHECK(reduce_mod_p(f + f2, K) == reduce_mod_p(f, K) + reduce_mod_p(f2, K));
    }
  }
}

TEST_CASE("coeff_vector round trip") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const Shape shape{static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2)};
    const int x = static_cast<int>(rng() % 4);
    const ZPoly f = oracle::random_form(rng, shape, std::vector<int>(shape.blocks(), x), 30);
    const CoeffVector v = coeff_vector(f);
    CHECK(BigInt(static_cast<unsigned long>(v.coords.size())) == basis_size(shape, x));
    CHECK(to_poly(v) == f);
    // first nonzero coordinate is the leading term
    auto it = std::find_if(v.coords.begin(), v.coords.end(), [](const BigInt& c) { return c != 0; });
    REQUIRE(it != v.coords.end());
    CHECK(*it == f.leading().coeff);
  }
}
