#include <doctest.h>

#include <cmath>

#include "chowbound/combinat.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace chowbound;
using test::close;
using test::rel_close;
using test::to_double;

TEST_CASE("rank_N examples") {
  CHECK(rank_N(1, 0, 2) == 2);
  CHECK(rank_N(1, 1, 2) == 8);
  CHECK(rank_N(2, 1, 2) == 35);
}

TEST_CASE("rank_N matches monomial enumeration") {
  for (int x = 0; x <= 4; ++x)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 3; ++s) CHECK(rank_N(x, r, s) + 1 == oracle::count_monomials(x, r, s));
}

TEST_CASE("sigma examples and partial sums") {
  CHECK(sigma(0) == 0);
  CHECK(sigma(1) == BigRat(1, 2));
  CHECK(sigma(2) == BigRat(5, 4));
  for (unsigned x = 0; x <= 50; ++x) CHECK(sigma(x) == oracle::sigma_partial_sum(x));
}

TEST_CASE("deg_W examples") {
  CHECK(deg_W({2, 2, 1, 1}) == 6435);
  CHECK(deg_W({2, 3, 1, 1}) == 145008513);
  CHECK(deg_W({2, 2, 0, 1}) == 3);
  // independent: Pascal's triangle with N_1 = 8, N_2 = 35
  CHECK(deg_W({2, 3, 1, 1}) == BigRat(oracle::pascal_binomial(43, 8)));
  BigRat half(oracle::pascal_binomial(16, 8), 2);
  half.canonicalize();
  CHECK(deg_W({2, 2, 1, 1}) == half);
}

TEST_CASE("deg_W symmetry and integrality") {
  for (int s = 2; s <= 3; ++s)
    for (int d = 2; d <= 5; ++d)
      for (int r = 0; r <= 1; ++r)
        for (int n = 1; n < d; ++n) {
          const BoundParams a{s, d, r, n}, b{s, d, r, d - n};
          const BigRat w = deg_W(a);
          CHECK(w == deg_W(b));
          CHECK(BigRat(2 * w).get_den() == 1);
          if (2 * n != d) CHECK(w.get_den() == 1);
        }
}

TEST_CASE("BoundParams validation") {
  CHECK_THROWS_AS(BoundParams({1, 2, 1, 1}).validate(), InputError);
  CHECK_THROWS_AS(BoundParams({2, 1, 1, 1}).validate(), InputError);
  CHECK_THROWS_AS(BoundParams({2, 2, -1, 1}).validate(), InputError);
  CHECK_THROWS_AS(BoundParams({2, 3, 1, 0}).validate(), InputError);
  CHECK_THROWS_AS(BoundParams({2, 3, 1, 3}).validate(), InputError);
  CHECK_NOTHROW(BoundParams({2, 3, 1, 2}).validate());
}

TEST_CASE("hW_bound") {
  // (1/2)(17/2)(12870) log(3^18 * 81 / 17)
  const double hand = 0.5 * 8.5 * 12870.0 * std::log(387420489.0 * 81.0 / 17.0);
  CHECK(rel_close(hW_bound({2, 2, 1, 1}), hand, 1e-12));
  CHECK(rel_close(hW_bound({2, 2, 1, 1}), 1.1670e6, 1e-3));
  for (int d = 2; d <= 5; ++d)
    for (int n = 1; n < d; ++n) {
      const HighPrecReal a = hW_bound({2, d, 1, n}), b = hW_bound({2, d, 1, d - n});
      CHECK(a == b);
      CHECK(a > 0);
    }
}

TEST_CASE("product_metric_height") {
  CHECK(close(product_metric_height({2, 2, 0, 1}), 15.0, 1e-12));
  for (int d = 2; d <= 6; ++d)
    CHECK(to_double(product_metric_height({2, d + 1, 0, 1})) >= to_double(product_metric_height({2, d, 0, 1})));
  CHECK(product_metric_height({2, 5, 0, 2}) == product_metric_height({2, 5, 0, 3}));
}

TEST_CASE("height_offset") {
  CHECK(close(height_offset(2, 1, 2), 1.0 + 4.0 * std::log(3.0), 1e-12));
  CHECK(rel_close(height_offset(2, 1, 2), 5.3944, 1e-4));
  CHECK(close(height_offset(3, 2, 2), 3.0 * (1.25 + 3.0 * std::log(3.0)), 1e-12));
  CHECK(rel_close(height_offset(3, 2, 2), 13.6387, 1e-4));
  for (int d = 2; d <= 6; ++d)
    for (int s = 2; s <= 4; ++s) CHECK(close(height_offset(d, 0, s), d * std::log(s + 1.0), 1e-12));
}

TEST_CASE("bezout_bound examples") {
  const BoundParams conic{2, 2, 1, 1};
  const double hW = 0.5 * 8.5 * 12870.0 * std::log(387420489.0 * 81.0 / 17.0);
  const double log2_term = 0.5 * 6435.0 * 36.0 * std::log(2.0);

  const BoundReport zero = bezout_bound(0, conic, false);
  CHECK(zero.N_n == 8);
  CHECK(zero.N_dn == 8);
  CHECK(zero.N_d == 35);
  CHECK(zero.deg_W == 6435);
  CHECK(rel_close(zero.log2_term, log2_term, 1e-12));
  CHECK(rel_close(zero.log2_term, 8.0286e4, 1e-4));
  CHECK(rel_close(zero.total, hW + log2_term, 1e-12));
  CHECK(rel_close(zero.total, 1.2473e6, 1e-3));

  const HighPrecReal hK = log_real(228) / 2;
  const BoundReport f6 = bezout_bound(hK, conic, false);
  CHECK(rel_close(f6.height_term, 6435.0 * 0.5 * std::log(228.0), 1e-12));
  CHECK(rel_close(f6.total, hW + log2_term + 6435.0 * 0.5 * std::log(228.0), 1e-12));
  CHECK(rel_close(f6.total, 1.2648e6, 1e-3));
  CHECK(f6.point_height == hK);
  CHECK(f6.offset == 0);

  CHECK_THROWS_AS(bezout_bound(-1, conic, false), std::domain_error);
  CHECK_THROWS_AS(bezout_bound(0, BoundParams{1, 2, 1, 1}, false), InputError);
}

TEST_CASE("bezout_bound cycle-height input adds the offset") {
  const BoundParams conic{2, 2, 1, 1};
  const BoundReport r = bezout_bound(1, conic, true);
  CHECK(r.input_is_cycle_height);
  CHECK(close(r.offset, 1.0 + 4.0 * std::log(3.0), 1e-12));
  CHECK(close(r.point_height, 2.0 + 4.0 * std::log(3.0), 1e-12));
}

TEST_CASE("bezout_bound is affine and itemized") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n < d; ++n) {
      const BoundParams params{2, d, 1, n};
      HighPrecReal prev = -1;
      for (int i = 0; i <= 10; ++i) {
        const HighPrecReal h = HighPrecReal(i) / 3;
        const BoundReport r = bezout_bound(h, params, false);
        CHECK(abs(r.total - (r.height_term + r.hW_bound + r.log2_term)) < HighPrecReal("1e-9"));
        CHECK(abs(r.height_term - to_real(r.deg_W) * h) < HighPrecReal("1e-9"));
        CHECK(r.total >= prev);
        CHECK(r.hW_bound >= 0);
        CHECK(r.log2_term >= 0);
        prev = r.total;
      }
      const BoundReport a = bezout_bound(1, params, false), b = bezout_bound(3, params, false);
      CHECK(abs((b.total - a.total) - 2 * to_real(a.deg_W)) < HighPrecReal("1e-6"));
    }
}
