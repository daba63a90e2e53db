#include <doctest.h>

#include <cmath>

#include "chowbound/io.hpp"
#include "chowbound/verify.hpp"
#include "test_util.hpp"

using namespace chowbound;
using test::close;
using test::rel_close;

namespace {

using Primes = std::vector<std::uint32_t>;

Instance instance(const std::string& text, int n, std::uint32_t p_max) {
  Instance inst;
  inst.name = text;
  inst.F = parse_plane_form(text);
  inst.n = n;
  inst.p_max = p_max;
  return inst;
}

double log_sum(const Primes& ps) {
  double s = 0;
  for (auto p : ps) s += std::log(static_cast<double>(p));
  return s;
}

}  // namespace

TEST_CASE("parse_plane_form") {
  const ZPoly f = parse_plane_form("X0^2 + X1^2 - 6*X2^2");
  CHECK(f.multidegree() == std::vector<int>{2});
  CHECK(f.size() == 3);
  CHECK(f.coeff(test::mono({0, 0, 2})) == -6);
  CHECK(parse_plane_form("-X0*X1 + 5*X2^2") == parse_plane_form("5*X2^2 - X1*X0"));
  CHECK(parse_plane_form("X0*X0") == parse_plane_form("X0^2"));
  CHECK_THROWS_AS(parse_plane_form("X0^2 + X1"), InputError);
  CHECK_THROWS_AS(parse_plane_form("X3"), InputError);
  CHECK_THROWS_AS(parse_plane_form(""), InputError);
  CHECK_THROWS_AS(parse_plane_form("X0 +"), InputError);
}

TEST_CASE("check_hypothesis") {
  const auto f6 = check_hypothesis(parse_plane_form("X0^2 + X1^2 - 6*X2^2"), 1, 200);
  CHECK(f6.found);
  CHECK(f6.prime == 5);
  const auto planted = check_hypothesis(parse_plane_form("X0^2 + X0*X1 + 7*X1^2 + 7*X2^2"), 1, 200);
  CHECK(planted.found);
  CHECK(planted.prime == 5);
  const auto pair = check_hypothesis(parse_plane_form("X0*X1"), 1, 60);
  CHECK_FALSE(pair.found);
  CHECK(pair.rejected.size() == 16);  // primes in (2, 60]
}

TEST_CASE("scan of F6") {
  const ScanReport r = scan_primes(conic_family(6));
  CHECK(r.reducible == Primes{2, 3});
  CHECK(r.bad_reduction.empty());
  CHECK(r.undetermined.empty());
  CHECK(r.rows.size() == 25);
  CHECK(close(r.log_product, std::log(6.0), 1e-12));
  CHECK(close(r.hK, 0.5 * std::log(228.0), 1e-12));
  CHECK(close(r.hB, std::log(32.0), 1e-12));
  CHECK(rel_close(r.bound.total, 1.2648e6, 1e-3));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.hypothesis.prime == 5);
  for (const auto& row : r.rows) {
    if (row.p == 3) CHECK(row.k == 2);
    if (row.p == 2) CHECK(row.k == 1);
    CHECK((row.status == SearchStatus::found) == static_cast<bool>(row.witness));
  }
}

TEST_CASE("scan of the planted conic and the sum of squares") {
  const ScanReport planted = scan_primes(instance("X0^2 + X0*X1 + 7*X1^2 + 7*X2^2", 1, 100));
  CHECK(planted.reducible == Primes{3, 7});
  CHECK(close(planted.log_product, std::log(21.0), 1e-12));
  CHECK(planted.verdict == Verdict::holds);
  const ScanReport sos = scan_primes(instance("X0^2 + X1^2 + X2^2", 1, 50));
  CHECK(sos.reducible == Primes{2});
}

TEST_CASE("scan rejects uncertified inputs unless overridden") {
  const Instance pair = instance("X0*X1", 1, 20);
  CHECK_THROWS_AS(scan_primes(pair, {1, false, 40}), HypothesisFailure);
  const ScanReport r = scan_primes(pair, {1, true, 40});
  CHECK(r.hypothesis_overridden);
  CHECK(r.reducible == Primes{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK_THROWS_AS(scan_primes(instance("X0^2 + X1^2", 2, 20)), InputError);
}

TEST_CASE("scan lists primes where F vanishes") {
  Instance inst = instance("X0^2 + X1^2 - 6*X2^2", 1, 10);
  const ScanReport r = scan_primes(inst);
  CHECK(r.bad_reduction.empty());
  CHECK(r.rows.size() == 4);
}

TEST_CASE("plant_instance") {
  const Instance a = plant_instance(parse_plane_form("X0"), parse_plane_form("X0 + X1"), 7,
                                    parse_plane_form("X1^2 + X2^2"));
  CHECK(a.F == parse_plane_form("X0^2 + X0*X1 + 7*X1^2 + 7*X2^2"));
  CHECK(a.n == 1);
  REQUIRE(a.expected);
  CHECK(*a.expected == Primes{7});
  CHECK_FALSE(a.expected_is_exact);

  const Instance b = plant_instance(parse_plane_form("X0"), parse_plane_form("X1"), 5, parse_plane_form("X2^2"));
  CHECK(b.F == parse_plane_form("X0*X1 + 5*X2^2"));
  const ScanReport rb = scan_primes(b);
  CHECK(std::includes(rb.reducible.begin(), rb.reducible.end(), b.expected->begin(), b.expected->end()));

  CHECK_THROWS_AS(plant_instance(parse_plane_form("X0"), parse_plane_form("X0"), 2, parse_plane_form("X0^2")),
                  InputError);
  CHECK_THROWS_AS(plant_instance(parse_plane_form("X0"), parse_plane_form("X1"), 4, parse_plane_form("X2^2")),
                  InputError);
  CHECK_THROWS_AS(plant_instance(parse_plane_form("X0"), parse_plane_form("X1"), 5, parse_plane_form("X2")),
                  InputError);
}

TEST_CASE("conic family") {
  CHECK(conic_family(6).F == parse_plane_form("X0^2 + X1^2 - 6*X2^2"));
  CHECK_THROWS_AS(conic_family(12), InputError);
  CHECK_THROWS_AS(conic_family(1), InputError);
  CHECK_THROWS_AS(conic_family(-3), InputError);
  const std::vector<std::pair<std::int64_t, Primes>> cases{{2, {2}}, {15, {2, 3, 5}}, {105, {2, 3, 5, 7}}};
  for (const auto& [N, want] : cases) {
    const ScanReport r = scan_primes(conic_family(N));
    CHECK(r.reducible == want);
    CHECK(close(r.log_product, log_sum(want), 1e-9));
    // squared Chow coefficients: 1, 4, 1 twice and N^2, 4 N^2, N^2
    CHECK(close(r.hK, 0.5 * std::log(6.0 * N * N + 12.0), 1e-12));
    CHECK(r.margin > 0);
    CHECK(r.verdict == Verdict::holds);
  }
}

TEST_CASE("parallel scan matches serial scan") {
  for (const auto& inst : {conic_family(30), instance("X0^2 + X0*X1 + 7*X1^2 + 7*X2^2", 1, 100)}) {
    const std::string serial = to_json(scan_primes(inst, {1})).dump();
    CHECK(to_json(scan_primes(inst, {4})).dump() == serial);
    CHECK(to_json(scan_primes(inst, {8})).dump() == serial);
  }
}

TEST_CASE("regression suite") {
  CHECK_THROWS_AS(regression_suite("nope"), InputError);
  CHECK(regression_suite("conic").size() == 7);
  CHECK(regression_suite("planted").size() == 3);
  for (const auto& o : run_suite(regression_suite("all"), {2})) {
    INFO(o.name, ": ", o.detail);
    CHECK(o.passed);
  }
}
