#include "chowbound/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <sstream>
#include <thread>

#include "chowbound/heights.hpp"

namespace chowbound {

namespace {

const Shape kPlane{0, 2};

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::incomplete: return "incomplete";
  }
  return "incomplete";
}

void Instance::validate() const {
  require_plane_curve(F);
  if (content(F) != 1) throw InputError("instance form must be primitive");
  const int d = degree();
  if (n < 1 || n > d - 1) throw InputError("instance: n must lie in 1..d-1 (d = " + std::to_string(d) + ")");
  if (p_max < 2) throw InputError("instance: p_max must be >= 2");
}

HypothesisCertificate check_hypothesis(const ZPoly& F, int n, std::uint32_t limit, std::uint64_t cost_cap,
                                       std::uint64_t seed) {
  require_plane_curve(F);
  const int d = F.multidegree()[0];
  if (n < 1 || n > d - 1) throw InputError("check_hypothesis: n must lie in 1..d-1");
  HypothesisCertificate cert;
  for (std::uint32_t p : primes_up_to(limit)) {
    // characteristic above the degree: the reduction cannot become a p-th
    // power or lose separability of its components
    if (p <= static_cast<std::uint32_t>(d)) continue;
    const FPoly Fp = reduce_mod_p(F, FiniteField::construct(p, 1));
    if (Fp.is_zero()) continue;
    const IrreducibilityResult r = abs_irred_mod_p(Fp, cost_cap, seed);
    if (r.verdict == Irreducibility::irreducible) {
      cert.found = true;
      cert.prime = p;
      cert.note = "F mod " + std::to_string(p) + " is absolutely irreducible";
      return cert;
    }
    cert.rejected.push_back(p);
  }
  cert.note = "no prime in (" + std::to_string(d) + ", " + std::to_string(limit) +
              "] with absolutely irreducible reduction; hypothesis not certified";
  return cert;
}

ScanReport scan_primes(const Instance& inst, const ScanOptions& opts) {
  inst.validate();
  ScanReport rep;
  rep.name = inst.name;
  rep.F = inst.F;
  rep.n = inst.n;
  rep.p_max = inst.p_max;
  rep.cost_cap = inst.cost_cap;
  rep.seed = inst.seed;
  rep.hypothesis = check_hypothesis(inst.F, inst.n, opts.hypothesis_limit, inst.cost_cap, inst.seed);
  rep.hypothesis_overridden = !rep.hypothesis.found && opts.override_hypothesis;
  if (!rep.hypothesis.found && !opts.override_hypothesis)
    throw HypothesisFailure(rep.hypothesis.note, rep.hypothesis);

  const std::vector<std::uint32_t> primes = primes_up_to(inst.p_max);
  struct Slot {
    bool bad = false;
    ScanRow row;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      Slot& slot = slots[i];
      try {
        const std::uint32_t p = primes[i];
        const FPoly Fp = reduce_mod_p(inst.F, FiniteField::construct(p, 1));
        if (Fp.is_zero()) {
          slot.bad = true;
          continue;
        }
        DecompositionResult r = find_decomposition(Fp, inst.n, inst.cost_cap, inst.seed);
        if (r.witness && !r.witness->verify(Fp))
          throw InvariantViolation("witness at p = " + std::to_string(p) + " does not re-multiply");
        slot.row = ScanRow{p, r.status, r.k, std::move(r.witness)};
      } catch (...) {
        slot.error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(primes.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BigInt product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (slots[i].error) std::rethrow_exception(slots[i].error);
    if (slots[i].bad) {
      rep.bad_reduction.push_back(primes[i]);
      continue;
    }
    const ScanRow& row = slots[i].row;
    if (row.status == SearchStatus::found) {
      rep.reducible.push_back(row.p);
      product *= static_cast<unsigned long>(row.p);
    } else if (row.status == SearchStatus::undetermined) {
      rep.undetermined.push_back(row.p);
    }
    rep.rows.push_back(std::move(slots[i].row));
  }

  rep.log_product = log_real(BigRat(product));
  rep.chow = chow_plane_curve(inst.F);
  rep.hK = point_height_hK(rep.chow.coeffs.coords);
  rep.hB = point_height_hB(rep.chow.coeffs.coords);
  rep.bound = bezout_bound(rep.hK, BoundParams{2, inst.degree(), 1, inst.n}, false);
  rep.margin = rep.bound.total - rep.log_product;
  if (!rep.undetermined.empty()) rep.verdict = Verdict::incomplete;
  else if (rep.log_product <= rep.bound.total + HighPrecReal(kVerdictTolerance)) rep.verdict = Verdict::holds;
  else rep.verdict = Verdict::violated;
  return rep;
}

Instance plant_instance(const ZPoly& G, const ZPoly& H, std::uint32_t P, const ZPoly& E, std::uint64_t seed) {
  require_plane_curve(G);
  require_plane_curve(H);
  require_plane_curve(E);
  if (!is_prime(P)) throw InputError("plant_instance: P must be prime");
  const ZPoly GH = G * H;
  if (E.multidegree() != GH.multidegree())
    throw InputError("plant_instance: E must have degree deg G + deg H");
  if (reduce_mod_p(GH, FiniteField::construct(P, 1)).is_zero())
    throw InputError("plant_instance: G*H vanishes mod P");
  const ZPoly F = GH + E.scaled(BigInt(static_cast<unsigned long>(P)));
  if (F.is_zero()) throw InputError("plant_instance: F = 0");
  if (content(F) != 1) throw InputError("plant_instance: F = G*H + P*E is not primitive");
  Instance inst;
  inst.name = "planted P=" + std::to_string(P);
  inst.F = F;
  inst.n = G.multidegree()[0];
  inst.seed = seed;
  inst.expected = std::vector<std::uint32_t>{P};
  inst.expected_is_exact = false;
  return inst;
}

Instance conic_family(std::int64_t N) {
  if (N < 2) throw InputError("conic_family: N must be >= 2");
  for (std::int64_t q = 2; q * q <= N; ++q)
    if (N % (q * q) == 0) throw InputError("conic_family: N must be squarefree");
  std::vector<ZPoly::Term> t;
  Monomial m{};
  m[0] = 2;
  t.push_back({m, 1});
  m = Monomial{};
  m[1] = 2;
  t.push_back({m, 1});
  m = Monomial{};
  m[2] = 2;
  t.push_back({m, BigInt(std::to_string(-N))});
  Instance inst;
  inst.name = "conic N=" + std::to_string(N);
  inst.F = ZPoly::from_terms(Integers{}, kPlane, {2}, std::move(t));
  inst.n = 1;
  return inst;
}

ZPoly parse_plane_form(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty form");
  std::vector<ZPoly::Term> terms;
  int degree = -1;
  std::size_t i = 0;
  auto read_int = [&]() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw InputError("expected a number in '" + text + "'");
    std::string digits = s.substr(i, j - i);
    i = j;
    return digits;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw InputError("expected '+' or '-' in '" + text + "'");
    }
    BigInt coeff = 1;
    Monomial m{};
    bool expect_factor = true;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_bigint(read_int());
      expect_factor = i < s.size() && s[i] == '*';
      if (expect_factor) ++i;
    }
    while (expect_factor) {
      if (i + 1 >= s.size() || s[i] != 'X' || s[i + 1] < '0' || s[i + 1] > '2')
        throw InputError("expected X0, X1 or X2 in '" + text + "'");
      const int v = s[i + 1] - '0';
      i += 2;
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = std::stoi(read_int());
      }
      m[v] = static_cast<std::uint16_t>(m[v] + e);
      expect_factor = i < s.size() && s[i] == '*';
      if (expect_factor) ++i;
    }
    const int deg = m[0] + m[1] + m[2];
    if (degree < 0) degree = deg;
    else if (deg != degree) throw InputError("form is not homogeneous: '" + text + "'");
    terms.push_back({m, coeff * sign});
  }
  return ZPoly::from_terms(Integers{}, kPlane, {degree}, std::move(terms));
}

std::vector<Instance> regression_suite(const std::string& which) {
  if (which != "conic" && which != "planted" && which != "all")
    throw InputError("unknown suite '" + which + "' (expected conic, planted or all)");
  std::vector<Instance> suite;
  if (which == "conic" || which == "all") {
    for (std::int64_t N : {2, 3, 6, 15, 30, 105}) {
      Instance inst = conic_family(N);
      inst.p_max = 100;
      // X0^2 + X1^2 - N X2^2 is a double line mod 2, a line pair over F_{p^2}
      // for odd p | N and a smooth conic otherwise
      std::vector<std::uint32_t> expected{2};
      for (std::uint32_t p : primes_up_to(100))
        if (p > 2 && N % p == 0) expected.push_back(p);
      inst.expected = expected;
      suite.push_back(std::move(inst));
    }
    Instance sum_of_squares;
    sum_of_squares.name = "X0^2+X1^2+X2^2";
    sum_of_squares.F = parse_plane_form("X0^2 + X1^2 + X2^2");
    sum_of_squares.p_max = 50;
    sum_of_squares.expected = std::vector<std::uint32_t>{2};
    suite.push_back(std::move(sum_of_squares));
  }
  if (which == "planted" || which == "all") {
    Instance a = plant_instance(parse_plane_form("X0"), parse_plane_form("X0 + X1"), 7,
                                parse_plane_form("X1^2 + X2^2"));
    a.expected = std::vector<std::uint32_t>{3, 7};
    a.expected_is_exact = true;
    suite.push_back(std::move(a));

    Instance b = plant_instance(parse_plane_form("X0"), parse_plane_form("X1"), 5, parse_plane_form("X2^2"));
    suite.push_back(std::move(b));

    Instance c = plant_instance(parse_plane_form("X0"), parse_plane_form("X1^2 + X2^2"), 11,
                                parse_plane_form("X0^3 + X1^3 + X2^3"));
    c.name += " cubic";
    c.p_max = 40;
    suite.push_back(std::move(c));
  }
  return suite;
}

std::vector<SuiteOutcome> run_suite(const std::vector<Instance>& suite, const ScanOptions& opts) {
  std::vector<SuiteOutcome> out;
  for (const Instance& inst : suite) {
    SuiteOutcome o;
    o.name = inst.name;
    try {
      o.report = scan_primes(inst, opts);
      const auto& red = o.report.reducible;
      bool expected_ok = true;
      if (inst.expected) {
        const auto& exp = *inst.expected;
        expected_ok = inst.expected_is_exact
                          ? red == exp
                          : std::includes(red.begin(), red.end(), exp.begin(), exp.end());
      }
      const bool witnesses_ok = std::all_of(o.report.rows.begin(), o.report.rows.end(), [&](const ScanRow& r) {
        return !r.witness || r.witness->verify(reduce_mod_p(inst.F, FiniteField::construct(r.p, 1)));
      });
      o.passed = o.report.verdict == Verdict::holds && expected_ok && witnesses_ok;
      std::ostringstream detail;
      detail << "reducible " << join(red) << ", verdict " << to_string(o.report.verdict);
      if (inst.expected)
        detail << ", expected " << (inst.expected_is_exact ? "" : "superset of ") << join(*inst.expected);
      if (!witnesses_ok) detail << ", witness mismatch";
      o.detail = detail.str();
    } catch (const HypothesisFailure& e) {
      o.passed = false;
      o.detail = std::string("hypothesis failure: ") + e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace chowbound
