#ifndef CHOWBOUND_VERIFY_HPP
#define CHOWBOUND_VERIFY_HPP

// End-to-end check of the reducibility bound on plane curves: find the
// primes whose fiber splits into degrees n and d-n, and compare
// log(prod q_j) with the Bezout bound evaluated at the height of the
// curve's Chow point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowbound/chowforms.hpp"
#include "chowbound/combinat.hpp"
#include "chowbound/modfactor.hpp"
#include "chowbound/multipoly.hpp"

namespace chowbound {

/// Absolute tolerance for the final inequality.
inline constexpr double kVerdictTolerance = 1e-6;

struct Instance {
  std::string name;
  ZPoly F;  // primitive form in X0, X1, X2
  int n = 1;
  std::uint32_t p_max = 100;
  std::uint64_t cost_cap = kDefaultCostCap;
  std::uint64_t seed = 0;
  /// Regression fixtures: expected reducible set, exact or as a lower bound.
  std::optional<std::vector<std::uint32_t>> expected;
  bool expected_is_exact = true;

  int degree() const { return F.multidegree()[0]; }
  /// Throws InputError unless F is a primitive plane form and 1 <= n <= d-1.
  void validate() const;
};

struct HypothesisCertificate {
  bool found = false;
  std::uint32_t prime = 0;
  /// Primes that were tried and decomposed (or were undetermined).
  std::vector<std::uint32_t> rejected;
  std::string note;
};

/// Looks for a prime p with d < p <= limit at which F mod p keeps degree d
/// and is absolutely irreducible. Such a p certifies that F is absolutely
/// irreducible over Q-bar; a failed search is inconclusive.
HypothesisCertificate check_hypothesis(const ZPoly& F, int n, std::uint32_t limit,
                                       std::uint64_t cost_cap = kDefaultCostCap, std::uint64_t seed = 0);

struct ScanRow {
  std::uint32_t p = 0;
  SearchStatus status = SearchStatus::none;
  unsigned k = 0;
  std::optional<DecompositionWitness> witness;
};

enum class Verdict { holds, violated, incomplete };
const char* to_string(Verdict v);

struct ScanReport {
  std::string name;
  ZPoly F;
  int n = 1;
  std::uint32_t p_max = 0;
  std::uint64_t cost_cap = 0;
  std::uint64_t seed = 0;
  HypothesisCertificate hypothesis;
  bool hypothesis_overridden = false;
  std::vector<ScanRow> rows;                 // sorted by p
  std::vector<std::uint32_t> bad_reduction;  // F mod p = 0
  std::vector<std::uint32_t> reducible;
  std::vector<std::uint32_t> undetermined;
  HighPrecReal log_product;
  ChowPoint chow;
  HighPrecReal hK;
  HighPrecReal hB;
  BoundReport bound;
  HighPrecReal margin;  // bound total - log_product
  Verdict verdict = Verdict::incomplete;
};

struct ScanOptions {
  unsigned jobs = 1;
  /// Scan even when no certificate for the hypothesis is found.
  bool override_hypothesis = false;
  /// Upper end of the certifying-prime search.
  std::uint32_t hypothesis_limit = 200;
};

/// Thrown by scan_primes when the hypothesis cannot be certified and no
/// override was given.
class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(const std::string& msg, HypothesisCertificate cert)
      : std::runtime_error(msg), certificate(std::move(cert)) {}
  HypothesisCertificate certificate;
};

/// Per-prime searches run on `jobs` threads; rows are assembled in prime
/// order, so the report does not depend on scheduling.
ScanReport scan_primes(const Instance& inst, const ScanOptions& opts = {});

/// F = G*H + P*E, n = deg G. Throws InputError if F is not primitive, not
/// homogeneous of degree deg G + deg H, or if G*H vanishes mod P.
Instance plant_instance(const ZPoly& G, const ZPoly& H, std::uint32_t P, const ZPoly& E, std::uint64_t seed = 0);

/// F_N = X0^2 + X1^2 - N X2^2, n = 1, for squarefree N >= 2.
Instance conic_family(std::int64_t N);

/// Parses "X0^2 + 7*X1*X2 - 3*X2^2" style plane forms (variables X0, X1, X2).
ZPoly parse_plane_form(const std::string& text);

/// Regression fixtures: "conic", "planted" or "all".
std::vector<Instance> regression_suite(const std::string& which);

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
  ScanReport report;
};

std::vector<SuiteOutcome> run_suite(const std::vector<Instance>& suite, const ScanOptions& opts);

}  // namespace chowbound

#endif  // CHOWBOUND_VERIFY_HPP
