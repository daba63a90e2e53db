#ifndef CHOWBOUND_MODFACTOR_HPP
#define CHOWBOUND_MODFACTOR_HPP

// Factorization over finite fields and the search for decompositions
// F = c * G * H of a plane-curve fiber over F_{p^k} with deg G = n and
// deg H = d - n.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chowbound/finite_field.hpp"
#include "chowbound/multipoly.hpp"

namespace chowbound {

struct FactorList {
  std::uint32_t lead = 0;
  /// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
  std::vector<std::pair<UPolyFp, int>> factors;

  UPolyFp product() const;
};

/// Complete factorization over F_p: squarefree split, distinct-degree split,
/// then Cantor-Zassenhaus equal-degree splitting driven by `seed`.
FactorList univ_factor(const UPolyFp& f, std::uint64_t seed);

enum class SearchStatus { found, none, undetermined };
const char* to_string(SearchStatus s);

struct DecompositionWitness {
  std::uint32_t p = 0;
  unsigned k = 0;
  FiniteField field;
  FPoly G;        // degree n, first coefficient 1
  FPoly H;        // degree d - n, first coefficient 1
  FFElem scalar;  // scalar * G * H == F lifted to the field

  /// Re-multiplies and compares against F (over the prime field).
  bool verify(const FPoly& F) const;
};

struct DecompositionResult {
  SearchStatus status = SearchStatus::none;
  std::optional<DecompositionWitness> witness;
  /// Extension degree the search stopped at (undetermined: the one that
  /// exceeded the cap).
  unsigned k = 0;
};

inline constexpr std::uint64_t kDefaultCostCap = 100'000'000;

/// Searches k = 1..d. When min(n, d-n) = 1 the linear factor is found through
/// the roots of F(0, X1, X2): every line other than X0 dividing F passes
/// through such a root, so only the pencils at those points are tested.
/// Otherwise normalized forms of degree min(n, d-n) are enumerated. Any
/// returned witness has been re-multiplied against F. F must be a form over
/// a prime field in one block of three variables.
DecompositionResult find_decomposition(const FPoly& F, int n, std::uint64_t cost_cap = kDefaultCostCap,
                                       std::uint64_t seed = 0);

/// Reference search for tests: every normalized form of degree min(n, d-n)
/// over each F_{p^k}, k = 1..d, tried by exact division, no pruning.
DecompositionResult decomposition_oracle(const FPoly& F, int n, std::uint64_t cost_cap = kDefaultCostCap);

enum class Irreducibility { irreducible, reducible, undetermined };
const char* to_string(Irreducibility v);

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::undetermined;
  std::optional<DecompositionWitness> witness;
};

/// Absolute irreducibility of a plane-curve form over F_p, decided through
/// find_decomposition for n = 1..d/2.
IrreducibilityResult abs_irred_mod_p(const FPoly& F, std::uint64_t cost_cap = kDefaultCostCap,
                                     std::uint64_t seed = 0);

}  // namespace chowbound

#endif  // CHOWBOUND_MODFACTOR_HPP
