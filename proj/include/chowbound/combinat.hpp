#ifndef CHOWBOUND_COMBINAT_HPP
#define CHOWBOUND_COMBINAT_HPP

// Closed-form constants of the reducibility bound: ranks of the spaces of
// multihomogeneous forms, the harmonic constants sigma_x, the degree and a
// height bound for the image W of the product map, and the assembled
// Bezout-type bound with every term itemized.

#include <cstdint>
#include <string>

#include "chowbound/exactnum.hpp"

namespace chowbound {

/// Parameters of the bound: ambient P^s, cycle degree d, Chow blocks r+1,
/// split degree n. Valid when s >= 2, d >= 2, r >= 0, 1 <= n <= d-1.
struct BoundParams {
  int s = 2;
  int d = 2;
  int r = 1;
  int n = 1;

  void validate() const;
  bool symmetric() const { return 2 * n == d; }
};

/// N_{x,r,s} = binom(x+s, s)^{r+1} - 1.
BigInt rank_N(int x, int r, int s);

/// sigma_x = (1/2)(x+1) sum_{m=2}^{x+1} 1/m, exact.
BigRat sigma(std::uint64_t x);

/// Degree of W: binom(N_n + N_{d-n}, N_n), halved when n = d-n.
BigRat deg_W(const BoundParams& params);

/// Upper bound for the height of W (with [K:Q] = 1).
HighPrecReal hW_bound(const BoundParams& params);

/// binom(N_n+N_{d-n}, N_n) (sigma_{N_{d-n}} + sigma_{N_n}): height of the
/// product of the two form spaces for the product metric.
HighPrecReal product_metric_height(const BoundParams& params);

/// d (sigma_r + (r+1) log(s+1)): shift from the cycle height to the height
/// of its Chow point.
HighPrecReal height_offset(int d, int r, int s);

struct BoundReport {
  BoundParams params;
  BigInt N_n, N_dn, N_d;
  BigRat deg_W;
  HighPrecReal input_height;      // h as supplied
  bool input_is_cycle_height = false;
  HighPrecReal offset;            // added to h when the input is a cycle height, else 0
  HighPrecReal point_height;      // h used in the height term
  HighPrecReal hW_bound;
  HighPrecReal height_term;       // deg_W * point_height
  HighPrecReal log2_term;         // (1/2) deg_W (N_d + 1) log 2
  HighPrecReal total;
};

/// Assemble h(|P_Z cap W|) <= deg_W h + hW_bound + (1/2) deg_W (N_d+1) log 2,
/// with deg(P_Z) = 1. When `h_is_cycle_height` the offset is added to h first.
/// Throws std::domain_error for negative h.
BoundReport bezout_bound(const HighPrecReal& h, const BoundParams& params, bool h_is_cycle_height);

}  // namespace chowbound

#endif  // CHOWBOUND_COMBINAT_HPP
