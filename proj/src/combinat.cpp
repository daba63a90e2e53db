#include "chowbound/combinat.hpp"

#include <stdexcept>

namespace chowbound {

namespace {

// Binomials and harmonic sums below are exact, so their size has to stay
// within what fits in memory.
constexpr std::uint64_t kMaxExactRank = 10'000'000;

std::uint64_t rank_u64(const BigInt& N) {
  if (N > kMaxExactRank)
    throw InputError("rank " + N.get_str() + " too large for exact evaluation (limit " +
                     std::to_string(kMaxExactRank) + ")");
  return N.get_ui();
}

// sum_{m=lo}^{hi} 1/m by balanced splitting
BigRat harmonic_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return 0;
  if (hi - lo < 16) {
    BigRat acc = 0;
    for (std::uint64_t m = lo; m <= hi; ++m) acc += BigRat(1, static_cast<unsigned long>(m));
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  BigRat r = harmonic_range(lo, mid) + harmonic_range(mid + 1, hi);
  r.canonicalize();
  return r;
}

}  // namespace

void BoundParams::validate() const {
  if (s < 2) throw InputError("bound parameters: s must be >= 2");
  if (d < 2) throw InputError("bound parameters: d must be >= 2");
  if (r < 0) throw InputError("bound parameters: r must be >= 0");
  if (n < 1 || n > d - 1) throw InputError("bound parameters: n must lie in 1..d-1");
}

BigInt rank_N(int x, int r, int s) {
  if (x < 0 || r < 0 || s < 0) throw InputError("rank_N: arguments must be nonnegative");
  BigInt b = binomial(static_cast<std::uint64_t>(x) + s, static_cast<std::uint64_t>(s));
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(r) + 1);
  return p - 1;
}

BigRat sigma(std::uint64_t x) {
  BigRat h = harmonic_range(2, x + 1);
  BigRat r = BigRat(static_cast<unsigned long>(x + 1), 2UL) * h;
  r.canonicalize();
  return r;
}

BigRat deg_W(const BoundParams& params) {
  params.validate();
  const std::uint64_t a = rank_u64(rank_N(params.n, params.r, params.s));
  const std::uint64_t b = rank_u64(rank_N(params.d - params.n, params.r, params.s));
  BigRat deg(binomial(a + b, a));
  if (params.symmetric()) deg /= 2;
  deg.canonicalize();
  return deg;
}

HighPrecReal hW_bound(const BoundParams& params) {
  params.validate();
  const BigInt Nn = rank_N(params.n, params.r, params.s);
  const BigInt Ndn = rank_N(params.d - params.n, params.r, params.s);
  const std::uint64_t a = rank_u64(Nn), b = rank_u64(Ndn);

  BigInt dpow;
  mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(params.d) + 1,
                3UL * (params.r + 1) * (params.s + 1));
  BigRat arg(dpow * (Nn + 1) * (Ndn + 1), Nn + Ndn + 1);
  arg.canonicalize();

  BigRat prefactor = BigRat(Nn + Ndn + 1, 2) * BigRat(binomial(a + b, a));
  if (params.symmetric()) prefactor /= 2;
  prefactor.canonicalize();
  return to_real(prefactor) * log_real(arg);
}

HighPrecReal product_metric_height(const BoundParams& params) {
  params.validate();
  const std::uint64_t a = rank_u64(rank_N(params.n, params.r, params.s));
  const std::uint64_t b = rank_u64(rank_N(params.d - params.n, params.r, params.s));
  BigRat v = BigRat(binomial(a + b, a)) * (sigma(b) + sigma(a));
  v.canonicalize();
  return to_real(v);
}

HighPrecReal height_offset(int d, int r, int s) {
  if (d < 2 || r < 0 || s < 2) throw InputError("height_offset: need d >= 2, r >= 0, s >= 2");
  const HighPrecReal logs = log_real(BigRat(s + 1));
  return HighPrecReal(d) * (to_real(sigma(static_cast<std::uint64_t>(r))) + HighPrecReal(r + 1) * logs);
}

BoundReport bezout_bound(const HighPrecReal& h, const BoundParams& params, bool h_is_cycle_height) {
  params.validate();
  if (h < 0) throw std::domain_error("bezout_bound: height must be nonnegative");
  BoundReport rep;
  rep.params = params;
  rep.N_n = rank_N(params.n, params.r, params.s);
  rep.N_dn = rank_N(params.d - params.n, params.r, params.s);
  rep.N_d = rank_N(params.d, params.r, params.s);
  rep.deg_W = deg_W(params);
  rep.input_height = h;
  rep.input_is_cycle_height = h_is_cycle_height;
  rep.offset = h_is_cycle_height ? height_offset(params.d, params.r, params.s) : HighPrecReal(0);
  rep.point_height = h + rep.offset;
  rep.hW_bound = hW_bound(params);
  const HighPrecReal degw = to_real(rep.deg_W);
  rep.height_term = degw * rep.point_height;
  // (M_d + 1) with M_d read as N_{d,r,s}, the dimension of P(F_d)
  BigRat half_deg_dim = rep.deg_W * BigRat(rep.N_d + 1) / 2;
  half_deg_dim.canonicalize();
  rep.log2_term = to_real(half_deg_dim) * log_real(BigRat(2));
  rep.total = rep.height_term + rep.hW_bound + rep.log2_term;
  return rep;
}

}  // namespace chowbound
