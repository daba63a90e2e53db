#include "chowbound/heights.hpp"

namespace chowbound {

ProjPoint::ProjPoint(std::span<const BigInt> coords) {
  BigInt g = 0;
  for (const auto& c : coords) g = gcd(g, c);
  if (g == 0) throw InputError("projective point: all coordinates are zero");
  for (const auto& c : coords)
    if (sgn(c) != 0) {
      if (sgn(c) < 0) g = -g;
      break;
    }
  coords_.reserve(coords.size());
  for (const auto& c : coords) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    coords_.push_back(std::move(q));
  }
}

HighPrecReal point_height_hK(std::span<const BigInt> v) {
  const ProjPoint pt(v);
  BigInt sq = 0;
  for (const auto& c : pt.coords()) sq += c * c;
  return log_real(BigRat(sq)) / 2;
}

HighPrecReal point_height_hB(std::span<const BigInt> v) {
  const ProjPoint pt(v);
  BigInt l1 = 0;
  for (const auto& c : pt.coords()) l1 += abs(c);
  return log_real(BigRat(l1));
}

BigRat l2_norm_sq(const ZPoly& f) {
  BigInt acc = 0;
  for (const auto& t : f.terms()) acc += t.coeff * t.coeff;
  return BigRat(acc);
}

BigRat phi_ratio_exact(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("phi_ratio: zero form");
  BigRat r = l2_norm_sq(f * g) / (l2_norm_sq(f) * l2_norm_sq(g));
  r.canonicalize();
  return r;
}

HighPrecReal phi_ratio(const ZPoly& f, const ZPoly& g) { return to_real(phi_ratio_exact(f, g)); }

}  // namespace chowbound
