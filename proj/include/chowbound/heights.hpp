#ifndef CHOWBOUND_HEIGHTS_HPP
#define CHOWBOUND_HEIGHTS_HPP

#include <span>
#include <vector>

#include "chowbound/exactnum.hpp"
#include "chowbound/multipoly.hpp"

namespace chowbound {

/// A point of P^N(Q) in primitive, sign-normalized integer coordinates.
class ProjPoint {
 public:
  /// Normalizes; throws InputError on the zero vector.
  explicit ProjPoint(std::span<const BigInt> coords);

  const std::vector<BigInt>& coords() const { return coords_; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<BigInt> coords_;
};

/// (1/2) log(sum a_i^2) of the primitive representative. Over Q the finite
/// places contribute exactly -log(content), so normalizing first accounts
/// for them.
HighPrecReal point_height_hK(std::span<const BigInt> v);

/// log(sum |a_i|) of the primitive representative.
HighPrecReal point_height_hB(std::span<const BigInt> v);

/// Squared L2 norm sum c_I^2 of the coefficients.
BigRat l2_norm_sq(const ZPoly& f);

/// Exact L2(fg)^2 / (L2(f)^2 L2(g)^2).
BigRat phi_ratio_exact(const ZPoly& f, const ZPoly& g);
HighPrecReal phi_ratio(const ZPoly& f, const ZPoly& g);

}  // namespace chowbound

#endif  // CHOWBOUND_HEIGHTS_HPP
