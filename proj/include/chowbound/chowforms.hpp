#ifndef CHOWBOUND_CHOWFORMS_HPP
#define CHOWBOUND_CHOWFORMS_HPP

// Chow forms of plane curves and of zero-cycles in P^2, and the product map
// on coefficient vectors.
//
// Plane curve V(F) in P^2 (r = 1, s = 2): the Chow form in two dual blocks
// u, v is F evaluated at the intersection point u x v of the lines u and v,
//   X0 -> u1 v2 - u2 v1,  X1 -> u2 v0 - u0 v2,  X2 -> u0 v1 - u1 v0.
// The three minors are algebraically independent over every prime field, so
// the substitution is injective mod p and preserves content 1.
//
// Zero-cycle {(1 : t : h(t)) : f(t) = 0} (r = 0, s = 2): the u-resultant
// Res_t(f(t), u0 + u1 t + u2 h(t)).

#include <cstdint>
#include <string>
#include <vector>

#include "chowbound/multipoly.hpp"

namespace chowbound {

enum class ChowProvenance { plane_curve, zero_cycle, external };

std::string to_string(ChowProvenance p);
ChowProvenance provenance_from_string(const std::string& s);

/// Primitive, sign-normalized Chow form coordinates in B_d.
struct ChowPoint {
  CoeffVector coeffs;
  ChowProvenance provenance = ChowProvenance::external;

  int r() const { return coeffs.r; }
  int s() const { return coeffs.s; }
  int d() const { return coeffs.x; }
  ZPoly form() const { return to_poly(coeffs); }

  /// Checks the ChowPoint invariants; throws InputError if violated.
  static ChowPoint from_vector(CoeffVector v, ChowProvenance provenance);
};

/// Checks F is a nonzero form in one block of three variables.
void require_plane_curve(const ZPoly& F);

/// The cross-product substitution over any coefficient ring.
template <class Ring>
MHPoly<Ring> cross_product_substitution(const MHPoly<Ring>& F) {
  const Shape duals{1, 2};
  const Ring& R = F.ring();
  auto u = [&](int i) { return MHPoly<Ring>::variable(R, duals, 0, i); };
  auto v = [&](int i) { return MHPoly<Ring>::variable(R, duals, 1, i); };
  std::vector<MHPoly<Ring>> images{
      u(1) * v(2) - u(2) * v(1),
      u(2) * v(0) - u(0) * v(2),
      u(0) * v(1) - u(1) * v(0),
  };
  return substitute(F, images);
}

/// Chow form of the plane curve V(F); F primitive, homogeneous, degree >= 1.
ChowPoint chow_plane_curve(const ZPoly& F);

/// Chow form (u-resultant) of the reduced zero-cycle cut out by f, lifted
/// to P^2 along t -> (1 : t : h(t)). Coefficients low to high. Throws
/// InputError unless f is squarefree of degree >= 1.
ChowPoint chow_zero_cycle(const std::vector<BigInt>& f, const std::vector<BigInt>& h);

/// psi on coordinates: the coefficient vector of the product form.
CoeffVector psi_product(const CoeffVector& a, const CoeffVector& b);

struct SpecializationReport {
  std::uint32_t p = 0;
  bool holds = false;
  FPoly reduced_chow;  // Chow form over Z, reduced mod p
  FPoly fiber_chow;    // Chow form of F mod p computed over F_p
  FFElem scalar;       // reduced_chow = scalar * fiber_chow when holds
};

/// Compares the reduction of the integral Chow form with the Chow form of
/// the reduced curve, up to a nonzero scalar. Throws InputError when F
/// vanishes mod p.
SpecializationReport chow_specialize_check(const ZPoly& F, std::uint32_t p);

}  // namespace chowbound

#endif  // CHOWBOUND_CHOWFORMS_HPP
