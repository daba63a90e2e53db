#include "chowbound/chowforms.hpp"

#include "chowbound/resultant.hpp"

namespace chowbound {

std::string to_string(ChowProvenance p) {
  switch (p) {
    case ChowProvenance::plane_curve: return "plane-curve";
    case ChowProvenance::zero_cycle: return "zero-cycle";
    case ChowProvenance::external: return "external";
  }
  return "external";
}

ChowProvenance provenance_from_string(const std::string& s) {
  if (s == "plane-curve") return ChowProvenance::plane_curve;
  if (s == "zero-cycle") return ChowProvenance::zero_cycle;
  if (s == "external") return ChowProvenance::external;
  throw InputError("unknown Chow point provenance '" + s + "'");
}

ChowPoint ChowPoint::from_vector(CoeffVector v, ChowProvenance provenance) {
  if (!is_primitive_normalized(v))
    throw InputError("Chow point must be primitive with positive first coordinate");
  return ChowPoint{std::move(v), provenance};
}

void require_plane_curve(const ZPoly& F) {
  if (!(F.shape() == Shape{0, 2})) throw InputError("plane curve must be a form in one block of 3 variables");
  if (F.is_zero()) throw InputError("plane curve form is zero");
  if (F.multidegree()[0] < 1) throw InputError("plane curve must have degree >= 1");
}

ChowPoint chow_plane_curve(const ZPoly& F) {
  require_plane_curve(F);
  if (content(F) != 1) throw InputError("plane curve form must be primitive");
  const ZPoly chow = cross_product_substitution(F);
  auto [c, prim] = content_primitive(chow);
  if (c != 1) throw InvariantViolation("chow_plane_curve: content " + c.get_str() + " after substitution");
  return ChowPoint{coeff_vector(prim), ChowProvenance::plane_curve};
}

ChowPoint chow_zero_cycle(const std::vector<BigInt>& f_in, const std::vector<BigInt>& h_in) {
  std::vector<BigInt> f(f_in), h(h_in);
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
  while (!h.empty() && sgn(h.back()) == 0) h.pop_back();
  if (f.size() < 2) throw InputError("chow_zero_cycle: f must have degree >= 1");
  const std::size_t d = f.size() - 1;

  if (d >= 2) {
    std::vector<BigInt> df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));
    // over Q, f is squarefree iff its discriminant (up to lc) is nonzero
    if (sgn(sylvester_resultant(Integers{}, f, df)) == 0)
      throw InputError("chow_zero_cycle: f is not squarefree");
  }

  const PolyRing ring{Shape{0, 2}};
  auto u = [&](int i) { return ZPoly::variable(Integers{}, ring.shape, 0, i); };
  std::vector<ZPoly> fz, gz;
  for (const auto& c : f) fz.push_back(ZPoly::constant(Integers{}, ring.shape, c));
  const std::size_t glen = std::max<std::size_t>(2, h.size());
  for (std::size_t j = 0; j < glen; ++j) {
    ZPoly c = ring.zero();
    if (j == 0) c = c + u(0);
    if (j == 1) c = c + u(1);
    if (j < h.size() && sgn(h[j]) != 0) c = c + u(2).scaled(h[j]);
    gz.push_back(std::move(c));
  }
  const ZPoly res = sylvester_resultant(ring, fz, gz);
  if (res.is_zero()) throw InvariantViolation("chow_zero_cycle: resultant vanished");
  auto [content_value, prim] = content_primitive(res);
  (void)content_value;
  if (prim.multidegree()[0] != static_cast<int>(d))
    throw InvariantViolation("chow_zero_cycle: u-resultant has wrong degree");
  return ChowPoint{coeff_vector(prim), ChowProvenance::zero_cycle};
}

CoeffVector psi_product(const CoeffVector& a, const CoeffVector& b) {
  if (a.r != b.r || a.s != b.s) throw StructuralError("psi_product: block structure mismatch");
  if (a.is_zero() || b.is_zero()) throw InputError("psi_product: zero vector is not a projective point");
  return coeff_vector(to_poly(a) * to_poly(b));
}

SpecializationReport chow_specialize_check(const ZPoly& F, std::uint32_t p) {
  require_plane_curve(F);
  const FiniteField fp = FiniteField::construct(p, 1);
  const FPoly Fp = reduce_mod_p(F, fp);
  if (Fp.is_zero()) throw InputError("chow_specialize_check: vanishing reduction mod " + std::to_string(p));

  SpecializationReport rep;
  rep.p = p;
  rep.reduced_chow = reduce_mod_p(chow_plane_curve(F).form(), fp);
  rep.fiber_chow = cross_product_substitution(Fp);
  rep.scalar = fp.zero();
  if (rep.reduced_chow.is_zero() || rep.fiber_chow.is_zero()) return rep;
  const FFElem c = fp.mul(rep.reduced_chow.leading().coeff, fp.inv(rep.fiber_chow.leading().coeff));
  rep.holds = rep.reduced_chow == rep.fiber_chow.scaled(c);
  if (rep.holds) rep.scalar = c;
  return rep;
}

}  // namespace chowbound
