#ifndef CHOWBOUND_RESULTANT_HPP
#define CHOWBOUND_RESULTANT_HPP

#include <utility>
#include <vector>

#include "chowbound/multipoly.hpp"

namespace chowbound {

/// Z[u_0..u_s] (one block) as a coefficient ring for univariate polynomials.
/// Elements are homogeneous; Bareiss entries are minors of a Sylvester
/// matrix whose rows are homogeneous, so they stay homogeneous.
struct PolyRing {
  using Elem = ZPoly;
  Shape shape{0, 2};

  Elem zero() const { return ZPoly(Integers{}, shape, {0}); }
  Elem one() const { return ZPoly::constant(Integers{}, shape, 1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  std::optional<Elem> try_div(const Elem& a, const Elem& b) const { return a.divide_exact(b); }
  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.shape == b.shape; }
};

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
template <class Ring>
typename Ring::Elem bareiss_determinant(const Ring& ring, std::vector<std::vector<typename Ring::Elem>> m) {
  using Elem = typename Ring::Elem;
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && ring.is_zero(m[piv][k])) ++piv;
      if (piv == n) return ring.zero();
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Elem num = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
        auto q = ring.try_div(num, prev);
        if (!q) throw InvariantViolation("bareiss_determinant: inexact division");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  Elem det = m[n - 1][n - 1];
  return negate ? ring.neg(det) : det;
}

/// Sylvester resultant of f and g, coefficients given low to high.
/// Rows of f come first, each row lists coefficients from the top degree
/// down, so Res(t - a, t - b) = a - b and Res(f, g) = lc(f)^{deg g} prod g(roots of f).
template <class Ring>
typename Ring::Elem sylvester_resultant(const Ring& ring, std::vector<typename Ring::Elem> f,
                                        std::vector<typename Ring::Elem> g) {
  using Elem = typename Ring::Elem;
  auto trim = [&](std::vector<Elem>& v) {
    while (!v.empty() && ring.is_zero(v.back())) v.pop_back();
  };
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) throw InputError("sylvester_resultant: zero polynomial");
  const std::size_t df = f.size() - 1, dg = g.size() - 1;
  if (df == 0 && dg == 0) throw InputError("sylvester_resultant: both polynomials are constant");
  const std::size_t n = df + dg;
  std::vector<std::vector<Elem>> m(n, std::vector<Elem>(n, ring.zero()));
  for (std::size_t row = 0; row < dg; ++row)
    for (std::size_t i = 0; i <= df; ++i) m[row][row + i] = f[df - i];
  for (std::size_t row = 0; row < df; ++row)
    for (std::size_t i = 0; i <= dg; ++i) m[dg + row][row + i] = g[dg - i];
  return bareiss_determinant(ring, std::move(m));
}

}  // namespace chowbound

#endif  // CHOWBOUND_RESULTANT_HPP
