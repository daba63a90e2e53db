#include "chowbound/multipoly.hpp"

namespace chowbound {

void validate_shape(const Shape& shape) {
  if (shape.r < 0 || shape.s < 0) throw StructuralError("shape: r and s must be nonnegative");
  if (shape.nvars() > kMaxVars)
    throw StructuralError("shape: (r+1)(s+1) = " + std::to_string(shape.nvars()) + " exceeds " +
                          std::to_string(kMaxVars) + " variables");
}

namespace {

// Exponent rows of one block summing to x, descending lex.
void block_rows(int s, int x, std::vector<std::vector<std::uint16_t>>& out) {
  std::vector<std::uint16_t> row(s + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == s) {
      row[pos] = static_cast<std::uint16_t>(left);
      out.push_back(row);
      return;
    }
    for (int e = left; e >= 0; --e) {
      row[pos] = static_cast<std::uint16_t>(e);
      rec(pos + 1, left - e);
    }
  };
  rec(0, x);
}

}  // namespace

std::vector<Monomial> basis_monomials(const Shape& shape, int x) {
  validate_shape(shape);
  if (x < 0) throw StructuralError("basis_monomials: negative degree");
  std::vector<std::vector<std::uint16_t>> rows;
  block_rows(shape.s, x, rows);
  std::vector<Monomial> out;
  Monomial cur{};
  std::function<void(int)> rec = [&](int block) {
    if (block == shape.blocks()) {
      out.push_back(cur);
      return;
    }
    for (const auto& row : rows) {
      for (int v = 0; v <= shape.s; ++v) cur[shape.var(block, v)] = row[v];
      rec(block + 1);
    }
  };
  rec(0);
  return out;
}

BigInt basis_size(const Shape& shape, int x) {
  BigInt b = binomial(static_cast<std::uint64_t>(x + shape.s), static_cast<std::uint64_t>(shape.s));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(shape.r + 1));
  return r;
}

BigInt content(const ZPoly& f) {
  BigInt g = 0;
  for (const auto& t : f.terms()) g = gcd(g, t.coeff);
  return abs(g);
}

std::pair<BigInt, ZPoly> content_primitive(const ZPoly& f) {
  if (f.is_zero()) throw InputError("content_primitive: zero polynomial");
  BigInt c = content(f);
  if (sgn(f.leading().coeff) < 0) c = -c;
  std::vector<ZPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    terms.push_back({t.exps, q});
  }
  return {abs(c), ZPoly::from_terms(f.ring(), f.shape(), f.multidegree(), std::move(terms))};
}

FPoly reduce_mod_p(const ZPoly& f, const FiniteField& field) {
  return f.map_coeffs(field, [&](const BigInt& c) { return field.from_bigint(c); });
}

FPoly embed(const FPoly& g, const FiniteField& field) {
  if (g.ring().characteristic() != field.characteristic())
    throw StructuralError("embed: characteristic mismatch");
  if (g.ring() == field) return g;
  return g.map_coeffs(field, [&](const FFElem& c) {
    if (!g.ring().in_prime_field(c)) throw StructuralError("embed: coefficient outside the prime field");
    return field.from_int(c.c[0]);
  });
}

FPoly make_monic(const FPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring().inv(f.leading().coeff));
}

bool CoeffVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

CoeffVector coeff_vector(const ZPoly& f) {
  int x = 0;
  if (!f.uniform_degree(&x)) throw StructuralError("coeff_vector: multidegree is not uniform");
  const auto basis = basis_monomials(f.shape(), x);
  CoeffVector v{f.shape().r, f.shape().s, x, std::vector<BigInt>(basis.size(), 0)};
  std::size_t pos = 0;
  // terms and basis share the descending order, so one merge pass suffices
  for (const auto& t : f.terms()) {
    while (pos < basis.size() && basis[pos] != t.exps) ++pos;
    if (pos == basis.size()) throw InvariantViolation("coeff_vector: term missing from basis");
    v.coords[pos] = t.coeff;
  }
  return v;
}

ZPoly to_poly(const CoeffVector& v) {
  const Shape shape{v.r, v.s};
  const auto basis = basis_monomials(shape, v.x);
  if (basis.size() != v.coords.size()) throw StructuralError("to_poly: vector length does not match basis");
  std::vector<ZPoly::Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(v.coords[i]) != 0) terms.push_back({basis[i], v.coords[i]});
  return ZPoly::from_terms(Integers{}, shape, std::vector<int>(shape.blocks(), v.x), std::move(terms));
}

bool is_primitive_normalized(const CoeffVector& v) {
  BigInt g = 0;
  for (const auto& c : v.coords) g = gcd(g, c);
  if (g != 1) return false;
  for (const auto& c : v.coords)
    if (sgn(c) != 0) return sgn(c) > 0;
  return false;
}

CoeffVector primitive_normalized(const CoeffVector& v) {
  BigInt g = 0;
  for (const auto& c : v.coords) g = gcd(g, c);
  if (g == 0) throw InputError("zero vector is not a projective point");
  for (const auto& c : v.coords)
    if (sgn(c) != 0) {
      if (sgn(c) < 0) g = -g;
      break;
    }
  CoeffVector out = v;
  for (auto& c : out.coords) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace chowbound
