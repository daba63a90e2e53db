#include "chowbound/modfactor.hpp"

#include <algorithm>
#include <random>

namespace chowbound {

// ------------------------------------------------------------ univariate

UPolyFp FactorList::product() const {
  UPolyFp acc(factors.empty() ? 2 : factors.front().first.prime(), {lead});
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) acc = acc * f;
  return acc;
}

namespace {

UPolyFp exact_quotient(const UPolyFp& a, const UPolyFp& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw InvariantViolation("univ_factor: inexact polynomial division");
  return q;
}

// f = g(t^p) for a monic f with zero derivative; returns g (a^p = a in F_p).
UPolyFp pth_root(const UPolyFp& f) {
  const std::uint32_t p = f.prime();
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return UPolyFp(p, std::move(c));
}

void squarefree_split(const UPolyFp& f, int mult, std::vector<std::pair<UPolyFp, int>>& out) {
  if (f.degree() < 1) return;
  const std::uint32_t p = f.prime();
  UPolyFp c = gcd(f, f.derivative());
  UPolyFp w = exact_quotient(f, c);
  int i = 1;
  while (w.degree() > 0) {
    UPolyFp y = gcd(w, c);
    UPolyFp fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i * mult);
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (c.degree() > 0) squarefree_split(pth_root(c), mult * static_cast<int>(p), out);
}

void distinct_degree_split(UPolyFp g, std::vector<std::pair<UPolyFp, int>>& out) {
  const std::uint32_t p = g.prime();
  const UPolyFp x = UPolyFp::monomial(p, 1);
  const BigInt pe(static_cast<unsigned long>(p));
  UPolyFp h = x % g;
  for (int i = 1; g.degree() >= 2 * i; ++i) {
    h = powmod(h, pe, g);
    UPolyFp fac = gcd(g, h - x);
    if (fac.degree() > 0) {
      out.emplace_back(fac, i);
      g = exact_quotient(g, fac);
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
}

void equal_degree_split(const UPolyFp& f, int i, std::mt19937_64& rng, std::vector<UPolyFp>& out) {
  if (f.degree() == i) {
    out.push_back(f);
    return;
  }
  const std::uint32_t p = f.prime();
  BigInt pi;
  mpz_ui_pow_ui(pi.get_mpz_t(), p, static_cast<unsigned long>(i));
  while (true) {
    std::vector<std::uint32_t> c(f.degree());
    for (auto& v : c) v = static_cast<std::uint32_t>(rng() % p);
    UPolyFp a(p, std::move(c));
    if (a.degree() < 1) continue;
    UPolyFp b;
    if (p == 2) {
      // trace from F_{2^i} down to F_2
      UPolyFp term = a % f;
      b = term;
      for (int j = 1; j < i; ++j) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      BigInt e = (pi - 1) / 2;
      b = powmod(a, e, f) - UPolyFp(p, {1});
    }
    UPolyFp g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, i, rng, out);
      equal_degree_split(exact_quotient(f, g), i, rng, out);
      return;
    }
  }
}

}  // namespace

FactorList univ_factor(const UPolyFp& f, std::uint64_t seed) {
  if (f.is_zero()) throw InputError("univ_factor: zero polynomial");
  FactorList res;
  res.lead = f.lead();
  std::mt19937_64 rng(seed);

  std::vector<std::pair<UPolyFp, int>> sqf;
  squarefree_split(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    std::vector<std::pair<UPolyFp, int>> dd;
    distinct_degree_split(part, dd);
    for (const auto& [block, deg] : dd) {
      std::vector<UPolyFp> irr;
      equal_degree_split(block, deg, rng, irr);
      for (auto& g : irr) res.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  return res;
}

// --------------------------------------------------------- decomposition

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "yes";
    case SearchStatus::none: return "no";
    case SearchStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::irreducible: return "irreducible";
    case Irreducibility::reducible: return "reducible";
    case Irreducibility::undetermined: return "undetermined";
  }
  return "undetermined";
}

bool DecompositionWitness::verify(const FPoly& F) const {
  const FPoly lifted = embed(F, field);
  return (G * H).scaled(scalar) == lifted;
}

namespace {

const Shape kPlane{0, 2};

void require_prime_field_plane_form(const FPoly& F, int n) {
  if (!(F.shape() == kPlane)) throw InputError("decomposition search: expected a form in X0, X1, X2");
  if (F.ring().degree() != 1) throw InputError("decomposition search: form must be over a prime field");
  if (F.is_zero()) throw InputError("decomposition search: zero form");
  const int d = F.multidegree()[0];
  if (n < 1 || n > d - 1) throw InputError("decomposition search: n must lie in 1..d-1");
}

FPoly linear_form(const FiniteField& K, const FFElem& a0, const FFElem& a1, const FFElem& a2) {
  std::vector<FPoly::Term> t;
  Monomial m{};
  m[0] = 1;
  t.push_back({m, a0});
  m = Monomial{};
  m[1] = 1;
  t.push_back({m, a1});
  m = Monomial{};
  m[2] = 1;
  t.push_back({m, a2});
  return FPoly::from_terms(K, kPlane, {1}, std::move(t));
}

// Builds the witness from a divisor `div` of degree min(n, d-n) and checks it.
DecompositionWitness make_witness(const FPoly& Fk, const FPoly& div, const FPoly& quo, int n, unsigned k) {
  DecompositionWitness w;
  w.p = Fk.ring().characteristic();
  w.k = k;
  w.field = Fk.ring();
  const bool div_is_G = div.multidegree()[0] == n;
  w.G = make_monic(div_is_G ? div : quo);
  w.H = make_monic(div_is_G ? quo : div);
  w.scalar = Fk.leading().coeff;
  if (!((w.G * w.H).scaled(w.scalar) == Fk))
    throw InvariantViolation("decomposition witness does not re-multiply to F");
  return w;
}

BigInt normalized_form_count(const BigInt& q, int monomials) {
  BigInt qm;
  mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(monomials));
  return (qm - 1) / (q - 1);
}

// Every normalized form of degree m over K in order: position of the leading
// 1, then the tail read as a base-q number. Calls visit until it returns true.
template <class Visit>
bool enumerate_normalized_forms(const FiniteField& K, std::uint64_t q, int m, Visit&& visit) {
  const auto basis = basis_monomials(kPlane, m);
  const std::size_t M = basis.size();
  std::vector<std::uint64_t> digits(M, 0);
  for (std::size_t lead = 0; lead < M; ++lead) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      std::vector<FPoly::Term> terms;
      terms.push_back({basis[lead], K.one()});
      for (std::size_t i = lead + 1; i < M; ++i)
        if (digits[i] != 0) terms.push_back({basis[i], K.element(digits[i])});
      if (visit(FPoly::from_terms(K, kPlane, {m}, std::move(terms)))) return true;
      std::size_t i = M;
      while (i > lead + 1 && ++digits[i - 1] == q) digits[--i] = 0;
      if (i == lead + 1) break;
    }
  }
  return false;
}

}  // namespace

DecompositionResult find_decomposition(const FPoly& F, int n, std::uint64_t cost_cap, std::uint64_t seed) {
  require_prime_field_plane_form(F, n);
  const int d = F.multidegree()[0];
  const int m = std::min(n, d - n);
  const std::uint32_t p = F.ring().characteristic();

  // binary form f0(Y1, Y2) = F(0, Y1, Y2); g(t) = f0(1, t) = sum b_j t^j
  std::vector<std::uint32_t> b(d + 1, 0);
  bool x0_divides = true;
  for (const auto& t : F.terms()) {
    if (t.exps[0] != 0) continue;
    x0_divides = false;
    b[t.exps[2]] = t.coeff.c[0];
  }
  const UPolyFp g(p, b);
  const bool infinity_root = b[d] == 0;  // (Y1:Y2) = (0:1)
  std::vector<int> factor_degrees;
  if (m == 1 && !x0_divides) {
    for (const auto& [fac, mult] : univ_factor(g, seed).factors) factor_degrees.push_back(fac.degree());
  }

  DecompositionResult res;
  for (unsigned k = 1; k <= static_cast<unsigned>(d); ++k) {
    res.k = k;
    if (k > kMaxExtensionDegree) {
      res.status = SearchStatus::undetermined;
      return res;
    }
    const FiniteField K = FiniteField::construct(p, k);
    const auto q64 = K.order_u64();
    const FPoly Fk = embed(F, K);

    if (m == 1) {
      if (x0_divides) {
        const FPoly X0 = linear_form(K, K.one(), K.zero(), K.zero());
        auto quo = Fk.divide_exact(X0);
        if (!quo) throw InvariantViolation("find_decomposition: X0 should divide F");
        res.status = SearchStatus::found;
        res.witness = make_witness(Fk, X0, *quo, n, k);
        return res;
      }
      const bool finite_roots = std::any_of(factor_degrees.begin(), factor_degrees.end(),
                                            [k](int e) { return k % static_cast<unsigned>(e) == 0; });
      if (!finite_roots && !infinity_root) continue;
      if (!q64 || *q64 > cost_cap / static_cast<std::uint64_t>(d + 2)) {
        res.status = SearchStatus::undetermined;
        return res;
      }
      const std::uint64_t q = *q64;
      std::vector<FFElem> roots;  // t with g(t) = 0, in enumeration order
      if (finite_roots) {
        for (std::uint64_t i = 0; i < q; ++i) {
          const FFElem t = K.element(i);
          FFElem acc = K.zero();
          for (int j = d; j >= 0; --j) acc = K.add(K.mul(acc, t), K.from_int(b[j]));
          if (K.is_zero(acc)) roots.push_back(t);
        }
      }
      auto try_pencil = [&](const FFElem& a1, const FFElem& a2) -> bool {
        for (std::uint64_t i = 0; i < q; ++i) {
          const FPoly L = make_monic(linear_form(K, K.element(i), a1, a2));
          if (auto quo = Fk.divide_exact(L)) {
            res.status = SearchStatus::found;
            res.witness = make_witness(Fk, L, *quo, n, k);
            return true;
          }
        }
        return false;
      };
      // lines through (0 : 1 : t) are c X0 + t X1 - X2
      for (const auto& t : roots)
        if (try_pencil(t, K.neg(K.one()))) return res;
      // lines through (0 : 0 : 1) are c X0 + X1
      if (infinity_root && try_pencil(K.one(), K.zero())) return res;
      continue;
    }

    const int M = static_cast<int>(basis_monomials(kPlane, m).size());
    if (!q64 || normalized_form_count(K.order(), M) > BigInt(std::to_string(cost_cap))) {
      res.status = SearchStatus::undetermined;
      return res;
    }
    const bool hit = enumerate_normalized_forms(K, *q64, m, [&](const FPoly& G) {
      if (auto quo = Fk.divide_exact(G)) {
        res.status = SearchStatus::found;
        res.witness = make_witness(Fk, G, *quo, n, k);
        return true;
      }
      return false;
    });
    if (hit) return res;
  }
  res.status = SearchStatus::none;
  return res;
}

DecompositionResult decomposition_oracle(const FPoly& F, int n, std::uint64_t cost_cap) {
  require_prime_field_plane_form(F, n);
  const int d = F.multidegree()[0];
  const int m = std::min(n, d - n);
  const int M = (m + 1) * (m + 2) / 2;
  DecompositionResult res;
  for (unsigned k = 1; k <= static_cast<unsigned>(d); ++k) {
    res.k = k;
    if (k > kMaxExtensionDegree) {
      res.status = SearchStatus::undetermined;
      return res;
    }
    const FiniteField K = FiniteField::construct(F.ring().characteristic(), k);
    const auto q64 = K.order_u64();
    if (!q64 || normalized_form_count(K.order(), M) > BigInt(std::to_string(cost_cap))) {
      res.status = SearchStatus::undetermined;
      return res;
    }
    const FPoly Fk = embed(F, K);
    const bool hit = enumerate_normalized_forms(K, *q64, m, [&](const FPoly& G) {
      if (auto quo = Fk.divide_exact(G)) {
        res.status = SearchStatus::found;
        res.witness = make_witness(Fk, G, *quo, n, k);
        return true;
      }
      return false;
    });
    if (hit) return res;
  }
  res.status = SearchStatus::none;
  return res;
}

IrreducibilityResult abs_irred_mod_p(const FPoly& F, std::uint64_t cost_cap, std::uint64_t seed) {
  if (F.is_zero()) throw InputError("abs_irred_mod_p: zero form");
  const int d = F.multidegree()[0];
  IrreducibilityResult res;
  res.verdict = Irreducibility::irreducible;
  bool undetermined = false;
  for (int n = 1; 2 * n <= d; ++n) {
    DecompositionResult r = find_decomposition(F, n, cost_cap, seed);
    if (r.status == SearchStatus::found) {
      res.verdict = Irreducibility::reducible;
      res.witness = std::move(r.witness);
      return res;
    }
    if (r.status == SearchStatus::undetermined) undetermined = true;
  }
  if (undetermined) res.verdict = Irreducibility::undetermined;
  return res;
}

}  // namespace chowbound
