#ifndef CHOWBOUND_MULTIPOLY_HPP
#define CHOWBOUND_MULTIPOLY_HPP

// Sparse multihomogeneous polynomials in r+1 blocks of s+1 variables.
//
// A polynomial is parameterized by a coefficient ring object (Integers or
// FiniteField). Terms are kept sorted in the canonical order: descending
// lexicographic on the flattened exponent matrix, block 0 first and within a
// block variable 0 most significant. The same order fixes the monomial basis
// B_x behind CoeffVector, so the first stored term is also the first nonzero
// coordinate.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chowbound/exactnum.hpp"
#include "chowbound/finite_field.hpp"

namespace chowbound {

inline constexpr int kMaxVars = 12;

/// The ring Z. Stateless; every instance compares equal.
struct Integers {
  using Elem = BigInt;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  std::optional<Elem> try_div(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  friend bool operator==(const Integers&, const Integers&) { return true; }
};

struct Shape {
  int r = 0;  // blocks are numbered 0..r
  int s = 0;  // each block has variables 0..s

  int blocks() const { return r + 1; }
  int block_size() const { return s + 1; }
  int nvars() const { return (r + 1) * (s + 1); }
  int var(int block, int v) const { return block * (s + 1) + v; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

using Monomial = std::array<std::uint16_t, kMaxVars>;

void validate_shape(const Shape& shape);

/// Basis B_x: monomials of multidegree (x,...,x), canonical (descending) order.
std::vector<Monomial> basis_monomials(const Shape& shape, int x);

/// Number of monomials of multidegree (x,...,x): binom(x+s,s)^{r+1}.
BigInt basis_size(const Shape& shape, int x);

template <class Ring>
class MHPoly {
 public:
  using Elem = typename Ring::Elem;
  struct Term {
    Monomial exps{};
    Elem coeff;
  };

  MHPoly() = default;

  /// The zero polynomial with a declared multidegree.
  MHPoly(Ring ring, Shape shape, std::vector<int> multidegree)
      : ring_(std::move(ring)), shape_(shape), multidegree_(std::move(multidegree)) {
    validate_shape(shape_);
    if (static_cast<int>(multidegree_.size()) != shape_.blocks())
      throw StructuralError("multidegree length must equal the number of blocks");
  }

  /// Collects like terms, drops zeros, sorts canonically and checks that every
  /// block of every exponent matrix sums to the declared multidegree.
  static MHPoly from_terms(Ring ring, Shape shape, std::vector<int> multidegree, std::vector<Term> terms) {
    MHPoly f(std::move(ring), shape, std::move(multidegree));
    for (const Term& t : terms) f.check_monomial(t.exps);
    f.terms_ = std::move(terms);
    f.normalize_terms();
    return f;
  }

  static MHPoly constant(Ring ring, Shape shape, const Elem& c) {
    std::vector<Term> t;
    t.push_back({Monomial{}, c});
    return from_terms(std::move(ring), shape, std::vector<int>(shape.blocks(), 0), std::move(t));
  }

  static MHPoly variable(Ring ring, Shape shape, int block, int v) {
    validate_shape(shape);
    if (block < 0 || block >= shape.blocks() || v < 0 || v >= shape.block_size())
      throw StructuralError("variable index out of range");
    std::vector<int> md(shape.blocks(), 0);
    md[block] = 1;
    Term t;
    t.exps[shape.var(block, v)] = 1;
    t.coeff = ring.one();
    return from_terms(std::move(ring), shape, std::move(md), {t});
  }

  const Ring& ring() const { return ring_; }
  const Shape& shape() const { return shape_; }
  const std::vector<int>& multidegree() const { return multidegree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  bool uniform_degree(int* x = nullptr) const {
    for (int d : multidegree_)
      if (d != multidegree_.front()) return false;
    if (x) *x = multidegree_.front();
    return true;
  }

  /// Coefficient of a monomial (zero if absent).
  Elem coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.exps > key; });
    if (it != terms_.end() && it->exps == m) return it->coeff;
    return ring_.zero();
  }

  friend bool operator==(const MHPoly& a, const MHPoly& b) {
    if (!(a.shape_ == b.shape_) || !(a.ring_ == b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.is_zero()) return true;
    if (a.multidegree_ != b.multidegree_) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exps != b.terms_[i].exps || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

  MHPoly operator+(const MHPoly& o) const { return combine(o, false); }
  MHPoly operator-(const MHPoly& o) const { return combine(o, true); }
  MHPoly operator-() const {
    MHPoly r(*this);
    for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
  }

  MHPoly scaled(const Elem& c) const {
    MHPoly r(ring_, shape_, multidegree_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Elem v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.exps, std::move(v)});
    }
    return r;
  }

  /// mh_mul. Multidegrees add componentwise.
  MHPoly operator*(const MHPoly& o) const {
    require_compatible(o);
    std::vector<int> md(multidegree_.size());
    for (std::size_t i = 0; i < md.size(); ++i) md[i] = multidegree_[i] + o.multidegree_[i];
    MHPoly r(ring_, shape_, std::move(md));
    if (is_zero() || o.is_zero()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Term t;
        for (int v = 0; v < kMaxVars; ++v) t.exps[v] = static_cast<std::uint16_t>(a.exps[v] + b.exps[v]);
        t.coeff = ring_.mul(a.coeff, b.coeff);
        r.terms_.push_back(std::move(t));
      }
    r.normalize_terms();
    return r;
  }

  MHPoly pow(unsigned e) const {
    MHPoly r = constant(ring_, shape_, ring_.one());
    MHPoly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  /// Exact division: the quotient q with q * g == *this, or nullopt when g
  /// does not divide. With a single divisor the lex division algorithm has
  /// zero remainder iff g divides, so the first leading term that cannot be
  /// cancelled ends the search.
  std::optional<MHPoly> divide_exact(const MHPoly& g) const {
    require_compatible(g);
    if (g.is_zero()) throw std::domain_error("MHPoly: division by zero polynomial");
    std::vector<int> md(multidegree_.size());
    for (std::size_t i = 0; i < md.size(); ++i) {
      md[i] = multidegree_[i] - g.multidegree_[i];
      if (md[i] < 0 && !is_zero()) return std::nullopt;
    }
    for (auto& v : md) v = std::max(v, 0);
    MHPoly q(ring_, shape_, md);
    if (is_zero()) return q;

    // Remainder kept sorted descending in a map; only the leading entry is
    // ever inspected.
    std::map<Monomial, Elem, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.exps, t.coeff);
    const Term& lg = g.leading();
    while (!rem.empty()) {
      auto it = rem.begin();
      Monomial qm{};
      for (int v = 0; v < kMaxVars; ++v) {
        if (it->first[v] < lg.exps[v]) return std::nullopt;
        qm[v] = static_cast<std::uint16_t>(it->first[v] - lg.exps[v]);
      }
      std::optional<Elem> qc = ring_.try_div(it->second, lg.coeff);
      if (!qc) return std::nullopt;
      q.terms_.push_back({qm, *qc});
      for (const auto& gt : g.terms_) {
        Monomial m{};
        for (int v = 0; v < kMaxVars; ++v) m[v] = static_cast<std::uint16_t>(qm[v] + gt.exps[v]);
        Elem delta = ring_.mul(*qc, gt.coeff);
        auto [pos, inserted] = rem.try_emplace(m, ring_.neg(delta));
        if (!inserted) {
          pos->second = ring_.sub(pos->second, delta);
          if (ring_.is_zero(pos->second)) rem.erase(pos);
        } else if (ring_.is_zero(pos->second)) {
          rem.erase(pos);
        }
      }
    }
    // quotient terms were produced in strictly descending order
    return q;
  }

  /// Evaluate at a point given as one value per variable (flattened).
  Elem evaluate(std::span<const Elem> point) const {
    if (static_cast<int>(point.size()) != shape_.nvars())
      throw StructuralError("evaluate: point has wrong number of coordinates");
    Elem acc = ring_.zero();
    for (const auto& t : terms_) {
      Elem m = t.coeff;
      for (int v = 0; v < shape_.nvars(); ++v)
        for (int e = 0; e < t.exps[v]; ++e) m = ring_.mul(m, point[v]);
      acc = ring_.add(acc, m);
    }
    return acc;
  }

  /// Apply a coefficient map into another ring, dropping zero images.
  template <class Ring2, class Fn>
  MHPoly<Ring2> map_coeffs(const Ring2& target, Fn&& fn) const {
    std::vector<typename MHPoly<Ring2>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exps, fn(t.coeff)});
    return MHPoly<Ring2>::from_terms(target, shape_, multidegree_, std::move(out));
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string c = ring_.to_string(t.coeff);
      bool has_var = false;
      std::string mono;
      for (int v = 0; v < shape_.nvars(); ++v) {
        if (t.exps[v] == 0) continue;
        if (has_var) mono += "*";
        mono += v < static_cast<int>(names.size()) ? names[v] : default_name(v);
        if (t.exps[v] > 1) mono += "^" + std::to_string(t.exps[v]);
        has_var = true;
      }
      if (!out.empty()) out += " + ";
      if (!has_var) out += c;
      else if (c == "1") out += mono;
      else out += c + "*" + mono;
    }
    return out;
  }

 private:
  template <class>
  friend class MHPoly;

  std::string default_name(int v) const {
    return "X" + std::to_string(v / shape_.block_size()) + "_" + std::to_string(v % shape_.block_size());
  }

  void check_monomial(const Monomial& m) const {
    for (int v = shape_.nvars(); v < kMaxVars; ++v)
      if (m[v] != 0) throw StructuralError("exponent on a variable outside the shape");
    for (int b = 0; b < shape_.blocks(); ++b) {
      int sum = 0;
      for (int v = 0; v < shape_.block_size(); ++v) sum += m[shape_.var(b, v)];
      if (sum != multidegree_[b]) throw StructuralError("term is not multihomogeneous of the declared multidegree");
    }
  }

  void require_compatible(const MHPoly& o) const {
    if (!(shape_ == o.shape_)) throw StructuralError("block structure mismatch");
    if (!(ring_ == o.ring_)) throw StructuralError("coefficient ring mismatch");
  }

  MHPoly combine(const MHPoly& o, bool subtract) const {
    require_compatible(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return subtract ? -o : o;
    if (multidegree_ != o.multidegree_) throw StructuralError("adding forms of different multidegrees");
    MHPoly r(ring_, shape_, multidegree_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exps > o.terms_[j].exps)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].exps > terms_[i].exps) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.exps, subtract ? ring_.neg(t.coeff) : t.coeff});
      } else {
        Elem c = subtract ? ring_.sub(terms_[i].coeff, o.terms_[j].coeff) : ring_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!ring_.is_zero(c)) r.terms_.push_back({terms_[i].exps, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exps > b.exps; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exps == t.exps) out.back().coeff = ring_.add(out.back().coeff, t.coeff);
      else out.push_back(std::move(t));
    }
    std::erase_if(out, [this](const Term& t) { return ring_.is_zero(t.coeff); });
    terms_ = std::move(out);
  }

  Ring ring_{};
  Shape shape_{};
  std::vector<int> multidegree_{0};
  std::vector<Term> terms_;
};

using ZPoly = MHPoly<Integers>;
using FPoly = MHPoly<FiniteField>;

/// mh_substitute: replace variable v of f by images[v] (flattened order).
/// Images of the variables of one block must share a multidegree; the result
/// has multidegree sum_i x_i * e_i.
template <class Ring>
MHPoly<Ring> substitute(const MHPoly<Ring>& f, const std::vector<MHPoly<Ring>>& images) {
  const Shape& src = f.shape();
  if (static_cast<int>(images.size()) != src.nvars())
    throw StructuralError("substitute: need exactly one image per variable");
  const Shape target = images.front().shape();
  std::vector<std::vector<int>> block_deg(src.blocks());
  for (int b = 0; b < src.blocks(); ++b) {
    for (int v = 0; v < src.block_size(); ++v) {
      const auto& img = images[src.var(b, v)];
      if (!(img.shape() == target) || !(img.ring() == f.ring()))
        throw StructuralError("substitute: images must share one block structure and ring");
      if (v == 0) block_deg[b] = img.multidegree();
      else if (img.multidegree() != block_deg[b])
        throw StructuralError("substitute: images within a block must have a uniform multidegree");
    }
  }
  std::vector<int> md(target.blocks(), 0);
  for (int b = 0; b < src.blocks(); ++b)
    for (int j = 0; j < target.blocks(); ++j) md[j] += f.multidegree()[b] * block_deg[b][j];

  // powers[v][e] = images[v]^e, filled lazily
  std::vector<std::vector<MHPoly<Ring>>> powers(images.size());
  auto power = [&](int v, int e) -> const MHPoly<Ring>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MHPoly<Ring>::constant(f.ring(), target, f.ring().one()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MHPoly<Ring> result(f.ring(), target, md);
  for (const auto& t : f.terms()) {
    MHPoly<Ring> prod = MHPoly<Ring>::constant(f.ring(), target, t.coeff);
    for (int v = 0; v < src.nvars(); ++v)
      if (t.exps[v] > 0) prod = prod * power(v, t.exps[v]);
    result = result + prod;
  }
  return result;
}

/// content_primitive: (gcd of coefficients, primitive part with positive
/// first coefficient). Throws on the zero polynomial.
std::pair<BigInt, ZPoly> content_primitive(const ZPoly& f);

BigInt content(const ZPoly& f);

/// Coefficientwise reduction into a finite field.
FPoly reduce_mod_p(const ZPoly& f, const FiniteField& field);

/// Lift prime-field coefficients of g into the extension `field` (same p).
FPoly embed(const FPoly& g, const FiniteField& field);

/// Scale so the first coefficient (canonical order) is 1.
FPoly make_monic(const FPoly& f);

/// Dense coordinates in the basis B_x for a form of multidegree (x,...,x).
struct CoeffVector {
  int r = 0;
  int s = 0;
  int x = 0;
  std::vector<BigInt> coords;

  Shape shape() const { return {r, s}; }
  bool is_zero() const;
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

CoeffVector coeff_vector(const ZPoly& f);
ZPoly to_poly(const CoeffVector& v);

/// Gcd of entries is 1 and the first nonzero entry is positive.
bool is_primitive_normalized(const CoeffVector& v);
/// Returns the primitive, sign-normalized vector; throws on zero.
CoeffVector primitive_normalized(const CoeffVector& v);

}  // namespace chowbound

#endif  // CHOWBOUND_MULTIPOLY_HPP
