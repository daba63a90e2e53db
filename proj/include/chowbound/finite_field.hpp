#ifndef CHOWBOUND_FINITE_FIELD_HPP
#define CHOWBOUND_FINITE_FIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowbound/exactnum.hpp"

namespace chowbound {

inline constexpr unsigned kMaxExtensionDegree = 12;

/// Dense univariate polynomial over a prime field F_p, coefficients low to
/// high, no trailing zeros (the zero polynomial is empty).
class UPolyFp {
 public:
  UPolyFp() = default;
  UPolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static UPolyFp monomial(std::uint32_t p, unsigned degree, std::uint32_t c = 1);

  std::uint32_t prime() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t eval(std::uint32_t x) const;

  UPolyFp operator+(const UPolyFp& o) const;
  UPolyFp operator-(const UPolyFp& o) const;
  UPolyFp operator*(const UPolyFp& o) const;
  UPolyFp scaled(std::uint32_t c) const;
  UPolyFp monic() const;
  UPolyFp derivative() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPolyFp, UPolyFp> divmod(const UPolyFp& divisor) const;
  UPolyFp operator%(const UPolyFp& m) const { return divmod(m).second; }

  friend bool operator==(const UPolyFp&, const UPolyFp&) = default;
  friend auto operator<=>(const UPolyFp& a, const UPolyFp& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return std::strong_ordering::equal;
  }

  std::string to_string(char var = 't') const;

 private:
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Monic gcd (zero if both inputs are zero).
UPolyFp gcd(UPolyFp a, UPolyFp b);
/// base^e mod m for a multiprecision exponent.
UPolyFp powmod(const UPolyFp& base, const BigInt& e, const UPolyFp& m);

/// True iff m (degree >= 1) is irreducible over F_p, by checking
/// gcd(x^{p^i} - x, m) = 1 for i <= deg(m)/2.
bool is_irreducible(const UPolyFp& m);

/// Element of F_{p^k}: residue polynomial of degree < k, stored inline.
struct FFElem {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  friend auto operator<=>(const FFElem&, const FFElem&) = default;
};

/// F_{p^k} = F_p[x]/(m). Cheap to copy: the modulus lives inline.
class FiniteField {
 public:
  using Elem = FFElem;

  /// The prime field F_2.
  FiniteField() : FiniteField(2, 1, {0, 1}) {}

  /// ff_construct: p prime, 1 <= k <= 12. The modulus is the first monic
  /// irreducible polynomial in ascending order of (c_{k-1}, ..., c_0); the
  /// prime field uses the modulus x.
  static FiniteField construct(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  UPolyFp modulus() const;
  BigInt order() const;
  /// Number of elements when it fits in 64 bits.
  std::optional<std::uint64_t> order_u64() const;

  Elem zero() const { return {}; }
  Elem one() const { return from_int(1); }
  Elem from_int(long long v) const;
  Elem from_bigint(const BigInt& v) const;
  /// Residue class of x (a root of the modulus).
  Elem generator() const;

  bool is_zero(const Elem& a) const { return a == Elem{}; }
  bool is_one(const Elem& a) const { return a == one(); }
  bool in_prime_field(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, BigInt e) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Elem inv(const Elem& a) const;
  std::optional<Elem> try_div(const Elem& a, const Elem& b) const;
  Elem frobenius(const Elem& a) const { return pow(a, std::uint64_t{p_}); }

  /// Enumeration order used by every search: index = sum c_i p^i.
  Elem element(std::uint64_t index) const;
  std::uint64_t index(const Elem& a) const;

  /// "3", or "2a+1" with `a` the generator.
  std::string to_string(const Elem& a) const;
  std::vector<std::uint32_t> digits(const Elem& a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.mod_ == b.mod_;
  }

 private:
  FiniteField(std::uint32_t p, unsigned k, const std::vector<std::uint32_t>& mod);

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  // monic modulus, coefficients 0..k
  std::array<std::uint32_t, kMaxExtensionDegree + 1> mod_{};
};

}  // namespace chowbound

#endif  // CHOWBOUND_FINITE_FIELD_HPP
