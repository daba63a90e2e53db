#include "chowbound/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowbound {

namespace {

inline std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

}  // namespace

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, x = a % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("mod_inverse: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

// ---------------------------------------------------------------- UPolyFp

UPolyFp::UPolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

UPolyFp UPolyFp::monomial(std::uint32_t p, unsigned degree, std::uint32_t c) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c;
  return UPolyFp(p, std::move(v));
}

void UPolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t UPolyFp::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = addp(mulp(acc, x, p_), c_[i], p_);
  return acc;
}

UPolyFp UPolyFp::operator+(const UPolyFp& o) const {
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = addp((*this)[i], o[i], p_);
  return UPolyFp(p_, std::move(r));
}

UPolyFp UPolyFp::operator-(const UPolyFp& o) const {
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = subp((*this)[i], o[i], p_);
  return UPolyFp(p_, std::move(r));
}

UPolyFp UPolyFp::operator*(const UPolyFp& o) const {
  if (is_zero() || o.is_zero()) return UPolyFp(p_, {});
  std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = addp(r[i + j], mulp(c_[i], o.c_[j], p_), p_);
  return UPolyFp(p_, std::move(r));
}

UPolyFp UPolyFp::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> r(c_);
  for (auto& x : r) x = mulp(x, c % p_, p_);
  return UPolyFp(p_, std::move(r));
}

UPolyFp UPolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(lead(), p_));
}

UPolyFp UPolyFp::derivative() const {
  std::vector<std::uint32_t> r;
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.push_back(mulp(c_[i], static_cast<std::uint32_t>(i % p_), p_));
  return UPolyFp(p_, std::move(r));
}

std::pair<UPolyFp, UPolyFp> UPolyFp::divmod(const UPolyFp& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("UPolyFp: division by zero polynomial");
  std::vector<std::uint32_t> rem(c_);
  const int dd = divisor.degree();
  if (degree() < dd) return {UPolyFp(p_, {}), *this};
  std::vector<std::uint32_t> quo(rem.size() - dd, 0);
  const std::uint32_t inv_lead = mod_inverse(divisor.lead(), p_);
  for (int i = degree(); i >= dd; --i) {
    const std::uint32_t q = mulp(rem[i], inv_lead, p_);
    quo[i - dd] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[i - dd + j] = subp(rem[i - dd + j], mulp(q, divisor.c_[j], p_), p_);
  }
  return {UPolyFp(p_, std::move(quo)), UPolyFp(p_, std::move(rem))};
}

std::string UPolyFp::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

UPolyFp gcd(UPolyFp a, UPolyFp b) {
  while (!b.is_zero()) {
    UPolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPolyFp powmod(const UPolyFp& base, const BigInt& e, const UPolyFp& m) {
  UPolyFp result(m.prime(), {1});
  result = result % m;
  UPolyFp x = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * x) % m;
  }
  return result;
}

bool is_irreducible(const UPolyFp& m) {
  const int k = m.degree();
  if (k < 1) return false;
  if (k == 1) return true;
  const std::uint32_t p = m.prime();
  const UPolyFp x = UPolyFp::monomial(p, 1);
  UPolyFp frob = x % m;
  const BigInt pe(static_cast<unsigned long>(p));
  for (int i = 1; i <= k / 2; ++i) {
    frob = powmod(frob, pe, m);  // x^{p^i} mod m
    if (gcd(frob - x, m).degree() > 0) return false;
  }
  return true;
}

// ----------------------------------------------------------- FiniteField

FiniteField::FiniteField(std::uint32_t p, unsigned k, const std::vector<std::uint32_t>& mod) : p_(p), k_(k) {
  for (std::size_t i = 0; i < mod.size(); ++i) mod_[i] = mod[i];
}

FiniteField FiniteField::construct(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw InputError("ff_construct: " + std::to_string(p) + " is not prime");
  if (p > 0x7fffffffU) throw InputError("ff_construct: characteristic must be below 2^31");
  if (k < 1 || k > kMaxExtensionDegree)
    throw CostCapError("ff_construct: extension degree " + std::to_string(k) + " outside 1.." +
                       std::to_string(kMaxExtensionDegree));
  if (k == 1) return FiniteField(p, 1, {0, 1});

  std::vector<std::uint32_t> low(k, 0);  // c_0 .. c_{k-1}, odometer with c_0 least significant
  while (true) {
    std::vector<std::uint32_t> coeffs(low);
    coeffs.push_back(1);
    UPolyFp cand(p, coeffs);
    if (is_irreducible(cand)) return FiniteField(p, k, coeffs);
    std::size_t i = 0;
    while (i < k && ++low[i] == p) low[i++] = 0;
    if (i == k) throw InvariantViolation("ff_construct: no irreducible polynomial found");
  }
}

UPolyFp FiniteField::modulus() const {
  return UPolyFp(p_, std::vector<std::uint32_t>(mod_.begin(), mod_.begin() + k_ + 1));
}

BigInt FiniteField::order() const {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, k_);
  return r;
}

std::optional<std::uint64_t> FiniteField::order_u64() const {
  const BigInt q = order();
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 63) return std::nullopt;
  return static_cast<std::uint64_t>(q.get_ui());
}

FFElem FiniteField::from_int(long long v) const {
  FFElem e;
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  e.c[0] = static_cast<std::uint32_t>(r);
  return e;
}

FFElem FiniteField::from_bigint(const BigInt& v) const {
  FFElem e;
  e.c[0] = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
  return e;
}

FFElem FiniteField::generator() const {
  if (k_ == 1) return zero();  // x mod x
  FFElem e;
  e.c[1] = 1;
  return e;
}

bool FiniteField::in_prime_field(const FFElem& a) const {
  for (unsigned i = 1; i < k_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
  FFElem r;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = addp(a.c[i], b.c[i], p_);
  return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const {
  FFElem r;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = subp(a.c[i], b.c[i], p_);
  return r;
}

FFElem FiniteField::neg(const FFElem& a) const { return sub(FFElem{}, a); }

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
  FFElem r;
  if (k_ == 1) {
    r.c[0] = mulp(a.c[0], b.c[0], p_);
    return r;
  }
  std::array<std::uint32_t, 2 * kMaxExtensionDegree> t{};
  for (unsigned i = 0; i < k_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) t[i + j] = addp(t[i + j], mulp(a.c[i], b.c[j], p_), p_);
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint32_t top = t[i];
    if (top == 0) continue;
    for (unsigned j = 0; j < k_; ++j) t[i - k_ + j] = subp(t[i - k_ + j], mulp(top, mod_[j], p_), p_);
  }
  for (unsigned i = 0; i < k_; ++i) r.c[i] = t[i];
  return r;
}

FFElem FiniteField::pow(FFElem a, std::uint64_t e) const {
  FFElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FFElem FiniteField::pow(FFElem a, BigInt e) const {
  if (sgn(e) < 0) {
    a = inv(a);
    e = -e;
  }
  FFElem r = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FFElem FiniteField::inv(const FFElem& a) const {
  if (is_zero(a)) throw std::domain_error("FiniteField: zero has no inverse");
  if (k_ == 1) {
    FFElem r;
    r.c[0] = mod_inverse(a.c[0], p_);
    return r;
  }
  return pow(a, order() - 2);
}

std::optional<FFElem> FiniteField::try_div(const FFElem& a, const FFElem& b) const {
  if (is_zero(b)) return std::nullopt;
  return mul(a, inv(b));
}

FFElem FiniteField::element(std::uint64_t index) const {
  FFElem e;
  for (unsigned i = 0; i < k_; ++i) {
    e.c[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index(const FFElem& a) const {
  std::uint64_t r = 0;
  for (unsigned i = k_; i-- > 0;) r = r * p_ + a.c[i];
  return r;
}

std::vector<std::uint32_t> FiniteField::digits(const FFElem& a) const {
  return std::vector<std::uint32_t>(a.c.begin(), a.c.begin() + k_);
}

FFElem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > k_) throw InputError("field element has more digits than the extension degree");
  FFElem e;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= p_) throw InputError("field element digit out of range");
    e.c[i] = d[i];
  }
  return e;
}

std::string FiniteField::to_string(const FFElem& a) const {
  std::vector<std::uint32_t> v = digits(a);
  return UPolyFp(p_, v).to_string('a');
}

}  // namespace chowbound
