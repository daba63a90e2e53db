#include "chowbound/exactnum.hpp"

#include <ios>

namespace chowbound {

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  if (limit > 0xffffffffULL) throw InputError("primes_up_to: limit exceeds 32 bits");
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<unsigned> padic_valuation(const BigInt& a, std::uint32_t p) {
  if (p < 2) throw InputError("padic_valuation: p must be prime");
  if (sgn(a) == 0) return std::nullopt;
  BigInt rest;
  BigInt prime(static_cast<unsigned long>(p));
  const auto e = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t());
  return static_cast<unsigned>(e);
}

HighPrecReal to_real(const BigRat& x) {
  HighPrecReal r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

HighPrecReal to_real(const BigInt& x) {
  HighPrecReal r;
  mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
  return r;
}

HighPrecReal log_real(const BigRat& x) {
  if (sgn(x) <= 0) throw std::domain_error("log_real: argument must be positive");
  // log(num) - log(den) keeps full relative precision even when x is
  // astronomically large or small.
  HighPrecReal num = to_real(BigInt(x.get_num()));
  HighPrecReal den = to_real(BigInt(x.get_den()));
  return log(num) - log(den);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return BigInt(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_decimal(const HighPrecReal& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits - 1, std::ios_base::scientific);
}

std::string to_exact_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

BigInt parse_bigint(const std::string& text) {
  BigInt r;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || r.set_str(t, 10) != 0)
    throw InputError("not a decimal integer: '" + text + "'");
  return r;
}

}  // namespace chowbound
