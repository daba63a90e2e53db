#ifndef CHOWBOUND_EXACTNUM_HPP
#define CHOWBOUND_EXACTNUM_HPP

// Exact integers and rationals (GMP), high-precision reals (MPFR) and the
// small number-theoretic helpers every other module leans on.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

namespace chowbound {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Real with 60 significant decimal digits, far below the 1e-12 absolute
/// error budget for every quantity the library produces.
using HighPrecReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<60>,
    boost::multiprecision::et_off>;

/// Malformed caller input (bad parameters, bad files). Mapped to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Incompatible polynomial shapes or multidegrees.
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

/// A requested computation exceeds a configured cost cap.
class CostCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold by construction failed. Always a
/// bug; mapped to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ascending list of primes <= limit (empty when limit < 2).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

/// Largest e with p^e | a; std::nullopt encodes the infinite valuation of 0.
std::optional<unsigned> padic_valuation(const BigInt& a, std::uint32_t p);

/// Natural logarithm, correctly rounded at 60 digits. Throws
/// std::domain_error unless x > 0.
HighPrecReal log_real(const BigRat& x);

HighPrecReal to_real(const BigRat& x);
HighPrecReal to_real(const BigInt& x);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Decimal rendering with `digits` significant digits, e.g. "1.16703064574569e+06".
std::string to_decimal(const HighPrecReal& x, int digits = 15);

/// Exact rendering: "a" for integers, "a/b" otherwise.
std::string to_exact_string(const BigRat& x);

BigInt parse_bigint(const std::string& text);

}  // namespace chowbound

#endif  // CHOWBOUND_EXACTNUM_HPP
