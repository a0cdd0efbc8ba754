#ifndef SCHRODER_NUMERIC_HPP
#define SCHRODER_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schroder {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an enumeration or expansion would exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two routes that must agree by theorem produce different values.
class TheoremCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Integer factorial(long n);
Integer binomial(long n, long k);

/// r^e for a possibly negative exponent; 0^e with e < 0 throws.
Rational power(const Rational& r, long e);

bool is_integral(const Rational& r);
/// Throws std::domain_error when r is not an integer.
Integer to_integer(const Rational& r);

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

}  // namespace schroder

#endif  // SCHRODER_NUMERIC_HPP
