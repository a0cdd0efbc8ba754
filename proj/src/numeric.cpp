#include "schroder/numeric.hpp"

namespace schroder {

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational power(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero raised to a negative power");
    Rational inv = 1 / r;
    return power(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool is_integral(const Rational& r) { return mpz_divisible_p(r.get_num_mpz_t(), r.get_den_mpz_t()) != 0; }

Integer to_integer(const Rational& r) {
  if (!is_integral(r)) throw std::domain_error("expected an integer, got " + r.get_str());
  return r.get_num() / r.get_den();
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace schroder
