#ifndef SCHRODER_COEFF_POLY_HPP
#define SCHRODER_COEFF_POLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "schroder/numeric.hpp"

namespace schroder {

enum class Param { q, t, y };

/// Exponents of q, t and y in a monomial.
struct Exponents {
  int q = 0;
  int t = 0;
  int y = 0;

  int get(Param p) const;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Polynomial in q, t, y with exact rational coefficients. Zero
/// coefficients are never stored.
class CoeffPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  CoeffPoly() = default;
  CoeffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  CoeffPoly(const Integer& c);   // NOLINT(google-explicit-constructor)
  CoeffPoly(long c);             // NOLINT(google-explicit-constructor)
  CoeffPoly(int c) : CoeffPoly(static_cast<long>(c)) {}  // NOLINT

  static CoeffPoly monomial(Exponents e, const Rational& c = 1);
  static CoeffPoly variable(Param p, int power = 1);
  static CoeffPoly q(int power = 1) { return variable(Param::q, power); }
  static CoeffPoly t(int power = 1) { return variable(Param::t, power); }
  static CoeffPoly y(int power = 1) { return variable(Param::y, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The value if the polynomial is a constant, otherwise nullopt.
  std::optional<Rational> constant_value() const;
  Rational coefficient(Exponents e) const;
  int degree(Param p) const;
  bool is_integral() const;

  /// Coefficient of p^power, as a polynomial in the remaining parameters.
  CoeffPoly slice(Param p, int power) const;
  /// Substitutes the given values; unspecified parameters stay symbolic.
  CoeffPoly specialize(std::optional<Rational> q, std::optional<Rational> t,
                       std::optional<Rational> y) const;
  Rational evaluate(const Rational& q, const Rational& t, const Rational& y) const;
  /// Exchanges the roles of q and t.
  CoeffPoly swap_qt() const;

  void add_term(Exponents e, const Rational& c);

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  /// Multiplies every coefficient by c.
  CoeffPoly scaled(const Rational& c) const;

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator-(CoeffPoly a);
  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

  CoeffPoly pow(int e) const;

  /// "q^2 + q*t + t^2", highest monomials first; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace schroder

#endif  // SCHRODER_COEFF_POLY_HPP
