#ifndef SCHRODER_SYMFUNC_HPP
#define SCHRODER_SYMFUNC_HPP

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schroder/coeff_poly.hpp"
#include "schroder/partition.hpp"

namespace schroder {

enum class Basis { e, p, h, s };

char basis_letter(Basis b);
/// Accepts "e", "p", "h" or "s".
Basis parse_basis(std::string_view name);

/// A term would land above the truncation degree of a SymFunc.
class DegreeOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Element of the ring of symmetric functions over CoeffPoly, stored as a
/// finite combination of basis elements indexed by partitions.
///
/// The power-sum basis p is the working basis: plethysm, skewing and the
/// Hall scalar product are computed there. e, h and s are carried for
/// presentation and because path weights are naturally e-products.
class SymFunc {
 public:
  using Terms = std::map<Partition, CoeffPoly>;
  static constexpr int kUnbounded = INT_MAX;

  explicit SymFunc(Basis basis = Basis::p, int truncation_degree = kUnbounded);
  static SymFunc constant(const CoeffPoly& c, Basis basis = Basis::p);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  int truncation_degree() const { return truncation_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest weight of a stored partition, -1 for zero.
  int max_degree() const;
  bool is_homogeneous(int degree) const;

  CoeffPoly coefficient(const Partition& index) const;
  /// Throws DegreeOverflow if the index weight exceeds the truncation degree.
  void add_term(const Partition& index, const CoeffPoly& c);

  /// Explicitly discards every term of weight above max_degree.
  SymFunc truncated(int max_degree) const;
  /// Same element with a new truncation degree; throws if a term would not fit.
  SymFunc with_truncation(int degree) const;
  SymFunc homogeneous_part(int degree) const;

  SymFunc map_coefficients(const std::function<CoeffPoly(const CoeffPoly&)>& f) const;
  /// Coefficient of p^power in every term.
  SymFunc slice(Param p, int power) const;
  SymFunc specialize(std::optional<Rational> q, std::optional<Rational> t,
                     std::optional<Rational> y) const;
  SymFunc scaled(const CoeffPoly& c) const;
  bool has_integral_coefficients() const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  /// Multiplicative bases (e, p, h) multiply natively; anything else goes through p.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc pow(int e) const;

  /// Equality as elements of the ring, regardless of the bases used.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  Basis basis_;
  Terms terms_;
  int truncation_;
};

SymFunc e_basis_element(const Partition& mu);
SymFunc p_basis_element(const Partition& mu);
SymFunc h_basis_element(const Partition& mu);
SymFunc schur_element(const Partition& lambda);
SymFunc basis_element(Basis basis, const Partition& mu);

SymFunc convert(const SymFunc& f, Basis target);

/// Hall scalar product, <p_mu, p_nu> = z_mu delta_{mu,nu}.
CoeffPoly scalar(const SymFunc& f, const SymFunc& g);

/// Applies p_k -> image(k) to every power sum of f; the result is in the p basis.
SymFunc substitute_power_sums(const SymFunc& f, const std::function<SymFunc(int)>& image);

/// f[m x]: p_k -> m p_k.
SymFunc scale_alphabet(const SymFunc& f, const CoeffPoly& m);
/// f[x + y]: p_k -> p_k + y^k.
SymFunc add_parameter(const SymFunc& f);
/// f[x + y] through the translation formula sum_k y^k h_k^perp f.
SymFunc add_parameter_via_skew(const SymFunc& f);
/// f[m (x + y)]: p_k -> m (p_k + y^k).
SymFunc scale_augmented_alphabet(const SymFunc& f, const CoeffPoly& m);

/// e_n[m x] computed from the power-sum expansion
///   e_n[m x] = (-1)^n sum_{nu |- n} (-m)^{l(nu)} p_nu / z_nu.
/// The (-1)^n factor makes m = 1 return e_n.
SymFunc e_scaled_alphabet(int n, long m);
/// e_n[m x] = sum_{nu |- n} multinomial(m, d_nu) e_nu with d_nu the multiplicities of nu.
SymFunc e_scaled_alphabet_from_multiplicities(int n, long m);

/// Adjoint of multiplication by p_r.
SymFunc skew_by_p(const SymFunc& f, int r);
/// Adjoint of multiplication by h_k.
SymFunc skew_by_h(const SymFunc& f, int k);

/// sum_{j=0}^{max_degree} e_j, the element pairing to 1 with every e_mu.
SymFunc e_sum(int max_degree);

/// "(q + t)*s[1,1] + s[2]", in the element's own basis.
std::string to_string(const SymFunc& f);

/// Power series in z with SymFunc coefficients, truncated at z^order().
struct ZSeries {
  std::vector<SymFunc> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const SymFunc& operator[](std::size_t d) const { return coeffs.at(d); }
};

/// exp(F) truncated at z^order; F must have zero constant term.
ZSeries series_exp(const ZSeries& F, int order);

}  // namespace schroder

#endif  // SCHRODER_SYMFUNC_HPP
