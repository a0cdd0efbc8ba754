#ifndef SCHRODER_CONSTANT_TERM_HPP
#define SCHRODER_CONSTANT_TERM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schroder/coeff_poly.hpp"
#include "schroder/symfunc.hpp"

namespace schroder {

using ExponentVector = std::vector<int>;

/// Laurent polynomial in z_0..z_{k-1} whose coefficients are symmetric
/// functions over CoeffPoly.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, SymFunc>;

  explicit LaurentPoly(int num_vars);
  static LaurentPoly monomial(ExponentVector exponents, const SymFunc& c);
  static LaurentPoly constant(int num_vars, const SymFunc& c);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ExponentVector& exponents, const SymFunc& c);

  /// Smallest and largest exponent of a variable; (0,0) for the zero polynomial.
  std::pair<int, int> exponent_range(int var) const;
  bool involves(int var) const;
  /// Largest x-degree of any coefficient.
  int max_x_degree() const;
  /// Terms whose exponent of `var` is zero.
  LaurentPoly constant_term_in(int var) const;
  /// The coefficient of z^0, once every variable has been eliminated.
  SymFunc constant_value() const;

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

 private:
  int num_vars_;
  Terms terms_;
};

/// sum_{k=0}^{truncation} e_k z_var^k.
LaurentPoly omega_prime(int num_vars, int var, int truncation);

/// The linear form z_i - c z_j, or z_i alone when j is absent.
struct LinearForm {
  int i = 0;
  std::optional<int> j;
  CoeffPoly c;
};

/// z^monomial * prod(polynomial_factors) / prod(denominators).
struct CtIntegrand {
  int num_vars = 0;
  ExponentVector monomial;
  std::vector<LaurentPoly> polynomial_factors;
  std::vector<LinearForm> denominators;
  /// Terms whose x-degree exceeds this cannot survive and are dropped.
  int x_degree_bound = SymFunc::kUnbounded;
};

struct CtLimits {
  /// Largest order to which a single geometric expansion may be carried.
  int max_series_order = 64;
  /// Largest number of terms an intermediate Laurent polynomial may hold.
  std::size_t max_terms = 2'000'000;
};

/// Iterated constant term, eliminating variables in the given order.
///
/// When a variable v is eliminated, every remaining factor mentioning v is
/// multiplied in. A denominator z_i - c z_v is expanded as a geometric series
/// in c z_v / z_i, so v must be eliminated before z_i; a denominator whose
/// other variable is still present and would need the opposite expansion is
/// rejected. The series are cut at the order beyond which no term can reach
/// exponent zero, so the result is exact.
SymFunc ct_iterated(const CtIntegrand& integrand, std::span<const int> order,
                    const CtLimits& limits = {});

/// Parameter c in the column-chain factor z_i / (z_i - c z_{i+1}).
enum class ChainParameter { q, qt };

/// Conventions of the (q,t) constant-term formula that the formula as
/// usually written leaves open; the defaults are the ones that reproduce
/// the reference values in reference_ct_values().
struct CtConvention {
  /// Row j contributes z_{floor(j m / n) + row_index_shift} to the denominator monomial.
  int row_index_shift = 1;
  ChainParameter chain = ChainParameter::qt;

  friend bool operator==(const CtConvention&, const CtConvention&) = default;
};

std::string to_string(const CtConvention& c);

struct CtOptions {
  CtConvention convention;
  /// Truncation of each Omega' factor; negative means n.
  int omega_truncation = -1;
  /// Largest m + n accepted.
  int max_size = 8;
  CtLimits limits;
};

/// Builds the integrand for S_{m,n}(x;y,q,t) (or C_{m,n}(x;q,t) when augmented is false).
CtIntegrand ct_integrand(int m, int n, bool augmented, const CtOptions& opts = {});

/// S_{m,n}(x;y,q,t), in the e basis.
SymFunc ct_S(int m, int n, const CtOptions& opts = {});
/// C_{m,n}(x;q,t), in the e basis.
SymFunc ct_C(int m, int n, const CtOptions& opts = {});

struct CtReference {
  int m;
  int n;
  SymFunc value;
};

/// Reference (q,t) values: S_{2,2}, S_{2,3}, S_{2,4} in the Schur basis, and S_{1,1} = e_1 + y.
std::vector<CtReference> reference_ct_values();

/// Candidate conventions, tried in order by select_ct_convention.
std::vector<CtConvention> ct_convention_candidates();
/// Every candidate that reproduces all reference values exactly.
std::vector<CtConvention> select_ct_convention();

}  // namespace schroder

#endif  // SCHRODER_CONSTANT_TERM_HPP
