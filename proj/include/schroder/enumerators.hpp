#ifndef SCHRODER_ENUMERATORS_HPP
#define SCHRODER_ENUMERATORS_HPP

#include <cstdint>
#include <vector>

#include "schroder/coeff_poly.hpp"
#include "schroder/paths.hpp"
#include "schroder/symfunc.hpp"

namespace schroder {

struct EnumerationOptions {
  /// Maximum number of words a brute-force sum may visit.
  std::uint64_t cap = 10'000'000;
  /// Number of worker threads for brute-force sums; results do not depend on it.
  int threads = 1;
};

/// Coefficients of y^0..y^n of sum_j 1/(j+1) C(n,j) C(n+j,n) y^{n-j}; S_0 = 1.
/// The y^k coefficient counts (n,n) Schroder paths with k diagonal steps.
std::vector<Integer> classical_S(int n);

/// sum over (m,n) Schroder words of e_{gamma} q^{area} y^{diag}, in the e basis.
SymFunc S_sym_brute(int m, int n, const EnumerationOptions& opts = {});
/// The diag = 0 part of S_sym_brute: Dyck paths weighted by q^{area}.
SymFunc C_sym_brute(int m, int n, const EnumerationOptions& opts = {});
/// Number of (m,n) Schroder words, split by number of diagonal steps.
std::vector<std::uint64_t> count_by_diagonals(int m, int n, const EnumerationOptions& opts = {});

/// sum_d S_{ad,bd}(x;y) z^d = exp(sum_j e_{jb}[ja(x+y)] z^j / (aj)), truncated at z^order.
ZSeries bizley_S(int a, int b, int order);
/// sum_d C_{ad,bd}(x) z^d = exp(sum_j e_{jb}[ja x] z^j / (aj)).
ZSeries bizley_C(int a, int b, int order);

/// C_{m,n}(x+y;q).
SymFunc schroder_from_dyck(int m, int n, const EnumerationOptions& opts = {});

/// sum_{nu |- b-k} (1/a) C(a,k) multinomial(a, d_nu) e_nu for coprime (a,b).
SymFunc coprime_Sk(int a, int b, int k);
Integer coprime_Sk_count(int a, int b, int k);

/// <C_{m,n}(x;q), e_{n-k} h_k>.
CoeffPoly haglund_Sk(int m, int n, int k, const EnumerationOptions& opts = {});
/// sum over words with k diagonal steps of q^{area}.
CoeffPoly direct_Sk(int m, int n, int k, const EnumerationOptions& opts = {});

/// S_{rn+1,n} == S_{rn,n} including q and y.
bool check_classical_reduction(int r, int n, const EnumerationOptions& opts = {});

/// Brute-force sum over B-paths of e_{risers} y^{diag}.
SymFunc B_sym_brute(int m, int n);
/// sum_k y^k sum_{nu |- n-k} C(m,k) multinomial(m, d_nu) e_nu.
SymFunc B_closed(int m, int n);
/// e_n[m(x+y)], the plethystic form of B_closed.
SymFunc B_plethystic(int m, int n);

}  // namespace schroder

#endif  // SCHRODER_ENUMERATORS_HPP
