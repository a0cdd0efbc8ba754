#include <doctest.h>

#include "schroder/enumerators.hpp"

using namespace schroder;

namespace {

const CoeffPoly y = CoeffPoly::y();
const CoeffPoly q = CoeffPoly::q();

SymFunc e(std::initializer_list<int> mu) { return e_basis_element(Partition(mu)); }

SymFunc at_q1(const SymFunc& f) { return f.specialize(Rational(1), std::nullopt, std::nullopt); }

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST_CASE("classical Schroder polynomials") {
  CHECK(classical_S(1) == std::vector<Integer>{1, 1});
  CHECK(classical_S(5) == std::vector<Integer>{42, 126, 140, 70, 15, 1});
  CHECK(classical_S(3)[0] == 5);
  CHECK(classical_S(0) == std::vector<Integer>{1});
  for (int n = 1; n <= 8; ++n) CHECK(classical_S(n)[0] == catalan(n));
}

TEST_CASE("brute-force enumerators") {
  CHECK(S_sym_brute(1, 1) == e({1}) + SymFunc::constant(y));
  CHECK(at_q1(S_sym_brute(2, 2)) ==
        e({1, 1}) + e({2}) + e({1}).scaled(y.scaled(3)) + SymFunc::constant(y * y));
  CHECK(at_q1(S_sym_brute(3, 3)) == e({1, 1, 1}) + e({2, 1}).scaled(3) + e({3}) +
                                        (e({1, 1}).scaled(6) + e({2}).scaled(4)).scaled(y) +
                                        e({1}).scaled(y * y * 6) + SymFunc::constant(y.pow(3)));
  CHECK(at_q1(C_sym_brute(2, 2)) == e({1, 1}) + e({2}));
  for (int n = 1; n <= 5; ++n) CHECK(C_sym_brute(1, n) == e_basis_element({n}));
  CHECK(at_q1(C_sym_brute(2, 3)) == e({3}) + e({2, 1}));
  CHECK(C_sym_brute(3, 4) == S_sym_brute(3, 4).slice(Param::y, 0));
}

TEST_CASE("degree grading and thread independence") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const SymFunc s = S_sym_brute(m, n);
      for (int k = 0; k <= n; ++k) CHECK(s.slice(Param::y, k).is_homogeneous(n - k));
      CHECK(S_sym_brute(m, n, EnumerationOptions{10'000'000, 4}).terms() == s.terms());
    }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(S_sym_brute(4, 4, EnumerationOptions{10, 1}), ResourceLimitError);
  CHECK_THROWS_AS(S_sym_brute(4, 4, EnumerationOptions{10, 3}), ResourceLimitError);
}

TEST_CASE("Bizley series") {
  const ZSeries s11 = bizley_S(1, 1, 3);
  CHECK(s11[1] == e({1}) + SymFunc::constant(y));
  CHECK(s11[2] == at_q1(S_sym_brute(2, 2)));
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 1}}) {
    const ZSeries s = bizley_S(a, b, 2);
    const SymFunc base = scale_augmented_alphabet(e_basis_element({b}), CoeffPoly(a));
    const SymFunc twice = scale_augmented_alphabet(e_basis_element({2 * b}), CoeffPoly(2 * a));
    CHECK(s[1] == base.scaled(Rational(1, a)));
    CHECK(s[2] == twice.scaled(Rational(1, 2 * a)) + (base * base).scaled(Rational(1, 2 * a * a)));
  }
  const ZSeries c11 = bizley_C(1, 1, 3);
  CHECK(c11[1] == e({1}));
  CHECK(c11[2] == e({1, 1}) + e({2}));
  CHECK(scalar(c11[3], e_sum(3)) == CoeffPoly(5));
  CHECK_THROWS_AS(bizley_S(2, 4, 2), std::invalid_argument);
}

TEST_CASE("Schroder from Dyck") {
  CHECK(schroder_from_dyck(2, 2) == S_sym_brute(2, 2));
  CHECK(schroder_from_dyck(1, 1) == e({1}) + SymFunc::constant(y));
  CHECK(schroder_from_dyck(3, 2) == S_sym_brute(3, 2));
}

TEST_CASE("coprime formulas") {
  CHECK(coprime_Sk(2, 3, 0) == e({3}) + e({2, 1}));
  CHECK(coprime_Sk_count(2, 3, 0) == 2);
  for (int n = 1; n <= 5; ++n) {
    CHECK(coprime_Sk(1, n, 0) == e_basis_element({n}));
    CHECK(coprime_Sk_count(1, n, 0) == 1);
  }
  CHECK(coprime_Sk_count(2, 3, 1) == 3);
  CHECK_THROWS_AS(coprime_Sk(2, 4, 0), std::invalid_argument);
}

TEST_CASE("scalar product with e_{n-k} h_k") {
  CHECK(haglund_Sk(2, 2, 2) == direct_Sk(2, 2, 2));
  // the all-diagonal word 0~.1~ has row areas 0 and 1 - 1
  CHECK(direct_Sk(2, 2, 2) == CoeffPoly(1));
  for (int n = 1; n <= 5; ++n)
    CHECK(haglund_Sk(n, n, 0).specialize(Rational(1), std::nullopt, std::nullopt) == CoeffPoly(catalan(n)));
  CHECK(haglund_Sk(2, 2, 1).specialize(Rational(1), std::nullopt, std::nullopt) == CoeffPoly(3));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CoeffPoly total;
      for (int k = 0; k <= n; ++k) total += haglund_Sk(m, n, k);
      CHECK(total == scalar(S_sym_brute(m, n), e_sum(n)).specialize(std::nullopt, std::nullopt, Rational(1)));
    }
}

TEST_CASE("classical reduction") {
  CHECK(check_classical_reduction(1, 2));
  CHECK(check_classical_reduction(1, 3));
  CHECK(check_classical_reduction(2, 2));
  CHECK_FALSE(S_sym_brute(3, 3) == S_sym_brute(2, 3));
}

TEST_CASE("B-path sums") {
  CHECK(B_sym_brute(1, 1) == e({1}) + SymFunc::constant(y));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CHECK(B_sym_brute(m, n) == B_closed(m, n));
      CHECK(B_closed(m, n) == B_plethystic(m, n));
    }
}
