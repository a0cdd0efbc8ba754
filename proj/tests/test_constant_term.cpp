#include <doctest.h>

#include "schroder/constant_term.hpp"
#include "schroder/enumerators.hpp"

using namespace schroder;

namespace {

SymFunc one() { return SymFunc::constant(CoeffPoly(1), Basis::e); }

SymFunc at_t1(const SymFunc& f) { return f.specialize(std::nullopt, Rational(1), std::nullopt); }

}  // namespace

TEST_CASE("omega_prime") {
  CHECK(omega_prime(1, 0, 0).terms().size() == 1);
  const LaurentPoly o2 = omega_prime(2, 1, 2);
  CHECK(o2.terms().size() == 3);
  CHECK(o2.terms().at({0, 0}) == one());
  CHECK(o2.terms().at({0, 1}) == e_basis_element({1}));
  CHECK(o2.terms().at({0, 2}) == e_basis_element({2}));
}

TEST_CASE("iterated constant term of a geometric series") {
  // z0^4 z1^-3 / (z0 - q z1) = sum_r q^r z1^{r-3} z0^{3-r}, constant term q^3.
  CtIntegrand in;
  in.num_vars = 2;
  in.monomial = {4, -3};
  in.denominators.push_back({0, 1, CoeffPoly::q()});
  const int order[] = {1, 0};
  CHECK(ct_iterated(in, order) == SymFunc::constant(CoeffPoly::q(3)));
  const int wrong[] = {0, 1};
  CHECK_THROWS_AS(ct_iterated(in, wrong), std::invalid_argument);
  in.monomial = {-1, 0};
  CHECK(ct_iterated(in, order).is_zero());
}

TEST_CASE("iterated constant term with polynomial factors") {
  // CT of (1 + e_1 z0 + e_2 z0^2)(z0^-1 + z0^-2) = e_1 + e_2
  CtIntegrand in;
  in.num_vars = 1;
  in.monomial = {-1};
  LaurentPoly f(1);
  f.add_term({0}, one());
  f.add_term({-1}, one());
  in.polynomial_factors.push_back(omega_prime(1, 0, 2));
  in.polynomial_factors.push_back(f);
  const int order[] = {0};
  CHECK(ct_iterated(in, order) == e_basis_element({1}) + e_basis_element({2}));
}

TEST_CASE("reference (q,t) values are reproduced") {
  for (const auto& ref : reference_ct_values()) {
    const SymFunc got = convert(ct_S(ref.m, ref.n), Basis::s);
    CHECK(got.terms() == convert(ref.value, Basis::s).terms());
  }
  const CoeffPoly q = CoeffPoly::q(), t = CoeffPoly::t();
  CHECK(ct_C(2, 2) == schur_element({2}) + schur_element({1, 1}).scaled(q + t));
  CHECK(select_ct_convention() == std::vector<CtConvention>{CtConvention{}});
}

TEST_CASE("t = 1 gives the q-area enumerator") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; m + n <= 6; ++n) {
      CHECK(at_t1(ct_S(m, n)) == S_sym_brute(m, n));
      CHECK(at_t1(ct_C(m, n)) == C_sym_brute(m, n));
    }
}

TEST_CASE("q = t = 1 Dyck totals") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const CoeffPoly total = scalar(ct_C(m, n), e_sum(n));
      CHECK(total.evaluate(1, 1, 0) == Rational(Integer(static_cast<unsigned long>(enumerate_schroder(m, n, 0).size()))));
    }
}

TEST_CASE("q and t symmetry") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 7; ++n) {
      const SymFunc f = ct_S(m, n);
      CHECK(f.map_coefficients([](const CoeffPoly& c) { return c.swap_qt(); }) == f);
    }
}

TEST_CASE("larger truncations do not change the result") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      CtOptions wide;
      wide.omega_truncation = n + 3;
      wide.limits.max_series_order = 200;
      CHECK(ct_S(m, n, wide) == ct_S(m, n));
    }
}

TEST_CASE("conventions and caps") {
  CtOptions other;
  other.convention = CtConvention{0, ChainParameter::qt};
  CHECK(ct_S(1, 1, other).is_zero());
  CtOptions q_chain;
  q_chain.convention.chain = ChainParameter::q;
  CHECK_FALSE(ct_S(2, 2, q_chain) == reference_ct_values()[1].value);
  CHECK(ct_convention_candidates().size() == 4);
  CHECK_THROWS_AS(ct_S(5, 5), ResourceLimitError);
  CtOptions tight;
  tight.limits.max_terms = 5;
  CHECK_THROWS_AS(ct_S(3, 3, tight), ResourceLimitError);
}
