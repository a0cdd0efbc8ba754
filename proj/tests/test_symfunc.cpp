#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "schroder/symfunc.hpp"

using namespace schroder;

namespace {

const Basis kBases[] = {Basis::e, Basis::p, Basis::h, Basis::s};

SymFunc random_symfunc(std::mt19937& rng, Basis b, int max_degree) {
  std::uniform_int_distribution<int> c(-4, 4), d(0, max_degree), e(0, 2);
  SymFunc f(b);
  for (int i = 0; i < 5; ++i) {
    const auto parts = partitions_of(d(rng));
    const Partition& mu = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
    f.add_term(mu, CoeffPoly::monomial(Exponents{e(rng), e(rng), e(rng)}, Rational(c(rng))));
  }
  return f;
}

}  // namespace

TEST_CASE("basis elements") {
  CHECK(e_basis_element({}) == SymFunc::constant(1));
  CHECK(e_basis_element({2, 1}).terms().size() == 1);
  CHECK(e_basis_element({2, 1}).coefficient({2, 1}) == CoeffPoly(1));
  CHECK(schur_element({1}) == e_basis_element({1}));
  CHECK(p_basis_element({1}) == h_basis_element({1}));
  CHECK(schur_element({1}) == p_basis_element({1}));
}

TEST_CASE("conversion examples") {
  SymFunc e2p(Basis::p);
  e2p.add_term({1, 1}, Rational(1, 2));
  e2p.add_term({2}, Rational(-1, 2));
  CHECK(convert(e_basis_element({2}), Basis::p).terms() == e2p.terms());
  CHECK(convert(schur_element({1, 1}), Basis::e).terms() == e_basis_element({2}).terms());
  SymFunc s2e(Basis::e);
  s2e.add_term({1, 1}, 1);
  s2e.add_term({2}, -1);
  CHECK(convert(schur_element({2}), Basis::e).terms() == s2e.terms());
}

TEST_CASE("every basis element converts to every basis consistently with evaluation") {
  const auto xs = oracle::points(6);
  for (int d = 0; d <= 5; ++d)
    for (const auto& mu : partitions_of(d))
      for (Basis from : kBases) {
        const SymFunc f = basis_element(from, mu);
        const Rational want = oracle::basis_at(from, mu, xs);
        for (Basis to : kBases) {
          const SymFunc g = convert(f, to);
          CHECK(g.basis() == to);
          CHECK(oracle::eval(g, xs) == want);
          CHECK(g.is_homogeneous(d));
        }
      }
}

TEST_CASE("basis round trip on random elements") {
  std::mt19937 rng(99);
  for (Basis b : kBases)
    for (int i = 0; i < 8; ++i) {
      const SymFunc f = random_symfunc(rng, b, 6);
      for (Basis via : kBases) CHECK(convert(convert(f, via), b).terms() == f.terms());
    }
}

TEST_CASE("scalar product") {
  CHECK(scalar(p_basis_element({2}), p_basis_element({2})) == CoeffPoly(2));
  CHECK(scalar(p_basis_element({1, 1}), p_basis_element({2})).is_zero());
  for (int d = 0; d <= 5; ++d)
    for (const auto& mu : partitions_of(d)) {
      CHECK(scalar(e_basis_element(mu), e_sum(5)) == CoeffPoly(1));
      for (const auto& nu : partitions_of(d))
        CHECK(scalar(schur_element(mu), schur_element(nu)) == CoeffPoly(mu == nu ? 1 : 0));
    }
}

TEST_CASE("skewing") {
  std::mt19937 rng(5);
  const SymFunc f = random_symfunc(rng, Basis::e, 5);
  CHECK(skew_by_h(f, 0) == f);
  CHECK(skew_by_h(e_basis_element({2}), 1) == e_basis_element({1}));
  CHECK(skew_by_h(e_basis_element({2, 1}), 4).is_zero());
  for (int k = 0; k <= 5; ++k)
    for (int d = k; d <= 5; ++d)
      for (const auto& mu : partitions_of(d))
        for (const auto& nu : partitions_of(d - k)) {
          const CoeffPoly lhs = scalar(skew_by_h(e_basis_element(mu), k), h_basis_element(nu));
          const CoeffPoly rhs = scalar(e_basis_element(mu), h_basis_element(nu) * h_basis_element(k ? Partition{k} : Partition()));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("adding a parameter to the alphabet") {
  const CoeffPoly y = CoeffPoly::y();
  for (int k = 1; k <= 5; ++k)
    CHECK(add_parameter(e_basis_element({k})) ==
          e_basis_element({k}) + e_basis_element(k > 1 ? Partition{k - 1} : Partition()).scaled(y));
  CHECK(add_parameter(p_basis_element({1})) == p_basis_element({1}) + SymFunc::constant(y));

  auto xs = oracle::points(6, 3);
  const Rational y0(5);
  auto xs_y = xs;
  xs_y.push_back(y0);
  for (int d = 0; d <= 5; ++d)
    for (const auto& mu : partitions_of(d)) {
      const SymFunc f = e_basis_element(mu);
      const SymFunc a = add_parameter(f);
      CHECK(a == add_parameter_via_skew(f));
      CHECK(oracle::eval(a, xs, 2, 3, y0) == oracle::eval(f, xs_y));
      for (int j = 0; j <= d; ++j) CHECK(a.slice(Param::y, j).is_homogeneous(d - j));
    }
}

TEST_CASE("e_n of a scaled alphabet") {
  CHECK(e_scaled_alphabet(1, 4) == e_basis_element({1}).scaled(4));
  for (int n = 0; n <= 6; ++n) CHECK(e_scaled_alphabet(n, 1) == e_basis_element(n ? Partition{n} : Partition()));
  CHECK(convert(e_scaled_alphabet(2, 2), Basis::e).terms() ==
        (e_basis_element({2}).scaled(2) + e_basis_element({1, 1})).terms());
  const auto xs = oracle::points(3, 11);
  for (int n = 0; n <= 6; ++n)
    for (int m = 1; m <= 5; ++m) {
      const SymFunc a = e_scaled_alphabet(n, m);
      CHECK(a == e_scaled_alphabet_from_multiplicities(n, m));
      CHECK(a == scale_alphabet(e_basis_element(n ? Partition{n} : Partition()), CoeffPoly(m)));
      CHECK(a.is_homogeneous(n));
      CHECK(oracle::eval(a, xs) == oracle::e_at(n, oracle::repeated(xs, m)));
    }
}

TEST_CASE("e_n of an augmented scaled alphabet") {
  const auto xs = oracle::points(3, 4);
  const Rational y0(3, 2);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      const SymFunc f = scale_augmented_alphabet(e_basis_element({n}), CoeffPoly(m));
      auto alphabet = xs;
      alphabet.push_back(y0);
      CHECK(oracle::eval(f, xs, 2, 3, y0) == oracle::e_at(n, oracle::repeated(alphabet, m)));
      // sum_j e_{n-j}[m x] C(m,j) y^j
      SymFunc expected(Basis::p);
      for (int j = 0; j <= n; ++j)
        expected += e_scaled_alphabet(n - j, m).scaled(CoeffPoly(binomial(m, j)) * CoeffPoly::y(j));
      CHECK(f == expected);
    }
}

TEST_CASE("series exponential") {
  ZSeries zero{{SymFunc(Basis::p), SymFunc(Basis::p), SymFunc(Basis::p)}};
  const ZSeries one = series_exp(zero, 2);
  CHECK(one[0] == SymFunc::constant(1));
  CHECK(one[1].is_zero());
  CHECK(one[2].is_zero());

  const SymFunc c = p_basis_element({2}).scaled(CoeffPoly::q());
  ZSeries lin{{SymFunc(Basis::p), c}};
  const ZSeries g = series_exp(lin, 2);
  CHECK(g[1] == c);
  CHECK(g[2] == (c * c).scaled(Rational(1, 2)));

  ZSeries bad{{SymFunc::constant(1), c}};
  CHECK_THROWS_AS(series_exp(bad, 2), std::invalid_argument);
}

TEST_CASE("truncation") {
  SymFunc f(Basis::e, 2);
  CHECK_THROWS_AS(f.add_term({3}, 1), DegreeOverflow);
  f.add_term({2}, 1);
  CHECK_THROWS_AS(f * e_basis_element({1}), DegreeOverflow);
  const SymFunc g = e_basis_element({3}) + e_basis_element({1});
  CHECK(g.truncated(2) == e_basis_element({1}));
  CHECK_THROWS_AS(g.with_truncation(2), DegreeOverflow);
}

TEST_CASE("text rendering") {
  const SymFunc f = schur_element({2}) + schur_element({1, 1}).scaled(CoeffPoly::q() + CoeffPoly::t());
  CHECK(to_string(f) == "s[2] + (q + t)*s[1,1]");
  CHECK(parse_basis("h") == Basis::h);
  CHECK_THROWS(parse_basis("m"));
}
