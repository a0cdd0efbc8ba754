#include "schroder/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "schroder/constant_term.hpp"
#include "schroder/enumerators.hpp"
#include "schroder/parking.hpp"
#include "schroder/paths.hpp"

namespace schroder {

namespace {

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

const std::vector<std::vector<long>> kReferenceClassical = {
    {1, 1}, {2, 3, 1}, {5, 10, 6, 1}, {14, 35, 30, 10, 1}, {42, 126, 140, 70, 15, 1}};
const std::vector<long> kLargeSchroder = {1, 2, 6, 22, 90, 394, 1806};

// <S_{n,n}, sum e_j> at q = 1, as coefficients of y^0..y^n.
std::vector<Integer> brute_classical(int n, const Config& cfg) {
  const CoeffPoly paired =
      scalar(S_sym_brute(n, n, cfg.enumeration), e_sum(n)).specialize(Rational(1), std::nullopt, std::nullopt);
  std::vector<Integer> out;
  for (int k = 0; k <= n; ++k) out.push_back(to_integer(paired.coefficient(Exponents{0, 0, k})));
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
  return "[" + s + "]";
}

std::string check_classical(const Config& cfg) {
  for (int n = 1; n <= 7; ++n) {
    const auto brute = brute_classical(n, cfg);
    const auto formula = classical_S(n);
    expect(brute == formula, "S_" + std::to_string(n) + ": enumeration " + join(brute) +
                                 " vs formula " + join(formula));
    if (n <= static_cast<int>(kReferenceClassical.size())) {
      std::vector<Integer> reference;
      for (long c : kReferenceClassical[n - 1]) reference.emplace_back(c);
      expect(brute == reference, "S_" + std::to_string(n) + ": enumeration " + join(brute) +
                                   " vs reference " + join(reference));
    }
  }
  return "S_1..S_7 enumerated = formula; S_1..S_5 = reference list";
}

std::string check_oeis(const Config& cfg) {
  for (int n = 0; n < static_cast<int>(kLargeSchroder.size()); ++n) {
    Integer total = 0;
    if (n == 0) {
      for (const auto& c : classical_S(0)) total += c;
    } else {
      for (auto c : count_by_diagonals(n, n, cfg.enumeration)) total += Integer(static_cast<unsigned long>(c));
    }
    expect(total == kLargeSchroder[n], "n=" + std::to_string(n) + ": total " + to_string(total) +
                                           " vs " + std::to_string(kLargeSchroder[n]));
  }
  return "totals 1,2,6,22,90,394,1806 for n=0..6";
}

std::string check_cat_schrod(const Config& cfg) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      expect(schroder_from_dyck(m, n, cfg.enumeration) == S_sym_brute(m, n, cfg.enumeration),
             "S_" + mn(m, n) + " != C_" + mn(m, n) + "(x+y)");
  return "S_{m,n}(x;y,q) = C_{m,n}(x+y;q) for 1<=m,n<=5";
}

std::string check_bizley(const Config& cfg) {
  const std::vector<std::pair<int, int>> pairs = {{1, 1}, {1, 2}, {2, 1}, {3, 2}, {2, 3}};
  int checked = 0;
  for (auto [a, b] : pairs) {
    const int order = 6 / std::max(a, b);
    const ZSeries S = bizley_S(a, b, order);
    const ZSeries C = bizley_C(a, b, order);
    for (int d = 1; d <= order; ++d) {
      const std::string tag = "(a,b)=" + mn(a, b) + " d=" + std::to_string(d);
      expect(S[d].has_integral_coefficients(), tag + ": non-integral coefficient");
      expect(C[d].has_integral_coefficients(), tag + ": non-integral Dyck coefficient");
      const SymFunc brute =
          S_sym_brute(a * d, b * d, cfg.enumeration).specialize(Rational(1), std::nullopt, std::nullopt);
      expect(S[d] == brute, tag + ": series coefficient differs from enumeration");
      expect(C[d] == brute.slice(Param::y, 0), tag + ": Dyck series coefficient differs");
      ++checked;
    }
  }
  return std::to_string(checked) + " coefficients, all integral";
}

std::string check_coprime(const Config& cfg) {
  int checked = 0;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; a + b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const SymFunc brute =
          S_sym_brute(a, b, cfg.enumeration).specialize(Rational(1), std::nullopt, std::nullopt);
      const auto counts = count_by_diagonals(a, b, cfg.enumeration);
      for (int k = 0; k <= std::min(a, b); ++k) {
        const std::string tag = mn(a, b) + " k=" + std::to_string(k);
        expect(coprime_Sk(a, b, k) == brute.slice(Param::y, k), tag + ": symmetric function form");
        expect(coprime_Sk_count(a, b, k) == Integer(static_cast<unsigned long>(counts[k])),
               tag + ": count form");
        ++checked;
      }
    }
  return std::to_string(checked) + " (a,b,k) triples";
}

std::string check_rotation(const Config& cfg) {
  (void)cfg;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      std::map<std::pair<int, int>, long> s_count, b_count;
      for_each_schroder_word(m, n, std::nullopt, [&](const SchroderWord& w) {
        ++s_count[{diag_count(w), static_cast<int>(low_points(decode(w)).size())}];
      });
      for (int k = 0; k <= std::min(m, n); ++k)
        for_each_b_path(m, n, k, [&](const LatticePath& p) {
          const auto lows = low_points(p);
          const int ell = static_cast<int>(lows.size());
          ++b_count[{k, ell}];
          for (const Point& lp : lows) {
            const LatticePath r = rotate(p, lp);
            expect(diag_count(r) == k, mn(m, n) + ": rotation changed the diagonal count of " + to_string(p));
            expect(risers(r).sorted() == risers(p).sorted(),
                   mn(m, n) + ": rotation changed the risers of " + to_string(p));
            expect(static_cast<int>(low_points(r).size()) == ell,
                   mn(m, n) + ": rotation changed the low points of " + to_string(p));
          }
        });
      auto keys = s_count;
      for (const auto& [key, c] : b_count) keys[key];
      for (const auto& [key, unused] : keys) {
        const auto [k, ell] = key;
        expect(m * s_count[key] == ell * b_count[key],
               mn(m, n) + " k=" + std::to_string(k) + " l=" + std::to_string(ell) + ": " +
                   std::to_string(m) + "*" + std::to_string(s_count[key]) + " != " +
                   std::to_string(ell) + "*" + std::to_string(b_count[key]));
      }
      const SymFunc brute = B_sym_brute(m, n);
      expect(brute == B_closed(m, n), "B_" + mn(m, n) + ": enumeration vs closed form");
      expect(brute == B_plethystic(m, n), "B_" + mn(m, n) + ": enumeration vs e_n[m(x+y)]");
    }
  return "m|S^(k,l)| = l|B^(k,l)| and B-path sums for m,n<=4";
}

std::string check_haglund(const Config& cfg) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) {
        const CoeffPoly lhs = haglund_Sk(m, n, k, cfg.enumeration);
        const CoeffPoly rhs = direct_Sk(m, n, k, cfg.enumeration);
        expect(lhs == rhs, mn(m, n) + " k=" + std::to_string(k) + ": scalar product " + lhs.to_string() +
                               " vs enumeration " + rhs.to_string());
      }
  return "<C_{m,n}, e_{n-k} h_k> = k-diagonal q-area sum for m,n<=5";
}

std::string check_ct(const Config& cfg) {
  const auto selected = select_ct_convention();
  expect(std::find(selected.begin(), selected.end(), cfg.ct.convention) != selected.end(),
         "convention " + to_string(cfg.ct.convention) + " does not reproduce the reference values");
  expect(selected.size() == 1, "reference values do not single out one convention");
  for (const auto& ref : reference_ct_values()) {
    const SymFunc got = convert(ct_S(ref.m, ref.n, cfg.ct), Basis::s);
    expect(got.terms() == convert(ref.value, Basis::s).terms(),
           "ct_S" + mn(ref.m, ref.n) + " = " + to_string(got));
  }
  int checked = 0;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 7; ++n) {
      const SymFunc at_t1 = ct_S(m, n, cfg.ct).specialize(std::nullopt, Rational(1), std::nullopt);
      expect(at_t1 == S_sym_brute(m, n, cfg.enumeration), "ct_S" + mn(m, n) + " at t=1 differs from enumeration");
      ++checked;
    }
  return "convention " + to_string(cfg.ct.convention) + "; reference S_{2,2..4} exact; " +
         std::to_string(checked) + " t=1 checks";
}

std::string check_parking(const Config& cfg) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) P_poly(m, n, cfg.enumeration);
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; a + b <= 8; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const CoeffPoly direct = P_poly_direct(a, b, cfg.enumeration).specialize(Rational(1), std::nullopt, std::nullopt);
      for (int k = 0; k <= std::min(a, b); ++k) {
        const Rational got = direct.coefficient(Exponents{0, 0, k});
        const Integer want = P_coprime_closed(a, b, k);
        expect(got == Rational(want), mn(a, b) + " k=" + std::to_string(k) + ": enumeration " +
                                          to_string(got) + " vs closed form " + to_string(want));
      }
    }
  const SchroderWord shape = parse_word(12, 9, "0.0.0.0~.1.1~.2.2.3");
  const Integer count = count_pf(shape);
  const std::uint64_t listed = for_each_pf(shape, [](const ParkingFunction&) {}, cfg.parking_cap);
  expect(count == 420 && listed == 420,
         "(12,9) shape 0.0.0.0~.1.1~.2.2.3: formula " + to_string(count) + ", listed " + std::to_string(listed));
  return "two routes agree for m,n<=4; closed form for a+b<=8; 420 labelings";
}

std::string check_encoding(const Config& cfg) {
  (void)cfg;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      std::uint64_t valid = 0;
      for_each_step_sequence(m, n, [&](const LatticePath& p) {
        const bool geometric = is_valid_geometric(p);
        const SchroderWord w = encode(p);
        expect(is_valid_word(w) == geometric, mn(m, n) + ": validity differs for " + to_string(p));
        if (geometric) {
          ++valid;
          expect(decode(w) == p, mn(m, n) + ": decode(encode) differs for " + to_string(p));
        }
      });
      const std::uint64_t words = for_each_schroder_word(m, n, std::nullopt, [&](const SchroderWord& w) {
        expect(encode(decode(w)) == w, mn(m, n) + ": encode(decode) differs for " + to_string(w));
      });
      expect(words == valid, mn(m, n) + ": " + std::to_string(words) + " words vs " +
                                 std::to_string(valid) + " valid paths");
    }
  const SchroderWord fig = parse_word(12, 9, "0.0.0.0~.2.2.2~.3~.7");
  const LatticePath path = decode(fig);
  expect(to_string(path) == "uuudruuddrrrurrrrr", "(12,9) example word decodes to " + to_string(path));
  const std::vector<int> rows = {0, 1, 2, 4, 3, 4, 6, 6, 3};
  for (int i = 0; i < 9; ++i)
    expect(area_row(fig, i) == rows[i], "(12,9) example row " + std::to_string(i) + " area " +
                                            std::to_string(area_row(fig, i)));
  expect(area(fig) == 29, "(12,9) example total area " + std::to_string(area(fig)));
  return "bijection on all step sequences m,n<=5; (12,9) example area 29";
}

std::string check_reduction(const Config& cfg) {
  int checked = 0;
  for (int r = 1; r <= 6; ++r)
    for (int n = 1; r * n + 1 <= 7; ++n) {
      expect(check_classical_reduction(r, n, cfg.enumeration),
             "S_" + mn(r * n + 1, n) + " != S_" + mn(r * n, n));
      ++checked;
    }
  return std::to_string(checked) + " pairs (r,n) with rn+1<=7";
}

struct Suite {
  std::string name;
  int criterion;
  std::string title;
  std::function<std::string(const Config&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"classical", 1, "classical polynomials", check_classical},
      {"oeis", 1, "large Schroder numbers", check_oeis},
      {"cat_schrod", 2, "Schroder from Dyck", check_cat_schrod},
      {"bizley", 3, "Bizley series", check_bizley},
      {"coprime", 4, "coprime formulas", check_coprime},
      {"rotation", 5, "rotation bijection", check_rotation},
      {"haglund", 6, "scalar product", check_haglund},
      {"ct", 7, "constant term", check_ct},
      {"parking", 8, "parking functions", check_parking},
      {"encoding", 9, "word encoding", check_encoding},
      {"reduction", 10, "classical reduction", check_reduction},
  };
  return all;
}

CriterionResult run_checks(int id, const std::string& name, const std::vector<const Suite*>& parts,
                           const Config& cfg) {
  CriterionResult r{id, name, true, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    for (const Suite* s : parts) r.detail += (r.detail.empty() ? "" : "; ") + s->run(cfg);
  } catch (const Mismatch& e) {
    r.passed = false;
    r.detail = e.what();
  } catch (const ResourceLimitError& e) {
    r.passed = false;
    r.detail = std::string("resource cap: ") + e.what();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CriterionResult> run_suite(std::string_view name, const Config& cfg) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  std::vector<CriterionResult> out;
  if (name == "all") {
    for (int id = 1; id <= 10; ++id) {
      std::vector<const Suite*> parts;
      for (const auto& s : suites())
        if (s.criterion == id) parts.push_back(&s);
      out.push_back(run_checks(id, parts.size() > 1 ? "classical polynomials and totals" : parts[0]->title,
                               parts, cfg));
    }
    return out;
  }
  for (const auto& s : suites())
    if (s.name == name) out.push_back(run_checks(s.criterion, s.title, {&s}, cfg));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ") [" << r.seconds
      << "s] " << r.detail;
  return out.str();
}

}  // namespace schroder
