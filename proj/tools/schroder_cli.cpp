// Command-line front end: count, sym, bizley, parking, ct, verify.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "schroder/config.hpp"
#include "schroder/constant_term.hpp"
#include "schroder/enumerators.hpp"
#include "schroder/json_io.hpp"
#include "schroder/parking.hpp"
#include "schroder/verify.hpp"

using namespace schroder;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Output {
  bool json = false;
  std::string out_file;

  // Prints the text form, or the JSON form with --json; --out always gets JSON.
  void emit(const std::string& text, const Json& j) const {
    if (json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) throw std::invalid_argument("cannot write " + out_file);
      f << j.dump(2) << "\n";
    }
  }
};

void require_positive(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
}

CoeffPoly at_q1(const CoeffPoly& c) { return c.specialize(Rational(1), std::nullopt, std::nullopt); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of rectangular Schroder paths"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::string config_path;
  int threads = 0;
  app.add_flag("--json", out.json, "Machine-readable JSON output");
  app.add_option("--out", out.out_file, "Also write the JSON result to FILE");
  app.add_option("--config", config_path, "key=value file with caps");
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);

  int m = 0, n = 0, k = -1, order = 0;
  bool with_q = false, with_y = false, dyck = false, t_eq_1 = false;
  std::string basis = "e", suite;

  auto* count = app.add_subcommand("count", "Number of (m,n) Schroder paths by diagonal steps");
  count->add_option("m,--m", m)->required();
  count->add_option("n,--n", n)->required();
  count->add_option("--k", k, "Only paths with K diagonal steps");
  count->add_flag("--q", with_q, "q-area enumerators");
  count->add_flag("--y", with_y, "Show the total as a polynomial in y");

  auto* sym = app.add_subcommand("sym", "Symmetric function enumerator S_{m,n}(x;y,q)");
  sym->add_option("m,--m", m)->required();
  sym->add_option("n,--n", n)->required();
  sym->add_option("--basis", basis)->check(CLI::IsMember({"e", "p", "h", "s"}));
  sym->add_flag("--q", with_q, "Keep q (otherwise q = 1)");
  sym->add_flag("--dyck", dyck, "C_{m,n} instead of S_{m,n}");

  auto* biz = app.add_subcommand("bizley", "Coefficients of the exponential generating series");
  biz->add_option("a,--a", m)->required();
  biz->add_option("b,--b", n)->required();
  biz->add_option("D,--order", order)->required()->check(CLI::PositiveNumber);
  biz->add_flag("--dyck", dyck, "Dyck series (no y)");

  auto* park = app.add_subcommand("parking", "Parking functions per shape and P_{m,n}(y,q)");
  park->add_option("m,--m", m)->required();
  park->add_option("n,--n", n)->required();
  park->add_option("--k", k, "Only shapes with K diagonal steps");

  auto* ct = app.add_subcommand("ct", "Constant-term (q,t) enumerator");
  ct->add_option("m,--m", m)->required();
  ct->add_option("n,--n", n)->required();
  ct->add_flag("--dyck", dyck, "Dyck analogue (no y)");
  ct->add_option("--basis", basis)->check(CLI::IsMember({"e", "p", "h", "s"}));
  ct->add_flag("--t-eq-1", t_eq_1, "Specialize t = 1");

  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    if (threads > 0) cfg.enumeration.threads = threads;
    std::ostringstream text;

    if (*count) {
      require_positive(m, n);
      const auto by_k = count_by_diagonals(m, n, cfg.enumeration);
      std::uint64_t total = 0;
      for (auto c : by_k) total += c;
      Json j{{"m", m}, {"n", n}};
      if (k >= 0) {
        const std::uint64_t c = k < static_cast<int>(by_k.size()) ? by_k[k] : 0;
        text << c << "\n";
        j["k"] = k;
        j["count"] = c;
      } else {
        text << "total " << total << "\nby k: [";
        for (std::size_t i = 0; i < by_k.size(); ++i) text << (i ? "," : "") << by_k[i];
        text << "]\n";
        j["total"] = total;
        j["by_k"] = by_k;
      }
      if (with_y) {
        CoeffPoly poly;
        for (std::size_t i = 0; i < by_k.size(); ++i)
          poly.add_term(Exponents{0, 0, static_cast<int>(i)}, Rational(Integer(static_cast<unsigned long>(by_k[i]))));
        text << "S(y) = " << poly.to_string() << "\n";
        j["y_polynomial"] = to_json(poly);
      }
      if (with_q) {
        Json qs = Json::array();
        const int lo = k >= 0 ? k : 0, hi = k >= 0 ? k : std::min(m, n);
        for (int kk = lo; kk <= hi; ++kk) {
          const CoeffPoly poly = direct_Sk(m, n, kk, cfg.enumeration);
          text << "k=" << kk << ": " << poly.to_string() << "\n";
          qs.push_back(Json{{"k", kk}, {"q_polynomial", to_json(poly)}});
        }
        j["q"] = qs;
      }
      out.emit(text.str(), j);
    } else if (*sym) {
      require_positive(m, n);
      SymFunc f = dyck ? C_sym_brute(m, n, cfg.enumeration) : S_sym_brute(m, n, cfg.enumeration);
      if (!with_q) f = f.map_coefficients(at_q1);
      f = convert(f, parse_basis(basis));
      const Json j = basis == "e" ? enumerator_json(m, n, f)
                                  : Json{{"m", m}, {"n", n}, {"value", to_json(f)}};
      out.emit(to_string(f) + "\n", j);
    } else if (*biz) {
      const ZSeries series = dyck ? bizley_C(m, n, order) : bizley_S(m, n, order);
      Json coeffs = Json::array();
      for (int d = 1; d <= order; ++d) {
        // pairing with sum e_j at y = 1 counts all paths of size (ad, bd)
        const Integer total = to_integer(
            *scalar(series[d], e_sum(n * d)).specialize(std::nullopt, std::nullopt, Rational(1)).constant_value());
        text << "z^" << d << ": " << to_string(series[d]) << "\n  paths: " << to_string(total) << "\n";
        coeffs.push_back(Json{{"d", d}, {"value", to_json(series[d])}, {"paths", to_string(total)}});
      }
      out.emit(text.str(), Json{{"a", m}, {"b", n}, {"order", order}, {"coefficients", coeffs}});
    } else if (*park) {
      require_positive(m, n);
      Json rows = Json::array();
      std::uint64_t seen = 0;
      for_each_schroder_word(m, n, k >= 0 ? std::optional<int>(k) : std::nullopt, [&](const SchroderWord& w) {
        if (++seen > cfg.enumeration.cap) throw ResourceLimitError("parking: shape enumeration exceeds cap");
        const Integer c = count_pf(w);
        text << to_string(w) << "\t" << to_string(c) << "\n";
        rows.push_back(parking_row_json(w, c));
      });
      const CoeffPoly P = P_poly(m, n, cfg.enumeration);
      text << "P(y,q) = " << P.to_string() << "\n";
      out.emit(text.str(), Json{{"m", m}, {"n", n}, {"rows", rows}, {"P", to_json(P)}});
    } else if (*ct) {
      require_positive(m, n);
      SymFunc f = dyck ? ct_C(m, n, cfg.ct) : ct_S(m, n, cfg.ct);
      if (t_eq_1) f = f.specialize(std::nullopt, Rational(1), std::nullopt);
      f = convert(f, parse_basis(basis));
      out.emit(to_string(f) + "\n", Json{{"m", m}, {"n", n}, {"convention", to_string(cfg.ct.convention)},
                                         {"value", to_json(f)}});
    } else if (*verify) {
      bool ok = true;
      Json results = Json::array();
      for (const auto& r : run_suite(suite, cfg)) {
        text << format_result(r) << "\n";
        results.push_back(Json{{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        ok = ok && r.passed;
      }
      out.emit(text.str(), Json{{"suite", suite}, {"results", results}});
      return ok ? kOk : kMismatch;
    }
    return kOk;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const TheoremCheckFailure& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
