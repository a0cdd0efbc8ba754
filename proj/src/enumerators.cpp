#include "schroder/enumerators.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace schroder {

namespace {

// (riser partition, area, diagonals) -> number of words
using Tally = std::map<std::tuple<Partition, int, int>, std::uint64_t>;

Tally tally_words(int m, int n, std::optional<int> diagonals, const EnumerationOptions& opts) {
  const int threads = std::max(1, opts.threads);
  std::atomic<std::uint64_t> seen{0};
  std::vector<Tally> partial(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](int shard) {
    try {
      for_each_schroder_word(
          m, n, diagonals,
          [&](const SchroderWord& w) {
            if (++seen > opts.cap)
              throw ResourceLimitError("enumeration of (" + std::to_string(m) + "," +
                                       std::to_string(n) + ") words exceeds cap " +
                                       std::to_string(opts.cap));
            ++partial[shard][{gamma(w).sorted(), area(w), diag_count(w)}];
          },
          Shard{shard, threads});
    } catch (...) {
      errors[shard] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < threads; ++s) pool.emplace_back(work, s);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Tally total;
  for (const auto& part : partial)
    for (const auto& [key, count] : part) total[key] += count;
  return total;
}

SymFunc tally_to_symfunc(const Tally& tally) {
  SymFunc out(Basis::e);
  for (const auto& [key, count] : tally) {
    const auto& [mu, a, d] = key;
    out.add_term(mu, CoeffPoly::monomial(Exponents{a, 0, d}, Rational(Integer(static_cast<unsigned long>(count)))));
  }
  return out;
}

void require_coprime(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("parameters must be positive");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not coprime");
}

ZSeries bizley(int a, int b, int order, bool augmented) {
  require_coprime(a, b);
  if (order < 1) throw std::invalid_argument("bizley: order must be at least 1");
  ZSeries F;
  F.coeffs.emplace_back(Basis::p);
  for (int j = 1; j <= order; ++j) {
    const SymFunc base = e_basis_element({j * b});
    const CoeffPoly scale(static_cast<long>(j) * a);
    const SymFunc pleth =
        augmented ? scale_augmented_alphabet(base, scale) : scale_alphabet(base, scale);
    F.coeffs.push_back(pleth.scaled(CoeffPoly(Rational(1, static_cast<unsigned long>(j) * a))));
  }
  ZSeries G = series_exp(F, order);
  for (auto& c : G.coeffs) c = convert(c, Basis::e);
  return G;
}

}  // namespace

std::vector<Integer> classical_S(int n) {
  if (n < 0) throw std::invalid_argument("classical_S: negative n");
  std::vector<Integer> out;
  // The sum indexes by the number of non-diagonal rows: y^k collects the
  // term j = n - k.
  for (int k = 0; k <= n; ++k) {
    const int j = n - k;
    Integer num = binomial(n, j) * binomial(n + j, n);
    out.push_back(num / (j + 1));
  }
  return out;
}

SymFunc S_sym_brute(int m, int n, const EnumerationOptions& opts) {
  return tally_to_symfunc(tally_words(m, n, std::nullopt, opts));
}

SymFunc C_sym_brute(int m, int n, const EnumerationOptions& opts) {
  return tally_to_symfunc(tally_words(m, n, 0, opts));
}

std::vector<std::uint64_t> count_by_diagonals(int m, int n, const EnumerationOptions& opts) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::min(m, n)) + 1, 0);
  for (const auto& [key, count] : tally_words(m, n, std::nullopt, opts))
    out[static_cast<std::size_t>(std::get<2>(key))] += count;
  return out;
}

ZSeries bizley_S(int a, int b, int order) { return bizley(a, b, order, true); }
ZSeries bizley_C(int a, int b, int order) { return bizley(a, b, order, false); }

SymFunc schroder_from_dyck(int m, int n, const EnumerationOptions& opts) {
  return convert(add_parameter(C_sym_brute(m, n, opts)), Basis::e);
}

SymFunc coprime_Sk(int a, int b, int k) {
  require_coprime(a, b);
  if (k < 0 || k > std::min(a, b)) throw std::invalid_argument("coprime_Sk: k out of range");
  SymFunc out(Basis::e);
  const Integer diag_positions = binomial(a, k);
  for (const auto& nu : partitions_of(b - k)) {
    Rational c(diag_positions * multinomial(a, multiplicity_partition(nu)));
    c /= a;
    out.add_term(nu, CoeffPoly(c));
  }
  if (!out.has_integral_coefficients())
    throw TheoremCheckFailure("coprime_Sk: non-integral coefficient for (" + std::to_string(a) +
                              "," + std::to_string(b) + "," + std::to_string(k) + ")");
  return out;
}

Integer coprime_Sk_count(int a, int b, int k) {
  require_coprime(a, b);
  if (k < 0 || k > std::min(a, b)) throw std::invalid_argument("coprime_Sk: k out of range");
  Rational total = 0;
  for (const auto& nu : partitions_of(b - k)) {
    Rational c(binomial(a, k) * multinomial(a, multiplicity_partition(nu)));
    c /= a;
    total += c;
  }
  return to_integer(total);
}

CoeffPoly haglund_Sk(int m, int n, int k, const EnumerationOptions& opts) {
  if (k < 0 || k > n) throw std::invalid_argument("haglund_Sk: k out of range");
  const SymFunc pairing =
      n - k == 0 ? h_basis_element({k})
                 : (k == 0 ? e_basis_element({n}) : e_basis_element({n - k}) * h_basis_element({k}));
  return scalar(C_sym_brute(m, n, opts), pairing);
}

CoeffPoly direct_Sk(int m, int n, int k, const EnumerationOptions& opts) {
  CoeffPoly out;
  for (const auto& [key, count] : tally_words(m, n, k, opts))
    out.add_term(Exponents{std::get<1>(key), 0, 0}, Rational(Integer(static_cast<unsigned long>(count))));
  return out;
}

bool check_classical_reduction(int r, int n, const EnumerationOptions& opts) {
  if (r < 1 || n < 1) throw std::invalid_argument("check_classical_reduction: r,n must be positive");
  return S_sym_brute(r * n + 1, n, opts) == S_sym_brute(r * n, n, opts);
}

SymFunc B_sym_brute(int m, int n) {
  SymFunc out(Basis::e);
  for (int k = 0; k <= std::min(m, n); ++k) {
    for_each_b_path(m, n, k, [&](const LatticePath& p) {
      out.add_term(risers(p).sorted(), CoeffPoly::y(k));
    });
  }
  return out;
}

SymFunc B_closed(int m, int n) {
  SymFunc out(Basis::e);
  for (int k = 0; k <= n; ++k) {
    const Integer diag_positions = binomial(m, k);
    if (diag_positions == 0) continue;
    for (const auto& nu : partitions_of(n - k)) {
      const Integer c = diag_positions * multinomial(m, multiplicity_partition(nu));
      out.add_term(nu, CoeffPoly(c) * CoeffPoly::y(k));
    }
  }
  return out;
}

SymFunc B_plethystic(int m, int n) {
  return convert(scale_augmented_alphabet(e_basis_element({n}), CoeffPoly(static_cast<long>(m))),
                 Basis::e);
}

}  // namespace schroder
