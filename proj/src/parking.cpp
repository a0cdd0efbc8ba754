#include "schroder/parking.hpp"

#include <algorithm>
#include <numeric>

namespace schroder {

namespace {

// Row indices of each riser, bottom to top, in column order.
std::vector<std::vector<int>> riser_rows(const SchroderWord& w) {
  std::vector<std::vector<int>> out;
  int current = -1;
  for (int i = 0; i < static_cast<int>(w.parts.size()); ++i) {
    const Part& a = w.parts[i];
    if (a.barred) continue;
    if (out.empty() || a.value != current) {
      out.emplace_back();
      current = a.value;
    }
    out.back().push_back(i);
  }
  return out;
}

}  // namespace

bool is_valid_parking_function(const ParkingFunction& f) {
  if (!is_valid_word(f.shape) || f.labels.size() != f.shape.parts.size()) return false;
  const int k = diag_count(f.shape);
  const int n = f.shape.n;
  std::vector<bool> used(static_cast<std::size_t>(n - k) + 1, false);
  for (int i = 0; i < n; ++i) {
    const int label = f.labels[i];
    if (f.shape.parts[i].barred) {
      if (label != 0) return false;
      continue;
    }
    if (label < 1 || label > n - k || used[label]) return false;
    used[label] = true;
  }
  for (const auto& rows : riser_rows(f.shape))
    for (std::size_t j = 1; j < rows.size(); ++j)
      if (f.labels[rows[j]] < f.labels[rows[j - 1]]) return false;
  return true;
}

Integer count_pf(const SchroderWord& shape) {
  const Composition g = gamma(shape);
  Integer out = factorial(g.weight());
  for (int part : g.parts()) out /= factorial(part);
  return out;
}

std::uint64_t for_each_pf(const SchroderWord& shape,
                          const std::function<void(const ParkingFunction&)>& visit,
                          std::uint64_t cap) {
  if (!is_valid_word(shape)) throw std::invalid_argument("for_each_pf: invalid shape");
  const auto rows = riser_rows(shape);
  const int labels = shape.n - diag_count(shape);
  ParkingFunction f{shape, std::vector<int>(shape.parts.size(), 0)};
  std::vector<bool> used(static_cast<std::size_t>(labels) + 1, false);
  std::uint64_t count = 0;

  // Risers are filled one at a time with an increasing set of free labels,
  // which is the only ordering compatible with the riser condition.
  std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t riser, std::size_t slot,
                                                                 int min_label) {
    if (riser == rows.size()) {
      if (++count > cap) throw ResourceLimitError("parking function enumeration exceeds cap");
      visit(f);
      return;
    }
    if (slot == rows[riser].size()) {
      fill(riser + 1, 0, 1);
      return;
    }
    for (int label = min_label; label <= labels; ++label) {
      if (used[label]) continue;
      used[label] = true;
      f.labels[rows[riser][slot]] = label;
      fill(riser, slot + 1, label + 1);
      used[label] = false;
    }
    f.labels[rows[riser][slot]] = 0;
  };
  fill(0, 0, 1);
  return count;
}

std::vector<ParkingFunction> enumerate_pf(const SchroderWord& shape, std::uint64_t cap) {
  std::vector<ParkingFunction> out;
  for_each_pf(shape, [&](const ParkingFunction& f) { out.push_back(f); }, cap);
  return out;
}

CoeffPoly P_poly_direct(int m, int n, const EnumerationOptions& opts) {
  CoeffPoly out;
  std::uint64_t seen = 0;
  for_each_schroder_word(m, n, std::nullopt, [&](const SchroderWord& w) {
    if (++seen > opts.cap) throw ResourceLimitError("P_poly: enumeration exceeds cap");
    out.add_term(Exponents{area(w), 0, diag_count(w)}, Rational(count_pf(w)));
  });
  return out;
}

CoeffPoly P_poly_scalar(int m, int n, const EnumerationOptions& opts) {
  // 1/(1 - p_1) truncated at degree n: higher powers pair to zero.
  SymFunc geometric(Basis::p);
  for (int d = 0; d <= n; ++d) {
    std::vector<int> ones(static_cast<std::size_t>(d), 1);
    geometric.add_term(Partition(std::move(ones)), 1);
  }
  return scalar(add_parameter(C_sym_brute(m, n, opts)), geometric);
}

CoeffPoly P_poly(int m, int n, const EnumerationOptions& opts) {
  CoeffPoly direct = P_poly_direct(m, n, opts);
  const CoeffPoly via_scalar = P_poly_scalar(m, n, opts);
  if (direct != via_scalar)
    throw TheoremCheckFailure("P_poly(" + std::to_string(m) + "," + std::to_string(n) +
                              "): direct sum " + direct.to_string() +
                              " differs from scalar product " + via_scalar.to_string());
  return direct;
}

Integer P_coprime_closed(int a, int b, int k) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw std::invalid_argument("P_coprime_closed: (a,b) must be coprime positive integers");
  if (k < 0 || k > std::min(a, b)) throw std::invalid_argument("P_coprime_closed: k out of range");
  return to_integer(Rational(binomial(a, k)) * power(Rational(a), b - k - 1));
}

CoeffPoly P_slice_scalar(int m, int n, int k, const EnumerationOptions& opts) {
  if (k < 0 || k > n) throw std::invalid_argument("P_slice_scalar: k out of range");
  std::vector<int> ones(static_cast<std::size_t>(n - k), 1);
  SymFunc pairing = p_basis_element(Partition(std::move(ones)));
  if (k > 0) pairing = pairing * convert(h_basis_element({k}), Basis::p);
  return scalar(C_sym_brute(m, n, opts), pairing);
}

}  // namespace schroder
