#include "schroder/constant_term.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schroder {

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
}

LaurentPoly LaurentPoly::monomial(ExponentVector exponents, const SymFunc& c) {
  LaurentPoly out(static_cast<int>(exponents.size()));
  out.add_term(exponents, c);
  return out;
}

LaurentPoly LaurentPoly::constant(int num_vars, const SymFunc& c) {
  return monomial(ExponentVector(static_cast<std::size_t>(num_vars), 0), c);
}

void LaurentPoly::add_term(const ExponentVector& exponents, const SymFunc& c) {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw std::invalid_argument("LaurentPoly: exponent vector has the wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::pair<int, int> LaurentPoly::exponent_range(int var) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_.begin()->first[var], hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[var]);
    hi = std::max(hi, e[var]);
  }
  return {lo, hi};
}

bool LaurentPoly::involves(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

int LaurentPoly::max_x_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, c.max_degree());
  return d;
}

LaurentPoly LaurentPoly::constant_term_in(int var) const {
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) out.terms_.emplace(e, c);
  return out;
}

SymFunc LaurentPoly::constant_value() const {
  SymFunc out(Basis::e);
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int v) { return v != 0; }))
      throw std::logic_error("LaurentPoly::constant_value: variables remain");
    out += c;
  }
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  LaurentPoly out(a.num_vars_);
  ExponentVector e(static_cast<std::size_t>(a.num_vars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly omega_prime(int num_vars, int var, int truncation) {
  if (var < 0 || var >= num_vars) throw std::out_of_range("omega_prime: variable index");
  if (truncation < 0) throw std::invalid_argument("omega_prime: negative truncation");
  LaurentPoly out(num_vars);
  ExponentVector e(static_cast<std::size_t>(num_vars), 0);
  for (int k = 0; k <= truncation; ++k) {
    e[var] = k;
    out.add_term(e, e_basis_element(k == 0 ? Partition() : Partition{k}));
  }
  return out;
}

namespace {

ExponentVector unit(int num_vars, int var, int power) {
  ExponentVector e(static_cast<std::size_t>(num_vars), 0);
  e[var] = power;
  return e;
}

// 1/(z_i - c z_v) = sum_{r=0}^{order} c^r z_v^r z_i^{-1-r}
LaurentPoly geometric_expansion(int num_vars, const LinearForm& f, int order) {
  LaurentPoly out(num_vars);
  CoeffPoly cr(1L);
  for (int r = 0; r <= order; ++r) {
    ExponentVector e(static_cast<std::size_t>(num_vars), 0);
    e[f.i] = -1 - r;
    e[*f.j] = r;
    out.add_term(e, SymFunc::constant(cr, Basis::e));
    cr *= f.c;
    if (cr.is_zero()) break;
  }
  return out;
}

// Product restricted to terms whose exponent of `var` can still be brought
// to zero by the remaining factors, with x-degree at most x_bound.
LaurentPoly multiply_pruned(const LaurentPoly& a, const LaurentPoly& b, int var, long rem_min,
                            long rem_max, int x_bound, std::size_t max_terms) {
  LaurentPoly out(a.num_vars());
  ExponentVector e(static_cast<std::size_t>(a.num_vars()));
  for (const auto& [ea, ca] : a.terms()) {
    const int ca_deg = ca.max_degree();
    for (const auto& [eb, cb] : b.terms()) {
      const long ev = static_cast<long>(ea[var]) + eb[var];
      if (ev + rem_min > 0 || ev + rem_max < 0) continue;
      SymFunc c = ca * cb;
      if (ca_deg + cb.max_degree() > x_bound) c = c.truncated(x_bound);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, c);
      if (out.terms().size() > max_terms)
        throw ResourceLimitError("constant term: intermediate expansion exceeds " +
                                 std::to_string(max_terms) + " terms");
    }
  }
  return out;
}

}  // namespace

SymFunc ct_iterated(const CtIntegrand& in, std::span<const int> order, const CtLimits& limits) {
  const int nv = in.num_vars;
  if (static_cast<int>(in.monomial.size()) != nv)
    throw std::invalid_argument("ct_iterated: monomial has the wrong length");
  if (static_cast<int>(order.size()) != nv)
    throw std::invalid_argument("ct_iterated: elimination order must list every variable");
  std::vector<int> position(static_cast<std::size_t>(nv), -1);
  for (int k = 0; k < nv; ++k) {
    const int v = order[k];
    if (v < 0 || v >= nv || position[v] != -1)
      throw std::invalid_argument("ct_iterated: elimination order is not a permutation");
    position[v] = k;
  }
  for (const auto& f : in.polynomial_factors)
    if (f.num_vars() != nv) throw std::invalid_argument("ct_iterated: factor variable count mismatch");

  LaurentPoly state = LaurentPoly::monomial(in.monomial, SymFunc::constant(CoeffPoly(1L), Basis::e));
  std::vector<bool> den_used(in.denominators.size(), false);
  std::vector<bool> poly_used(in.polynomial_factors.size(), false);

  for (std::size_t d = 0; d < in.denominators.size(); ++d) {
    const LinearForm& f = in.denominators[d];
    if (f.i < 0 || f.i >= nv) throw std::invalid_argument("ct_iterated: malformed denominator");
    if (!f.j) {
      state = state * LaurentPoly::monomial(unit(nv, f.i, -1), SymFunc::constant(CoeffPoly(1L), Basis::e));
      den_used[d] = true;
      continue;
    }
    if (*f.j < 0 || *f.j >= nv || *f.j == f.i)
      throw std::invalid_argument("ct_iterated: malformed denominator");
    if (position[*f.j] > position[f.i])
      throw std::invalid_argument("ct_iterated: denominator z_" + std::to_string(f.i) + " - c z_" +
                                  std::to_string(*f.j) +
                                  " needs z_" + std::to_string(*f.j) + " eliminated first");
  }
  for (std::size_t p = 0; p < in.polynomial_factors.size(); ++p) {
    const LaurentPoly& f = in.polynomial_factors[p];
    bool any = false;
    for (int v = 0; v < nv && !any; ++v) any = f.involves(v);
    if (!any) {
      state = state * f;
      poly_used[p] = true;
    }
  }

  for (int v : order) {
    if (state.is_zero()) break;
    std::vector<LaurentPoly> factors;
    std::vector<const LinearForm*> series;
    for (std::size_t p = 0; p < in.polynomial_factors.size(); ++p) {
      if (poly_used[p] || !in.polynomial_factors[p].involves(v)) continue;
      poly_used[p] = true;
      factors.push_back(in.polynomial_factors[p]);
    }
    for (std::size_t d = 0; d < in.denominators.size(); ++d) {
      if (den_used[d] || *in.denominators[d].j != v) continue;
      den_used[d] = true;
      series.push_back(&in.denominators[d]);
    }

    long min_sum = state.exponent_range(v).first;
    for (const auto& f : factors) min_sum += f.exponent_range(v).first;
    const long budget = -min_sum;
    if (budget < 0) return SymFunc(Basis::e);
    if (!series.empty() && budget > limits.max_series_order)
      throw ResourceLimitError("constant term: series in z_" + std::to_string(v) + " needs order " +
                               std::to_string(budget) + " > cap " +
                               std::to_string(limits.max_series_order));
    for (const LinearForm* f : series) factors.push_back(geometric_expansion(nv, *f, static_cast<int>(budget)));

    // suffix sums of the exponent ranges of the factors still to multiply
    std::vector<long> rem_min(factors.size() + 1, 0), rem_max(factors.size() + 1, 0);
    for (std::size_t k = factors.size(); k-- > 0;) {
      const auto [lo, hi] = factors[k].exponent_range(v);
      rem_min[k] = rem_min[k + 1] + lo;
      rem_max[k] = rem_max[k + 1] + hi;
    }
    for (std::size_t k = 0; k < factors.size(); ++k)
      state = multiply_pruned(state, factors[k], v, rem_min[k + 1], rem_max[k + 1], in.x_degree_bound,
                              limits.max_terms);
    state = state.constant_term_in(v);
  }
  return state.constant_value();
}

std::string to_string(const CtConvention& c) {
  return std::string("row_index_shift=") + std::to_string(c.row_index_shift) +
         " chain=" + (c.chain == ChainParameter::q ? "q" : "qt");
}

CtIntegrand ct_integrand(int m, int n, bool augmented, const CtOptions& opts) {
  if (m < 1 || n < 1) throw std::invalid_argument("ct: m and n must be positive");
  if (m + n > opts.max_size)
    throw ResourceLimitError("ct: m+n = " + std::to_string(m + n) + " exceeds the cap " +
                             std::to_string(opts.max_size));
  const int nv = m + 1;  // z_0 .. z_m; z_{m+1} is set to 0
  const int trunc = opts.omega_truncation < 0 ? n : opts.omega_truncation;
  const CoeffPoly q = CoeffPoly::q(), t = CoeffPoly::t(), qt = q * t;
  const CoeffPoly chain = opts.convention.chain == ChainParameter::qt ? qt : q;

  CtIntegrand in;
  in.num_vars = nv;
  in.monomial.assign(static_cast<std::size_t>(nv), 0);
  in.x_degree_bound = n;
  for (int row = 0; row < n; ++row) {
    const long idx = static_cast<long>(row) * m / n + opts.convention.row_index_shift;
    if (idx < 0 || idx > m) throw std::invalid_argument("ct: row index convention leaves z_0..z_m");
    in.monomial[static_cast<std::size_t>(idx)] -= 1;
  }
  auto linear = [nv](int i, int j, const CoeffPoly& c) {
    LaurentPoly f(nv);
    f.add_term(unit(nv, i, 1), SymFunc::constant(CoeffPoly(1L), Basis::e));
    f.add_term(unit(nv, j, 1), SymFunc::constant(-c, Basis::e));
    return f;
  };
  for (int i = 1; i <= m; ++i) {
    in.monomial[static_cast<std::size_t>(i)] += 1;
    if (i < m) in.denominators.push_back({i, i + 1, chain});
    else in.denominators.push_back({i, std::nullopt, CoeffPoly()});
    in.polynomial_factors.push_back(omega_prime(nv, i, trunc));
    if (augmented) {
      LaurentPoly one_plus_yz(nv);
      one_plus_yz.add_term(unit(nv, i, 0), SymFunc::constant(CoeffPoly(1L), Basis::e));
      one_plus_yz.add_term(unit(nv, i, 1), SymFunc::constant(CoeffPoly::y(), Basis::e));
      in.polynomial_factors.push_back(std::move(one_plus_yz));
    }
    for (int j = i + 1; j <= m; ++j) {
      in.polynomial_factors.push_back(linear(i, j, CoeffPoly(1L)));
      in.polynomial_factors.push_back(linear(i, j, qt));
      in.denominators.push_back({i, j, q});
      in.denominators.push_back({i, j, t});
    }
  }
  return in;
}

namespace {

SymFunc ct_run(int m, int n, bool augmented, const CtOptions& opts) {
  const CtIntegrand in = ct_integrand(m, n, augmented, opts);
  std::vector<int> order(static_cast<std::size_t>(m) + 1);
  std::iota(order.rbegin(), order.rend(), 0);
  CtLimits limits = opts.limits;
  limits.max_series_order = std::max(limits.max_series_order, m * n + n);
  return ct_iterated(in, order, limits);
}

}  // namespace

SymFunc ct_S(int m, int n, const CtOptions& opts) { return ct_run(m, n, true, opts); }
SymFunc ct_C(int m, int n, const CtOptions& opts) { return ct_run(m, n, false, opts); }

std::vector<CtReference> reference_ct_values() {
  const CoeffPoly q = CoeffPoly::q(), t = CoeffPoly::t(), y = CoeffPoly::y(), one(1L);
  const CoeffPoly q_plus_t = q + t;
  const CoeffPoly q2_qt_t2 = q * q + q * t + t * t;
  auto s = [](std::initializer_list<int> parts, const CoeffPoly& c) {
    SymFunc out(Basis::s);
    out.add_term(Partition(parts), c);
    return out;
  };
  std::vector<CtReference> out;

  SymFunc s11_ref(Basis::e);
  s11_ref.add_term({1}, one);
  s11_ref.add_term({}, y);
  out.push_back({1, 1, s11_ref});

  out.push_back({2, 2,
                 s({2}, one) + s({1, 1}, q_plus_t) + s({1}, (q_plus_t + one) * y) +
                     s({}, y * y)});
  out.push_back({2, 3,
                 s({2, 1}, one) + s({1, 1, 1}, q_plus_t) + s({2}, y) +
                     s({1, 1}, (q_plus_t + one) * y) + s({1}, y * y)});
  out.push_back({2, 4,
                 s({2, 2}, one) + s({2, 1, 1}, q_plus_t) + s({1, 1, 1, 1}, q2_qt_t2) +
                     s({2, 1}, (q_plus_t + one) * y) + s({1, 1, 1}, (q2_qt_t2 + q_plus_t) * y) +
                     s({2}, y * y) + s({1, 1}, q_plus_t * y * y)});
  return out;
}

std::vector<CtConvention> ct_convention_candidates() {
  std::vector<CtConvention> out;
  for (int shift : {0, 1})
    for (ChainParameter chain : {ChainParameter::q, ChainParameter::qt})
      out.push_back(CtConvention{shift, chain});
  return out;
}

std::vector<CtConvention> select_ct_convention() {
  const auto refs = reference_ct_values();
  std::vector<CtConvention> out;
  for (const auto& candidate : ct_convention_candidates()) {
    CtOptions opts;
    opts.convention = candidate;
    const bool all = std::all_of(refs.begin(), refs.end(), [&](const CtReference& r) {
      return ct_S(r.m, r.n, opts) == r.value;
    });
    if (all) out.push_back(candidate);
  }
  return out;
}

}  // namespace schroder
