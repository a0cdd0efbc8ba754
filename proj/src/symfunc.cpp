#include "schroder/symfunc.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <sstream>

namespace schroder {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::e: return 'e';
    case Basis::p: return 'p';
    case Basis::h: return 'h';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(std::string_view name) {
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  if (name == "h") return Basis::h;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

namespace {

using Sparse = std::map<Partition, Rational>;

void sparse_add(Sparse& acc, const Partition& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Sparse sparse_product(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) sparse_add(out, pa.merged(pb), ca * cb);
  return out;
}

Sparse power_sum_expansion(int k, bool alternating) {
  Sparse out;
  for (const auto& nu : partitions_of(k)) {
    Rational c(1, 1);
    c /= Rational(z_of(nu));
    if (alternating && (k - nu.length()) % 2 != 0) c = -c;
    out.emplace(nu, c);
  }
  return out;
}

// s_lambda as a polynomial in the e_k, from det[e_{lambda'_i - i + j}].
Sparse schur_in_e(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const int l = conj.length();
  if (l == 0) return Sparse{{Partition(), Rational(1)}};
  std::map<unsigned, Sparse> memo;
  std::function<const Sparse&(unsigned)> minor = [&](unsigned used) -> const Sparse& {
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const int row = std::popcount(used);
    Sparse out;
    if (row == l) {
      out.emplace(Partition(), Rational(1));
    } else {
      int position = 0;
      for (int col = 0; col < l; ++col) {
        if (used & (1U << col)) continue;
        const int k = conj[row] - row + col;
        if (k >= 0) {
          const Sparse& rest = minor(used | (1U << col));
          const Partition factor = k == 0 ? Partition() : Partition{k};
          const Rational sign = (position % 2 == 0) ? 1 : -1;
          for (const auto& [mu, c] : rest) sparse_add(out, mu.merged(factor), sign * c);
        }
        ++position;
      }
    }
    return memo.emplace(used, std::move(out)).first->second;
  };
  return minor(0);
}

constexpr std::size_t basis_index(Basis b) { return static_cast<std::size_t>(b); }

struct DegreeTable {
  std::vector<Partition> index;
  std::map<Partition, std::size_t> position;
  std::array<std::vector<Sparse>, 4> to_p;
  std::array<std::vector<Sparse>, 4> from_p;
};

std::vector<Sparse> invert(const DegreeTable& t, const std::vector<Sparse>& rows) {
  const std::size_t n = t.index.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [nu, c] : rows[i]) a[i][t.position.at(nu)] = c;
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular basis transition matrix");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (a[col][k] != 0) a[r][k] -= f * a[col][k];
    }
  }
  // rows[mu] = sum_nu M[mu][nu] p_nu, so p_nu = sum_mu (M^{-1})[nu][mu] B_mu.
  std::vector<Sparse> out(n);
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < n; ++mu)
      if (a[nu][n + mu] != 0) out[nu].emplace(t.index[mu], a[nu][n + mu]);
  return out;
}

std::unique_ptr<DegreeTable> build_table(int d) {
  auto t = std::make_unique<DegreeTable>();
  t->index = partitions_of(d);
  for (std::size_t i = 0; i < t->index.size(); ++i) t->position.emplace(t->index[i], i);

  std::vector<Sparse> e_single(d + 1), h_single(d + 1);
  for (int k = 1; k <= d; ++k) {
    e_single[k] = power_sum_expansion(k, true);
    h_single[k] = power_sum_expansion(k, false);
  }
  auto product_of = [](const Partition& mu, const std::vector<Sparse>& single) {
    Sparse acc{{Partition(), Rational(1)}};
    for (int part : mu.parts()) acc = sparse_product(acc, single[part]);
    return acc;
  };

  auto& to_p = t->to_p;
  for (const auto& mu : t->index) {
    to_p[basis_index(Basis::p)].push_back(Sparse{{mu, Rational(1)}});
    to_p[basis_index(Basis::e)].push_back(product_of(mu, e_single));
    to_p[basis_index(Basis::h)].push_back(product_of(mu, h_single));
    Sparse s_in_p;
    for (const auto& [nu, c] : schur_in_e(mu))
      for (const auto& [rho, r] : product_of(nu, e_single)) sparse_add(s_in_p, rho, c * r);
    to_p[basis_index(Basis::s)].push_back(std::move(s_in_p));
  }
  t->from_p[basis_index(Basis::p)] = to_p[basis_index(Basis::p)];
  for (Basis b : {Basis::e, Basis::h, Basis::s})
    t->from_p[basis_index(b)] = invert(*t, to_p[basis_index(b)]);
  return t;
}

const DegreeTable& table(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<DegreeTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = build_table(d);
  return *slot;
}

SymFunc expand_through(const SymFunc& f, Basis target, bool towards_p) {
  SymFunc out(target, f.truncation_degree());
  for (const auto& [mu, c] : f.terms()) {
    const DegreeTable& t = table(mu.weight());
    const std::size_t b = basis_index(towards_p ? f.basis() : target);
    const auto& rows = towards_p ? t.to_p[b] : t.from_p[b];
    for (const auto& [nu, r] : rows[t.position.at(mu)]) out.add_term(nu, c.scaled(r));
  }
  return out;
}

bool is_multiplicative(Basis b) { return b != Basis::s; }

}  // namespace

SymFunc::SymFunc(Basis basis, int truncation_degree)
    : basis_(basis), truncation_(truncation_degree) {
  if (truncation_degree < 0) throw std::invalid_argument("negative truncation degree");
}

SymFunc SymFunc::constant(const CoeffPoly& c, Basis basis) {
  SymFunc out(basis);
  out.add_term(Partition(), c);
  return out;
}

int SymFunc::max_degree() const {
  int d = -1;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
  return d;
}

bool SymFunc::is_homogeneous(int degree) const {
  for (const auto& [mu, c] : terms_)
    if (mu.weight() != degree) return false;
  return true;
}

CoeffPoly SymFunc::coefficient(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

void SymFunc::add_term(const Partition& index, const CoeffPoly& c) {
  if (c.is_zero()) return;
  if (index.weight() > truncation_)
    throw DegreeOverflow("term " + index.to_string() + " exceeds truncation degree " +
                         std::to_string(truncation_));
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::truncated(int max_degree) const {
  SymFunc out(basis_, std::min(truncation_, max_degree));
  for (const auto& [mu, c] : terms_)
    if (mu.weight() <= max_degree) out.terms_.emplace(mu, c);
  return out;
}

SymFunc SymFunc::with_truncation(int degree) const {
  SymFunc out(basis_, degree);
  for (const auto& [mu, c] : terms_) out.add_term(mu, c);
  return out;
}

SymFunc SymFunc::homogeneous_part(int degree) const {
  SymFunc out(basis_, truncation_);
  for (const auto& [mu, c] : terms_)
    if (mu.weight() == degree) out.terms_.emplace(mu, c);
  return out;
}

SymFunc SymFunc::map_coefficients(const std::function<CoeffPoly(const CoeffPoly&)>& f) const {
  SymFunc out(basis_, truncation_);
  for (const auto& [mu, c] : terms_) out.add_term(mu, f(c));
  return out;
}

SymFunc SymFunc::slice(Param p, int power) const {
  return map_coefficients([&](const CoeffPoly& c) { return c.slice(p, power); });
}

SymFunc SymFunc::specialize(std::optional<Rational> q, std::optional<Rational> t,
                            std::optional<Rational> y) const {
  return map_coefficients([&](const CoeffPoly& c) { return c.specialize(q, t, y); });
}

SymFunc SymFunc::scaled(const CoeffPoly& c) const {
  return map_coefficients([&](const CoeffPoly& v) { return v * c; });
}

bool SymFunc::has_integral_coefficients() const {
  for (const auto& [mu, c] : terms_)
    if (!c.is_integral()) return false;
  return true;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.basis_ != basis_) return *this += convert(o, basis_);
  truncation_ = std::min(truncation_, o.truncation_);
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  return *this += o.scaled(CoeffPoly(-1L));
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ != b.basis_ || !is_multiplicative(a.basis_))
    return convert(a, Basis::p) * convert(b, Basis::p);
  SymFunc out(a.basis_, std::min(a.truncation_, b.truncation_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.merged(mb), ca * cb);
  return out;
}

SymFunc SymFunc::pow(int e) const {
  if (e < 0) throw std::invalid_argument("SymFunc::pow: negative exponent");
  SymFunc out = constant(CoeffPoly(1L), is_multiplicative(basis_) ? basis_ : Basis::p);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return convert(a, Basis::p).terms_ == convert(b, Basis::p).terms_;
}

SymFunc e_basis_element(const Partition& mu) { return basis_element(Basis::e, mu); }
SymFunc p_basis_element(const Partition& mu) { return basis_element(Basis::p, mu); }
SymFunc h_basis_element(const Partition& mu) { return basis_element(Basis::h, mu); }
SymFunc schur_element(const Partition& lambda) { return basis_element(Basis::s, lambda); }

SymFunc basis_element(Basis basis, const Partition& mu) {
  SymFunc out(basis);
  out.add_term(mu, CoeffPoly(1L));
  return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  if (f.basis() == Basis::p) return expand_through(f, target, false);
  SymFunc in_p = expand_through(f, Basis::p, true);
  return target == Basis::p ? in_p : expand_through(in_p, target, false);
}

CoeffPoly scalar(const SymFunc& f, const SymFunc& g) {
  const SymFunc fp = convert(f, Basis::p);
  const SymFunc gp = convert(g, Basis::p);
  CoeffPoly out;
  for (const auto& [mu, c] : fp.terms()) {
    auto it = gp.terms().find(mu);
    if (it == gp.terms().end()) continue;
    out += (c * it->second).scaled(Rational(z_of(mu)));
  }
  return out;
}

SymFunc substitute_power_sums(const SymFunc& f, const std::function<SymFunc(int)>& image) {
  const SymFunc fp = convert(f, Basis::p);
  std::map<int, SymFunc> cache;
  auto img = [&](int k) -> const SymFunc& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, convert(image(k), Basis::p)).first;
    return it->second;
  };
  SymFunc out(Basis::p, fp.truncation_degree());
  for (const auto& [mu, c] : fp.terms()) {
    SymFunc term = SymFunc::constant(c, Basis::p);
    for (int part : mu.parts()) term = term * img(part);
    out += term;
  }
  return out;
}

SymFunc scale_alphabet(const SymFunc& f, const CoeffPoly& m) {
  return convert(substitute_power_sums(f, [&](int k) { return p_basis_element({k}).scaled(m); }),
                 f.basis());
}

SymFunc add_parameter(const SymFunc& f) {
  return convert(substitute_power_sums(f,
                                       [](int k) {
                                         return p_basis_element({k}) +
                                                SymFunc::constant(CoeffPoly::y(k));
                                       }),
                 f.basis());
}

SymFunc add_parameter_via_skew(const SymFunc& f) {
  SymFunc out(f.basis(), f.truncation_degree());
  const int top = f.max_degree();
  for (int k = 0; k <= top; ++k) out += skew_by_h(f, k).scaled(CoeffPoly::y(k));
  return out;
}

SymFunc scale_augmented_alphabet(const SymFunc& f, const CoeffPoly& m) {
  return convert(substitute_power_sums(f,
                                       [&](int k) {
                                         return (p_basis_element({k}) +
                                                 SymFunc::constant(CoeffPoly::y(k)))
                                             .scaled(m);
                                       }),
                 f.basis());
}

SymFunc e_scaled_alphabet(int n, long m) {
  if (n < 0) throw std::invalid_argument("e_scaled_alphabet: negative degree");
  SymFunc out(Basis::p);
  const Rational sign = n % 2 == 0 ? 1 : -1;
  for (const auto& nu : partitions_of(n)) {
    Rational c = sign * power(Rational(-m), nu.length());
    c /= Rational(z_of(nu));
    out.add_term(nu, c);
  }
  return out;
}

SymFunc e_scaled_alphabet_from_multiplicities(int n, long m) {
  if (n < 0 || m < 0) throw std::invalid_argument("e_scaled_alphabet: negative argument");
  SymFunc out(Basis::e);
  for (const auto& nu : partitions_of(n))
    out.add_term(nu, CoeffPoly(multinomial(m, multiplicity_partition(nu))));
  return out;
}

SymFunc skew_by_p(const SymFunc& f, int r) {
  if (r < 1) throw std::invalid_argument("skew_by_p: part must be positive");
  const SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p, fp.truncation_degree());
  for (const auto& [mu, c] : fp.terms()) {
    const int mult = mu.multiplicity(r);
    if (mult == 0) continue;
    std::vector<int> rest(mu.parts().begin(), mu.parts().end());
    rest.erase(std::find(rest.begin(), rest.end(), r));
    out.add_term(Partition(std::move(rest)), c.scaled(Rational(r * mult)));
  }
  return convert(out, f.basis());
}

SymFunc skew_by_h(const SymFunc& f, int k) {
  if (k < 0) throw std::invalid_argument("skew_by_h: negative degree");
  if (k == 0) return f;
  const SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p, fp.truncation_degree());
  if (k <= fp.max_degree()) {
    for (const auto& nu : partitions_of(k)) {
      SymFunc term = fp;
      for (int part : nu.parts()) term = skew_by_p(term, part);
      out += term.scaled(CoeffPoly(Rational(1) / Rational(z_of(nu))));
    }
  }
  return convert(out, f.basis());
}

SymFunc e_sum(int max_degree) {
  SymFunc out(Basis::e);
  for (int j = 0; j <= max_degree; ++j) out.add_term(j == 0 ? Partition() : Partition{j}, 1);
  return out;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : f.terms()) {
    std::string coeff = c.to_string();
    const bool compound = c.terms().size() > 1;
    bool negative = !compound && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;
    if (mu.empty()) {
      os << (compound ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (compound) os << '(' << coeff << ")*";
    else if (coeff != "1") os << coeff << '*';
    os << basis_letter(f.basis()) << mu.to_string();
  }
  return os.str();
}

ZSeries series_exp(const ZSeries& F, int order) {
  if (order < 0) throw std::invalid_argument("series_exp: negative order");
  if (!F.coeffs.empty() && !F.coeffs[0].is_zero())
    throw std::invalid_argument("series_exp: nonzero constant term");
  auto coeff = [&](int j) {
    return j < static_cast<int>(F.coeffs.size()) ? F.coeffs[j] : SymFunc(Basis::p);
  };
  ZSeries G;
  G.coeffs.push_back(SymFunc::constant(CoeffPoly(1L)));
  // d G_d = sum_{j=1}^d j F_j G_{d-j}, from G' = F' G.
  for (int d = 1; d <= order; ++d) {
    SymFunc acc(Basis::p);
    for (int j = 1; j <= d; ++j) {
      const SymFunc fj = coeff(j);
      if (fj.is_zero()) continue;
      acc += (fj * G.coeffs[d - j]).scaled(CoeffPoly(j));
    }
    G.coeffs.push_back(acc.scaled(CoeffPoly(Rational(1, d))));
  }
  return G;
}

}  // namespace schroder
