#include "schroder/coeff_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace schroder {

int Exponents::get(Param p) const {
  switch (p) {
    case Param::q: return q;
    case Param::t: return t;
    case Param::y: return y;
  }
  return 0;
}

namespace {

// mpq_class(num, den) is not reduced, and GMP arithmetic assumes reduced operands.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

}  // namespace

CoeffPoly::CoeffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, canonical(c));
}
CoeffPoly::CoeffPoly(const Integer& c) : CoeffPoly(Rational(c)) {}
CoeffPoly::CoeffPoly(long c) : CoeffPoly(Rational(c)) {}

CoeffPoly CoeffPoly::monomial(Exponents e, const Rational& c) {
  if (e.q < 0 || e.t < 0 || e.y < 0) throw std::invalid_argument("negative parameter exponent");
  CoeffPoly out;
  if (c != 0) out.terms_.emplace(e, canonical(c));
  return out;
}

CoeffPoly CoeffPoly::variable(Param p, int power) {
  Exponents e;
  switch (p) {
    case Param::q: e.q = power; break;
    case Param::t: e.t = power; break;
    case Param::y: e.y = power; break;
  }
  return monomial(e);
}

std::optional<Rational> CoeffPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Exponents{}) return terms_.begin()->second;
  return std::nullopt;
}

Rational CoeffPoly::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CoeffPoly::degree(Param p) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.get(p));
  return d;
}

bool CoeffPoly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void CoeffPoly::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  const Rational v = canonical(c);
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffPoly CoeffPoly::slice(Param p, int power) const {
  CoeffPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.get(p) != power) continue;
    Exponents r = e;
    switch (p) {
      case Param::q: r.q = 0; break;
      case Param::t: r.t = 0; break;
      case Param::y: r.y = 0; break;
    }
    out.terms_.emplace(r, c);
  }
  return out;
}

CoeffPoly CoeffPoly::specialize(std::optional<Rational> q, std::optional<Rational> t,
                                std::optional<Rational> y) const {
  CoeffPoly out;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    Exponents r = e;
    if (q) { v *= power(*q, e.q); r.q = 0; }
    if (t) { v *= power(*t, e.t); r.t = 0; }
    if (y) { v *= power(*y, e.y); r.y = 0; }
    out.add_term(r, v);
  }
  return out;
}

Rational CoeffPoly::evaluate(const Rational& q, const Rational& t, const Rational& y) const {
  return *specialize(q, t, y).constant_value();
}

CoeffPoly CoeffPoly::swap_qt() const {
  CoeffPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.t, e.q, e.y}, c);
  return out;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(Exponents{ea.q + eb.q, ea.t + eb.t, ea.y + eb.y}, ca * cb);
  return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly CoeffPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  CoeffPoly out = *this;
  const Rational f = canonical(c);
  for (auto& [e, v] : out.terms_) v *= f;
  return out;
}

CoeffPoly operator-(CoeffPoly a) {
  for (auto& [e, v] : a.terms_) v = -v;
  return a;
}

CoeffPoly CoeffPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("CoeffPoly::pow: negative exponent");
  CoeffPoly out(1L);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    auto factor = [&mono](char name, int power) {
      if (power == 0) return;
      if (mono.tellp() > 0) mono << '*';
      mono << name;
      if (power > 1) mono << '^' << power;
    };
    factor('q', e.q);
    factor('t', e.t);
    factor('y', e.y);
    const std::string m = mono.str();
    if (m.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << m;
    } else {
      os << mag.get_str() << '*' << m;
    }
  }
  return os.str();
}

}  // namespace schroder
