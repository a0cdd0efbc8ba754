#include "schroder/json_io.hpp"

#include <stdexcept>

namespace schroder {

namespace {

Json rational_term(const Exponents& e, const Rational& c) {
  return Json{{"q", e.q}, {"t", e.t}, {"y", e.y},
              {"num", to_string(Integer(c.get_num()))},
              {"den", to_string(Integer(c.get_den()))}};
}

}  // namespace

Json to_json(const Partition& mu) {
  Json out = Json::array();
  for (int p : mu.parts()) out.push_back(p);
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const CoeffPoly& c) {
  Json out = Json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
    out.push_back(rational_term(it->first, it->second));
  return out;
}

CoeffPoly coeff_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient: expected an array of terms");
  CoeffPoly out;
  for (const auto& t : j) {
    Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    out.add_term(Exponents{t.value("q", 0), t.value("t", 0), t.value("y", 0)}, c);
  }
  return out;
}

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [mu, c] : f.terms())
    terms.push_back(Json{{"index", to_json(mu)}, {"coeff", to_json(c)}});
  return Json{{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc out(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms"))
    out.add_term(partition_from_json(t.at("index")), coeff_poly_from_json(t.at("coeff")));
  return out;
}

Json to_json(const SchroderWord& w) {
  Json out = Json::array();
  for (const Part& p : w.parts) out.push_back(Json{{"value", p.value}, {"barred", p.barred}});
  return out;
}

SchroderWord word_from_json(int m, int n, const Json& j) {
  if (j.is_string()) return parse_word(m, n, j.get<std::string>());
  SchroderWord w{m, n, {}};
  for (const auto& p : j) w.parts.push_back(Part{p.at("value").get<int>(), p.value("barred", false)});
  if (!is_valid_word(w)) throw std::invalid_argument("word is not a valid Schroder word");
  return w;
}

Json enumerator_json(int m, int n, const SymFunc& f) {
  const SymFunc e = convert(f, Basis::e);
  // (y, q) -> e-basis part
  std::map<std::pair<int, int>, SymFunc> slices;
  for (const auto& [mu, c] : e.terms())
    for (const auto& [ex, r] : c.terms()) {
      if (ex.t != 0) throw std::invalid_argument("enumerator_json: t-dependent value");
      auto [it, inserted] = slices.try_emplace({ex.y, ex.q}, Basis::e);
      it->second.add_term(mu, CoeffPoly(r));
    }
  Json series = Json::array();
  for (const auto& [key, g] : slices) {
    Json terms = Json::array();
    for (const auto& [mu, c] : g.terms())
      terms.push_back(Json{{"index", to_json(mu)}, {"coeff", to_json(c)}});
    series.push_back(Json{{"y", key.first}, {"q", key.second}, {"terms", terms}});
  }
  return Json{{"m", m}, {"n", n}, {"basis", "e"}, {"series", series}};
}

Json parking_row_json(const SchroderWord& shape, const Integer& count) {
  return Json{{"shape", to_string(shape)}, {"count", to_string(count)}};
}

}  // namespace schroder
