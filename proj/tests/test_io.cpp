#include <doctest.h>

#include <sstream>

#include "schroder/config.hpp"
#include "schroder/enumerators.hpp"
#include "schroder/json_io.hpp"
#include "schroder/verify.hpp"

using namespace schroder;

TEST_CASE("JSON round trips") {
  const Partition mu{3, 1, 1};
  CHECK(to_json(mu).dump() == "[3,1,1]");
  CHECK(partition_from_json(to_json(mu)) == mu);

  const CoeffPoly c = CoeffPoly::q().scaled(Rational(-3, 4)) + CoeffPoly::y(2);
  CHECK(coeff_poly_from_json(to_json(c)) == c);
  CHECK(to_json(CoeffPoly(Rational(1, 2))).dump() == R"([{"q":0,"t":0,"y":0,"num":"1","den":"2"}])");

  const SymFunc f = S_sym_brute(3, 3);
  CHECK(symfunc_from_json(to_json(f)).terms() == f.terms());
  CHECK(to_json(f).dump() == to_json(S_sym_brute(3, 3)).dump());

  const SchroderWord w = parse_word(12, 9, "0.0.0.0~.2.2.2~.3~.7");
  CHECK(word_from_json(12, 9, to_json(w)) == w);
  CHECK(word_from_json(12, 9, Json("0.0.0.0~.2.2.2~.3~.7")) == w);
  CHECK_THROWS(word_from_json(2, 2, Json::parse(R"([{"value":0,"barred":true},{"value":0}])")));
}

TEST_CASE("enumerator JSON") {
  const Json j = enumerator_json(1, 1, S_sym_brute(1, 1));
  CHECK(j.dump() ==
        R"({"m":1,"n":1,"basis":"e","series":[)"
        R"({"y":0,"q":0,"terms":[{"index":[1],"coeff":[{"q":0,"t":0,"y":0,"num":"1","den":"1"}]}]},)"
        R"({"y":1,"q":0,"terms":[{"index":[],"coeff":[{"q":0,"t":0,"y":0,"num":"1","den":"1"}]}]}]})");
  CHECK(parking_row_json(parse_word(2, 2, "0.1"), 2).dump() == R"({"shape":"0.1","count":"2"})");
}

TEST_CASE("config") {
  std::istringstream in("# caps\nenumeration_cap = 50\nthreads=2\nct_max_size = 9 # bigger\n");
  const Config cfg = parse_config(in);
  CHECK(cfg.enumeration.cap == 50);
  CHECK(cfg.enumeration.threads == 2);
  CHECK(cfg.ct.max_size == 9);
  std::istringstream unknown("colour = 3\n");
  CHECK_THROWS_AS(parse_config(unknown), std::invalid_argument);
  std::istringstream bad("threads = two\n");
  CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/schroder.cfg"), std::invalid_argument);
}

TEST_CASE("verify suites") {
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("everything"));
  CHECK_THROWS_AS(run_suite("everything"), std::invalid_argument);
  const auto r = run_suite("encoding");
  REQUIRE(r.size() == 1);
  CHECK(r[0].id == 9);
  CHECK(r[0].passed);
  Config tiny;
  tiny.enumeration.cap = 5;
  const auto capped = run_suite("oeis", tiny);
  CHECK_FALSE(capped[0].passed);
  CHECK(capped[0].detail.rfind("resource cap", 0) == 0);
}
