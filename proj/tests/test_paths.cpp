#include <doctest.h>

#include <set>

#include "schroder/paths.hpp"

using namespace schroder;

namespace {

LatticePath path(int m, int n, std::string_view steps) {
  LatticePath p{m, n, {}};
  for (char c : steps) p.steps.push_back(static_cast<Step>(c));
  return p;
}

// Lowest-offset test straight from the inequality, for comparison with low_points.
long min_offset(const LatticePath& p) {
  long best = LONG_MAX;
  for (const Point& pt : visited_points(p))
    if (pt != Point{0, 0}) best = std::min(best, offset(pt.x, pt.y, p.m, p.n));
  return best;
}

const char* kExampleWord = "0.0.0.0~.2.2.2~.3~.7";
const char* kExampleSteps = "uuudruuddrrrurrrrr";
const char* kExampleBPath = "rrduurrrddurdurur";

}  // namespace

TEST_CASE("geometric validity") {
  CHECK(is_valid_geometric(path(2, 2, "uurr")));
  CHECK_FALSE(is_valid_geometric(path(2, 2, "ruur")));
  CHECK(is_valid_geometric(path(12, 9, kExampleSteps)));
  CHECK_FALSE(is_well_formed(path(2, 2, "uur")));
}

TEST_CASE("offset") {
  CHECK(offset(0, 0, 12, 9) == 0);
  CHECK(offset(12, 9, 12, 9) == 0);
  CHECK(offset(1, 0, 12, 9) == -9);
}

TEST_CASE("encoding examples") {
  const SchroderWord fig = parse_word(12, 9, kExampleWord);
  CHECK(encode(path(12, 9, kExampleSteps)) == fig);
  CHECK(decode(fig) == path(12, 9, kExampleSteps));
  CHECK(to_string(fig) == kExampleWord);
  CHECK(encode(path(1, 1, "ur")) == SchroderWord{1, 1, {{0, false}}});
  CHECK(encode(path(1, 1, "d")) == SchroderWord{1, 1, {{0, true}}});
  CHECK(to_string(path(1, 1, "d")) == "d");
}

TEST_CASE("word validity") {
  CHECK(is_valid_word(parse_word(12, 9, kExampleWord)));
  CHECK_FALSE(is_valid_word(SchroderWord{2, 2, {{0, true}, {0, false}}}));
  CHECK_FALSE(is_valid_word(SchroderWord{2, 2, {{0, false}, {2, false}}}));
  CHECK_FALSE(is_valid_word(SchroderWord{2, 2, {{0, false}}}));
  CHECK_THROWS_AS(decode(SchroderWord{2, 2, {{0, false}, {2, false}}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(2, 2, "0.x"), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_schroder(1, 1).size() == 2);
  CHECK(enumerate_schroder(1, 1, 0).size() == 1);
  CHECK(enumerate_schroder(1, 1, 1).size() == 1);
  CHECK(enumerate_schroder(3, 3, 2).size() == 6);
  CHECK(enumerate_schroder(2, 2).size() == 6);
  CHECK(enumerate_schroder(2, 2, 0).size() == 2);
  CHECK(enumerate_schroder(2, 2, 1).size() == 3);
  CHECK(enumerate_schroder(2, 2, 2).size() == 1);
}

TEST_CASE("enumeration is sorted, duplicate free and matches the geometric definition") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const auto words = enumerate_schroder(m, n);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(seen.insert(to_string(words[i])).second);
        if (i > 0) CHECK(std::lexicographical_compare(words[i - 1].parts.begin(), words[i - 1].parts.end(),
                                                      words[i].parts.begin(), words[i].parts.end()));
      }
      std::set<std::string> geometric;
      for_each_step_sequence(m, n, [&](const LatticePath& p) {
        if (is_valid_geometric(p)) geometric.insert(to_string(encode(p)));
      });
      CHECK(seen == geometric);
    }
}

TEST_CASE("sharded enumeration covers every word once") {
  std::multiset<std::string> all;
  for (int s = 0; s < 3; ++s)
    for_each_schroder_word(4, 5, std::nullopt, [&](const SchroderWord& w) { all.insert(to_string(w)); },
                           Shard{s, 3});
  std::multiset<std::string> serial;
  for (const auto& w : enumerate_schroder(4, 5)) serial.insert(to_string(w));
  CHECK(all == serial);
}

TEST_CASE("area") {
  const SchroderWord fig = parse_word(12, 9, kExampleWord);
  const int rows[] = {0, 1, 2, 4, 3, 4, 6, 6, 3};
  for (int i = 0; i < 9; ++i) CHECK(area_row(fig, i) == rows[i]);
  CHECK(area(fig) == 29);
  SchroderWord hugging{12, 9, {}};
  for (int i = 0; i < 9; ++i) hugging.parts.push_back({i * 12 / 9, false});
  CHECK(area(hugging) == 0);
  for (int n = 1; n <= 6; ++n) CHECK(area(SchroderWord{n, n, std::vector<Part>(n, Part{0, false})}) == n * (n - 1) / 2);
}

TEST_CASE("area does not depend on bars") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : enumerate_schroder(m, n)) {
        SchroderWord plain = w;
        for (auto& p : plain.parts) p.barred = false;
        if (!is_valid_word(plain)) continue;
        for (int i = 0; i < n; ++i) CHECK(area_row(plain, i) == area_row(w, i));
      }
}

TEST_CASE("risers") {
  CHECK(gamma(parse_word(12, 9, "0.0~.1.1.1~.2.4.4.4~")) == Composition{1, 2, 1, 2});
  CHECK(gamma(SchroderWord{4, 4, std::vector<Part>(4, Part{0, false})}) == Composition{4});
  CHECK(weight(SchroderWord{4, 4, std::vector<Part>(4, Part{0, false})}) == e_basis_element({4}));
  const SchroderWord fig3 = parse_word(12, 9, "0.0.0.0~.1.1~.2.2.3");
  CHECK(gamma(fig3) == Composition{3, 1, 2, 1});
  CHECK(weight(fig3) == e_basis_element({3, 2, 1, 1}));
  for (const auto& w : enumerate_schroder(4, 4)) CHECK(risers(decode(w)) == gamma(w));
}

TEST_CASE("low points") {
  for (const auto& w : enumerate_schroder(2, 3)) {
    const auto lows = low_points(decode(w));
    REQUIRE(lows.size() == 1);
    CHECK(lows[0] == Point{2, 3});
  }
  const LatticePath b = path(12, 9, kExampleBPath);
  CHECK(is_well_formed(b));
  CHECK(low_points(b).size() == 2);
  std::string hook(5, 'u');
  hook += std::string(3, 'r');
  CHECK(low_points(path(3, 5, hook)) == std::vector<Point>{{3, 5}});
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_b(m, n, 1))
        for (const Point& lp : low_points(p)) CHECK(offset(lp.x, lp.y, m, n) == min_offset(p));
}

TEST_CASE("B-paths and rotation") {
  CHECK(enumerate_b(1, 1, 0).size() + enumerate_b(1, 1, 1).size() == 2);
  for (const auto& p : enumerate_b(3, 2, 1)) {
    const auto last = p.steps.back();
    CHECK((last == Step::diag || last == Step::right));
    const auto lows = low_points(p);
    if (std::find(lows.begin(), lows.end(), Point{3, 2}) != lows.end()) CHECK(rotate(p, Point{3, 2}) == p);
  }
  const LatticePath b = path(12, 9, kExampleBPath);
  const auto lows = low_points(b);
  for (const Point& lp : lows) {
    const LatticePath r = rotate(b, lp);
    CHECK(low_points(r).size() == lows.size());
    CHECK(diag_count(r) == diag_count(b));
    CHECK(risers(r).sorted() == risers(b).sorted());
  }
  CHECK_THROWS_AS(rotate(b, Point{1, 0}), std::invalid_argument);
}
