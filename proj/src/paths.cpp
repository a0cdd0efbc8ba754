#include "schroder/paths.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace schroder {

namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

long row_bound(int i, int m, int n) { return floor_div(static_cast<long>(i) * m, n); }

void check_dimensions(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("path dimensions must be positive");
}

}  // namespace

bool is_well_formed(const LatticePath& p) {
  long x = 0, y = 0;
  for (Step s : p.steps) {
    if (s != Step::up) ++x;
    if (s != Step::right) ++y;
  }
  return x == p.m && y == p.n;
}

std::vector<Point> visited_points(const LatticePath& p) {
  std::vector<Point> out{{0, 0}};
  Point cur;
  for (Step s : p.steps) {
    if (s != Step::up) ++cur.x;
    if (s != Step::right) ++cur.y;
    out.push_back(cur);
  }
  return out;
}

bool is_valid_geometric(const LatticePath& p) {
  if (!is_well_formed(p)) return false;
  for (const Point& pt : visited_points(p))
    if (offset(pt.x, pt.y, p.m, p.n) < 0) return false;
  return true;
}

SchroderWord encode(const LatticePath& p) {
  if (!is_well_formed(p)) throw std::invalid_argument("encode: steps do not end at (m,n)");
  SchroderWord w{p.m, p.n, {}};
  w.parts.reserve(p.n);
  int x = 0;
  for (Step s : p.steps) {
    switch (s) {
      case Step::right: ++x; break;
      case Step::up: w.parts.push_back({x, false}); break;
      case Step::diag: w.parts.push_back({x, true}); ++x; break;
    }
  }
  return w;
}

LatticePath decode_unchecked(const SchroderWord& w) {
  check_dimensions(w.m, w.n);
  if (static_cast<int>(w.parts.size()) != w.n)
    throw std::invalid_argument("decode: word length must equal n");
  LatticePath p{w.m, w.n, {}};
  int x = 0;
  for (const Part& part : w.parts) {
    if (part.value < x) throw std::invalid_argument("decode: parts move left");
    for (; x < part.value; ++x) p.steps.push_back(Step::right);
    if (part.barred) {
      p.steps.push_back(Step::diag);
      ++x;
    } else {
      p.steps.push_back(Step::up);
    }
  }
  if (x > w.m) throw std::invalid_argument("decode: word overshoots m");
  for (; x < w.m; ++x) p.steps.push_back(Step::right);
  return p;
}

LatticePath decode(const SchroderWord& w) {
  if (!is_valid_word(w)) throw std::invalid_argument("decode: invalid word " + to_string(w));
  return decode_unchecked(w);
}

bool is_valid_word(const SchroderWord& w) {
  if (w.m < 1 || w.n < 1 || static_cast<int>(w.parts.size()) != w.n) return false;
  for (int i = 0; i < w.n; ++i) {
    const Part& a = w.parts[i];
    if (a.value < 0) return false;
    if (a.value > row_bound(i, w.m, w.n)) return false;  // (3)
    if (i + 1 < w.n) {
      const Part& b = w.parts[i + 1];
      if (b < a) return false;                    // (1)
      if (a.barred && !(a < b)) return false;     // (2)
    }
  }
  return true;
}

int diag_count(const SchroderWord& w) {
  return static_cast<int>(std::count_if(w.parts.begin(), w.parts.end(),
                                        [](const Part& a) { return a.barred; }));
}

int diag_count(const LatticePath& p) {
  return static_cast<int>(std::count(p.steps.begin(), p.steps.end(), Step::diag));
}

int area_row(const SchroderWord& w, int i) {
  if (i < 0 || i >= static_cast<int>(w.parts.size())) throw std::out_of_range("area_row: row index");
  return static_cast<int>(row_bound(i, w.m, w.n)) - w.parts[i].value;
}

int area(const SchroderWord& w) {
  int total = 0;
  for (int i = 0; i < static_cast<int>(w.parts.size()); ++i) total += area_row(w, i);
  return total;
}

Composition gamma(const SchroderWord& w) {
  std::vector<int> out;
  int current = -1;
  for (const Part& a : w.parts) {
    if (a.barred) continue;
    if (a.value == current) {
      ++out.back();
    } else {
      out.push_back(1);
      current = a.value;
    }
  }
  return Composition(std::move(out));
}

Composition risers(const LatticePath& p) {
  std::vector<int> out;
  int run = 0;
  for (Step s : p.steps) {
    if (s == Step::up) {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run > 0) out.push_back(run);
  return Composition(std::move(out));
}

SymFunc weight(const SchroderWord& w) { return e_basis_element(gamma(w).sorted()); }

std::vector<Point> low_points(const LatticePath& p) {
  const auto pts = visited_points(p);
  long best = 0;
  bool first = true;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const long d = offset(pts[i].x, pts[i].y, p.m, p.n);
    if (first || d < best) best = d;
    first = false;
  }
  std::vector<Point> out;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (offset(pts[i].x, pts[i].y, p.m, p.n) == best) out.push_back(pts[i]);
  return out;
}

LatticePath rotate(const LatticePath& p, Point low_point) {
  const auto lows = low_points(p);
  if (std::find(lows.begin(), lows.end(), low_point) == lows.end())
    throw std::invalid_argument("rotate: cut position is not a low point");
  const auto pts = visited_points(p);
  const auto cut = static_cast<std::size_t>(std::find(pts.begin() + 1, pts.end(), low_point) - pts.begin());
  LatticePath out{p.m, p.n, {}};
  out.steps.insert(out.steps.end(), p.steps.begin() + static_cast<long>(cut), p.steps.end());
  out.steps.insert(out.steps.end(), p.steps.begin(), p.steps.begin() + static_cast<long>(cut));
  return out;
}

namespace {

struct WordEnumerator {
  int m, n;
  std::optional<int> diagonals;
  const WordVisitor& visit;
  Shard shard;
  int split_depth;
  std::uint64_t subtree = 0;
  std::uint64_t visited = 0;
  SchroderWord word;

  void run(int row, int used_diagonals) {
    if (row == split_depth) {
      const bool mine = static_cast<int>(subtree++ % static_cast<std::uint64_t>(shard.count)) == shard.index;
      if (!mine) return;
    }
    if (row == n) {
      if (!diagonals || used_diagonals == *diagonals) {
        ++visited;
        visit(word);
      }
      return;
    }
    const int remaining = n - row;
    int min_value = 0;
    if (row > 0) {
      const Part& prev = word.parts[row - 1];
      min_value = prev.barred ? prev.value + 1 : prev.value;
    }
    const auto bound = static_cast<int>(row_bound(row, m, n));
    for (int v = min_value; v <= bound; ++v) {
      for (bool barred : {false, true}) {
        const int d = used_diagonals + (barred ? 1 : 0);
        if (diagonals && (d > *diagonals || d + remaining - 1 < *diagonals)) continue;
        word.parts.push_back({v, barred});
        run(row + 1, d);
        word.parts.pop_back();
      }
    }
  }
};

}  // namespace

std::uint64_t for_each_schroder_word(int m, int n, std::optional<int> diagonals,
                                     const WordVisitor& visit, Shard shard) {
  check_dimensions(m, n);
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count)
    throw std::invalid_argument("invalid shard");
  WordEnumerator e{m, n, diagonals, visit, shard, shard.count == 1 ? -1 : std::min(n, 3), 0, 0, SchroderWord{m, n, {}}};
  e.word.parts.reserve(n);
  e.run(0, 0);
  return e.visited;
}

std::vector<SchroderWord> enumerate_schroder(int m, int n, std::optional<int> diagonals) {
  std::vector<SchroderWord> out;
  for_each_schroder_word(m, n, diagonals, [&](const SchroderWord& w) { out.push_back(w); });
  return out;
}

namespace {

void steps_rec(LatticePath& p, int x, int y, int diagonals_left, bool restrict_diagonals,
               const std::function<bool(const LatticePath&)>& accept, const PathVisitor& visit,
               std::uint64_t& count) {
  if (x == p.m && y == p.n) {
    if ((!restrict_diagonals || diagonals_left == 0) && accept(p)) {
      ++count;
      visit(p);
    }
    return;
  }
  if (y < p.n) {
    p.steps.push_back(Step::up);
    steps_rec(p, x, y + 1, diagonals_left, restrict_diagonals, accept, visit, count);
    p.steps.pop_back();
  }
  if (x < p.m && y < p.n && (!restrict_diagonals || diagonals_left > 0)) {
    p.steps.push_back(Step::diag);
    steps_rec(p, x + 1, y + 1, diagonals_left - 1, restrict_diagonals, accept, visit, count);
    p.steps.pop_back();
  }
  if (x < p.m) {
    p.steps.push_back(Step::right);
    steps_rec(p, x + 1, y, diagonals_left, restrict_diagonals, accept, visit, count);
    p.steps.pop_back();
  }
}

}  // namespace

std::uint64_t for_each_b_path(int m, int n, int diagonals, const PathVisitor& visit) {
  check_dimensions(m, n);
  LatticePath p{m, n, {}};
  std::uint64_t count = 0;
  auto ends_flat = [](const LatticePath& path) {
    return !path.steps.empty() && path.steps.back() != Step::up;
  };
  steps_rec(p, 0, 0, diagonals, true, ends_flat, visit, count);
  return count;
}

std::vector<LatticePath> enumerate_b(int m, int n, int diagonals) {
  std::vector<LatticePath> out;
  for_each_b_path(m, n, diagonals, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

std::uint64_t for_each_step_sequence(int m, int n, const PathVisitor& visit) {
  check_dimensions(m, n);
  LatticePath p{m, n, {}};
  std::uint64_t count = 0;
  steps_rec(p, 0, 0, 0, false, [](const LatticePath&) { return true; }, visit, count);
  return count;
}

std::string to_string(const SchroderWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    if (i) os << '.';
    os << w.parts[i].value;
    if (w.parts[i].barred) os << '~';
  }
  return os.str();
}

std::string to_string(const LatticePath& p) {
  std::string out;
  for (Step s : p.steps) out.push_back(static_cast<char>(s));
  return out;
}

SchroderWord parse_word(int m, int n, std::string_view text) {
  SchroderWord w{m, n, {}};
  while (!text.empty()) {
    const auto dot = text.find('.');
    std::string_view token = text.substr(0, dot);
    text = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    Part part;
    if (!token.empty() && token.back() == '~') {
      part.barred = true;
      token.remove_suffix(1);
    }
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), part.value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw std::invalid_argument("parse_word: malformed part '" + std::string(token) + "'");
    w.parts.push_back(part);
  }
  return w;
}

}  // namespace schroder
