#ifndef SCHRODER_PATHS_HPP
#define SCHRODER_PATHS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schroder/partition.hpp"
#include "schroder/symfunc.hpp"

namespace schroder {

enum class Step : char { up = 'u', diag = 'd', right = 'r' };

struct Point {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Step sequence from (0,0) to (m,n); nothing is assumed about the diagonal.
struct LatticePath {
  int m = 0;
  int n = 0;
  std::vector<Step> steps;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// One entry of a barred word: the number of cells left of the up (or
/// diagonal, when barred) step of a row.
struct Part {
  int value = 0;
  bool barred = false;

  /// Position in the order 0 < 0~ < 1 < 1~ < ...
  int rank() const { return 2 * value + (barred ? 1 : 0); }
  friend bool operator==(const Part&, const Part&) = default;
  friend auto operator<=>(const Part& a, const Part& b) { return a.rank() <=> b.rank(); }
};

/// Barred-word encoding of an (m,n) path: parts[i] describes the row from
/// height i to i+1, counted from the bottom.
struct SchroderWord {
  int m = 0;
  int n = 0;
  std::vector<Part> parts;

  friend bool operator==(const SchroderWord&, const SchroderWord&) = default;
};

/// m*v - n*u; zero on the diagonal, positive above it.
inline long offset(long u, long v, int m, int n) { return static_cast<long>(m) * v - static_cast<long>(n) * u; }

/// Steps add up to (m,n).
bool is_well_formed(const LatticePath& p);
std::vector<Point> visited_points(const LatticePath& p);
bool is_valid_geometric(const LatticePath& p);

/// Works for any well-formed path, valid or not.
SchroderWord encode(const LatticePath& p);
/// Throws std::invalid_argument for words that are not valid Schroder words.
LatticePath decode(const SchroderWord& w);
/// Inverse of encode without the diagonal checks; only the length and the
/// ordering needed to draw a path are enforced.
LatticePath decode_unchecked(const SchroderWord& w);

bool is_valid_word(const SchroderWord& w);

int diag_count(const SchroderWord& w);
int diag_count(const LatticePath& p);
int area_row(const SchroderWord& w, int i);
int area(const SchroderWord& w);

/// Riser lengths read in increasing column order.
Composition gamma(const SchroderWord& w);
Composition risers(const LatticePath& p);
/// e_{gamma(w)} in the e basis.
SymFunc weight(const SchroderWord& w);

/// Visited points other than the origin whose offset is minimal.
std::vector<Point> low_points(const LatticePath& p);

/// Cuts p at a low point and swaps the two pieces. Throws
/// std::invalid_argument if the point is not a low point of p.
LatticePath rotate(const LatticePath& p, Point low_point);

using WordVisitor = std::function<void(const SchroderWord&)>;
using PathVisitor = std::function<void(const LatticePath&)>;

/// Sharding of an enumeration: subtree j at the split depth is visited by
/// shard j mod count.
struct Shard {
  int index = 0;
  int count = 1;
};

/// Visits every (m,n) Schroder word once, in lexicographic order of the
/// part ranks; restricted to words with exactly *diagonals barred parts when
/// given. Returns the number of words visited.
std::uint64_t for_each_schroder_word(int m, int n, std::optional<int> diagonals,
                                     const WordVisitor& visit, Shard shard = {});
std::vector<SchroderWord> enumerate_schroder(int m, int n, std::optional<int> diagonals = {});

/// Paths from (0,0) to (m,n) with `diagonals` diagonal steps ending in a
/// diagonal or right step, with no constraint relative to the diagonal.
std::uint64_t for_each_b_path(int m, int n, int diagonals, const PathVisitor& visit);
std::vector<LatticePath> enumerate_b(int m, int n, int diagonals);

/// Every well-formed step sequence from (0,0) to (m,n).
std::uint64_t for_each_step_sequence(int m, int n, const PathVisitor& visit);

/// "0.0.0.0~.2.2.2~.3~.7"
std::string to_string(const SchroderWord& w);
std::string to_string(const LatticePath& p);
SchroderWord parse_word(int m, int n, std::string_view text);

}  // namespace schroder

#endif  // SCHRODER_PATHS_HPP
