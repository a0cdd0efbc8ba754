#ifndef SCHRODER_PARTITION_HPP
#define SCHRODER_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "schroder/numeric.hpp"

namespace schroder {

/// Weakly decreasing sequence of positive integers.
///
/// Ordering is graded: smaller weight first, then reverse lexicographic
/// within a weight, so that partitions of 3 sort as (3), (2,1), (1,1,1).
/// Every partition-keyed map in the library uses this order.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts first; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;
  Partition conjugate() const;
  /// Multiset union of parts, i.e. the index of a product of multiplicative basis elements.
  Partition merged(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Partition sorted() const { return Partition::from_unsorted(parts_); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Multiplicities of the distinct part values of a partition, listed in the
/// order the values appear (largest value first): (2,1,1) -> (1,2).
class MultiplicityPartition {
 public:
  explicit MultiplicityPartition(std::vector<int> mult);
  std::span<const int> parts() const { return mult_; }
  int weight() const;

  friend bool operator==(const MultiplicityPartition&, const MultiplicityPartition&) = default;

 private:
  std::vector<int> mult_;
};

/// All partitions of d in the canonical order (reverse lexicographic).
std::vector<Partition> partitions_of(int d);

/// 1^{d_1} d_1! 2^{d_2} d_2! ... with d_i the number of parts equal to i.
Integer z_of(const Partition& nu);

MultiplicityPartition multiplicity_partition(const Partition& nu);

/// n! / ((n-d)! mu_1! ... mu_k!) where d = |mu|; zero when d > n.
Integer multinomial(long n, std::span<const int> mu);
inline Integer multinomial(long n, const Composition& mu) { return multinomial(n, mu.parts()); }
inline Integer multinomial(long n, const MultiplicityPartition& mu) {
  return multinomial(n, mu.parts());
}

}  // namespace schroder

#endif  // SCHRODER_PARTITION_HPP
