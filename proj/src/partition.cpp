#include "schroder/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schroder {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out), std::greater<>());
  Partition p;
  p.parts_ = std::move(out);
  p.weight_ = weight_ + other.weight_;
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // reverse lexicographic: the lexicographically larger partition sorts first
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

MultiplicityPartition::MultiplicityPartition(std::vector<int> mult) : mult_(std::move(mult)) {
  for (int p : mult_)
    if (p < 1) throw std::invalid_argument("multiplicities must be positive");
}

int MultiplicityPartition::weight() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of: negative degree");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(d, d, prefix, out);
  return out;
}

Integer z_of(const Partition& nu) {
  Integer z = 1;
  auto parts = nu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const long copies = static_cast<long>(j - i);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(copies));
    z *= pw * factorial(copies);
    i = j;
  }
  return z;
}

MultiplicityPartition multiplicity_partition(const Partition& nu) {
  std::vector<int> mult;
  auto parts = nu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    mult.push_back(static_cast<int>(j - i));
    i = j;
  }
  return MultiplicityPartition(std::move(mult));
}

Integer multinomial(long n, std::span<const int> mu) {
  if (n < 0) throw std::invalid_argument("multinomial: negative n");
  long d = 0;
  for (int p : mu) d += p;
  if (d > n) return 0;
  Integer out = factorial(n) / factorial(n - d);
  for (int p : mu) out /= factorial(p);
  return out;
}

}  // namespace schroder
