#ifndef LRSCATTER_WEIGHTS_H_
#define LRSCATTER_WEIGHTS_H_

#include <compare>
#include <string>
#include <vector>

namespace lrscatter {

// A partition with trailing zeros stripped. Parts are nonincreasing and
// positive.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument on negative or increasing parts. Trailing
  // zeros are dropped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // Part i counted from 1; zero past the end.
  int part(int i) const;
  Partition Conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// A dominant integral weight of GL(N), stored as a nonincreasing
// nonnegative sequence of exactly N parts.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> parts);
  // Pads with zeros up to rank N. Throws if the partition has more rows.
  static DominantWeight FromPartition(const Partition& p, int rank);

  const std::vector<int>& parts() const { return parts_; }
  int rank() const { return static_cast<int>(parts_.size()); }
  int size() const;
  Partition ToPartition() const { return Partition(parts_); }
  // Coefficient of the k-th fundamental weight, k = 1..N-1 (the N-th is the
  // last part).
  int Label(int k) const;

  friend auto operator<=>(const DominantWeight&, const DominantWeight&) =
      default;

 private:
  std::vector<int> parts_;
};

// All partitions of n with at most max_rows rows (max_rows < 0: no limit),
// in decreasing lexicographic order.
std::vector<Partition> PartitionsOf(int n, int max_rows = -1);

std::string ToString(const Partition& p);
std::string ToString(const DominantWeight& w);

}  // namespace lrscatter

#endif  // LRSCATTER_WEIGHTS_H_
