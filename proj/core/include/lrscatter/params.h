#ifndef LRSCATTER_PARAMS_H_
#define LRSCATTER_PARAMS_H_

#include <span>
#include <string>
#include <vector>

#include "lrscatter/permutations.h"

namespace lrscatter {

// Integer parameters c_ij keyed by a fixed sorted set of pairs i < j.
// Reads through At() follow c_ii = 0 and c_ji = -c_ij.
class ParamCollection {
 public:
  ParamCollection() = default;
  // All values zero. Keys must be distinct pairs 1 <= i < j <= rank.
  ParamCollection(std::vector<Inversion> keys, int rank);
  ParamCollection(std::vector<Inversion> keys, std::vector<int> values,
                  int rank);
  // Keyed by the inversion set of w.
  static ParamCollection ForPermutation(const Permutation& w);

  int rank() const { return rank_; }
  const std::vector<Inversion>& keys() const { return keys_; }
  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return keys_.size(); }

  bool Has(int i, int j) const;
  // Signed read. Throws std::out_of_range for a pair not in the key set.
  int At(int i, int j) const;
  int operator[](const Inversion& p) const { return At(p.i, p.j); }
  // Requires i < j.
  void Set(int i, int j, int value);

  friend bool operator==(const ParamCollection& a, const ParamCollection& b) {
    return a.rank_ == b.rank_ && a.keys_ == b.keys_ && a.values_ == b.values_;
  }
  friend bool operator<(const ParamCollection& a, const ParamCollection& b) {
    return a.values_ < b.values_;
  }

 private:
  int Index(int i, int j) const;

  int rank_ = 0;
  std::vector<Inversion> keys_;
  std::vector<int> values_;
  // index_[(i-1) * rank + (j-1)] is the slot of (i, j), or -1.
  std::vector<int> index_;
};

std::string ToString(const ParamCollection& c);

}  // namespace lrscatter

#endif  // LRSCATTER_PARAMS_H_
