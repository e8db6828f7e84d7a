#ifndef LRSCATTER_SCATTERING_H_
#define LRSCATTER_SCATTERING_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrscatter/params.h"
#include "lrscatter/permutations.h"
#include "lrscatter/weights.h"

namespace lrscatter {

// Index tuple (x_1, ..., x_m) of the basis element e_{x_1} (x) ... (x) e_{x_m}.
class BasisTuple {
 public:
  BasisTuple() = default;
  // Throws std::invalid_argument on a negative entry.
  explicit BasisTuple(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_[k]; }
  // Sum of entries.
  int Energy() const;
  bool IsWeaklyIncreasing() const;

  friend BasisTuple Concat(const BasisTuple& a, const BasisTuple& b);
  friend auto operator<=>(const BasisTuple&, const BasisTuple&) = default;

 private:
  std::vector<int> entries_;
};

std::string ToString(const BasisTuple& t);

// Formal sum of basis tuples with nonnegative multiplicities.
class WeightedTupleSum {
 public:
  void Add(const BasisTuple& t, std::int64_t multiplicity = 1);
  void Add(const WeightedTupleSum& other, std::int64_t scale = 1);

  const std::map<BasisTuple, std::int64_t>& terms() const { return terms_; }
  std::int64_t Coefficient(const BasisTuple& t) const;
  std::int64_t Total() const;
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const WeightedTupleSum&,
                         const WeightedTupleSum&) = default;

 private:
  std::map<BasisTuple, std::int64_t> terms_;
};

// R(c): e_x (x) e_y -> e_{y+c} (x) e_{x-c} when c >= x - y and both results
// are nonnegative, else zero.
std::optional<std::pair<int, int>> ApplyR(int c, int x, int y);

// R_{i_1 j_1}(c) ... R_{i_l j_l}(c) applied to t along the reflection ordering
// of word; the last factor acts first. R_ij acts on tensor factors i and j, so
// the result is indexed by pseudo-line.
std::optional<BasisTuple> ApplyWord(const ReducedWord& word,
                                    const ParamCollection& c,
                                    const BasisTuple& t);

// Reorders a result indexed by pseudo-line to the lower ends of the wiring
// diagram: line i ends at position w(i).
BasisTuple ToLowerEnds(const Permutation& w, const BasisTuple& by_line);

// One term of e_A * e_B: the parameters used and the resulting tuple, read
// at the lower ends of the w(m, n) wiring diagram.
struct StarTerm {
  ParamCollection params;
  BasisTuple result;
};

// Visits every nonvanishing term of e_A * e_B: collections C on the pairs
// i <= m < j with c_ij >= 0 and c_ij >= c_kl whenever k <= i < j <= l.
void ForEachStarTerm(const BasisTuple& a, const BasisTuple& b,
                     const std::function<void(const StarTerm&)>& visit);

WeightedTupleSum StarProduct(const BasisTuple& a, const BasisTuple& b);

// e_x * e_t for weakly increasing t via the interlacing rule
// 0 <= y_1 <= t_1 <= y_2 <= ... <= t_m <= y_{m+1}, sum(y) = sum(t) + x.
WeightedTupleSum PieriProduct(int x, const BasisTuple& t);

// p_N: a weakly increasing tuple with entries <= N goes to the sum of the
// fundamental weights omega_{x_i} (omega_0 = 0); anything else to zero.
std::optional<DominantWeight> ProjectPn(const BasisTuple& t, int rank);

// Conjugate parts of lambda in increasing order, zeros dropped.
BasisTuple ColumnTuple(const DominantWeight& lambda);

// Collections C whose term in e_x * e_y is e_z, where x, y, z are the column
// tuples of lambda, mu, nu (z padded with leading zeros). All weights must
// share the same rank.
std::vector<ParamCollection> LrCollections(const DominantWeight& lambda,
                                           const DominantWeight& mu,
                                           const DominantWeight& nu);

std::int64_t LrCoefficient(const DominantWeight& lambda,
                           const DominantWeight& mu, const DominantWeight& nu);

// Nonzero c_{lambda mu}^nu for every nu of rank N.
std::map<DominantWeight, std::int64_t> LrExpansion(const DominantWeight& lambda,
                                                   const DominantWeight& mu);

}  // namespace lrscatter

#endif  // LRSCATTER_SCATTERING_H_
