#ifndef LRSCATTER_WEB_H_
#define LRSCATTER_WEB_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrscatter/params.h"
#include "lrscatter/scattering.h"
#include "lrscatter/weights.h"

namespace lrscatter {

// A point (alpha, beta, gamma) with alpha + beta + gamma = 0 and half-integer
// coordinates, stored doubled so everything stays integral.
struct BaricentricPoint {
  int a2 = 0;
  int b2 = 0;
  int c2 = 0;

  static BaricentricPoint Integer(int a, int b, int c);
  static BaricentricPoint Doubled(int a2, int b2, int c2);

  bool IsInteger() const { return a2 % 2 == 0 && b2 % 2 == 0; }
  friend auto operator<=>(const BaricentricPoint&,
                          const BaricentricPoint&) = default;
};

std::string ToString(const BaricentricPoint& p);

// Type 1 lines keep alpha fixed, type 2 beta, type 3 gamma.
enum class LineType { kAlpha = 1, kBeta = 2, kGamma = 3 };

// A segment or ray on a line of one type. Types 1 and 2 are parametrized by
// doubled gamma, type 3 by doubled beta; a missing end is infinite.
struct WebSegment {
  LineType type = LineType::kGamma;
  int constant2 = 0;
  std::optional<int> lo2;
  std::optional<int> hi2;
  int multiplicity = 1;

  bool Contains(const BaricentricPoint& p) const;
  friend auto operator<=>(const WebSegment&, const WebSegment&) = default;
};

// Left fork: rays NW along alpha, SW along beta, E along gamma.
// Right fork: rays NE along beta, W along gamma, SE along alpha.
enum class ForkKind { kLeft, kRight };

struct WebNode {
  BaricentricPoint point;
  ForkKind kind = ForkKind::kLeft;
  int multiplicity = 1;
  friend auto operator<=>(const WebNode&, const WebNode&) = default;
};

class WebDiagram {
 public:
  void AddSegment(WebSegment s);
  void AddNode(const BaricentricPoint& p, ForkKind kind, int multiplicity = 1);

  const std::vector<WebSegment>& segments() const { return segments_; }
  const std::vector<WebNode>& nodes() const { return nodes_; }
  bool empty() const { return segments_.empty() && nodes_.empty(); }
  bool IsIntegral() const;
  // Sum of multiplicities of the segments through p. Off the nodes this is
  // the web function; lattice points of L_BZ never hit integral nodes.
  int ValueAt(const BaricentricPoint& p) const;

  friend bool operator==(const WebDiagram&, const WebDiagram&) = default;

 private:
  std::vector<WebSegment> segments_;  // sorted, identical ones merged
  std::vector<WebNode> nodes_;        // sorted, identical ones merged
};

// The web diagram of the term of e_x * e_y selected by c (keyed by the pairs
// i <= m < j), or nullopt if that term vanishes. Left particle i comes in
// along (-x_i, *, *), right particle j along (*, y_j, *); their interaction
// is the segment on (*, *, c_{i, m+j}).
std::optional<WebDiagram> WebFromScattering(const BasisTuple& x,
                                            const BasisTuple& y,
                                            const ParamCollection& c);

// Lattice points of T_N = {alpha > -N, beta > 0, gamma > 0} whose
// coordinates are half-integers but not all integers.
std::vector<BaricentricPoint> BzPoints(int rank);

class BzPattern {
 public:
  explicit BzPattern(int rank);
  // Values in the order of BzPoints(rank).
  BzPattern(int rank, std::vector<int> values);

  int rank() const { return rank_; }
  const std::vector<BaricentricPoint>& points() const { return points_; }
  const std::vector<int>& values() const { return values_; }
  // Zero outside T_N.
  int At(const BaricentricPoint& p) const;
  void Set(const BaricentricPoint& p, int v);

  friend bool operator==(const BzPattern& a, const BzPattern& b) {
    return a.rank_ == b.rank_ && a.values_ == b.values_;
  }

 private:
  int rank_;
  std::vector<BaricentricPoint> points_;
  std::vector<int> values_;
};

// Throws std::invalid_argument on a non-integral diagram.
BzPattern RestrictToBz(const WebDiagram& web, int rank);

// The six points around the integer point (a, b, c), in the order
// A, B, C, D, E, F; the condition is f(A)+f(B) = f(D)+f(E),
// f(B)+f(C) = f(E)+f(F), f(C)+f(D) = f(F)+f(A).
std::vector<BaricentricPoint> HexagonAround(int a, int b, int c);
// Integer centers whose hexagon lies inside T_N.
std::vector<BaricentricPoint> HexagonCenters(int rank);
bool HexagonHolds(const BzPattern& f, const BaricentricPoint& center);
bool CheckHexagon(const BzPattern& f);

// Boundary values, each of length 2N - 2: lower row left to right, left side
// bottom to top, right side top to bottom.
struct BzBoundary {
  std::vector<int> lower;
  std::vector<int> left;
  std::vector<int> right;
};
BzBoundary Boundary(const BzPattern& f);

// Pair sums (v_1 + v_2, v_3 + v_4, ...) of a boundary side.
std::vector<int> PairSums(const std::vector<int>& side);

// Nonnegative integer patterns satisfying every hexagon condition with
// left pair sums = labels of lambda, right = labels of mu, lower = labels of
// nu (fundamental weights 1..N-1). Zero when |lambda| + |mu| != |nu|.
void ForEachBzPattern(const DominantWeight& lambda, const DominantWeight& mu,
                      const DominantWeight& nu,
                      const std::function<void(const BzPattern&)>& visit);
std::int64_t CountBzPatterns(const DominantWeight& lambda,
                             const DominantWeight& mu,
                             const DominantWeight& nu);

}  // namespace lrscatter

#endif  // LRSCATTER_WEB_H_
