#include "lrscatter/web.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace lrscatter {

BaricentricPoint BaricentricPoint::Integer(int a, int b, int c) {
  return Doubled(2 * a, 2 * b, 2 * c);
}

BaricentricPoint BaricentricPoint::Doubled(int a2, int b2, int c2) {
  if (a2 + b2 + c2 != 0) {
    throw std::invalid_argument("baricentric coordinates must sum to zero");
  }
  return {a2, b2, c2};
}

std::string ToString(const BaricentricPoint& p) {
  auto half = [](int v2) {
    if (v2 % 2 == 0) return std::to_string(v2 / 2);
    return std::to_string(v2) + "/2";
  };
  return "(" + half(p.a2) + "," + half(p.b2) + "," + half(p.c2) + ")";
}

bool WebSegment::Contains(const BaricentricPoint& p) const {
  int fixed = 0, param = 0;
  switch (type) {
    case LineType::kAlpha:
      fixed = p.a2;
      param = p.c2;
      break;
    case LineType::kBeta:
      fixed = p.b2;
      param = p.c2;
      break;
    case LineType::kGamma:
      fixed = p.c2;
      param = p.b2;
      break;
  }
  if (fixed != constant2) return false;
  if (lo2 && param < *lo2) return false;
  if (hi2 && param > *hi2) return false;
  return true;
}

namespace {

auto SegmentKey(const WebSegment& s) {
  return std::make_tuple(s.type, s.constant2, s.lo2, s.hi2);
}

auto NodeKey(const WebNode& n) { return std::make_tuple(n.point, n.kind); }

}  // namespace

void WebDiagram::AddSegment(WebSegment s) {
  auto it = std::lower_bound(
      segments_.begin(), segments_.end(), s,
      [](const WebSegment& a, const WebSegment& b) {
        return SegmentKey(a) < SegmentKey(b);
      });
  if (it != segments_.end() && SegmentKey(*it) == SegmentKey(s)) {
    it->multiplicity += s.multiplicity;
  } else {
    segments_.insert(it, s);
  }
}

void WebDiagram::AddNode(const BaricentricPoint& p, ForkKind kind,
                         int multiplicity) {
  WebNode n{p, kind, multiplicity};
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n,
                             [](const WebNode& a, const WebNode& b) {
                               return NodeKey(a) < NodeKey(b);
                             });
  if (it != nodes_.end() && NodeKey(*it) == NodeKey(n)) {
    it->multiplicity += multiplicity;
  } else {
    nodes_.insert(it, n);
  }
}

bool WebDiagram::IsIntegral() const {
  for (const auto& n : nodes_) {
    if (!n.point.IsInteger()) return false;
  }
  for (const auto& s : segments_) {
    if (s.constant2 % 2 != 0) return false;
    if (s.lo2 && *s.lo2 % 2 != 0) return false;
    if (s.hi2 && *s.hi2 % 2 != 0) return false;
  }
  return true;
}

int WebDiagram::ValueAt(const BaricentricPoint& p) const {
  int v = 0;
  for (const auto& s : segments_) {
    if (s.Contains(p)) v += s.multiplicity;
  }
  return v;
}

std::optional<WebDiagram> WebFromScattering(const BasisTuple& x,
                                            const BasisTuple& y,
                                            const ParamCollection& c) {
  const int m = x.size();
  const int n = y.size();
  const ReducedWord word = WmnWord(m, n);
  const auto ord = ReflectionOrdering(word);
  if (c.rank() != m + n || c.keys() != InversionSet(Evaluate(word))) {
    throw std::invalid_argument("parameters must be keyed by the pairs "
                                "i <= m < j");
  }
  std::vector<int> energy = Concat(x, y).entries();
  // Doubled gamma of the last node on each particle's trajectory.
  std::vector<std::optional<int>> last(m + n);
  WebDiagram web;
  for (std::size_t r = ord.size(); r-- > 0;) {
    const auto [i, j] = ord[r];
    const int cij = c.At(i, j);
    const int xe = energy[i - 1];
    const int ye = energy[j - 1];
    auto out = ApplyR(cij, xe, ye);
    if (!out) return std::nullopt;
    web.AddSegment({LineType::kAlpha, -2 * xe, 2 * cij, last[i - 1], 1});
    web.AddSegment({LineType::kBeta, 2 * ye, 2 * cij, last[j - 1], 1});
    web.AddSegment({LineType::kGamma, 2 * cij, 2 * (xe - cij), 2 * ye, 1});
    web.AddNode(BaricentricPoint::Integer(-xe, xe - cij, cij), ForkKind::kLeft);
    web.AddNode(BaricentricPoint::Integer(-ye - cij, ye, cij),
                ForkKind::kRight);
    energy[i - 1] = out->first;
    energy[j - 1] = out->second;
    last[i - 1] = 2 * cij;
    last[j - 1] = 2 * cij;
  }
  for (int s = 0; s < m + n; ++s) {
    if (s < m) {
      web.AddSegment({LineType::kAlpha, -2 * energy[s], std::nullopt, last[s],
                      1});
    } else {
      web.AddSegment({LineType::kBeta, 2 * energy[s], std::nullopt, last[s],
                      1});
    }
  }
  return web;
}

std::vector<BaricentricPoint> BzPoints(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<BaricentricPoint> out;
  for (int g = 1; g <= 2 * rank - 2; ++g)
    for (int b = 1; b + g <= 2 * rank - 1; ++b) {
      int a = -b - g;
      if (a % 2 == 0 && b % 2 == 0 && g % 2 == 0) continue;
      out.push_back({a, b, g});
    }
  return out;
}

BzPattern::BzPattern(int rank)
    : rank_(rank), points_(BzPoints(rank)), values_(points_.size(), 0) {}

BzPattern::BzPattern(int rank, std::vector<int> values)
    : rank_(rank), points_(BzPoints(rank)), values_(std::move(values)) {
  if (values_.size() != points_.size()) {
    throw std::invalid_argument("T_" + std::to_string(rank) + " has " +
                                std::to_string(points_.size()) + " points, got " +
                                std::to_string(values_.size()) + " values");
  }
}

int BzPattern::At(const BaricentricPoint& p) const {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k] == p) return values_[k];
  }
  return 0;
}

void BzPattern::Set(const BaricentricPoint& p, int v) {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k] == p) {
      values_[k] = v;
      return;
    }
  }
  throw std::out_of_range("point " + ToString(p) + " is not in T_" +
                          std::to_string(rank_));
}

BzPattern RestrictToBz(const WebDiagram& web, int rank) {
  if (!web.IsIntegral()) {
    throw std::invalid_argument("web diagram is not integral");
  }
  BzPattern f(rank);
  for (const auto& p : f.points()) f.Set(p, web.ValueAt(p));
  return f;
}

std::vector<BaricentricPoint> HexagonAround(int a, int b, int c) {
  if (a + b + c != 0) throw std::invalid_argument("center must sum to zero");
  const int A = 2 * a, B = 2 * b, C = 2 * c;
  return {{A, B - 1, C + 1}, {A - 1, B, C + 1}, {A - 1, B + 1, C},
          {A, B + 1, C - 1}, {A + 1, B, C - 1}, {A + 1, B - 1, C}};
}

std::vector<BaricentricPoint> HexagonCenters(int rank) {
  std::vector<BaricentricPoint> out;
  for (int c = 1; c <= rank - 2; ++c)
    for (int b = 1; b + c <= rank - 1; ++b)
      out.push_back(BaricentricPoint::Integer(-b - c, b, c));
  return out;
}

bool HexagonHolds(const BzPattern& f, const BaricentricPoint& center) {
  auto h = HexagonAround(center.a2 / 2, center.b2 / 2, center.c2 / 2);
  int v[6];
  for (int k = 0; k < 6; ++k) v[k] = f.At(h[k]);
  return v[0] + v[1] == v[3] + v[4] && v[1] + v[2] == v[4] + v[5] &&
         v[2] + v[3] == v[5] + v[0];
}

bool CheckHexagon(const BzPattern& f) {
  for (const auto& c : HexagonCenters(f.rank())) {
    if (!HexagonHolds(f, c)) return false;
  }
  return true;
}

namespace {

struct BoundaryPoints {
  std::vector<BaricentricPoint> lower, left, right;
};

BoundaryPoints BoundaryOf(int rank) {
  BoundaryPoints bp;
  const int top = 2 * rank - 1;
  for (int i = 1; i <= 2 * rank - 2; ++i) {
    bp.lower.push_back({-i - 1, i, 1});
    bp.left.push_back({-1 - i, 1, i});
    bp.right.push_back({-top, i, top - i});
  }
  return bp;
}

}  // namespace

BzBoundary Boundary(const BzPattern& f) {
  BoundaryPoints bp = BoundaryOf(f.rank());
  BzBoundary out;
  for (const auto& p : bp.lower) out.lower.push_back(f.At(p));
  for (const auto& p : bp.left) out.left.push_back(f.At(p));
  for (const auto& p : bp.right) out.right.push_back(f.At(p));
  return out;
}

std::vector<int> PairSums(const std::vector<int>& side) {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < side.size(); k += 2) {
    out.push_back(side[k] + side[k + 1]);
  }
  return out;
}

namespace {

// Linear equality sum(coeff * value) == rhs over point indices.
struct Constraint {
  std::vector<std::pair<int, int>> terms;  // (index, coeff)
  int rhs = 0;
};

class BzSearch {
 public:
  BzSearch(int rank, const std::vector<int>& l, const std::vector<int>& m,
           const std::vector<int>& n)
      : rank_(rank), pattern_(rank) {
    const auto& pts = pattern_.points();
    for (std::size_t k = 0; k < pts.size(); ++k) index_[pts[k]] = k;
    values_.assign(pts.size(), 0);
    cap_.assign(pts.size(), std::numeric_limits<int>::max());
    rule_.assign(pts.size(), Rule{});
    checks_.assign(pts.size(), {});

    BoundaryPoints bp = BoundaryOf(rank);
    int total = 0;
    auto add_pairs = [&](const std::vector<BaricentricPoint>& side,
                         const std::vector<int>& sums) {
      for (std::size_t i = 0; i < sums.size(); ++i) {
        int p = index_.at(side[2 * i]);
        int q = index_.at(side[2 * i + 1]);
        cap_[p] = std::min(cap_[p], sums[i]);
        cap_[q] = std::min(cap_[q], sums[i]);
        AddConstraint({{{p, 1}, {q, 1}}, sums[i]});
        total += sums[i];
      }
    };
    add_pairs(bp.left, l);
    add_pairs(bp.right, m);
    add_pairs(bp.lower, n);

    for (const auto& center : HexagonCenters(rank)) {
      auto h = HexagonAround(center.a2 / 2, center.b2 / 2, center.c2 / 2);
      int id[6];
      for (int k = 0; k < 6; ++k) id[k] = index_.at(h[k]);
      enum { A, B, C, D, E, F };
      AddConstraint({{{id[A], 1}, {id[B], 1}, {id[D], -1}, {id[E], -1}}, 0});
      AddConstraint({{{id[B], 1}, {id[C], 1}, {id[E], -1}, {id[F], -1}}, 0});
      AddConstraint({{{id[C], 1}, {id[D], 1}, {id[F], -1}, {id[A], -1}}, 0});
      // Lower rows come first, so A and B follow from C, D, E, F.
      rule_[id[A]] = {true, {{id[C], 1}, {id[D], 1}, {id[F], -1}}};
      rule_[id[B]] = {true, {{id[E], 1}, {id[F], 1}, {id[C], -1}}};
      // B >= 0 bounds C by E + F.
      caps_from_[id[C]].push_back({id[E], id[F]});
    }
    for (auto& c : cap_) {
      if (c == std::numeric_limits<int>::max()) c = total;
    }
  }

  void Run(const std::function<void(const BzPattern&)>& visit) {
    visit_ = &visit;
    Step(0);
  }

 private:
  struct Rule {
    bool determined = false;
    std::vector<std::pair<int, int>> terms;
  };

  void AddConstraint(Constraint c) {
    int last = 0;
    for (const auto& [idx, coeff] : c.terms) last = std::max(last, idx);
    checks_[last].push_back(std::move(c));
  }

  bool ChecksPass(std::size_t k) const {
    for (const auto& c : checks_[k]) {
      int s = 0;
      for (const auto& [idx, coeff] : c.terms) s += coeff * values_[idx];
      if (s != c.rhs) return false;
    }
    return true;
  }

  void Step(std::size_t k) {
    if (k == values_.size()) {
      BzPattern f(rank_, values_);
      (*visit_)(f);
      return;
    }
    if (rule_[k].determined) {
      int v = 0;
      for (const auto& [idx, coeff] : rule_[k].terms) v += coeff * values_[idx];
      if (v < 0) return;
      values_[k] = v;
      if (ChecksPass(k)) Step(k + 1);
      return;
    }
    int hi = cap_[k];
    if (auto it = caps_from_.find(k); it != caps_from_.end()) {
      for (const auto& [e, f] : it->second) {
        if (e < static_cast<int>(k) && f < static_cast<int>(k)) {
          hi = std::min(hi, values_[e] + values_[f]);
        }
      }
    }
    for (int v = 0; v <= hi; ++v) {
      values_[k] = v;
      if (ChecksPass(k)) Step(k + 1);
    }
  }

  int rank_;
  BzPattern pattern_;
  std::map<BaricentricPoint, int> index_;
  std::vector<int> values_;
  std::vector<int> cap_;
  std::vector<Rule> rule_;
  std::map<int, std::vector<std::pair<int, int>>> caps_from_;
  std::vector<std::vector<Constraint>> checks_;
  const std::function<void(const BzPattern&)>* visit_ = nullptr;
};

std::vector<int> Labels(const DominantWeight& w) {
  std::vector<int> out;
  for (int k = 1; k < w.rank(); ++k) out.push_back(w.Label(k));
  return out;
}

}  // namespace

void ForEachBzPattern(const DominantWeight& lambda, const DominantWeight& mu,
                      const DominantWeight& nu,
                      const std::function<void(const BzPattern&)>& visit) {
  if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank()) {
    throw std::invalid_argument("weights of different rank");
  }
  if (lambda.size() + mu.size() != nu.size()) return;
  const int rank = lambda.rank();
  if (rank == 1) {
    visit(BzPattern(1));
    return;
  }
  BzSearch search(rank, Labels(lambda), Labels(mu), Labels(nu));
  search.Run(visit);
}

std::int64_t CountBzPatterns(const DominantWeight& lambda,
                             const DominantWeight& mu,
                             const DominantWeight& nu) {
  std::int64_t count = 0;
  ForEachBzPattern(lambda, mu, nu, [&](const BzPattern&) { ++count; });
  return count;
}

}  // namespace lrscatter
