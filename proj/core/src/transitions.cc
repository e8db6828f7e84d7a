#include "lrscatter/transitions.h"

#include <algorithm>
#include <stdexcept>

#include "lrscatter/scattering.h"

namespace lrscatter {
namespace {

void CheckTriple(const ParamCollection& c, int i, int j, int k) {
  if (!(i < j && j < k)) throw std::invalid_argument("need i < j < k");
  if (!c.Has(i, j) || !c.Has(i, k) || !c.Has(j, k)) {
    throw std::invalid_argument("collection lacks a pair of the triple");
  }
}

}  // namespace

ParamCollection TIjk(const ParamCollection& c, int i, int j, int k) {
  CheckTriple(c, i, j, k);
  const int ij = c.At(i, j), ik = c.At(i, k), jk = c.At(j, k);
  ParamCollection out = c;
  out.Set(i, j, std::min(ij, ik - jk));
  out.Set(i, k, ij + jk);
  out.Set(j, k, std::max(jk, ik - ij));
  return out;
}

ParamCollection TIjkInverse(const ParamCollection& c, int i, int j, int k) {
  CheckTriple(c, i, j, k);
  const int ij = c.At(i, j), ik = c.At(i, k), jk = c.At(j, k);
  ParamCollection out = c;
  out.Set(i, j, std::max(ij, ik - jk));
  out.Set(i, k, ij + jk);
  out.Set(j, k, std::min(jk, ik - ij));
  return out;
}

ParamCollection TransitionAlong(const ReducedWord& a,
                                const std::vector<Move>& chain,
                                const ParamCollection& c) {
  ReducedWord word = a;
  ParamCollection cur = c;
  for (const Move& move : chain) {
    MoveResult r = ApplyMove(word, move);
    if (r.triple) {
      const auto [i, j, k] = *r.triple;
      cur = move.direction == MoveDirection::kForward ? TIjk(cur, i, j, k)
                                                      : TIjkInverse(cur, i, j, k);
    }
    word = std::move(r.word);
  }
  return cur;
}

ParamCollection Transition(const ReducedWord& a, const ReducedWord& b,
                           const ParamCollection& c) {
  auto chain = FindMoveChain(a, b);
  if (c.rank() != a.rank() || c.keys() != InversionSet(Evaluate(a))) {
    throw std::invalid_argument("parameters " + ToString(c) +
                                " are not keyed by the inversions of " +
                                ToString(a));
  }
  return TransitionAlong(a, chain, c);
}

bool YangBaxterHolds(const ParamCollection& c, const ParamCollection& c_prime,
                     int entry_bound) {
  static const ReducedWord kLeft({1, 2, 1}, 3);
  static const ReducedWord kRight({2, 1, 2}, 3);
  for (int x = 0; x <= entry_bound; ++x)
    for (int y = 0; y <= entry_bound; ++y)
      for (int z = 0; z <= entry_bound; ++z) {
        BasisTuple t({x, y, z});
        if (ApplyWord(kLeft, c, t) != ApplyWord(kRight, c_prime, t)) {
          return false;
        }
      }
  return true;
}

bool YangBaxterHolds(int c12, int c13, int c23, int entry_bound) {
  ParamCollection c({{1, 2}, {1, 3}, {2, 3}}, {c12, c13, c23}, 3);
  return YangBaxterHolds(c, TIjk(c, 1, 2, 3), entry_bound);
}

bool TetrahedronHolds(const ParamCollection& c) {
  ParamCollection lhs = TIjk(c, 2, 3, 4);
  lhs = TIjk(lhs, 1, 3, 4);
  lhs = TIjk(lhs, 1, 2, 4);
  lhs = TIjk(lhs, 1, 2, 3);
  ParamCollection rhs = TIjk(c, 1, 2, 3);
  rhs = TIjk(rhs, 1, 2, 4);
  rhs = TIjk(rhs, 1, 3, 4);
  rhs = TIjk(rhs, 2, 3, 4);
  return lhs == rhs;
}

}  // namespace lrscatter
