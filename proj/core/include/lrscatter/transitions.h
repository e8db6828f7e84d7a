#ifndef LRSCATTER_TRANSITIONS_H_
#define LRSCATTER_TRANSITIONS_H_

#include <vector>

#include "lrscatter/params.h"
#include "lrscatter/permutations.h"

namespace lrscatter {

// T_ijk replaces c_ij, c_ik, c_jk by
//   min(c_ij, c_ik - c_jk), c_ij + c_jk, max(c_jk, c_ik - c_ij)
// and leaves the other entries alone. Requires i < j < k, all three keys.
ParamCollection TIjk(const ParamCollection& c, int i, int j, int k);
ParamCollection TIjkInverse(const ParamCollection& c, int i, int j, int k);

// Carries parameters of a along the move chain: 2-moves are the identity,
// forward 3-moves apply T_ijk and backward ones its inverse.
ParamCollection TransitionAlong(const ReducedWord& a,
                                const std::vector<Move>& chain,
                                const ParamCollection& c);

// T_a^b along a shortest move chain. Throws std::invalid_argument if a, b
// represent different permutations or c is not keyed by their inversions.
ParamCollection Transition(const ReducedWord& a, const ReducedWord& b,
                           const ParamCollection& c);

// Checks R_23(c23) R_13(c13) R_12(c12) = R_12(c'12) R_13(c'13) R_23(c'23) on
// every e_x (x) e_y (x) e_z with entries in [0, entry_bound], where c' is
// T_123(c). The second overload compares against a given c'.
bool YangBaxterHolds(int c12, int c13, int c23, int entry_bound);
bool YangBaxterHolds(const ParamCollection& c, const ParamCollection& c_prime,
                     int entry_bound);

// T_123 T_124 T_134 T_234 (c) = T_234 T_134 T_124 T_123 (c), compositions
// applied right to left. c must hold all six pairs of S_4.
bool TetrahedronHolds(const ParamCollection& c);

}  // namespace lrscatter

#endif  // LRSCATTER_TRANSITIONS_H_
