#ifndef LRSCATTER_ORACLES_H_
#define LRSCATTER_ORACLES_H_

#include <cstdint>
#include <map>
#include <vector>

#include "lrscatter/weights.h"

// Classical Littlewood-Richardson computations, independent of the
// scattering machinery. Used to cross-check it.
namespace lrscatter::oracles {

// nu / lambda; inner must fit inside outer.
struct SkewShape {
  Partition outer;
  Partition inner;
};

bool Contains(const Partition& outer, const Partition& inner);

// Conjugate parts in increasing order, zeros dropped.
std::vector<int> ToColumnWord(const Partition& lambda);

// Number of semistandard fillings of nu / lambda with content mu whose
// reverse reading word (rows top to bottom, each right to left) is a
// lattice word.
std::int64_t LrTableauCount(const Partition& lambda, const Partition& mu,
                            const Partition& nu);

// Partitions obtained by adding a vertical strip of k boxes to kappa,
// keeping at most max_rows rows.
std::vector<Partition> AddVerticalStrip(const Partition& kappa, int k,
                                        int max_rows);

// V_lambda (x) V_mu for GL(N) built from iterated Pieri steps by fundamental
// representations, then reduced to V_mu by a unitriangular solve.
std::map<Partition, std::int64_t> TensorByPieri(const Partition& lambda,
                                                const Partition& mu, int rank);

std::int64_t PieriCoefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu, int rank);

}  // namespace lrscatter::oracles

#endif  // LRSCATTER_ORACLES_H_
