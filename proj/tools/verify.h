#ifndef LRSCATTER_TOOLS_VERIFY_H_
#define LRSCATTER_TOOLS_VERIFY_H_

#include <cstdint>
#include <string>

#include "json_io.h"

namespace lrscatter::cli {

struct VerifyOptions {
  int bound = 3;
  int entry_bound = 5;
  std::uint64_t seed = 1;
  int trials = 200;
  int n = 0;  // 0: suite default
  bool nonnegative = false;
  bool in_cone = false;  // transport: draw C from the cone of the source word
  int max_rank = kDefaultMaxEnumerationRank;
};

struct VerifyReport {
  std::string suite;
  bool pass = true;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  Json counterexample;  // first failure, null if none
  Json details = Json::object();

  void Fail(Json example) {
    pass = false;
    if (failures++ == 0) counterexample = std::move(example);
  }
  Json ToJson() const;
};

// Yang-Baxter over [lo, bound]^3, lo = 0 or -bound, tuples with entries
// <= entry_bound; plus a spot check that nudging each primed parameter by
// +-1 breaks it.
VerifyReport VerifyYangBaxter(const VerifyOptions& o);
// All C in [lo, bound]^6.
VerifyReport VerifyTetrahedron(const VerifyOptions& o);
// (A*B)*C = A*(B*C) for tuples of length <= 2 with entries <= bound.
VerifyReport VerifyAssociativity(const VerifyOptions& o);
// For n = 3, 4 (or o.n): transport of cone points, the two
// characterizations by transition images on [0, bound]^{I(w_o)}, and
// M-invariance on trials random C in [-bound, bound].
VerifyReport VerifyCones(const VerifyOptions& o);
// lr(l, m, n, N) = lr(l', m', n', N') and symmetry for |l|, |m| <= bound at
// N = o.n (default 3).
VerifyReport VerifyDuality(const VerifyOptions& o);
// R_a(C) = R_b(T_a^b C) for all word pairs of w_o in S_n (default 4), trials
// random C in [lo, bound] per pair, tuples with entries <= entry_bound.
// With in_cone, C is redrawn until it lies in C_a.
VerifyReport VerifyTransport(const VerifyOptions& o);

}  // namespace lrscatter::cli

#endif  // LRSCATTER_TOOLS_VERIFY_H_
