#include "lrscatter/scattering.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lrscatter {

BasisTuple::BasisTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("negative tuple entry");
  }
}

int BasisTuple::Energy() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool BasisTuple::IsWeaklyIncreasing() const {
  return std::is_sorted(entries_.begin(), entries_.end());
}

BasisTuple Concat(const BasisTuple& a, const BasisTuple& b) {
  std::vector<int> e = a.entries_;
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return BasisTuple(std::move(e));
}

std::string ToString(const BasisTuple& t) {
  std::string out = "e_(";
  for (int k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k]);
  }
  return out + ")";
}

void WeightedTupleSum::Add(const BasisTuple& t, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto& m = terms_[t];
  m += multiplicity;
  if (m == 0) terms_.erase(t);
}

void WeightedTupleSum::Add(const WeightedTupleSum& other, std::int64_t scale) {
  for (const auto& [t, m] : other.terms_) Add(t, m * scale);
}

std::int64_t WeightedTupleSum::Coefficient(const BasisTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t WeightedTupleSum::Total() const {
  std::int64_t s = 0;
  for (const auto& [t, m] : terms_) s += m;
  return s;
}

std::optional<std::pair<int, int>> ApplyR(int c, int x, int y) {
  if (c < x - y || y + c < 0 || x - c < 0) return std::nullopt;
  return std::make_pair(y + c, x - c);
}

std::optional<BasisTuple> ApplyWord(const ReducedWord& word,
                                    const ParamCollection& c,
                                    const BasisTuple& t) {
  if (t.size() != word.rank()) {
    throw std::invalid_argument("tuple length " + std::to_string(t.size()) +
                                " does not match rank " +
                                std::to_string(word.rank()));
  }
  std::vector<int> e = t.entries();
  const auto ord = ReflectionOrdering(word);
  for (std::size_t r = ord.size(); r-- > 0;) {
    const auto [i, j] = ord[r];
    auto out = ApplyR(c.At(i, j), e[i - 1], e[j - 1]);
    if (!out) return std::nullopt;
    e[i - 1] = out->first;
    e[j - 1] = out->second;
  }
  return BasisTuple(std::move(e));
}

BasisTuple ToLowerEnds(const Permutation& w, const BasisTuple& by_line) {
  if (w.size() != by_line.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> e(by_line.size());
  for (int i = 1; i <= w.size(); ++i) e[w(i) - 1] = by_line[i - 1];
  return BasisTuple(std::move(e));
}

namespace {

struct StarSearch {
  int m = 0;
  int n = 0;
  std::vector<Inversion> order;  // top crossing first
  std::vector<Inversion> keys;
  Permutation w;
  std::vector<int> slots;  // by pseudo-line, 0-based
  std::vector<int> c;      // (m+n+1)^2, -1 = unassigned
  const std::function<void(const StarTerm&)>* visit = nullptr;

  int& C(int i, int j) { return c[i * (m + n + 1) + j]; }

  void Run(std::size_t r) {
    if (r == order.size()) {
      std::vector<int> values;
      values.reserve(keys.size());
      for (const auto& p : keys) values.push_back(C(p.i, p.j));
      StarTerm term{ParamCollection(keys, std::move(values), m + n),
                    ToLowerEnds(w, BasisTuple(slots))};
      (*visit)(term);
      return;
    }
    const auto [i, j] = order[r];
    int x = slots[i - 1];
    int y = slots[j - 1];
    int hi = x;
    if (i + 1 <= m) hi = std::min(hi, C(i + 1, j));
    if (j - 1 >= m + 1) hi = std::min(hi, C(i, j - 1));
    for (int v = std::max(0, x - y); v <= hi; ++v) {
      C(i, j) = v;
      slots[i - 1] = y + v;
      slots[j - 1] = x - v;
      Run(r + 1);
    }
    C(i, j) = -1;
    slots[i - 1] = x;
    slots[j - 1] = y;
  }
};

}  // namespace

void ForEachStarTerm(const BasisTuple& a, const BasisTuple& b,
                     const std::function<void(const StarTerm&)>& visit) {
  StarSearch s;
  s.m = a.size();
  s.n = b.size();
  const ReducedWord word = WmnWord(s.m, s.n);
  s.keys = ReflectionOrdering(word);
  s.order.assign(s.keys.rbegin(), s.keys.rend());
  std::sort(s.keys.begin(), s.keys.end());
  s.w = Evaluate(word);
  s.slots = Concat(a, b).entries();
  s.c.assign((s.m + s.n + 1) * (s.m + s.n + 1), -1);
  s.visit = &visit;
  s.Run(0);
}

WeightedTupleSum StarProduct(const BasisTuple& a, const BasisTuple& b) {
  WeightedTupleSum out;
  ForEachStarTerm(a, b, [&](const StarTerm& t) { out.Add(t.result); });
  return out;
}

WeightedTupleSum PieriProduct(int x, const BasisTuple& t) {
  if (x < 0) throw std::invalid_argument("negative energy");
  if (!t.IsWeaklyIncreasing()) {
    throw std::invalid_argument("tuple " + ToString(t) +
                                " is not weakly increasing");
  }
  WeightedTupleSum out;
  const int m = t.size();
  std::vector<int> y(m + 1);
  // y_k - t_{k-1} lies in [0, t_k - t_{k-1}] (t_0 = 0); y_{m+1} absorbs the
  // remaining budget.
  std::function<void(int, int)> rec = [&](int k, int budget) {
    int lo = k == 0 ? 0 : t[k - 1];
    if (k == m) {
      y[m] = lo + budget;
      out.Add(BasisTuple(y));
      return;
    }
    for (int v = lo; v <= t[k] && v - lo <= budget; ++v) {
      y[k] = v;
      rec(k + 1, budget - (v - lo));
    }
  };
  rec(0, x);
  return out;
}

std::optional<DominantWeight> ProjectPn(const BasisTuple& t, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (!t.IsWeaklyIncreasing()) return std::nullopt;
  if (t.size() > 0 && t[t.size() - 1] > rank) return std::nullopt;
  std::vector<int> parts(rank, 0);
  for (int x : t.entries())
    for (int k = 0; k < x; ++k) ++parts[k];
  return DominantWeight(std::move(parts));
}

BasisTuple ColumnTuple(const DominantWeight& lambda) {
  auto conj = lambda.ToPartition().Conjugate().parts();
  std::reverse(conj.begin(), conj.end());
  return BasisTuple(std::move(conj));
}

std::vector<ParamCollection> LrCollections(const DominantWeight& lambda,
                                           const DominantWeight& mu,
                                           const DominantWeight& nu) {
  if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank()) {
    throw std::invalid_argument("weights of different rank");
  }
  std::vector<ParamCollection> out;
  if (lambda.size() + mu.size() != nu.size()) return out;
  const BasisTuple x = ColumnTuple(lambda);
  const BasisTuple y = ColumnTuple(mu);
  std::vector<int> z = ColumnTuple(nu).entries();
  const int len = x.size() + y.size();
  if (static_cast<int>(z.size()) > len) return out;
  z.insert(z.begin(), len - z.size(), 0);
  const BasisTuple target(std::move(z));
  ForEachStarTerm(x, y, [&](const StarTerm& t) {
    if (t.result == target) out.push_back(t.params);
  });
  return out;
}

std::int64_t LrCoefficient(const DominantWeight& lambda,
                           const DominantWeight& mu, const DominantWeight& nu) {
  return static_cast<std::int64_t>(LrCollections(lambda, mu, nu).size());
}

std::map<DominantWeight, std::int64_t> LrExpansion(const DominantWeight& lambda,
                                                   const DominantWeight& mu) {
  if (lambda.rank() != mu.rank()) {
    throw std::invalid_argument("weights of different rank");
  }
  std::map<DominantWeight, std::int64_t> out;
  ForEachStarTerm(ColumnTuple(lambda), ColumnTuple(mu),
                  [&](const StarTerm& t) {
                    if (auto nu = ProjectPn(t.result, lambda.rank())) ++out[*nu];
                  });
  return out;
}

}  // namespace lrscatter
