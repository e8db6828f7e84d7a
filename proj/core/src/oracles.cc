#include "lrscatter/oracles.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lrscatter::oracles {

bool Contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int r = 1; r <= inner.length(); ++r) {
    if (inner.part(r) > outer.part(r)) return false;
  }
  return true;
}

std::vector<int> ToColumnWord(const Partition& lambda) {
  std::vector<int> w = lambda.Conjugate().parts();
  std::reverse(w.begin(), w.end());
  return w;
}

std::int64_t LrTableauCount(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!Contains(nu, lambda)) return 0;
  const int rows = nu.length();
  const int letters = mu.length();
  // Cells in reading order: rows top to bottom, each right to left.
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int r = 1; r <= rows; ++r)
    for (int c = nu.part(r); c > lambda.part(r); --c) cells.push_back({r, c});
  std::vector<std::vector<int>> grid(rows + 1,
                                     std::vector<int>(nu.part(1) + 2, 0));
  std::vector<int> count(letters + 1, 0);
  std::int64_t total = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[k];
    int hi = letters;
    if (c < nu.part(r)) hi = std::min(hi, grid[r][c + 1]);
    int lo = 1;
    if (r > 1 && c > lambda.part(r - 1)) lo = grid[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] == mu.part(v)) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      grid[r][c] = v;
      fill(k + 1);
      --count[v];
    }
    grid[r][c] = 0;
  };
  fill(0);
  return total;
}

std::vector<Partition> AddVerticalStrip(const Partition& kappa, int k,
                                        int max_rows) {
  std::vector<Partition> out;
  if (k < 0) return out;
  const int span = std::min(max_rows, kappa.length() + k);
  std::vector<int> parts = kappa.parts();
  parts.resize(std::max(span, kappa.length()), 0);
  // Choose rows top to bottom; row r may grow if r - 1 grew or
  // kappa_{r-1} > kappa_r.
  std::function<void(int, int, bool)> rec = [&](int r, int left,
                                                bool prev_grew) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    if (r > span) return;
    bool can = r == 1 || prev_grew || kappa.part(r - 1) > kappa.part(r);
    if (can) {
      ++parts[r - 1];
      rec(r + 1, left - 1, true);
      --parts[r - 1];
    }
    rec(r + 1, left, false);
  };
  rec(1, k, false);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Expansion = std::map<Partition, std::int64_t>;

Expansion TimesFundamentals(const Expansion& start,
                            const std::vector<int>& columns, int rank) {
  Expansion cur = start;
  for (int k : columns) {
    Expansion next;
    for (const auto& [kappa, mult] : cur)
      for (const Partition& p : AddVerticalStrip(kappa, k, rank))
        next[p] += mult;
    cur = std::move(next);
  }
  return cur;
}

class PieriSolver {
 public:
  PieriSolver(Partition lambda, int rank)
      : lambda_(std::move(lambda)), rank_(rank) {}

  const Expansion& Tensor(const Partition& mu) {
    if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
    const std::vector<int> cols = ToColumnWord(mu);
    Expansion result = TimesFundamentals({{lambda_, 1}}, cols, rank_);
    // The column product contains V_mu once plus V_kappa with kappa' strictly
    // dominating mu'.
    Expansion shapes = TimesFundamentals({{Partition(), 1}}, cols, rank_);
    for (const auto& [kappa, mult] : shapes) {
      if (kappa == mu) continue;
      for (const auto& [nu, c] : Tensor(kappa)) result[nu] -= mult * c;
    }
    std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [nu, c] : result) {
      if (c < 0) throw std::logic_error("negative multiplicity");
    }
    return memo_.emplace(mu, std::move(result)).first->second;
  }

 private:
  Partition lambda_;
  int rank_;
  std::map<Partition, Expansion> memo_;
};

}  // namespace

std::map<Partition, std::int64_t> TensorByPieri(const Partition& lambda,
                                                const Partition& mu, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (lambda.length() > rank || mu.length() > rank) {
    throw std::invalid_argument("partition has more rows than the rank");
  }
  PieriSolver solver(lambda, rank);
  return solver.Tensor(mu);
}

std::int64_t PieriCoefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu, int rank) {
  auto t = TensorByPieri(lambda, mu, rank);
  auto it = t.find(nu);
  return it == t.end() ? 0 : it->second;
}

}  // namespace lrscatter::oracles
