#include "lrscatter/weights.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrscatter {
namespace {

void CheckNonincreasing(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("parts must be nonincreasing");
    }
  }
}

std::string Join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

void PartitionsRec(int remaining, int max_part, int rows_left,
                   std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    PartitionsRec(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  CheckNonincreasing(parts_);
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return i >= 1 && i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::Conjugate() const {
  std::vector<int> conj;
  int width = parts_.empty() ? 0 : parts_.front();
  for (int k = 1; k <= width; ++k) {
    int rows = 0;
    for (int p : parts_) rows += p >= k;
    conj.push_back(rows);
  }
  return Partition(std::move(conj));
}

DominantWeight::DominantWeight(std::vector<int> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("weight of rank 0");
  CheckNonincreasing(parts_);
}

DominantWeight DominantWeight::FromPartition(const Partition& p, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (p.length() > rank) {
    throw std::invalid_argument("partition " + ToString(p) +
                                " has more than " + std::to_string(rank) +
                                " rows");
  }
  std::vector<int> parts = p.parts();
  parts.resize(rank, 0);
  return DominantWeight(std::move(parts));
}

int DominantWeight::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int DominantWeight::Label(int k) const {
  if (k < 1 || k > rank()) throw std::out_of_range("label index");
  if (k == rank()) return parts_[k - 1];
  return parts_[k - 1] - parts_[k];
}

std::vector<Partition> PartitionsOf(int n, int max_rows) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  PartitionsRec(n, n, max_rows < 0 ? n + 1 : max_rows, cur, out);
  return out;
}

std::string ToString(const Partition& p) { return Join(p.parts()); }
std::string ToString(const DominantWeight& w) { return Join(w.parts()); }

}  // namespace lrscatter
