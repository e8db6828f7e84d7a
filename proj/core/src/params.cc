#include "lrscatter/params.h"

#include <algorithm>
#include <stdexcept>

namespace lrscatter {

ParamCollection::ParamCollection(std::vector<Inversion> keys, int rank)
    : ParamCollection(keys, std::vector<int>(keys.size(), 0), rank) {}

ParamCollection::ParamCollection(std::vector<Inversion> keys,
                                 std::vector<int> values, int rank)
    : rank_(rank), keys_(std::move(keys)), values_(std::move(values)) {
  if (keys_.size() != values_.size()) {
    throw std::invalid_argument("key and value counts differ");
  }
  // Sort keys and carry values along.
  std::vector<std::size_t> perm(keys_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
  std::vector<Inversion> sk;
  std::vector<int> sv;
  for (std::size_t k : perm) {
    sk.push_back(keys_[k]);
    sv.push_back(values_[k]);
  }
  keys_ = std::move(sk);
  values_ = std::move(sv);

  index_.assign(static_cast<std::size_t>(rank_) * rank_, -1);
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    const auto [i, j] = keys_[k];
    if (i < 1 || j > rank_ || i >= j) {
      throw std::invalid_argument("bad parameter key " + ToString(keys_[k]));
    }
    int& slot = index_[(i - 1) * rank_ + (j - 1)];
    if (slot >= 0) {
      throw std::invalid_argument("duplicate parameter key " +
                                  ToString(keys_[k]));
    }
    slot = static_cast<int>(k);
  }
}

ParamCollection ParamCollection::ForPermutation(const Permutation& w) {
  return ParamCollection(InversionSet(w), w.size());
}

int ParamCollection::Index(int i, int j) const {
  if (i < 1 || j < 1 || i > rank_ || j > rank_) return -1;
  return index_[(i - 1) * rank_ + (j - 1)];
}

bool ParamCollection::Has(int i, int j) const {
  return i < j ? Index(i, j) >= 0 : Index(j, i) >= 0;
}

int ParamCollection::At(int i, int j) const {
  if (i == j) return 0;
  if (i > j) return -At(j, i);
  int k = Index(i, j);
  if (k < 0) {
    throw std::out_of_range("no parameter " + ToString(Inversion{i, j}));
  }
  return values_[k];
}

void ParamCollection::Set(int i, int j, int value) {
  int k = i < j ? Index(i, j) : -1;
  if (k < 0) {
    throw std::out_of_range("no parameter " + ToString(Inversion{i, j}));
  }
  values_[k] = value;
}

std::string ToString(const ParamCollection& c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ", ";
    out += "c" + std::to_string(c.keys()[k].i) + std::to_string(c.keys()[k].j) +
           "=" + std::to_string(c.values()[k]);
  }
  return out + "}";
}

}  // namespace lrscatter
