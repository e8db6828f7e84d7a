#include "verify.h"

#include <functional>
#include <map>
#include <random>

namespace lrscatter::cli {

Json VerifyReport::ToJson() const {
  return {{"suite", suite},       {"pass", pass},
          {"checked", checked},   {"failures", failures},
          {"counterexample", counterexample}, {"details", details}};
}

namespace {

// Calls f on every point of [lo, hi]^dims, first coordinate fastest.
void ForEachPoint(int dims, int lo, int hi,
                  const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(dims, lo);
  for (;;) {
    f(v);
    int k = 0;
    while (k < dims && v[k] == hi) v[k++] = lo;
    if (k == dims) return;
    ++v[k];
  }
}

std::vector<BasisTuple> AllTuples(int len, int max_entry) {
  std::vector<BasisTuple> out;
  ForEachPoint(len, 0, max_entry,
               [&](const std::vector<int>& v) { out.emplace_back(v); });
  return out;
}

Json Optional(const std::optional<BasisTuple>& t) {
  return t ? ToJson(*t) : Json(nullptr);
}

ParamCollection Triple(const std::vector<int>& v) {
  return ParamCollection({{1, 2}, {1, 3}, {2, 3}}, v, 3);
}

// The tuple on which the two sides differ, if any.
std::optional<BasisTuple> YbWitness(const ParamCollection& c,
                                    const ParamCollection& cp,
                                    const std::vector<BasisTuple>& tuples) {
  static const ReducedWord kLeft({1, 2, 1}, 3);
  static const ReducedWord kRight({2, 1, 2}, 3);
  for (const auto& t : tuples) {
    if (ApplyWord(kLeft, c, t) != ApplyWord(kRight, cp, t)) return t;
  }
  return std::nullopt;
}

// Reduced words of w_o with move chains between every pair.
struct WordAtlas {
  WordAtlas(int n, int max_rank)
      : words(EnumerateReducedWords(Permutation::Longest(n), max_rank)) {
    for (const auto& a : words) {
      chains.emplace_back();
      for (const auto& b : words) chains.back().push_back(FindMoveChain(a, b));
    }
  }
  ParamCollection Carry(std::size_t a, std::size_t b,
                        const ParamCollection& c) const {
    return TransitionAlong(words[a], chains[a][b], c);
  }
  std::vector<ReducedWord> words;
  std::vector<std::vector<std::vector<Move>>> chains;
};

void RequireRank(int n, const VerifyOptions& o) {
  if (n < 2 || n > o.max_rank) {
    throw InputError("n = " + std::to_string(n) + " outside 2.." +
                     std::to_string(o.max_rank));
  }
}

}  // namespace

VerifyReport VerifyYangBaxter(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "yb";
  const int lo = o.nonnegative ? 0 : -o.bound;
  const auto tuples = AllTuples(3, o.entry_bound);
  std::int64_t holding = 0;
  ForEachPoint(3, lo, o.bound, [&](const std::vector<int>& v) {
    ++r.checked;
    auto c = Triple(v);
    auto cp = TIjk(c, 1, 2, 3);
    if (auto t = YbWitness(c, cp, tuples)) {
      r.Fail({{"c", v},
              {"c_prime", cp.values()},
              {"tuple", ToJson(*t)},
              {"lhs", Optional(ApplyWord(ReducedWord({1, 2, 1}, 3), c, *t))},
              {"rhs", Optional(ApplyWord(ReducedWord({2, 1, 2}, 3), cp, *t))}});
    } else {
      ++holding;
    }
  });
  // Uniqueness: every +-1 nudge of a primed entry must be detected.
  std::int64_t nudges = 0, undetected = 0;
  for (const std::vector<int>& v :
       {std::vector<int>{0, 0, 0}, {1, 3, 1}, {0, 3, 1}, {5, 0, 0}, {2, 1, 3}}) {
    auto c = Triple(v);
    auto cp = TIjk(c, 1, 2, 3);
    for (std::size_t k = 0; k < 3; ++k)
      for (int d : {-1, 1}) {
        auto bad = cp;
        bad.Set(bad.keys()[k].i, bad.keys()[k].j, bad.values()[k] + d);
        ++nudges;
        if (!YbWitness(c, bad, tuples)) {
          ++undetected;
          r.Fail({{"c", v}, {"nudged_c_prime", bad.values()},
                  {"reason", "perturbed parameters still satisfy the relation"}});
        }
      }
  }
  r.details = {{"parameter_range", {lo, o.bound}},
               {"entry_bound", o.entry_bound},
               {"triples_holding", holding},
               {"uniqueness_nudges", nudges},
               {"uniqueness_undetected", undetected}};
  return r;
}

VerifyReport VerifyTetrahedron(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "tetra";
  const int lo = o.nonnegative ? 0 : -o.bound;
  const auto keys = InversionSet(Permutation::Longest(4));
  ForEachPoint(6, lo, o.bound, [&](const std::vector<int>& v) {
    ++r.checked;
    ParamCollection c(keys, v, 4);
    if (!TetrahedronHolds(c)) r.Fail({{"params", ToJson(c)}});
  });
  r.details = {{"parameter_range", {lo, o.bound}}};
  return r;
}

VerifyReport VerifyAssociativity(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "assoc";
  std::vector<BasisTuple> tuples;
  for (int len = 0; len <= 2; ++len)
    for (const auto& t : AllTuples(len, o.bound)) tuples.push_back(t);
  std::map<std::pair<BasisTuple, BasisTuple>, WeightedTupleSum> memo;
  auto star = [&](const BasisTuple& a,
                  const BasisTuple& b) -> const WeightedTupleSum& {
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, StarProduct(a, b)).first;
    return it->second;
  };
  for (const auto& a : tuples)
    for (const auto& b : tuples)
      for (const auto& c : tuples) {
        ++r.checked;
        WeightedTupleSum left, right;
        for (const auto& [t, m] : star(a, b).terms()) left.Add(star(t, c), m);
        for (const auto& [t, m] : star(b, c).terms()) right.Add(star(a, t), m);
        if (left != right) {
          r.Fail({{"a", ToJson(a)}, {"b", ToJson(b)}, {"c", ToJson(c)},
                  {"left", ToJson(left)}, {"right", ToJson(right)}});
        }
      }
  r.details = {{"max_length", 2}, {"entry_bound", o.bound}};
  return r;
}

VerifyReport VerifyCones(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "cones";
  std::vector<int> ranks = o.n ? std::vector<int>{o.n} : std::vector<int>{3, 4};
  std::mt19937_64 rng(o.seed);
  Json per_rank = Json::array();
  for (int n : ranks) {
    RequireRank(n, o);
    WordAtlas atlas(n, o.max_rank);
    const auto& words = atlas.words;
    std::vector<ConeDescription> cones;
    std::vector<Inversion> low;
    for (const auto& w : words) {
      cones.push_back(PrincipalCone(w));
      low.push_back(LowPair(w));
    }
    const auto keys = InversionSet(Permutation::Longest(n));
    std::int64_t inside = 0;
    ForEachPoint(keys.size(), 0, o.bound, [&](const std::vector<int>& v) {
      ParamCollection c(keys, v, n);
      for (std::size_t a = 0; a < words.size(); ++a) {
        ++r.checked;
        const bool in = Contains(cones[a], c);
        inside += in;
        bool all_entries = true, low_entries = true;
        for (std::size_t b = 0; b < words.size(); ++b) {
          auto t = atlas.Carry(a, b, c);
          for (int x : t.values()) all_entries = all_entries && x >= 0;
          low_entries = low_entries && t.At(low[b].i, low[b].j) >= 0;
          if (in && (!Contains(cones[b], t) || atlas.Carry(b, a, t) != c)) {
            r.Fail({{"check", "transport"}, {"from", ToJson(words[a])},
                    {"to", ToJson(words[b])}, {"params", ToJson(c)}});
          }
        }
        if (in != all_entries || in != low_entries) {
          r.Fail({{"check", "characterization"}, {"word", ToJson(words[a])},
                  {"params", ToJson(c)}, {"in_cone", in},
                  {"all_images_nonnegative", all_entries},
                  {"low_entries_nonnegative", low_entries}});
        }
      }
    });
    // M-invariance on random collections.
    std::uniform_int_distribution<int> val(-o.bound, o.bound);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> side(0, n);
    std::vector<Vertex> ends;
    for (int i = 1; i <= n; ++i) {
      ends.push_back(Vertex::Upper(i));
      ends.push_back(Vertex::Lower(i));
    }
    for (int t = 0; t < o.trials; ++t) {
      std::vector<int> v(keys.size());
      for (int& x : v) x = val(rng);
      ParamCollection c(keys, v, n);
      const std::size_t a = pick(rng), b = pick(rng);
      const int s = side(rng);
      auto cb = atlas.Carry(a, b, c);
      for (const auto& from : ends)
        for (const auto& to : ends) {
          ++r.checked;
          auto ma = MinPathValue(words[a], s, from, to, c);
          auto mb = MinPathValue(words[b], s, from, to, cb);
          if (ma != mb) {
            r.Fail({{"check", "min_path_invariance"},
                    {"from_word", ToJson(words[a])},
                    {"to_word", ToJson(words[b])},
                    {"s", s},
                    {"B", ToString(from)},
                    {"E", ToString(to)},
                    {"params", ToJson(c)}});
          }
        }
    }
    per_rank.push_back({{"n", n},
                        {"words", words.size()},
                        {"box", {0, o.bound}},
                        {"cone_points", inside}});
  }
  r.details = {{"ranks", per_rank}, {"seed", o.seed}, {"trials", o.trials}};
  return r;
}

VerifyReport VerifyDuality(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "duality";
  const int N = o.n ? o.n : 3;
  for (int a = 0; a <= o.bound; ++a)
    for (int b = 0; b <= o.bound; ++b)
      for (const auto& lam : PartitionsOf(a, N))
        for (const auto& mu : PartitionsOf(b, N))
          for (const auto& nu : PartitionsOf(a + b, N)) {
            ++r.checked;
            auto W = [](const Partition& p, int rank) {
              return DominantWeight::FromPartition(p, rank);
            };
            const auto v = LrCoefficient(W(lam, N), W(mu, N), W(nu, N));
            const auto sym = LrCoefficient(W(mu, N), W(lam, N), W(nu, N));
            const int Nc = std::max({1, lam.part(1), mu.part(1), nu.part(1)});
            const auto dual =
                LrCoefficient(W(lam.Conjugate(), Nc), W(mu.Conjugate(), Nc),
                              W(nu.Conjugate(), Nc));
            if (v != sym || v != dual) {
              r.Fail({{"lambda", ToJson(lam)}, {"mu", ToJson(mu)},
                      {"nu", ToJson(nu)}, {"coefficient", v},
                      {"swapped", sym}, {"conjugated", dual}});
            }
          }
  r.details = {{"N", N}, {"max_size", o.bound}};
  return r;
}

VerifyReport VerifyTransport(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "transport";
  const int n = o.n ? o.n : 4;
  RequireRank(n, o);
  const int lo = o.nonnegative ? 0 : -o.bound;
  WordAtlas atlas(n, o.max_rank);
  const auto keys = InversionSet(Permutation::Longest(n));
  const auto tuples = AllTuples(n, o.entry_bound);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> val(lo, o.bound);
  std::vector<ConeDescription> cones;
  for (const auto& w : atlas.words) cones.push_back(PrincipalCone(w));
  std::int64_t bad_collections = 0;
  for (std::size_t a = 0; a < atlas.words.size(); ++a)
    for (std::size_t b = 0; b < atlas.words.size(); ++b)
      for (int t = 0; t < o.trials; ++t) {
        ParamCollection c;
        do {
          std::vector<int> v(keys.size());
          for (int& x : v) x = val(rng);
          c = ParamCollection(keys, v, n);
        } while (o.in_cone && !Contains(cones[a], c));
        auto cb = atlas.Carry(a, b, c);
        bool bad = false;
        for (const auto& x : tuples) {
          ++r.checked;
          auto lhs = ApplyWord(atlas.words[a], c, x);
          auto rhs = ApplyWord(atlas.words[b], cb, x);
          if (lhs != rhs) {
            bad = true;
            r.Fail({{"from", ToJson(atlas.words[a])},
                    {"to", ToJson(atlas.words[b])},
                    {"params", ToJson(c)},
                    {"transformed", ToJson(cb)},
                    {"tuple", ToJson(x)},
                    {"lhs", Optional(lhs)},
                    {"rhs", Optional(rhs)}});
          }
        }
        bad_collections += bad;
      }
  r.details = {{"n", n},
               {"parameter_range", {lo, o.bound}},
               {"in_cone", o.in_cone},
               {"entry_bound", o.entry_bound},
               {"seed", o.seed},
               {"trials_per_pair", o.trials},
               {"collections_with_failures", bad_collections}};
  return r;
}

}  // namespace lrscatter::cli
