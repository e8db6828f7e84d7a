#include "lrscatter/permutations.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace lrscatter {
namespace {

using Key = std::string;

Key ToKey(const std::vector<int>& letters) {
  return Key(letters.begin(), letters.end());
}

std::vector<int> FromKey(const Key& key) {
  std::vector<int> out;
  out.reserve(key.size());
  for (char c : key) out.push_back(static_cast<unsigned char>(c));
  return out;
}

// Applies the move in place. Returns false if it does not apply.
bool ApplyRaw(std::vector<int>& letters, const Move& move) {
  const std::size_t p = move.position;
  if (move.kind == MoveKind::kTwo) {
    if (p + 1 >= letters.size()) return false;
    if (std::abs(letters[p] - letters[p + 1]) < 2) return false;
    std::swap(letters[p], letters[p + 1]);
    return true;
  }
  if (p + 2 >= letters.size()) return false;
  int x = letters[p], y = letters[p + 1], z = letters[p + 2];
  if (x != z) return false;
  if (move.direction == MoveDirection::kForward) {
    if (y != x + 1) return false;
  } else if (y != x - 1) {
    return false;
  }
  letters[p] = y;
  letters[p + 1] = x;
  letters[p + 2] = y;
  return true;
}

std::vector<Move> MovesOf(const std::vector<int>& letters) {
  std::vector<Move> moves;
  for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
    if (std::abs(letters[p] - letters[p + 1]) >= 2) {
      moves.push_back({MoveKind::kTwo, p, MoveDirection::kForward});
    }
    if (p + 2 < letters.size() && letters[p] == letters[p + 2]) {
      if (letters[p + 1] == letters[p] + 1) {
        moves.push_back({MoveKind::kThree, p, MoveDirection::kForward});
      } else if (letters[p + 1] == letters[p] - 1) {
        moves.push_back({MoveKind::kThree, p, MoveDirection::kBackward});
      }
    }
  }
  return moves;
}

void CheckRank(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

}  // namespace

std::string ToString(const Inversion& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int n) {
  CheckRank(n);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::Longest(int n) {
  CheckRank(n);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

Permutation Permutation::Wmn(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative block size");
  std::vector<int> im(m + n);
  for (int i = 1; i <= m; ++i) im[i - 1] = i + n;
  for (int j = 1; j <= n; ++j) im[m + j - 1] = j;
  return Permutation(std::move(im));
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

int Permutation::Length() const {
  int len = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) len += images_[i] > images_[j];
  return len;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> im(u.size());
  for (int i = 1; i <= u.size(); ++i) im[i - 1] = u(v(i));
  return Permutation(std::move(im));
}

WordEvaluation EvaluateWord(std::span<const int> letters, int rank) {
  CheckRank(rank);
  std::vector<int> im(rank);
  for (int i = 0; i < rank; ++i) im[i] = i + 1;
  bool reduced = true;
  // Right multiplication by s_a swaps the images at positions a and a+1.
  for (int a : letters) {
    if (a < 1 || a >= rank) {
      throw std::invalid_argument("letter " + std::to_string(a) +
                                  " out of range for S_" +
                                  std::to_string(rank));
    }
    if (im[a - 1] > im[a]) reduced = false;
    std::swap(im[a - 1], im[a]);
  }
  return {Permutation(std::move(im)), reduced};
}

ReducedWord::ReducedWord(std::vector<int> letters, int rank)
    : letters_(std::move(letters)), rank_(rank) {
  if (!EvaluateWord(letters_, rank_).reduced) {
    throw std::invalid_argument("word " + ToString(*this) + " is not reduced");
  }
}

std::string ToString(const ReducedWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.letters()[i]);
  }
  return out + ")";
}

Permutation Evaluate(const ReducedWord& word) {
  return EvaluateWord(word.letters(), word.rank()).permutation;
}

std::vector<Inversion> InversionSet(const Permutation& w) {
  std::vector<Inversion> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

std::vector<Inversion> ReflectionOrdering(const ReducedWord& word) {
  // line[p] is the pseudo-line at position p after the suffix has acted.
  std::vector<int> line(word.rank() + 1);
  for (int p = 0; p <= word.rank(); ++p) line[p] = p;
  const auto& a = word.letters();
  std::vector<Inversion> out(a.size());
  for (std::size_t r = a.size(); r-- > 0;) {
    out[r] = {line[a[r]], line[a[r] + 1]};
    std::swap(line[a[r]], line[a[r] + 1]);
  }
  return out;
}

Inversion LowPair(const ReducedWord& word) {
  if (word.length() == 0) throw std::invalid_argument("empty word");
  return ReflectionOrdering(word).front();
}

ReducedWord CanonicalReducedWord(const Permutation& w) {
  std::vector<int> im = w.images();
  std::vector<int> rev;
  for (;;) {
    int d = 0;
    for (int i = 1; i < w.size(); ++i) {
      if (im[i - 1] > im[i]) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    std::swap(im[d - 1], im[d]);
    rev.push_back(d);
  }
  std::reverse(rev.begin(), rev.end());
  return ReducedWord(std::move(rev), w.size());
}

MoveResult ApplyMove(const ReducedWord& word, const Move& move) {
  std::vector<int> letters = word.letters();
  if (!ApplyRaw(letters, move)) {
    throw std::invalid_argument("move does not apply at position " +
                                std::to_string(move.position) + " of " +
                                ToString(word));
  }
  MoveResult result{ReducedWord(std::move(letters), word.rank()), std::nullopt};
  if (move.kind == MoveKind::kThree) {
    auto ord = ReflectionOrdering(word);
    std::vector<int> lines;
    for (std::size_t r = move.position; r < move.position + 3; ++r) {
      lines.push_back(ord[r].i);
      lines.push_back(ord[r].j);
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    result.triple = Triple{lines[0], lines[1], lines[2]};
  }
  return result;
}

std::vector<Move> AvailableMoves(const ReducedWord& word) {
  return MovesOf(word.letters());
}

std::vector<ReducedWord> EnumerateReducedWords(const Permutation& w,
                                               int max_rank) {
  if (w.size() > max_rank) {
    throw std::invalid_argument("rank " + std::to_string(w.size()) +
                                " exceeds enumeration cap " +
                                std::to_string(max_rank));
  }
  ReducedWord start = CanonicalReducedWord(w);
  std::unordered_set<Key> seen{ToKey(start.letters())};
  std::deque<Key> queue{ToKey(start.letters())};
  while (!queue.empty()) {
    std::vector<int> cur = FromKey(queue.front());
    queue.pop_front();
    for (const Move& m : MovesOf(cur)) {
      std::vector<int> next = cur;
      ApplyRaw(next, m);
      Key k = ToKey(next);
      if (seen.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<ReducedWord> out;
  out.reserve(seen.size());
  for (const Key& k : seen) out.emplace_back(FromKey(k), w.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Move> FindMoveChain(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank() != b.rank() || Evaluate(a) != Evaluate(b)) {
    throw std::invalid_argument("words " + ToString(a) + " and " +
                                ToString(b) +
                                " represent different permutations");
  }
  const Key target = ToKey(b.letters());
  std::unordered_map<Key, std::pair<Key, Move>> parent;
  const Key source = ToKey(a.letters());
  parent.emplace(source, std::make_pair(Key(), Move{}));
  std::deque<Key> queue{source};
  while (!queue.empty() && !parent.count(target)) {
    Key key = queue.front();
    queue.pop_front();
    std::vector<int> cur = FromKey(key);
    for (const Move& m : MovesOf(cur)) {
      std::vector<int> next = cur;
      ApplyRaw(next, m);
      Key k = ToKey(next);
      if (parent.emplace(k, std::make_pair(key, m)).second) {
        queue.push_back(std::move(k));
      }
    }
  }
  std::vector<Move> chain;
  for (Key k = target; k != source;) {
    const auto& [prev, move] = parent.at(k);
    chain.push_back(move);
    k = prev;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

ReducedWord WmnWord(int m, int n) {
  return CanonicalReducedWord(Permutation::Wmn(m, n));
}

ReducedWord LexMinLongestWord(int n) {
  CheckRank(n);
  std::vector<int> letters;
  for (int k = 1; k < n; ++k)
    for (int a = k; a >= 1; --a) letters.push_back(a);
  return ReducedWord(std::move(letters), n);
}

ReducedWord LongestWord(int n) {
  return CanonicalReducedWord(Permutation::Longest(n));
}

ReducedWord Assoc1Word(int m, int n, int k) {
  std::vector<int> letters = WmnWord(m + n, k).letters();
  const ReducedWord tail = WmnWord(m, n);
  for (int a : tail.letters()) letters.push_back(a);
  return ReducedWord(std::move(letters), m + n + k);
}

ReducedWord Assoc2Word(int m, int n, int k) {
  std::vector<int> letters = WmnWord(m, n + k).letters();
  const ReducedWord tail = WmnWord(n, k);
  for (int a : tail.letters()) letters.push_back(a + m);
  return ReducedWord(std::move(letters), m + n + k);
}

}  // namespace lrscatter
