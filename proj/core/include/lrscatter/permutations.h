#ifndef LRSCATTER_PERMUTATIONS_H_
#define LRSCATTER_PERMUTATIONS_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrscatter {

// Default cap on the rank for exhaustive reduced-word enumeration.
inline constexpr int kDefaultMaxEnumerationRank = 6;

// A pair i < j. Doubles as the label of a crossing of pseudo-lines i and j.
struct Inversion {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

std::string ToString(const Inversion& p);

// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation Identity(int n);
  // The longest element w_o: i -> n + 1 - i.
  static Permutation Longest(int n);
  // w(m, n): i -> i + n for i <= m, m + j -> j.
  static Permutation Wmn(int m, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation Inverse() const;
  // Number of inversions.
  int Length() const;
  // (u * v)(i) = u(v(i)).
  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// A reduced word (a_1, ..., a_l) for s_{a_1} ... s_{a_l} in S_n.
class ReducedWord {
 public:
  ReducedWord() = default;
  // Throws std::invalid_argument if a letter is outside 1..rank-1 or the
  // word is not reduced.
  ReducedWord(std::vector<int> letters, int rank);

  const std::vector<int>& letters() const { return letters_; }
  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }

  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<int> letters_;
  int rank_ = 1;
};

std::string ToString(const ReducedWord& w);

struct WordEvaluation {
  Permutation permutation;
  bool reduced = true;
};

// Evaluates s_{a_1} ... s_{a_l} for an arbitrary letter sequence.
WordEvaluation EvaluateWord(std::span<const int> letters, int rank);
Permutation Evaluate(const ReducedWord& word);

// {(i, j) : i < j, w(i) > w(j)} in lexicographic order.
std::vector<Inversion> InversionSet(const Permutation& w);

// (i_1, j_1) < ... < (i_l, j_l) with i_r = s_{a_l} ... s_{a_{r+1}}(a_r) and
// j_r = s_{a_l} ... s_{a_{r+1}}(a_r + 1). Entry r - 1 labels letter r.
std::vector<Inversion> ReflectionOrdering(const ReducedWord& word);

// First element of the reflection ordering.
Inversion LowPair(const ReducedWord& word);

// A reduced word for w obtained by peeling the leftmost right descent.
ReducedWord CanonicalReducedWord(const Permutation& w);

enum class MoveKind { kTwo, kThree };
enum class MoveDirection { kForward, kBackward };

// position is the 0-based index of the first letter touched. A forward
// 3-move rewrites (a, a+1, a) to (a+1, a, a+1); backward is the reverse.
// Direction is ignored for 2-moves.
struct Move {
  MoveKind kind = MoveKind::kTwo;
  std::size_t position = 0;
  MoveDirection direction = MoveDirection::kForward;
  friend bool operator==(const Move&, const Move&) = default;
};

struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct MoveResult {
  ReducedWord word;
  // Lines i < j < k whose three crossings a 3-move rearranges.
  std::optional<Triple> triple;
};

// Throws std::invalid_argument if the move does not apply.
MoveResult ApplyMove(const ReducedWord& word, const Move& move);

// Every move applicable to word, ordered by position.
std::vector<Move> AvailableMoves(const ReducedWord& word);

// All reduced words of w, sorted. Throws std::invalid_argument if
// w.size() > max_rank.
std::vector<ReducedWord> EnumerateReducedWords(
    const Permutation& w, int max_rank = kDefaultMaxEnumerationRank);

// A shortest chain of moves taking a to b. Throws std::invalid_argument if
// the words represent different permutations.
std::vector<Move> FindMoveChain(const ReducedWord& a, const ReducedWord& b);

// Standard words.
ReducedWord WmnWord(int m, int n);
// (1, 2, 1, 3, 2, 1, ..., n-1, ..., 1).
ReducedWord LexMinLongestWord(int n);
// CanonicalReducedWord(w_o).
ReducedWord LongestWord(int n);
// w(m+n, k) followed by w(m, n) x Id_k.
ReducedWord Assoc1Word(int m, int n, int k);
// w(m, n+k) followed by Id_m x w(n, k).
ReducedWord Assoc2Word(int m, int n, int k);

}  // namespace lrscatter

#endif  // LRSCATTER_PERMUTATIONS_H_
