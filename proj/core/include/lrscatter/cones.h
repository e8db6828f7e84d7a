#ifndef LRSCATTER_CONES_H_
#define LRSCATTER_CONES_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrscatter/params.h"
#include "lrscatter/permutations.h"

namespace lrscatter {

// A vertex of the wiring graph: the crossing of lines (i, j), the upper end
// U_i or the lower end L_i.
struct Vertex {
  enum class Kind { kCrossing, kUpper, kLower };
  Kind kind = Kind::kCrossing;
  int a = 0;
  int b = 0;

  static Vertex Crossing(int i, int j) { return {Kind::kCrossing, i, j}; }
  static Vertex Upper(int i) { return {Kind::kUpper, i, 0}; }
  static Vertex Lower(int i) { return {Kind::kLower, i, 0}; }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string ToString(const Vertex& v);

enum class Orientation { kUp, kDown };

struct Edge {
  Vertex from;
  Vertex to;
  int line = 0;
};

// G(a, s): pseudo-lines ending at L_1..L_s point down, the others up.
class WiringGraph {
 public:
  WiringGraph(const ReducedWord& word, int s);

  const ReducedWord& word() const { return word_; }
  int s() const { return s_; }
  Orientation orientation(int line) const { return orientation_[line]; }
  // Vertices along the line from its upper end to its lower end.
  const std::vector<Vertex>& line_vertices(int line) const {
    return line_vertices_[line];
  }
  const std::vector<Edge>& OutEdges(const Vertex& v) const;

 private:
  ReducedWord word_;
  int s_ = 0;
  std::vector<Orientation> orientation_;
  std::vector<std::vector<Vertex>> line_vertices_;
  std::map<Vertex, std::vector<Edge>> out_;
};

struct Path {
  std::vector<Vertex> vertices;
  // lines[r] carries the edge from vertices[r] to vertices[r + 1].
  std::vector<int> lines;
};

// Directed paths from -> to with no forbidden straight passage: three
// consecutive vertices on line i through the crossing v_ij with i < j and
// both lines up, or i > j and both lines down.
std::vector<Path> RigorousPaths(const WiringGraph& g, const Vertex& from,
                                const Vertex& to);

// Integer combination of parameters, zero coefficients dropped.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::map<Inversion, int> coeffs);

  // Adds coeff * c_pq with c_qp = -c_pq and c_pp = 0.
  void Add(int p, int q, int coeff);
  const std::map<Inversion, int>& coeffs() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  int Evaluate(const ParamCollection& c) const;

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  std::map<Inversion, int> coeffs_;
};

// Renders e.g. "c13 - c23".
std::string ToString(const LinearForm& f);

// c_P: sum over consecutive edge lines of c_{i_r i_{r+1}}.
LinearForm PathForm(const Path& p);

// Inequalities f >= 0, sorted and without duplicates.
struct ConeDescription {
  ReducedWord word;
  std::vector<LinearForm> inequalities;
};

// c_P >= 0 over all rigorous L_{s+1} -> L_s paths of G(a, s), s = 1..n-1.
ConeDescription PrincipalCone(const ReducedWord& word);
ConeDescription ConeMn(int m, int n);

bool Contains(const ConeDescription& cone, const ParamCollection& c);
bool Contains(const ReducedWord& word, const ParamCollection& c);

// Minimum of c_P over rigorous paths from -> to in G(a, s); nullopt stands
// for +infinity (no path).
std::optional<int> MinPathValue(const ReducedWord& word, int s,
                                const Vertex& from, const Vertex& to,
                                const ParamCollection& c);

}  // namespace lrscatter

#endif  // LRSCATTER_CONES_H_
