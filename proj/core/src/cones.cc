#include "lrscatter/cones.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace lrscatter {

std::string ToString(const Vertex& v) {
  switch (v.kind) {
    case Vertex::Kind::kCrossing:
      return "v" + std::to_string(v.a) + std::to_string(v.b);
    case Vertex::Kind::kUpper:
      return "U" + std::to_string(v.a);
    case Vertex::Kind::kLower:
      return "L" + std::to_string(v.a);
  }
  return "?";
}

WiringGraph::WiringGraph(const ReducedWord& word, int s)
    : word_(word), s_(s) {
  const int n = word.rank();
  if (s < 0 || s > n) throw std::invalid_argument("s out of range");
  const auto ord = ReflectionOrdering(word);
  const Permutation w = Evaluate(word);
  orientation_.assign(n + 1, Orientation::kUp);
  line_vertices_.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) line_vertices_[i].push_back(Vertex::Upper(i));
  for (std::size_t r = ord.size(); r-- > 0;) {
    const auto [p, q] = ord[r];
    line_vertices_[p].push_back(Vertex::Crossing(p, q));
    line_vertices_[q].push_back(Vertex::Crossing(p, q));
  }
  for (int i = 1; i <= n; ++i) {
    line_vertices_[i].push_back(Vertex::Lower(w(i)));
    orientation_[i] = w(i) <= s ? Orientation::kDown : Orientation::kUp;
    const auto& vs = line_vertices_[i];
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      if (orientation_[i] == Orientation::kDown) {
        out_[vs[k]].push_back({vs[k], vs[k + 1], i});
      } else {
        out_[vs[k + 1]].push_back({vs[k + 1], vs[k], i});
      }
    }
  }
}

const std::vector<Edge>& WiringGraph::OutEdges(const Vertex& v) const {
  static const std::vector<Edge> kNone;
  auto it = out_.find(v);
  return it == out_.end() ? kNone : it->second;
}

namespace {

bool Forbidden(const WiringGraph& g, const Vertex& via, int line) {
  if (via.kind != Vertex::Kind::kCrossing) return false;
  const int other = via.a == line ? via.b : via.a;
  const auto up = Orientation::kUp;
  const auto down = Orientation::kDown;
  if (line < other) {
    return g.orientation(line) == up && g.orientation(other) == up;
  }
  return g.orientation(line) == down && g.orientation(other) == down;
}

void Dfs(const WiringGraph& g, const Vertex& to, Path& cur,
         std::vector<Path>& out) {
  const Vertex u = cur.vertices.back();
  if (u == to && cur.vertices.size() > 1) {
    out.push_back(cur);
    return;
  }
  for (const Edge& e : g.OutEdges(u)) {
    if (!cur.lines.empty() && cur.lines.back() == e.line &&
        Forbidden(g, u, e.line)) {
      continue;
    }
    cur.vertices.push_back(e.to);
    cur.lines.push_back(e.line);
    Dfs(g, to, cur, out);
    cur.vertices.pop_back();
    cur.lines.pop_back();
  }
}

}  // namespace

std::vector<Path> RigorousPaths(const WiringGraph& g, const Vertex& from,
                                const Vertex& to) {
  std::vector<Path> out;
  Path cur;
  cur.vertices.push_back(from);
  Dfs(g, to, cur, out);
  return out;
}

LinearForm::LinearForm(std::map<Inversion, int> coeffs) {
  for (const auto& [p, v] : coeffs) Add(p.i, p.j, v);
}

void LinearForm::Add(int p, int q, int coeff) {
  if (p == q || coeff == 0) return;
  if (p > q) {
    std::swap(p, q);
    coeff = -coeff;
  }
  int& v = coeffs_[{p, q}];
  v += coeff;
  if (v == 0) coeffs_.erase({p, q});
}

int LinearForm::Evaluate(const ParamCollection& c) const {
  int s = 0;
  for (const auto& [p, v] : coeffs_) s += v * c.At(p.i, p.j);
  return s;
}

std::string ToString(const LinearForm& f) {
  if (f.IsZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, v] : f.coeffs()) {
    int mag = std::abs(v);
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "c" + std::to_string(p.i) + std::to_string(p.j);
    first = false;
  }
  return out;
}

LinearForm PathForm(const Path& p) {
  LinearForm f;
  for (std::size_t r = 0; r + 1 < p.lines.size(); ++r) {
    f.Add(p.lines[r], p.lines[r + 1], 1);
  }
  return f;
}

ConeDescription PrincipalCone(const ReducedWord& word) {
  std::set<LinearForm> forms;
  for (int s = 1; s < word.rank(); ++s) {
    WiringGraph g(word, s);
    for (const Path& p :
         RigorousPaths(g, Vertex::Lower(s + 1), Vertex::Lower(s))) {
      LinearForm f = PathForm(p);
      if (!f.IsZero()) forms.insert(std::move(f));
    }
  }
  return {word, std::vector<LinearForm>(forms.begin(), forms.end())};
}

ConeDescription ConeMn(int m, int n) { return PrincipalCone(WmnWord(m, n)); }

bool Contains(const ConeDescription& cone, const ParamCollection& c) {
  return std::all_of(cone.inequalities.begin(), cone.inequalities.end(),
                     [&](const LinearForm& f) { return f.Evaluate(c) >= 0; });
}

namespace {

void RequireKeys(const ReducedWord& word, const ParamCollection& c) {
  if (c.rank() != word.rank() || c.keys() != InversionSet(Evaluate(word))) {
    throw std::invalid_argument("parameters are not keyed by I(w) of " +
                                ToString(word));
  }
}

}  // namespace

bool Contains(const ReducedWord& word, const ParamCollection& c) {
  RequireKeys(word, c);
  return Contains(PrincipalCone(word), c);
}

std::optional<int> MinPathValue(const ReducedWord& word, int s,
                                const Vertex& from, const Vertex& to,
                                const ParamCollection& c) {
  RequireKeys(word, c);
  WiringGraph g(word, s);
  std::optional<int> best;
  for (const Path& p : RigorousPaths(g, from, to)) {
    int v = PathForm(p).Evaluate(c);
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace lrscatter
