#include "lrscatter/render.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrscatter/cones.h"

namespace lrscatter {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string SvgHeader(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(w) +
         "\" height=\"" + Num(h) + "\" viewBox=\"0 0 " + Num(w) + " " + Num(h) +
         "\">\n";
}

std::string Text(double x, double y, const std::string& s,
                 const char* anchor = "middle") {
  return "  <text x=\"" + Num(x) + "\" y=\"" + Num(y) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"" +
         anchor + "\">" + s + "</text>\n";
}

std::string Line(double x1, double y1, double x2, double y2,
                 const std::string& attrs) {
  return "  <line x1=\"" + Num(x1) + "\" y1=\"" + Num(y1) + "\" x2=\"" +
         Num(x2) + "\" y2=\"" + Num(y2) + "\" " + attrs + "/>\n";
}

std::string TrimRight(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// ---- wiring diagrams ----

std::string WiringSvg(const ReducedWord& word, int s) {
  const int n = word.rank();
  const auto ord = ReflectionOrdering(word);
  const int levels = static_cast<int>(word.length());
  const double dx = 40, dy = 40, x0 = 30, y0 = 30;
  const double width = x0 * 2 + dx * std::max(0, n - 1) + 60;
  const double height = y0 * 2 + dy * (levels + 1);
  std::string out = SvgHeader(width, height);
  if (s > 0) {
    out +=
        "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" "
        "refX=\"4\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/>"
        "</marker></defs>\n";
  }
  // pos[p] = line at position p, top first.
  std::vector<int> pos(n + 1);
  for (int p = 1; p <= n; ++p) pos[p] = p;
  std::vector<std::vector<std::pair<double, double>>> pts(n + 1);
  auto x_of = [&](int p) { return x0 + dx * (p - 1); };
  for (int p = 1; p <= n; ++p) {
    out += Text(x_of(p), y0 - 12, "U" + std::to_string(p));
    pts[p].push_back({x_of(p), y0});
  }
  for (int k = 0; k < levels; ++k) {
    const int a = word.letters()[levels - 1 - k];
    const double y = y0 + dy * (k + 1);
    std::swap(pos[a], pos[a + 1]);
    for (int p = 1; p <= n; ++p) pts[pos[p]].push_back({x_of(p), y});
    const auto pr = ord[levels - 1 - k];
    out += Text(x_of(a) + dx / 2 + 16, y - dy / 2 + 4,
                "v" + std::to_string(pr.i) + std::to_string(pr.j), "start");
  }
  const Permutation w = Evaluate(word);
  for (int i = 1; i <= n; ++i) {
    const double yb = y0 + dy * (levels + 1);
    pts[i].push_back({pts[i].back().first, yb});
    bool down = s > 0 && w(i) <= s;
    std::string color = s == 0 ? "black" : (down ? "#1f4e9c" : "#b22222");
    auto path = pts[i];
    if (s > 0 && !down) std::reverse(path.begin(), path.end());
    out += "  <polyline fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2\"";
    if (s > 0) out += " marker-mid=\"url(#arrow)\"";
    out += " points=\"";
    for (std::size_t q = 0; q < path.size(); ++q) {
      if (q) out += " ";
      out += Num(path[q].first) + "," + Num(path[q].second);
    }
    out += "\"/>\n";
  }
  for (int p = 1; p <= n; ++p) {
    out += Text(x_of(p), y0 + dy * (levels + 1) + 18, "L" + std::to_string(p));
  }
  out += "</svg>\n";
  return out;
}

std::string WiringAscii(const ReducedWord& word, int s) {
  const int n = word.rank();
  const auto ord = ReflectionOrdering(word);
  const int levels = static_cast<int>(word.length());
  auto col = [](int p) { return 4 * (p - 1); };
  const int width = col(n) + 4;
  std::ostringstream out;
  std::string head(width, ' ');
  for (int p = 1; p <= n; ++p) {
    std::string label = "U" + std::to_string(p);
    head.replace(col(p), std::min<std::size_t>(label.size(), width - col(p)),
                 label.substr(0, width - col(p)));
  }
  out << TrimRight(head) << "\n";
  auto bars = [&](int skip) {
    std::string row(width, ' ');
    for (int p = 1; p <= n; ++p)
      if (p != skip && p != skip + 1) row[col(p)] = '|';
    return row;
  };
  out << TrimRight(bars(-1)) << "\n";
  for (int k = 0; k < levels; ++k) {
    const int a = word.letters()[levels - 1 - k];
    const auto pr = ord[levels - 1 - k];
    std::string r1 = bars(a), r2 = bars(a), r3 = bars(a);
    r1[col(a) + 1] = '\\';
    r1[col(a + 1) - 1] = '/';
    r2[col(a) + 2] = 'X';
    r3[col(a) + 1] = '/';
    r3[col(a + 1) - 1] = '\\';
    out << TrimRight(r1) << "\n";
    out << r2 << "   v" << pr.i << pr.j << "\n";
    out << TrimRight(r3) << "\n";
  }
  out << TrimRight(bars(-1)) << "\n";
  const Permutation w = Evaluate(word);
  const Permutation winv = w.Inverse();
  std::string lines(width, ' ');
  std::string foot(width, ' ');
  for (int p = 1; p <= n; ++p) {
    char mark = '|';
    if (s > 0) mark = p <= s ? 'v' : '^';
    lines[col(p)] = mark;
    std::string label = "L" + std::to_string(p);
    foot.replace(col(p), std::min<std::size_t>(label.size(), width - col(p)),
                 label.substr(0, width - col(p)));
  }
  out << TrimRight(lines) << "\n";
  out << TrimRight(foot) << "\n";
  std::string ends = "ends:";
  for (int p = 1; p <= n; ++p) ends += " L" + std::to_string(p) + "<-" +
                                       std::to_string(winv(p));
  out << ends << "\n";
  return out.str();
}

// ---- web diagrams ----

struct Planar {
  double x;
  double y;
};

// x = (beta - alpha) / 2, y = gamma * sqrt(3) / 2, from doubled coordinates.
Planar ToPlanar(double a2, double b2, double c2) {
  return {(b2 - a2) / 4.0, c2 * std::sqrt(3.0) / 4.0};
}

struct Box {
  int lo_b2, hi_b2, lo_c2, hi_c2;
};

Box WebBox(const WebDiagram& web) {
  Box box{0, 0, 0, 0};
  bool first = true;
  auto take = [&](int b2, int c2) {
    if (first) {
      box = {b2, b2, c2, c2};
      first = false;
      return;
    }
    box.lo_b2 = std::min(box.lo_b2, b2);
    box.hi_b2 = std::max(box.hi_b2, b2);
    box.lo_c2 = std::min(box.lo_c2, c2);
    box.hi_c2 = std::max(box.hi_c2, c2);
  };
  take(0, 0);
  for (const auto& n : web.nodes()) take(n.point.b2, n.point.c2);
  for (const auto& s : web.segments()) {
    if (s.type == LineType::kBeta) take(s.constant2, s.hi2.value_or(0));
    if (s.type == LineType::kAlpha) {
      int c2 = s.hi2.value_or(s.lo2.value_or(0));
      take(-s.constant2 - c2, c2);
    }
  }
  const int pad = 6;
  return {box.lo_b2 - pad, box.hi_b2 + pad, box.lo_c2 - pad, box.hi_c2 + pad};
}

// Endpoints of a segment in doubled coordinates, clamped to the box.
std::pair<std::array<int, 3>, std::array<int, 3>> Ends(const WebSegment& s,
                                                       const Box& box) {
  auto point = [&](int param) -> std::array<int, 3> {
    switch (s.type) {
      case LineType::kAlpha:
        return {s.constant2, -s.constant2 - param, param};
      case LineType::kBeta:
        return {-s.constant2 - param, s.constant2, param};
      case LineType::kGamma:
        return {-s.constant2 - param, param, s.constant2};
    }
    return {0, 0, 0};
  };
  int lo, hi;
  if (s.type == LineType::kGamma) {
    lo = s.lo2.value_or(box.lo_b2);
    hi = s.hi2.value_or(box.hi_b2);
  } else {
    lo = s.lo2.value_or(box.lo_c2);
    hi = s.hi2.value_or(box.hi_c2);
  }
  return {point(lo), point(hi)};
}

std::string WebSvg(const WebDiagram& web) {
  const Box box = WebBox(web);
  const double scale = 40;
  // Planar extent from the box corners.
  double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
  for (int b2 : {box.lo_b2, box.hi_b2})
    for (int c2 : {box.lo_c2, box.hi_c2}) {
      Planar p = ToPlanar(-b2 - c2, b2, c2);
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  const double margin = 20;
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin;
  auto sx = [&](const Planar& p) { return margin + (p.x - min_x) * scale; };
  auto sy = [&](const Planar& p) { return margin + (max_y - p.y) * scale; };
  std::string out = SvgHeader(width, height);
  // Axes through the origin, one per line type.
  const WebSegment axes[] = {{LineType::kAlpha, 0, std::nullopt, std::nullopt, 1},
                             {LineType::kBeta, 0, std::nullopt, std::nullopt, 1},
                             {LineType::kGamma, 0, std::nullopt, std::nullopt,
                              1}};
  for (const auto& a : axes) {
    auto [p, q] = Ends(a, box);
    Planar pp = ToPlanar(p[0], p[1], p[2]), qq = ToPlanar(q[0], q[1], q[2]);
    out += Line(sx(pp), sy(pp), sx(qq), sy(qq),
                "stroke=\"#cccccc\" stroke-dasharray=\"4 4\"");
  }
  for (const auto& s : web.segments()) {
    auto [p, q] = Ends(s, box);
    Planar pp = ToPlanar(p[0], p[1], p[2]), qq = ToPlanar(q[0], q[1], q[2]);
    out += Line(sx(pp), sy(pp), sx(qq), sy(qq),
                "stroke=\"black\" stroke-width=\"" +
                    std::to_string(2 * s.multiplicity) + "\"");
  }
  for (const auto& n : web.nodes()) {
    Planar p = ToPlanar(n.point.a2, n.point.b2, n.point.c2);
    out += "  <circle cx=\"" + Num(sx(p)) + "\" cy=\"" + Num(sy(p)) +
           "\" r=\"" + std::to_string(3 + n.multiplicity) + "\" fill=\"" +
           (n.kind == ForkKind::kLeft ? "black" : "white") +
           "\" stroke=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

// Character grid indexed by doubled coordinates: column B - A, row G.
std::string WebAscii(const WebDiagram& web) {
  const Box box = WebBox(web);
  int min_col = 1 << 30, max_col = -(1 << 30);
  for (int b2 : {box.lo_b2, box.hi_b2})
    for (int c2 : {box.lo_c2, box.hi_c2}) {
      int col = b2 - (-b2 - c2);
      min_col = std::min(min_col, col);
      max_col = std::max(max_col, col);
    }
  std::map<std::pair<int, int>, char> node_glyph;
  for (const auto& n : web.nodes()) {
    auto key = std::make_pair(n.point.b2 - n.point.a2, n.point.c2);
    char g = n.kind == ForkKind::kLeft ? 'o' : '*';
    auto it = node_glyph.find(key);
    node_glyph[key] = it == node_glyph.end() || it->second == g ? g : '@';
  }
  auto glyph_at = [&](int col, int row) -> char {
    if ((col - row) % 2 != 0) {
      // Between two lattice points of a row: continue a gamma segment.
      for (const auto& s : web.segments()) {
        if (s.type != LineType::kGamma || s.constant2 != row) continue;
        int b_left = (col - 1 - row) / 2, b_right = (col + 1 - row) / 2;
        BaricentricPoint l{-b_left - row, b_left, row};
        BaricentricPoint r{-b_right - row, b_right, row};
        if (s.Contains(l) && s.Contains(r)) {
          return s.multiplicity > 1 ? '=' : '-';
        }
      }
      return ' ';
    }
    const int b2 = (col - row) / 2;
    const BaricentricPoint p{-b2 - row, b2, row};
    if (auto it = node_glyph.find({col, row}); it != node_glyph.end()) {
      return it->second;
    }
    int mult = 0;
    int types = 0;
    LineType type = LineType::kGamma;
    for (const auto& s : web.segments()) {
      if (!s.Contains(p)) continue;
      if (mult == 0 || s.type != type) ++types;
      type = s.type;
      mult += s.multiplicity;
    }
    if (mult == 0) {
      return p.a2 == 0 || p.b2 == 0 || p.c2 == 0 ? '.' : ' ';
    }
    if (types > 1) return '+';
    if (mult > 1) return mult > 9 ? '#' : static_cast<char>('0' + mult);
    switch (type) {
      case LineType::kAlpha:
        return '\\';
      case LineType::kBeta:
        return '/';
      case LineType::kGamma:
        return '-';
    }
    return '?';
  };
  std::ostringstream out;
  for (int row = box.hi_c2; row >= box.lo_c2; --row) {
    std::string line;
    for (int col = min_col; col <= max_col; ++col) line += glyph_at(col, row);
    out << TrimRight(line) << "\n";
  }
  return out.str();
}

// ---- BZ patterns ----

std::string BzSvg(const BzPattern& f) {
  const int n = f.rank();
  const double scale = 50, margin = 30;
  const double width = n * scale + 2 * margin;
  const double height = n * std::sqrt(3.0) / 2 * scale + 2 * margin;
  auto sx = [&](Planar p) { return margin + p.x * scale; };
  auto sy = [&](Planar p) { return height - margin - p.y * scale; };
  std::string out = SvgHeader(width, height);
  Planar c0 = ToPlanar(0, 0, 0), c1 = ToPlanar(-2 * n, 2 * n, 0),
         c2 = ToPlanar(-2 * n, 0, 2 * n);
  out += "  <polygon fill=\"none\" stroke=\"#888888\" points=\"" +
         Num(sx(c0)) + "," + Num(sy(c0)) + " " + Num(sx(c1)) + "," +
         Num(sy(c1)) + " " + Num(sx(c2)) + "," + Num(sy(c2)) + "\"/>\n";
  for (const auto& c : HexagonCenters(n)) {
    Planar p = ToPlanar(c.a2, c.b2, c.c2);
    out += "  <circle cx=\"" + Num(sx(p)) + "\" cy=\"" + Num(sy(p)) +
           "\" r=\"3\" fill=\"none\" stroke=\"#888888\"/>\n";
  }
  for (std::size_t k = 0; k < f.points().size(); ++k) {
    const auto& q = f.points()[k];
    Planar p = ToPlanar(q.a2, q.b2, q.c2);
    out += Text(sx(p), sy(p) + 4, std::to_string(f.values()[k]));
  }
  out += "</svg>\n";
  return out;
}

std::string BzAscii(const BzPattern& f) {
  const int n = f.rank();
  std::ostringstream out;
  for (int g = 2 * n - 2; g >= 1; --g) {
    std::string line;
    for (std::size_t k = 0; k < f.points().size(); ++k) {
      const auto& q = f.points()[k];
      if (q.c2 != g) continue;
      // Column 2 * (B - A) keeps two-digit values apart.
      std::size_t col = static_cast<std::size_t>(2 * (q.b2 - q.a2));
      std::string v = std::to_string(f.values()[k]);
      if (line.size() < col) line.resize(col, ' ');
      line += v;
    }
    out << TrimRight(line) << "\n";
  }
  return out.str();
}

}  // namespace

std::string Render(const ReducedWord& word, RenderFormat format, int s) {
  if (s < 0 || s > word.rank()) throw std::invalid_argument("s out of range");
  return format == RenderFormat::kSvg ? WiringSvg(word, s)
                                      : WiringAscii(word, s);
}

std::string Render(const WebDiagram& web, RenderFormat format) {
  return format == RenderFormat::kSvg ? WebSvg(web) : WebAscii(web);
}

std::string Render(const BzPattern& pattern, RenderFormat format) {
  return format == RenderFormat::kSvg ? BzSvg(pattern) : BzAscii(pattern);
}

}  // namespace lrscatter
