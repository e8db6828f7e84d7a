#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lrscatter/render.h"

namespace lrscatter {
namespace {

// Snapshot fixed at first render: a missing golden file is written, an
// existing one must match byte for byte.
void ExpectGolden(const std::string& name, const std::string& got) {
  const std::filesystem::path path =
      std::filesystem::path(LRSCATTER_GOLDEN_DIR) / name;
  if (!std::filesystem::exists(path)) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << got;
    std::cerr << "wrote new golden file " << path << "\n";
    return;
  }
  std::ifstream in(path);
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(got, want.str()) << name;
}

WebDiagram SampleWeb() {
  ParamCollection c({{1, 3}, {1, 4}, {2, 3}, {2, 4}}, {1, 1, 1, 0}, 4);
  return *WebFromScattering(BasisTuple({1, 2}), BasisTuple({1, 2}), c);
}

TEST(Render, WiringGolden) {
  ExpectGolden("wiring_121_s2.svg",
               Render(ReducedWord({1, 2, 1}, 3), RenderFormat::kSvg, 2));
  ExpectGolden("wiring_121_s2.txt",
               Render(ReducedWord({1, 2, 1}, 3), RenderFormat::kAscii, 2));
  ExpectGolden("wiring_212321.txt",
               Render(ReducedWord({2, 1, 2, 3, 2, 1}, 4), RenderFormat::kAscii));
}

TEST(Render, WebGolden) {
  ExpectGolden("web_12_12.svg", Render(SampleWeb(), RenderFormat::kSvg));
  ExpectGolden("web_12_12.txt", Render(SampleWeb(), RenderFormat::kAscii));
  ExpectGolden("web_empty.txt", Render(WebDiagram(), RenderFormat::kAscii));
}

TEST(Render, BzGolden) {
  std::vector<int> a(18);
  for (int k = 0; k < 18; ++k) a[k] = k + 1;
  ExpectGolden("bz_4.txt", Render(BzPattern(4, a), RenderFormat::kAscii));
  ExpectGolden("bz_4.svg", Render(BzPattern(4, a), RenderFormat::kSvg));
}

TEST(Render, WiringContents) {
  auto txt = Render(ReducedWord({1, 2, 1}, 3), RenderFormat::kAscii, 2);
  EXPECT_NE(txt.find("v12"), std::string::npos);
  EXPECT_NE(txt.find("v13"), std::string::npos);
  EXPECT_NE(txt.find("v23"), std::string::npos);
  EXPECT_NE(txt.find("ends: L1<-3 L2<-2 L3<-1"), std::string::npos);
  auto svg = Render(ReducedWord({1, 2, 1}, 3), RenderFormat::kSvg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Render, BzRowsFollowTriangle) {
  std::vector<int> a(18);
  for (int k = 0; k < 18; ++k) a[k] = k + 1;
  std::istringstream in(Render(BzPattern(4, a), RenderFormat::kAscii));
  std::vector<std::vector<int>> rows;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::vector<int> r;
    for (int v; ls >> v;) r.push_back(v);
    if (!r.empty()) rows.push_back(r);
  }
  std::vector<std::vector<int>> expect = {{18},         {16, 17},
                                          {14, 15},     {10, 11, 12, 13},
                                          {7, 8, 9},    {1, 2, 3, 4, 5, 6}};
  EXPECT_EQ(rows, expect);
}

TEST(Render, EmptyWebHasAxes) {
  auto txt = Render(WebDiagram(), RenderFormat::kAscii);
  EXPECT_NE(txt.find(". . ."), std::string::npos);
  auto svg = Render(WebDiagram(), RenderFormat::kSvg);
  EXPECT_NE(svg.find("<line"), std::string::npos);
}

}  // namespace
}  // namespace lrscatter
