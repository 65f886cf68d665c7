#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "figure_cases.hpp"
#include "serreku/figures.hpp"

using namespace serreku;

namespace {

const VarietyParams& gm() {
  static const VarietyParams v = make_variety(6);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Figures, GoldenFiles) {
  bool update = std::getenv("SERREKU_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : figcase::golden_cases(gm())) {
    std::string svg = render(c.spec, gm());
    std::string path = figcase::fixture_path(c.name);
    if (update) {
      std::ofstream(path, std::ios::binary) << svg;
      continue;
    }
    std::string golden = slurp(path);
    ASSERT_FALSE(golden.empty()) << path;
    EXPECT_EQ(svg, golden) << c.name;
  }
}

TEST(Figures, Deterministic) {
  for (const auto& c : figcase::golden_cases(gm())) EXPECT_EQ(render(c.spec, gm()), render(c.spec, gm())) << c.name;
}

TEST(Figures, AnchorFidelity) {
  for (const auto& c : figcase::golden_cases(gm())) {
    std::string svg = render(c.spec, gm());
    EXPECT_EQ(figcase::check_anchor_fidelity(svg, figcase::expected_anchors(c.name)), "") << c.name;
  }
}

TEST(Figures, AnchorsAreExact) {
  FigureSpec spec{RegionsFigure{}, default_window(RegionsFigure{})};
  auto anchors = figure_anchors(spec, gm());
  bool found = false;
  for (const auto& a : anchors)
    if (a.label == "U") {
      found = true;
      EXPECT_EQ(a.s, QuadraticSurd(Rational(-1, 2)));
      EXPECT_EQ(a.q, QuadraticSurd(Rational(1, 20)));
    }
  EXPECT_TRUE(found);
  std::string svg = render(spec, gm());
  EXPECT_NE(svg.find("data-label=\"U\" data-s=\"-1/2\" data-q=\"1/20\""), std::string::npos);
}

TEST(Figures, CurvesAreDense) {
  // plain scanning: std::regex recurses per character on long attributes
  for (const auto& c : figcase::golden_cases(gm())) {
    std::string svg = render(c.spec, gm());
    int curves = 0;
    for (std::size_t pos = 0; (pos = svg.find("<polyline class=\"", pos)) != std::string::npos; ++pos) {
      std::size_t cb = pos + 17, ce = svg.find('"', cb);
      std::string cls = svg.substr(cb, ce - cb);
      if (cls != "parabola" && cls != "li-parabola") continue;
      std::size_t pb = svg.find("points=\"", ce) + 8, pe = svg.find('"', pb);
      std::string pts = svg.substr(pb, pe - pb);
      EXPECT_GE(std::count(pts.begin(), pts.end(), ' ') + 1, 200) << c.name << " " << cls;
      ++curves;
    }
    EXPECT_GT(curves, 0) << c.name;
  }
}

TEST(Figures, NoNegativeZeroOrNan) {
  for (const auto& c : figcase::golden_cases(gm())) {
    std::string svg = render(c.spec, gm());
    EXPECT_EQ(svg.find("nan"), std::string::npos);
    for (std::size_t pos = 0; (pos = svg.find("-0", pos)) != std::string::npos; ++pos) {
      char next = pos + 2 < svg.size() ? svg[pos + 2] : ' ';
      EXPECT_TRUE(next == '.' || std::isdigit(static_cast<unsigned char>(next))) << c.name << " at " << pos;
    }
  }
}

TEST(Figures, EmptyWindow) {
  FigureSpec spec{LiBoundaryFigure{}, {1, 1, 0, 1}};
  try {
    render(spec, gm());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyWindow);
  }
  spec.window = {0, 1, 0, 1};
  spec.width_px = 0;
  EXPECT_THROW(render(spec, gm()), Error);
}

TEST(Figures, OtherGenus) {
  auto v10 = make_variety(10);
  FigureSpec spec{RegionsFigure{}, default_window(RegionsFigure{})};
  std::string svg = render(spec, v10);
  EXPECT_NE(svg.find("data-label=\"E2\""), std::string::npos);
}
