#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylkit/bergman_toeplitz.hpp"
#include "weylkit/planar_geometry.hpp"
#include "weylkit/symbol_parser.hpp"

using namespace weylkit;

namespace {

Curve circle_curve(Point c, double r, int n, int turns = 1) {
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) pts.push_back(c + std::polar(r, 2.0 * std::numbers::pi * turns * k / n));
  return Curve(pts);
}

Curve square_curve(int per_side) {
  std::vector<Point> pts;
  const Point corners[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k < per_side; ++k)
      pts.push_back(corners[s] + (corners[(s + 1) % 4] - corners[s]) * (static_cast<double>(k) / per_side));
  return Curve(pts);
}

}  // namespace

TEST(Winding, SquareAroundCentreIsOne) { EXPECT_EQ(winding_number(square_curve(64), Point(0.5, 0.5)), 1); }

TEST(Winding, DoubleCircleIsTwo) { EXPECT_EQ(winding_number(circle_curve(0.0, 1.0, 1024, 2), 0.0), 2); }

TEST(Winding, FarPointIsZero) { EXPECT_EQ(winding_number(circle_curve(0.0, 1.0, 256), Point(3.0, 0.0)), 0); }

TEST(Winding, ReversalFlipsSign) {
  const Curve c = circle_curve(0.0, 1.0, 256);
  EXPECT_EQ(winding_number(c.reversed(), 0.0), -winding_number(c, 0.0));
}

TEST(Winding, ExactSampleRaisesPointOnCurve) {
  const Curve c = circle_curve(0.0, 1.0, 64);
  EXPECT_THROW(winding_number(c, c[5]), PointOnCurve);
}

TEST(Winding, PointInsideSafetyMarginRaises) {
  const Curve c = circle_curve(0.0, 1.0, 64);
  // Ten gaps is the margin; this point sits half a gap off the curve.
  EXPECT_THROW(winding_number(c, Point(1.0 + 0.5 * c.max_gap(), 0.0)), PointOnCurve);
}

TEST(Winding, NonFiniteQueryIsInvalid) {
  EXPECT_THROW(winding_number(circle_curve(0.0, 1.0, 64), Point(NAN, 0.0)), InvalidInput);
}

TEST(Curve, TooFewSamples) {
  EXPECT_THROW(Curve(std::vector<Point>(15, Point(0.0, 0.0))), InvalidInput);
  std::vector<Point> pts(16, Point(1.0, 0.0));
  pts[3] = Point(INFINITY, 0.0);
  EXPECT_THROW(Curve{pts}, InvalidInput);
}

TEST(Winding, RawSumIsNearInteger) {
  for (int m = 1; m <= 3; ++m) {
    const Curve c = boundary_curve(SymbolExpr::monomial(m), 4096);
    const double raw = winding_sum(c, 0.0);
    EXPECT_NEAR(raw, m, 1e-6);
    const double raw_bar = winding_sum(boundary_curve(SymbolExpr::monomial(-m), 4096), 0.0);
    EXPECT_NEAR(raw_bar, -m, 1e-6);
  }
}

TEST(Winding, AgreesWithCrossingOracleOnRandomPolygons) {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Star-shaped wiggly loop possibly traversed several times.
    const int turns = 1 + trial % 3;
    const double amp = 0.3 * std::abs(u(rng));
    const int freq = 1 + trial % 5;
    std::vector<Point> pts;
    const int n = 600;
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * std::numbers::pi * k / n;
      pts.push_back(std::polar(1.0 + amp * std::sin(freq * t), turns * t));
    }
    const Curve c(pts);
    const Point p(1.5 * u(rng), 1.5 * u(rng));
    if (c.distance_to_samples(p) <= 10.0 * c.max_gap()) continue;
    EXPECT_EQ(winding_number(c, p), oracle::crossing_winding(pts, p)) << "trial " << trial;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Holes, UnitCircleHasOneHoleOfWindingOne) {
  const auto holes = find_holes(circle_curve(0.0, 1.0, 4096), 512);
  ASSERT_EQ(holes.size(), 1u);
  EXPECT_EQ(holes[0].winding, 1);
  EXPECT_LT(std::abs(holes[0].representative), 0.05);
}

TEST(Holes, FigureEightHasOppositeWindings) {
  std::vector<Point> pts;
  const int n = 4096;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    pts.push_back(Point(std::sin(t), std::sin(t) * std::cos(t)));
  }
  const auto holes = find_holes(Curve(pts), 512);
  ASSERT_EQ(holes.size(), 2u);
  EXPECT_EQ(holes[0].winding + holes[1].winding, 0);
  EXPECT_EQ(std::abs(holes[0].winding), 1);
  for (const auto& h : holes) EXPECT_EQ(h.winding, oracle::crossing_winding(pts, h.representative));
}

TEST(Holes, DegenerateCurveRaises) {
  EXPECT_THROW(find_holes(Curve(std::vector<Point>(64, Point(0.25, 0.0))), 512), DegenerateCurve);
}

TEST(Holes, GridBelowMinimumIsInvalid) { EXPECT_THROW(find_holes(circle_curve(0.0, 1.0, 64), 32), InvalidInput); }

TEST(Holes, WindingsMatchArgumentPrincipleAtRepresentatives) {
  const char* exprs[] = {"z", "zbar", "z^2", "zbar + (1/3)*z^2", "z - z^2 + 4/5*zbar^3", "z^3 + 1/2*zbar"};
  for (const char* text : exprs) {
    const SymbolExpr s = parse_symbol(text);
    for (const auto& h : find_holes(boundary_curve(s, 4096), 512))
      EXPECT_EQ(h.winding, oracle::argument_principle_winding(s.terms(), h.representative)) << text;
  }
}

TEST(Holes, SelfCrossingSymbolHasZeroWindingHoles) {
  const auto holes = find_holes(boundary_curve(parse_symbol("z - z^2 + 4/5*zbar^3"), 4096), 512);
  int zero = 0;
  for (const auto& h : holes) zero += h.winding == 0;
  EXPECT_GE(zero, 1);
}

TEST(Holes, RepresentativesLieInsideTheirHoles) {
  const Curve c = boundary_curve(parse_symbol("z - z^2 + 4/5*zbar^3"), 4096);
  const HoleMap map = analyze_holes(c, 512);
  for (const auto& h : map.holes()) {
    const auto id = map.hole_at(h.representative);
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ(*id, h.component_id);
    EXPECT_GT(h.cell_count, 0);
  }
}

TEST(Holes, StableAcrossResolutions) {
  const SymbolExpr s = parse_symbol("zbar + (1/3)*z^2");
  for (int g : {256, 512, 1024}) {
    const auto holes = find_holes(boundary_curve(s, 4096), g);
    ASSERT_EQ(holes.size(), 1u) << g;
    EXPECT_EQ(holes[0].winding, -1);
  }
}

TEST(Holes, TranslationInvariance) {
  const Curve c = circle_curve(0.0, 1.0, 2048);
  const auto a = find_holes(c, 256);
  const auto b = find_holes(c.translated(Point(7.0, -3.0)), 256);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].winding, b[i].winding);
    EXPECT_EQ(a[i].cell_count, b[i].cell_count);
  }
}

TEST(Winding, SymbolFixturesAtOrigin) {
  EXPECT_EQ(winding_number(boundary_curve(parse_symbol("z"), 4096), 0.0), 1);
  EXPECT_EQ(winding_number(boundary_curve(parse_symbol("zbar"), 4096), 0.0), -1);
  EXPECT_EQ(winding_number(boundary_curve(parse_symbol("zbar + (1/3)*z^2"), 4096), 0.0), -1);
  EXPECT_EQ(winding_number(boundary_curve(parse_symbol("zbar + (1/3)*z^2"), 65536), 0.0), -1);
}

TEST(Holes, DoublyTracedCircleHasWindingTwo) {
  const auto holes = find_holes(boundary_curve(parse_symbol("z^2"), 4096), 512);
  ASSERT_EQ(holes.size(), 1u);
  EXPECT_EQ(holes[0].winding, 2);
}

TEST(Holes, FixtureCurvesStableAcrossResolutions) {
  for (const char* text : {"z", "z^2", "zbar", "zbar + (1/3)*z^2"}) {
    const Curve c = boundary_curve(parse_symbol(text), 4096);
    const auto base = find_holes(c, 256);
    for (int g : {512, 1024}) {
      const auto other = find_holes(c, g);
      ASSERT_EQ(other.size(), base.size()) << text << " at " << g;
      for (std::size_t i = 0; i < base.size(); ++i) EXPECT_EQ(other[i].winding, base[i].winding) << text;
    }
  }
}

TEST(Holes, WindingConstantAcrossEachComponent) {
  const Curve c = boundary_curve(parse_symbol("z - z^2 + 4/5*zbar^3"), 4096);
  const HoleMap map = analyze_holes(c, 512);
  std::mt19937_64 rng(7);
  const auto& f = map.frame();
  for (const auto& h : map.holes()) {
    std::vector<std::size_t> cells;
    for (std::size_t k = 0; k < map.labels().size(); ++k)
      if (map.labels()[k] == h.component_id) cells.push_back(k);
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    int tested = 0;
    for (int attempt = 0; attempt < 200 && tested < 8; ++attempt) {
      const Point p = f.center(cells[pick(rng)]);
      if (c.distance_to_samples(p) <= 10.0 * c.max_gap()) continue;
      EXPECT_EQ(winding_number(c, p), h.winding);
      ++tested;
    }
  }
}

TEST(Winding, TranslationEquivariance) {
  const Curve c = boundary_curve(parse_symbol("z^3 + 1/2*zbar"), 1024);
  const Point shift(2.5, -1.25);
  for (Point p : {Point(0.0, 0.0), Point(0.2, 0.1), Point(3.0, 0.0)})
    EXPECT_EQ(winding_number(c.translated(shift), p + shift), winding_number(c, p));
}
