#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chordarc/curve.hpp"
#include "chordarc/errors.hpp"
#include "curves.hpp"

using namespace chordarc;
using std::numbers::pi;

namespace {

std::pair<double, double> edge_extremes(const DiscreteCurve& c) {
  const auto e = edge_lengths(c);
  return {*std::min_element(e.begin(), e.end()), *std::max_element(e.begin(), e.end())};
}

}  // namespace

TEST(Resample, UnitSquareToEight) {
  const auto c = resample_uniform(testing_curves::unit_square(), 8);
  const std::vector<Point2> expected = {{0, 0},   {0.5, 0}, {1, 0},   {1, 0.5},
                                        {1, 1},   {0.5, 1}, {0, 1},   {0, 0.5}};
  ASSERT_EQ(c.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(c[k].x, expected[k].x, 1e-14);
    EXPECT_NEAR(c[k].y, expected[k].y, 1e-14);
  }
}

TEST(Resample, SquarePreservesLengthWhenCornersAreVertices) {
  const auto c = resample_uniform(testing_curves::unit_square(), 1024);
  EXPECT_NEAR(total_length(c), 4.0, 4.0 * 1e-12);
}

TEST(Resample, IdempotentOnUniformCurve) {
  for (const auto& c : {testing_curves::circle(128), testing_curves::ellipse(512), testing_curves::star(256)}) {
    const auto r = resample_uniform(c, c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      EXPECT_NEAR(r[k].x, c[k].x, 1e-12);
      EXPECT_NEAR(r[k].y, c[k].y, 1e-12);
    }
  }
}

TEST(Resample, EllipseEdgesEqual) {
  const auto c = resample_uniform(sample_ellipse(2.0, 1.0, 3000), 512);
  const auto [lo, hi] = edge_extremes(c);
  EXPECT_LT((hi - lo) / hi, 1e-10);
}

TEST(Resample, SplineModeEdgesEqual) {
  const auto c = resample_uniform(sample_star(0.4, 5, 3000), 700, ResampleMode::kSpline);
  const auto [lo, hi] = edge_extremes(c);
  EXPECT_LT((hi - lo) / hi, 1e-10);
}

TEST(Resample, EdgeRatioWithinAdmissibleBound) {
  for (std::size_t n : {8, 9, 37, 100, 1000}) {
    const auto c = resample_uniform(testing_curves::unit_square(), n);
    EXPECT_LE(edge_ratio(c), 1.2) << n;
  }
}

TEST(Resample, KeepsVertexZeroAndOrientation) {
  const auto src = testing_curves::star(300);
  for (auto mode : {ResampleMode::kPolyline, ResampleMode::kSpline}) {
    const auto r = resample_uniform(src, 411, mode);
    EXPECT_EQ(r[0], src[0]);
    EXPECT_EQ(r.orientation(), 1);
    const auto rr = resample_uniform(src.reversed(), 411, mode);
    EXPECT_EQ(rr.orientation(), -1);
  }
}

TEST(Resample, AreaChangeIsSecondOrder) {
  const auto fine = sample_ellipse(2.0, 1.0, 1 << 14);
  const double exact = 2.0 * pi;
  const double e1 = std::fabs(enclosed_area(resample_uniform(fine, 128)) - exact) / exact;
  const double e2 = std::fabs(enclosed_area(resample_uniform(fine, 256)) - exact) / exact;
  EXPECT_GT(e1 / e2, 3.5);
  EXPECT_LT(e1, 10.0 / (128.0 * 128.0));
}

TEST(Resample, SplineTracksSmoothCurveBetterThanPolyline) {
  const auto coarse = sample_circle(1.0, 64);
  const auto poly = resample_uniform(coarse, 200, ResampleMode::kPolyline);
  const auto spline = resample_uniform(coarse, 200, ResampleMode::kSpline);
  double poly_err = 0.0, spline_err = 0.0;
  for (std::size_t k = 0; k < 200; ++k) {
    poly_err = std::max(poly_err, std::fabs(norm(poly[k]) - 1.0));
    spline_err = std::max(spline_err, std::fabs(norm(spline[k]) - 1.0));
  }
  EXPECT_LT(spline_err, 0.01 * poly_err);
}

TEST(Resample, RejectsTinyTarget) {
  EXPECT_THROW(resample_uniform(testing_curves::circle(64), 7), CurveError);
}
