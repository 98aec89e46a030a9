#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "chordarc/curve_io.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/flow.hpp"
#include "curves.hpp"

using namespace chordarc;
using std::numbers::pi;

namespace {

StepperConfig config(std::size_t n, double max_time, long monitor_every = 100) {
  StepperConfig c;
  c.mesh_size = n;
  c.max_time = max_time;
  c.monitor_every = monitor_every;
  c.keep_snapshots = false;
  return c;
}

double max_radius_error(const DiscreteCurve& c, double r) {
  double e = 0.0;
  for (const auto& p : c.vertices()) e = std::max(e, std::fabs(norm(p) - r));
  return e;
}

}  // namespace

TEST(StepperConfig, Validation) {
  StepperConfig c;
  EXPECT_NO_THROW(c.validate());
  c.cfl = 0.6;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.mesh_size = 4;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.resample_every = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.max_time = -1;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.monitor_every = 0;
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(Scheme, ParseAndPrint) {
  EXPECT_EQ(parse_scheme("rk2"), Scheme::kRk2);
  EXPECT_EQ(parse_scheme("euler"), Scheme::kExplicitEuler);
  EXPECT_EQ(to_string(Scheme::kRk2), "rk2");
  EXPECT_THROW(parse_scheme("rk4"), DomainError);
}

TEST(NormalVelocity, UnitCircle) {
  const auto c = testing_curves::circle(1024);
  for (double f : normal_velocity(c, 1.0)) EXPECT_NEAR(f, 0.0, 1e-4);
  for (double f : normal_velocity(c, 0.0)) EXPECT_NEAR(f, -1.0, 1e-4);
}

TEST(NormalVelocity, EllipseTip) {
  EXPECT_NEAR(normal_velocity(testing_curves::ellipse(4096), 0.0)[0], -2.0, 2e-2);
}

TEST(CflDt, CircleParabolicCap) {
  StepperConfig c;
  c.cfl = 0.4;
  const double dt = cfl_dt(testing_curves::circle(256), 0.0, c);
  EXPECT_NEAR(dt, 0.4 * std::pow(2.0 * pi / 256, 2), 1e-4 * dt);
  EXPECT_NEAR(dt, 2.41e-4, 1e-6);
  const double dt2 = cfl_dt(testing_curves::circle(512), 0.0, c);
  EXPECT_NEAR(dt / dt2, 4.0, 1e-3);
}

TEST(CflDt, DisplacementCapUnderStrongForcing) {
  const auto c = testing_curves::circle(64);
  const auto e = edge_lengths(c);
  const double ds = *std::min_element(e.begin(), e.end());
  const double kappa = vertex_frames(c)[0].curvature;
  StepperConfig cfg;
  const double h = 100.0;
  const double parabolic = cfg.cfl * ds * ds;
  const double displacement = cfg.cfl * ds / (h - kappa);
  ASSERT_LT(displacement, parabolic);
  EXPECT_NEAR(cfl_dt(c, h, cfg), displacement, 1e-15);
  EXPECT_NEAR(cfl_dt(c, 0.0, cfg), parabolic, 1e-15);
}

TEST(Step, CircleAreaPreservingStationary) {
  const ForcingSpec spec{ForcingKind::kAreaPreserving};
  FlowState s = FlowState::initial(testing_curves::circle(1024), spec);
  const double a0 = s.scalars.area;
  const auto cfg = config(1024, 100.0);
  for (int k = 0; k < 1000; ++k) {
    s = step(s, spec, cfg);
    EXPECT_NEAR(s.forcing, 1.0, 1e-4);
  }
  EXPECT_LT(max_radius_error(s.curve, 1.0), 1e-3);
  EXPECT_NEAR(s.scalars.area, a0, 1e-6 * a0);
  EXPECT_EQ(s.step_index, 1000);
}

TEST(Step, ScalarsRecomputedFromCurve) {
  const ForcingSpec spec{ForcingKind::kLengthPreserving};
  FlowState s = FlowState::initial(testing_curves::star(256), spec);
  for (int k = 0; k < 150; ++k) s = step(s, spec, config(256, 1.0));
  EXPECT_DOUBLE_EQ(s.scalars.length, total_length(s.curve));
  EXPECT_DOUBLE_EQ(s.scalars.area, enclosed_area(s.curve));
  EXPECT_NEAR(s.forcing, evaluate_forcing(spec, s.curve), 1e-12 * s.forcing);
  EXPECT_EQ(s.last_resample_step, 100);
}

TEST(Step, StopsExactlyAtMaxTime) {
  const ForcingSpec spec{};
  FlowState s = FlowState::initial(testing_curves::circle(64), spec);
  const auto cfg = config(64, 0.01);
  while (s.time < cfg.max_time) s = step(s, spec, cfg);
  EXPECT_EQ(s.time, 0.01);
}

TEST(Step, UnresolvedCurvatureReported) {
  // Square with edge midpoints: kappa * ds = pi / 2 at the corners.
  const DiscreteCurve c({{0, 0}, {0.5, 0}, {1, 0}, {1, 0.5}, {1, 1}, {0.5, 1}, {0, 1}, {0, 0.5}});
  const ForcingSpec spec{};
  try {
    step(FlowState::initial(c, spec), spec, config(8, 1.0));
    FAIL();
  } catch (const FlowError& e) {
    EXPECT_EQ(e.kind(), TerminalStatus::kResolutionLost);
    EXPECT_EQ(e.last_good().step_index, 0);
  }
}

TEST(Run, ShrinkingCircleMatchesExactRadius) {
  const auto traj = run(testing_curves::circle(256), ForcingSpec{}, config(256, 0.3, 500));
  EXPECT_EQ(traj.status, TerminalStatus::kClean);
  EXPECT_EQ(traj.samples.back().time, 0.3);
  const double r = std::sqrt(0.4);
  const double mean_radius = traj.samples.back().length / (2.0 * pi);
  EXPECT_NEAR(mean_radius, r, 1e-3);
  for (const auto& s : traj.samples) {
    EXPECT_NEAR(s.area, pi * (1.0 - 2.0 * s.time), 2e-3);
  }
}

TEST(Run, TimesStrictlyIncreasingAndAllEmbedded) {
  for (const char* f : {"zero", "area", "length", "jianpan"}) {
    const auto traj = run(testing_curves::circle(128), ForcingSpec::parse(f), config(128, f[0] == 'z' ? 0.3 : 1.0, 50));
    EXPECT_EQ(traj.status, TerminalStatus::kClean) << f;
    for (std::size_t k = 1; k < traj.samples.size(); ++k) {
      EXPECT_GT(traj.samples[k].time, traj.samples[k - 1].time);
    }
    for (const auto& s : traj.samples) EXPECT_TRUE(s.embedded);
  }
}

TEST(Run, EllipseLengthPreserving) {
  const auto traj = run(testing_curves::ellipse(512), ForcingSpec::parse("length"), config(512, 0.5, 50));
  ASSERT_EQ(traj.status, TerminalStatus::kClean);
  const double l0 = traj.samples.front().length;
  double prev_ratio = 0.0;
  for (const auto& s : traj.samples) {
    EXPECT_NEAR(s.length, l0, 1e-4 * l0);
    EXPECT_GE(s.ratio_min, prev_ratio - 1e-3);
    prev_ratio = s.ratio_min;
  }
  EXPECT_GT(traj.samples.back().ratio_min, traj.samples.front().ratio_min + 0.15);
}

TEST(Run, CsfLengthDecaysByCurvatureIntegral) {
  auto cfg = config(512, 0.05, 20);
  cfg.keep_snapshots = true;
  const auto traj = run(testing_curves::star(512, 0.2), ForcingSpec{}, cfg);
  ASSERT_GE(traj.samples.size(), 5u);
  for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
    const auto& a = traj.samples[k - 1];
    const auto& b = traj.samples[k + 1];
    const double dldt = (b.length - a.length) / (b.time - a.time);
    const double k2 = integral_curvature_squared(traj.snapshots[k]);
    EXPECT_NEAR(dldt, -k2, 0.05 * k2) << "t=" << traj.samples[k].time;
  }
}

TEST(Run, RejectsNonEmbeddedInput) {
  EXPECT_THROW(run(DiscreteCurve(testing_curves::limacon(256)), ForcingSpec{}, config(256, 0.1)), AdmissionError);
}

TEST(Run, ReversesNegativeOrientationWithNotice) {
  const auto traj = run(testing_curves::circle(128).reversed(), ForcingSpec{}, config(128, 0.01));
  ASSERT_FALSE(traj.notices.empty());
  EXPECT_NE(traj.notices.front().find("reversed"), std::string::npos);
  EXPECT_GT(traj.samples.front().area, 0.0);
}

TEST(Run, StarAreaPreservingConservesArea) {
  const auto traj = run(testing_curves::star(512), ForcingSpec::parse("area"), config(512, 0.3));
  EXPECT_EQ(traj.status, TerminalStatus::kClean);
  const double a0 = traj.samples.front().area;
  for (const auto& s : traj.samples) EXPECT_NEAR(s.area, a0, 1e-4 * a0);
}

TEST(Run, InadmissibleInputRunsWithWarning) {
  const auto c = testing_curves::named("spiral_notch", 256);
  const auto traj = run(c, ForcingSpec::parse("jianpan"), config(256, 0.02));
  EXPECT_FALSE(traj.admissible);
  EXPECT_LT(traj.theta0_min, -pi);
  const bool warned = std::any_of(traj.notices.begin(), traj.notices.end(),
                                  [](const std::string& n) { return n.find("warning") != std::string::npos; });
  EXPECT_TRUE(warned);
}

TEST(Run, DeterministicTrajectoryCsv) {
  auto once = [] {
    std::ostringstream out;
    write_trajectory_csv(out, run(testing_curves::star(256), ForcingSpec::parse("jianpan"), config(256, 0.05, 25)));
    return out.str();
  };
  const std::string a = once();
  EXPECT_EQ(a, once());
  EXPECT_EQ(a.substr(0, a.find('\n')), "time,ratio_min,theta_min,theta_max,L,A,h,kappa_max,embedded");
}

TEST(Run, SnapshotsWritten) {
  auto cfg = config(64, 0.01, 10);
  cfg.keep_snapshots = true;
  const auto traj = run(testing_curves::circle(64), ForcingSpec{}, cfg);
  ASSERT_EQ(traj.snapshots.size(), traj.samples.size());
  const auto dir = std::filesystem::temp_directory_path() / "chordarc_snapshot_test";
  std::filesystem::remove_all(dir);
  write_snapshots(dir, traj);
  const auto back = read_curve_points(dir / "snapshots" / "t_1.curve");
  ASSERT_EQ(back.size(), 64u);
  for (std::size_t k = 0; k < 64; ++k) EXPECT_EQ(back[k], traj.snapshots[1][k]);
  std::filesystem::remove_all(dir);
}

TEST(Run, ShrinkingCircleRefinement) {
  auto err = [](std::size_t n) {
    auto cfg = config(n, 0.2, 1000000);
    cfg.keep_snapshots = true;
    const auto traj = run(testing_curves::circle(n), ForcingSpec{}, cfg);
    return max_radius_error(traj.snapshots.back(), std::sqrt(1.0 - 2.0 * 0.2));
  };
  const double e1 = err(128);
  const double e2 = err(256);
  EXPECT_LT(e1, 1e-3);
  EXPECT_GE(e1 / e2, 3.0);
}
