#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chordarc/errors.hpp"
#include "chordarc/forcing.hpp"
#include "curves.hpp"
#include "oracles.hpp"

using namespace chordarc;
using std::numbers::pi;

namespace {

const ForcingSpec kArea{ForcingKind::kAreaPreserving};
const ForcingSpec kLength{ForcingKind::kLengthPreserving};
const ForcingSpec kJianPan{ForcingKind::kJianPan};

}  // namespace

TEST(ForcingSpec, ParseAndPrint) {
  EXPECT_EQ(ForcingSpec::parse("zero").kind, ForcingKind::kZero);
  EXPECT_EQ(ForcingSpec::parse("area").kind, ForcingKind::kAreaPreserving);
  EXPECT_EQ(ForcingSpec::parse("length").kind, ForcingKind::kLengthPreserving);
  EXPECT_EQ(ForcingSpec::parse("jianpan").kind, ForcingKind::kJianPan);
  const auto c = ForcingSpec::parse("constant:0.75");
  EXPECT_EQ(c.kind, ForcingKind::kConstant);
  EXPECT_EQ(c.constant_value, 0.75);
  for (const char* text : {"zero", "area", "length", "jianpan", "constant:0.75"}) {
    EXPECT_EQ(ForcingSpec::parse(ForcingSpec::parse(text).to_string()), ForcingSpec::parse(text)) << text;
  }
}

TEST(ForcingSpec, RejectsBadInput) {
  for (const char* text : {"", "Area", "constant", "constant:", "constant:-1", "constant:nan", "constant:1x"}) {
    EXPECT_THROW(ForcingSpec::parse(text), DomainError) << text;
  }
}

TEST(Forcing, UnitCircleAllEqualOne) {
  const auto c = testing_curves::circle(1024);
  EXPECT_NEAR(evaluate_forcing(kArea, c), 1.0, 1e-5);
  EXPECT_NEAR(evaluate_forcing(kLength, c), 1.0, 1e-5);
  EXPECT_NEAR(evaluate_forcing(kJianPan, c), 1.0, 1e-5);
  EXPECT_EQ(evaluate_forcing(ForcingSpec{}, c), 0.0);
  EXPECT_EQ(evaluate_forcing(ForcingSpec::parse("constant:0.3"), c), 0.3);
}

TEST(Forcing, AreaPreservingOnCircleOfRadius) {
  for (double r : {0.5, 2.0, 7.0}) {
    EXPECT_NEAR(evaluate_forcing(kArea, testing_curves::circle(1024, r)), 1.0 / r, 1e-5 / r);
  }
}

TEST(Forcing, EllipseLengthPreservingMatchesQuadrature) {
  const double exact = oracle::ellipse_kappa_sq(2.0, 1.0) / (2.0 * pi);
  EXPECT_NEAR(evaluate_forcing(kLength, testing_curves::ellipse(4096)), exact, 1e-3);
}

TEST(Forcing, NonNegativeOnCorpus) {
  for (const auto& c : {testing_curves::circle(64), testing_curves::ellipse(256), testing_curves::star(512),
                        testing_curves::dumbbell(512), testing_curves::named("spiral_notch", 512)}) {
    for (const auto& spec : {ForcingSpec{}, kArea, kLength, kJianPan, ForcingSpec::parse("constant:2")}) {
      EXPECT_GE(evaluate_forcing(spec, c), 0.0);
    }
  }
}

TEST(Forcing, ScalesInverselyWithCurve) {
  const auto base = testing_curves::star(512);
  for (double lambda : {0.5, 2.0, 10.0}) {
    const DiscreteCurve scaled(testing_curves::scaled(base.vertices(), lambda));
    for (const auto& spec : {kArea, kLength, kJianPan}) {
      const double h0 = evaluate_forcing(spec, base);
      EXPECT_NEAR(evaluate_forcing(spec, scaled), h0 / lambda, 1e-10 * h0 / lambda);
    }
  }
}

TEST(Forcing, JianPanNeedsPositiveArea) {
  const auto r = testing_curves::circle(64).reversed();
  EXPECT_THROW(evaluate_forcing(kJianPan, r), DomainError);
}

TEST(Forcing, ScalarsMatchCurveMeasurements) {
  const auto c = testing_curves::dumbbell(400);
  const auto s = global_scalars(c);
  EXPECT_DOUBLE_EQ(s.length, total_length(c));
  EXPECT_DOUBLE_EQ(s.area, enclosed_area(c));
  EXPECT_NEAR(s.integral_kappa_sq, integral_curvature_squared(c), 1e-12 * s.integral_kappa_sq);
}
