#pragma once

#include <string>
#include <string_view>

#include "chordarc/curve.hpp"

namespace chordarc {

enum class ForcingKind {
  kZero,              // h = 0, plain curve shortening
  kAreaPreserving,    // h = 2 pi / L
  kLengthPreserving,  // h = (integral of kappa^2 ds) / 2 pi
  kJianPan,           // h = L / 2A
  kConstant,          // h = constant_value >= 0
};

/// Which global term h(t) drives the flow. Values are always >= 0.
struct ForcingSpec {
  ForcingKind kind = ForcingKind::kZero;
  double constant_value = 0.0;

  /// Accepts "zero", "area", "length", "jianpan", "constant:<value>".
  /// Throws DomainError on anything else or a negative/non-finite constant.
  static ForcingSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ForcingSpec&, const ForcingSpec&) = default;
};

/// Curve-wide quantities the forcing terms are built from.
struct GlobalScalars {
  double length = 0.0;
  double area = 0.0;
  double integral_kappa_sq = 0.0;
};

GlobalScalars global_scalars(const DiscreteCurve& curve);

/// h for the given scalars. Throws DomainError for Jian-Pan with A <= 0 and
/// Error if a family that must be non-negative comes out negative.
double evaluate_forcing(const ForcingSpec& spec, const GlobalScalars& scalars);
double evaluate_forcing(const ForcingSpec& spec, const DiscreteCurve& curve);

}  // namespace chordarc
