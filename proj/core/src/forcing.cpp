#include "chordarc/forcing.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "chordarc/errors.hpp"

namespace chordarc {

using std::numbers::pi;

ForcingSpec ForcingSpec::parse(std::string_view text) {
  if (text == "zero") return {ForcingKind::kZero, 0.0};
  if (text == "area") return {ForcingKind::kAreaPreserving, 0.0};
  if (text == "length") return {ForcingKind::kLengthPreserving, 0.0};
  if (text == "jianpan") return {ForcingKind::kJianPan, 0.0};
  constexpr std::string_view prefix = "constant:";
  if (text.starts_with(prefix)) {
    const std::string value(text.substr(prefix.size()));
    double v = 0.0;
    std::size_t used = 0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw DomainError("forcing constant `" + value + "` is not a number");
    }
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("forcing constant must be finite and >= 0, got " + value);
    }
    return {ForcingKind::kConstant, v};
  }
  throw DomainError("unknown forcing `" + std::string(text) +
                    "` (expected zero|area|length|jianpan|constant:<value>)");
}

std::string ForcingSpec::to_string() const {
  switch (kind) {
    case ForcingKind::kZero:
      return "zero";
    case ForcingKind::kAreaPreserving:
      return "area";
    case ForcingKind::kLengthPreserving:
      return "length";
    case ForcingKind::kJianPan:
      return "jianpan";
    case ForcingKind::kConstant: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "constant:%.17g", constant_value);
      return buf;
    }
  }
  return "?";
}

GlobalScalars global_scalars(const DiscreteCurve& curve) {
  return {total_length(curve), enclosed_area(curve), integral_curvature_squared(curve)};
}

double evaluate_forcing(const ForcingSpec& spec, const GlobalScalars& s) {
  double h = 0.0;
  switch (spec.kind) {
    case ForcingKind::kZero:
      return 0.0;
    case ForcingKind::kConstant:
      if (!std::isfinite(spec.constant_value) || spec.constant_value < 0.0) {
        throw DomainError("forcing constant must be finite and >= 0");
      }
      return spec.constant_value;
    case ForcingKind::kAreaPreserving:
      h = 2.0 * pi / s.length;
      break;
    case ForcingKind::kLengthPreserving:
      h = s.integral_kappa_sq / (2.0 * pi);
      break;
    case ForcingKind::kJianPan:
      if (!(s.area > 0.0)) {
        throw DomainError("Jian-Pan forcing needs positive enclosed area, got " +
                          std::to_string(s.area));
      }
      h = s.length / (2.0 * s.area);
      break;
  }
  if (!(h >= 0.0)) throw Error("forcing evaluated to negative or NaN value " + std::to_string(h));
  return h;
}

double evaluate_forcing(const ForcingSpec& spec, const DiscreteCurve& curve) {
  return evaluate_forcing(spec, global_scalars(curve));
}

}  // namespace chordarc
