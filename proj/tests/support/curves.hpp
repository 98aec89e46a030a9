#pragma once

#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "chordarc/curve.hpp"
#include "chordarc/generators.hpp"

namespace testing_curves {

using chordarc::DiscreteCurve;
using chordarc::Point2;

inline DiscreteCurve circle(std::size_t n, double r = 1.0) {
  return DiscreteCurve(chordarc::sample_circle(r, n));
}

inline DiscreteCurve named(const std::string& name, std::size_t n,
                           std::map<std::string, double> params = {}) {
  chordarc::GeneratorSpec spec;
  spec.name = name;
  spec.n = n;
  spec.params = std::move(params);
  return chordarc::generate(spec).curve;
}

inline DiscreteCurve ellipse(std::size_t n) { return named("ellipse", n); }
inline DiscreteCurve star(std::size_t n, double eps = 0.4) { return named("star", n, {{"epsilon", eps}}); }
inline DiscreteCurve dumbbell(std::size_t n) { return named("dumbbell", n); }

inline std::vector<Point2> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

/// r = 1 + 1.5 cos(phi): has an inner loop.
inline std::vector<Point2> limacon(std::size_t n) {
  std::vector<Point2> p(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const double r = 1.0 + 1.5 * std::cos(t);
    p[k] = {r * std::cos(t), r * std::sin(t)};
  }
  return p;
}

inline std::vector<Point2> scaled(std::span<const Point2> p, double s) {
  std::vector<Point2> out(p.begin(), p.end());
  for (auto& q : out) q = s * q;
  return out;
}

}  // namespace testing_curves
