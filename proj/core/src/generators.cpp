#include "chordarc/generators.hpp"

#include <cmath>
#include <cstdio>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "chordarc/curve_io.hpp"
#include "chordarc/errors.hpp"

namespace chordarc {

using std::numbers::pi;

namespace {

constexpr std::size_t kOversample = 16;

template <class F>
std::vector<Point2> sample(std::size_t m, F f) {
  std::vector<Point2> pts(m);
  for (std::size_t k = 0; k < m; ++k) {
    pts[k] = f(2.0 * pi * static_cast<double>(k) / static_cast<double>(m));
  }
  return pts;
}

void require_keys(const GeneratorSpec& spec, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : spec.params) {
    if (ok.count(key) == 0) {
      throw DomainError("generator `" + spec.name + "` has no parameter `" + key + "`");
    }
    if (!std::isfinite(value)) throw DomainError("parameter `" + key + "` is not finite");
  }
}

void require(bool condition, const std::string& what) {
  if (!condition) throw DomainError(what);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Point2> build_points(const GeneratorSpec& spec, std::vector<std::string>& notices) {
  const std::size_t m = kOversample * std::max<std::size_t>(spec.n, DiscreteCurve::kMinVertices);
  const auto& name = spec.name;
  if (name == "circle") {
    require_keys(spec, {"radius"});
    const double r = spec.param("radius", 1.0);
    require(r > 0.0, "circle radius must be > 0");
    return sample_circle(r, spec.n);
  }
  if (name == "ellipse") {
    require_keys(spec, {"a", "b"});
    const double a = spec.param("a", 2.0), b = spec.param("b", 1.0);
    require(a > 0.0 && b > 0.0, "ellipse semi-axes must be > 0");
    return sample_ellipse(a, b, m);
  }
  if (name == "star") {
    require_keys(spec, {"epsilon", "m"});
    const double eps = spec.param("epsilon", 0.4);
    const double mode = spec.param("m", 5.0);
    require(eps >= 0.0 && eps < 1.0, "star epsilon must lie in [0, 1)");
    require(mode >= 1.0 && mode == std::floor(mode), "star m must be a positive integer");
    return sample_star(eps, static_cast<int>(mode), m);
  }
  if (name == "fourier") {
    require_keys(spec, {"modes", "amplitude", "decay"});
    const double modes = spec.param("modes", 4.0);
    require(modes >= 1.0 && modes == std::floor(modes), "fourier modes must be a positive integer");
    const double amp = spec.param("amplitude", 0.15);
    require(amp >= 0.0, "fourier amplitude must be >= 0");
    return sample_fourier(spec.seed, static_cast<int>(modes), amp, spec.param("decay", 2.0), m);
  }
  if (name == "dumbbell") {
    require_keys(spec, {"a", "b", "neck"});
    const double a = spec.param("a", 2.0), b = spec.param("b", 1.0);
    const double neck = spec.param("neck", 0.9);
    require(a > 0.0 && b > 0.0, "dumbbell a and b must be > 0");
    require(neck >= 0.0 && neck < 1.0, "dumbbell neck must lie in [0, 1)");
    return sample_dumbbell(a, b, neck, m);
  }
  if (name == "spiral_notch") {
    require_keys(spec, {"target", "inner", "outer"});
    const double target = spec.param("target", -1.1 * pi);
    const double inner = spec.param("inner", 1.0), outer = spec.param("outer", 2.0);
    require(inner > 0.0 && outer > inner, "spiral_notch needs 0 < inner < outer");
    require(target < 0.0, "spiral_notch target must be negative");
    for (double opening = pi;; opening += 0.02 * pi) {
      const double cap = std::asin((outer - inner) / (outer + inner));
      if (opening + 2.0 * cap >= 2.0 * pi) {
        throw DomainError("spiral_notch cannot reach the target theta without closing on itself");
      }
      auto pts = sample_notch(opening, inner, outer, m);
      const auto curve = resample_uniform(pts, spec.n, ResampleMode::kSpline);
      if (theta_scan(curve).theta_min <= target) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "spiral_notch opening angle %.6f", opening);
        notices.emplace_back(buf);
        return pts;
      }
    }
  }
  if (name == "file") {
    require_keys(spec, {});
    require(!spec.path.empty(), "file generator needs a path");
    return read_curve_points(spec.path);
  }
  throw DomainError("unknown generator `" + name + "`");
}

}  // namespace

double GeneratorSpec::param(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"circle",   "ellipse",      "star", "fourier",
                                                 "dumbbell", "spiral_notch", "file"};
  return names;
}

std::vector<Point2> sample_circle(double radius, std::size_t m) {
  return sample(m, [&](double t) { return Point2{radius * std::cos(t), radius * std::sin(t)}; });
}

std::vector<Point2> sample_ellipse(double a, double b, std::size_t m) {
  return sample(m, [&](double t) { return Point2{a * std::cos(t), b * std::sin(t)}; });
}

std::vector<Point2> sample_star(double epsilon, int mode, std::size_t m) {
  return sample(m, [&](double t) {
    const double r = 1.0 + epsilon * std::cos(mode * t);
    return Point2{r * std::cos(t), r * std::sin(t)};
  });
}

std::vector<Point2> sample_dumbbell(double a, double b, double neck, std::size_t m) {
  return sample(m, [&](double t) {
    const double s = std::sin(t);
    return Point2{a * std::cos(t), b * s * (1.0 - neck * s * s)};
  });
}

std::vector<Point2> sample_fourier(std::uint64_t seed, int modes, double amplitude, double decay,
                                   std::size_t m) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, std::complex<double>>> coeffs;
  for (int k = -modes; k <= modes + 1; ++k) {
    if (k == 0 || k == 1) continue;
    const double mag = amplitude * uniform01(rng) / std::pow(std::abs(k - 1), decay);
    const double phase = 2.0 * pi * uniform01(rng);
    coeffs.emplace_back(k, std::polar(mag, phase));
  }
  return sample(m, [&](double t) {
    std::complex<double> z = std::polar(1.0, t);
    for (const auto& [k, c] : coeffs) z += c * std::polar(1.0, k * t);
    return Point2{z.real(), z.imag()};
  });
}

std::vector<Point2> sample_notch(double opening, double inner, double outer, std::size_t m) {
  const double rc = 0.5 * (outer + inner);
  const double rho = 0.5 * (outer - inner);
  const double half = 0.5 * opening;
  const double total = outer * opening + inner * opening + 2.0 * pi * rho;
  const double h = total / static_cast<double>(m);
  std::vector<Point2> pts;
  pts.reserve(m + 8);
  auto arc = [&](double length, auto point) {
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::round(length / h)));
    for (std::size_t k = 0; k < steps; ++k) point(static_cast<double>(k) / static_cast<double>(steps));
  };
  const Vec2 u1{std::cos(half), std::sin(half)}, v1{-u1.y, u1.x};
  const Vec2 u2{std::cos(-half), std::sin(-half)}, v2{-u2.y, u2.x};
  // Outer arc starts at the parameter origin, angle 0, and runs to +half.
  arc(outer * half, [&](double s) {
    const double a = s * half;
    pts.push_back({outer * std::cos(a), outer * std::sin(a)});
  });
  arc(pi * rho, [&](double s) {
    const double a = s * pi;
    pts.push_back(rc * u1 + rho * (std::cos(a) * u1 + std::sin(a) * v1));
  });
  arc(inner * opening, [&](double s) {
    const double a = half - s * opening;
    pts.push_back({inner * std::cos(a), inner * std::sin(a)});
  });
  arc(pi * rho, [&](double s) {
    const double a = s * pi;
    pts.push_back(rc * u2 - rho * (std::cos(a) * u2 + std::sin(a) * v2));
  });
  arc(outer * half, [&](double s) {
    const double a = -half + s * half;
    pts.push_back({outer * std::cos(a), outer * std::sin(a)});
  });
  return pts;
}

GeneratedCurve generate(const GeneratorSpec& spec) {
  require(spec.n >= DiscreteCurve::kMinVertices, "generator N must be >= 8");
  std::vector<std::string> notices;
  auto pts = build_points(spec, notices);
  const auto raw_embedding = is_embedded(pts);
  if (!raw_embedding.embedded) {
    throw DomainError("generator `" + spec.name + "` produced a self-intersecting curve: edges " +
                      std::to_string(raw_embedding.witness->first) + " and " +
                      std::to_string(raw_embedding.witness->second));
  }
  const bool keep = spec.name == "circle" || (spec.name == "file" && pts.size() == spec.n);
  DiscreteCurve curve = keep ? DiscreteCurve(std::move(pts))
                        : resample_uniform(pts, spec.n,
                                           spec.name == "file" ? ResampleMode::kPolyline
                                                               : ResampleMode::kSpline);
  Admission adm = admit_curve(std::vector<Point2>(curve.vertices().begin(), curve.vertices().end()));
  for (auto& n : adm.notices) notices.push_back(std::move(n));
  const auto emb = is_embedded(adm.curve);
  if (!emb.embedded) {
    throw DomainError("generator `" + spec.name + "` produced a self-intersecting curve: edges " +
                      std::to_string(emb.witness->first) + " and " +
                      std::to_string(emb.witness->second));
  }
  const auto scan = theta_scan(adm.curve);
  const bool admissible = scan.theta_min >= -pi - 3.0 * scan.max_turning;
  if (!admissible) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "warning: theta_0 min = %.6f < -pi; outside the hypothesis class",
                  scan.theta_min);
    notices.emplace_back(buf);
  }
  return GeneratedCurve{std::move(adm.curve), scan, admissible, std::move(notices)};
}

}  // namespace chordarc
