#include "chordarc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

double shoelace(std::span<const Point2> p) {
  const std::size_t n = p.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = p[i];
    const Point2& b = p[i + 1 == n ? 0 : i + 1];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

}  // namespace

DiscreteCurve::DiscreteCurve(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < kMinVertices) {
    throw CurveError("curve needs at least " + std::to_string(kMinVertices) +
                     " vertices, got " + std::to_string(vertices_.size()));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) {
      throw CurveError("non-finite coordinate at vertex " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[next(i)]) throw DegenerateEdgeError(i, 0.0);
  }
  orientation_ = shoelace(vertices_) > 0.0 ? 1 : -1;
}

DiscreteCurve DiscreteCurve::reversed() const {
  std::vector<Point2> out;
  out.reserve(size());
  out.push_back(vertices_[0]);
  for (std::size_t i = size() - 1; i > 0; --i) out.push_back(vertices_[i]);
  return DiscreteCurve(std::move(out));
}

double total_length(std::span<const Point2> polygon) {
  const std::size_t n = polygon.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += distance(polygon[i], polygon[i + 1 == n ? 0 : i + 1]);
  return sum;
}

double total_length(const DiscreteCurve& curve) { return total_length(curve.vertices()); }

double signed_area(std::span<const Point2> polygon) { return shoelace(polygon); }

double enclosed_area(const DiscreteCurve& curve, AreaSign sign) {
  const double a = shoelace(curve.vertices());
  if (sign == AreaSign::kRequirePositive && !(a > 0.0)) {
    throw OrientationError("enclosed area " + std::to_string(a) +
                           " is not positive; curve is not positively oriented");
  }
  return a;
}

std::vector<double> edge_lengths(const DiscreteCurve& curve) {
  std::vector<double> e(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) e[i] = distance(curve[i], curve[curve.next(i)]);
  return e;
}

std::vector<double> dual_lengths(const DiscreteCurve& curve) {
  const auto e = edge_lengths(curve);
  std::vector<double> ds(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) ds[i] = 0.5 * (e[curve.prev(i)] + e[i]);
  return ds;
}

std::vector<double> turning_angles(std::span<const Point2> polygon) {
  const std::size_t n = polygon.size();
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = polygon[i == 0 ? n - 1 : i - 1];
    const Point2& next = polygon[i + 1 == n ? 0 : i + 1];
    const Vec2 a = polygon[i] - prev;
    const Vec2 b = next - polygon[i];
    const double c = cross(a, b);
    const double d = dot(a, b);
    if (c == 0.0 && d < 0.0) throw CuspError(i);
    phi[i] = std::atan2(c, d);
  }
  return phi;
}

std::vector<double> turning_angles(const DiscreteCurve& curve) {
  return turning_angles(curve.vertices());
}

std::vector<VertexFrame> vertex_frames(const DiscreteCurve& curve) {
  const std::size_t n = curve.size();
  const auto e = edge_lengths(curve);
  double length = 0.0;
  for (double v : e) length += v;
  const double floor = 1e-14 * length;
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i] < floor) throw DegenerateEdgeError(i, e[i]);
  }
  const auto phi = turning_angles(curve);

  std::vector<VertexFrame> frames(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 tangent = normalized(curve[curve.next(i)] - curve[curve.prev(i)]);
    frames[i].tangent = tangent;
    frames[i].normal = rotate_cw(tangent);
    frames[i].curvature = phi[i] / (0.5 * (e[curve.prev(i)] + e[i]));
  }
  return frames;
}

double integral_curvature_squared(const DiscreteCurve& curve) {
  const auto phi = turning_angles(curve);
  const auto ds = dual_lengths(curve);
  double sum = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) sum += phi[i] * phi[i] / ds[i];
  return sum;
}

double edge_ratio(const DiscreteCurve& curve) {
  const auto e = edge_lengths(curve);
  const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
  return *hi / *lo;
}

bool is_convex(const DiscreteCurve& curve) {
  const auto phi = turning_angles(curve);
  const double s = static_cast<double>(curve.orientation());
  return std::all_of(phi.begin(), phi.end(), [s](double a) { return s * a > 0.0; });
}

Admission admit_curve(std::vector<Point2> vertices) {
  DiscreteCurve curve(std::move(vertices));
  if (curve.orientation() > 0) return Admission{std::move(curve), false, {}};
  return Admission{curve.reversed(), true,
                   {"input curve was negatively oriented; traversal reversed"}};
}

}  // namespace chordarc
