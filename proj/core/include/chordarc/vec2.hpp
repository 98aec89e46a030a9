#pragma once

#include <cmath>

namespace chordarc {

// Plane vector / point. Positions and displacements share the type; the
// geometry here never needs affine-vs-linear distinctions.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

using Point2 = Vec2;

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
constexpr Vec2 operator/(const Vec2& a, double s) { return {a.x / s, a.y / s}; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::sqrt(a.x * a.x + a.y * a.y); }
constexpr double norm_squared(const Vec2& a) { return dot(a, a); }
inline double distance(const Point2& a, const Point2& b) { return norm(b - a); }

inline Vec2 normalized(const Vec2& a) {
  const double n = norm(a);
  return {a.x / n, a.y / n};
}

// Clockwise quarter turn: (a2, -a1). Applied to the unit tangent of a
// positively oriented curve this is the outward normal.
constexpr Vec2 rotate_cw(const Vec2& a) { return {a.y, -a.x}; }

inline bool is_finite(const Vec2& a) { return std::isfinite(a.x) && std::isfinite(a.y); }

}  // namespace chordarc
