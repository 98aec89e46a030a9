#include <cmath>
#include <limits>
#include <vector>

#include "chordarc/curve.hpp"
#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

// Closed piecewise path over parameter u in [0, M), one unit per input edge.
class PolylinePath {
 public:
  explicit PolylinePath(std::span<const Point2> nodes) : nodes_(nodes.begin(), nodes.end()) {}

  std::size_t segments() const { return nodes_.size(); }

  Point2 at(double u) const {
    const double m = static_cast<double>(nodes_.size());
    double k = std::floor(u);
    double t = u - k;
    k = std::fmod(k, m);
    if (k < 0) k += m;
    const auto i = static_cast<std::size_t>(k);
    const Point2& a = nodes_[i];
    const Point2& b = nodes_[i + 1 == nodes_.size() ? 0 : i + 1];
    return a + t * (b - a);
  }

 private:
  std::vector<Point2> nodes_;
};

// Periodic C2 cubic spline through the nodes, parametrised by chord length
// on each segment.
class SplinePath {
 public:
  explicit SplinePath(std::span<const Point2> nodes)
      : nodes_(nodes.begin(), nodes.end()), h_(nodes.size()), m_(nodes.size()) {
    const std::size_t n = nodes_.size();
    for (std::size_t i = 0; i < n; ++i) h_[i] = distance(nodes_[i], nodes_[(i + 1) % n]);

    std::vector<double> a(n), b(n), c(n);
    std::vector<Vec2> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t ip = (i + n - 1) % n;
      const std::size_t in = (i + 1) % n;
      a[i] = h_[ip];
      b[i] = 2.0 * (h_[ip] + h_[i]);
      c[i] = h_[i];
      r[i] = 6.0 * ((nodes_[in] - nodes_[i]) / h_[i] - (nodes_[i] - nodes_[ip]) / h_[ip]);
    }
    m_ = solve_cyclic(a, b, c, r);
  }

  std::size_t segments() const { return nodes_.size(); }

  Point2 at(double u) const {
    const double m = static_cast<double>(nodes_.size());
    double k = std::floor(u);
    const double t = u - k;
    k = std::fmod(k, m);
    if (k < 0) k += m;
    const auto i = static_cast<std::size_t>(k);
    if (t == 0.0) return nodes_[i];
    const std::size_t j = i + 1 == nodes_.size() ? 0 : i + 1;
    const double h = h_[i];
    const double s = t * h;
    const double r = h - s;
    return m_[i] * (r * r * r / (6.0 * h)) + m_[j] * (s * s * s / (6.0 * h)) +
           (nodes_[i] / h - m_[i] * (h / 6.0)) * r + (nodes_[j] / h - m_[j] * (h / 6.0)) * s;
  }

 private:
  static std::vector<Vec2> solve_tridiagonal(const std::vector<double>& a,
                                             const std::vector<double>& b,
                                             const std::vector<double>& c,
                                             std::vector<Vec2> r) {
    const std::size_t n = b.size();
    std::vector<double> cp(n);
    double denom = b[0];
    cp[0] = c[0] / denom;
    r[0] = r[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = b[i] - a[i] * cp[i - 1];
      cp[i] = c[i] / denom;
      r[i] = (r[i] - a[i] * r[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) r[i] -= cp[i] * r[i + 1];
    return r;
  }

  // Sherman-Morrison reduction of the periodic system to two tridiagonal
  // solves.
  static std::vector<Vec2> solve_cyclic(const std::vector<double>& a, std::vector<double> b,
                                        const std::vector<double>& c, const std::vector<Vec2>& r) {
    const std::size_t n = b.size();
    const double alpha = c[n - 1];
    const double beta = a[0];
    const double gamma = -b[0];
    b[0] -= gamma;
    b[n - 1] -= alpha * beta / gamma;
    auto x = solve_tridiagonal(a, b, c, r);
    std::vector<Vec2> u(n);
    u[0] = {gamma, gamma};
    u[n - 1] = {alpha, alpha};
    auto z = solve_tridiagonal(a, b, c, u);
    // z holds the same scalar solution in both components.
    const double z0 = z[0].x;
    const double zn = z[n - 1].x;
    const double fx = (x[0].x + beta * x[n - 1].x / gamma) / (1.0 + z0 + beta * zn / gamma);
    const double fy = (x[0].y + beta * x[n - 1].y / gamma) / (1.0 + z0 + beta * zn / gamma);
    for (std::size_t i = 0; i < n; ++i) {
      x[i].x -= fx * z[i].x;
      x[i].y -= fy * z[i].x;
    }
    return x;
  }

  std::vector<Point2> nodes_;
  std::vector<double> h_;
  std::vector<Vec2> m_;
};

// Illinois-modified regula falsi on a bracket with f(lo) < 0 <= f(hi).
template <class F>
double bracketed_root(F&& f, double lo, double flo, double hi, double fhi, double tol) {
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    if (x == lo || x == hi) return hi;
    const double fx = f(x);
    if (std::fabs(fx) <= tol) return x;
    if (fx < 0.0) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == +1) flo *= 0.5;
      side = +1;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(hi)) return hi;
  }
  return hi;
}

// Smallest u' > u with |path(u') - from| = chord, assuming the path leaves
// the disc of radius chord at the first segment boundary outside it.
template <class Path>
double next_at_chord(const Path& path, double u, const Point2& from, double chord) {
  double lo = u;
  double hi = std::floor(u) + 1.0;
  double dhi = distance(from, path.at(hi));
  const double limit = u + static_cast<double>(path.segments()) + 1.0;
  while (dhi < chord) {
    lo = hi;
    hi += 1.0;
    if (hi > limit) throw CurveError("resample: chord longer than the curve allows");
    dhi = distance(from, path.at(hi));
  }
  const double dlo = distance(from, path.at(lo));
  auto g = [&](double v) { return distance(from, path.at(v)) - chord; };
  return bracketed_root(g, lo, dlo - chord, hi, dhi - chord, 1e-15 * chord);
}

template <class Path>
std::vector<Point2> equal_chord_walk(const Path& path, std::size_t n, double length_hint) {
  const double m = static_cast<double>(path.segments());
  const Point2 start = path.at(0.0);

  auto closure = [&](double chord, std::vector<double>* params) {
    double u = 0.0;
    Point2 from = start;
    for (std::size_t k = 1; k <= n; ++k) {
      u = next_at_chord(path, u, from, chord);
      from = path.at(u);
      if (params != nullptr && k < n) params->push_back(u);
    }
    return u - m;
  };

  const double c0 = length_hint / static_cast<double>(n);
  double f0 = closure(c0, nullptr);
  double lo = c0, flo = f0, hi = c0, fhi = f0;
  if (f0 >= 0.0) {
    while (flo >= 0.0) {
      hi = lo;
      fhi = flo;
      lo *= 0.98;
      flo = closure(lo, nullptr);
    }
  } else {
    while (fhi < 0.0) {
      lo = hi;
      flo = fhi;
      hi *= 1.02;
      fhi = closure(hi, nullptr);
    }
  }
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() * m;
  double chord = f0 == 0.0 ? c0
                           : bracketed_root([&](double c) { return closure(c, nullptr); }, lo,
                                            flo, hi, fhi, tol);

  std::vector<double> params;
  params.reserve(n);
  closure(chord, &params);
  std::vector<Point2> out;
  out.reserve(n);
  out.push_back(start);
  for (double u : params) out.push_back(path.at(u));
  return out;
}

}  // namespace

DiscreteCurve resample_uniform(std::span<const Point2> polygon, std::size_t n, ResampleMode mode) {
  if (n < DiscreteCurve::kMinVertices) {
    throw CurveError("resample target must have at least " +
                     std::to_string(DiscreteCurve::kMinVertices) + " vertices");
  }
  if (polygon.size() < 3) throw CurveError("resample input needs at least 3 vertices");
  const double length = total_length(polygon);
  if (mode == ResampleMode::kSpline) {
    return DiscreteCurve(equal_chord_walk(SplinePath(polygon), n, length));
  }
  return DiscreteCurve(equal_chord_walk(PolylinePath(polygon), n, length));
}

DiscreteCurve resample_uniform(const DiscreteCurve& curve, std::size_t n, ResampleMode mode) {
  return resample_uniform(curve.vertices(), n, mode);
}

}  // namespace chordarc
