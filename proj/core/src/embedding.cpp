#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "chordarc/curve.hpp"

namespace chordarc {

namespace detail {

namespace {

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Vec2 ab = b - a;
  const double len2 = norm_squared(ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool opposite(double u, double v) { return (u > 0.0 && v < 0.0) || (u < 0.0 && v > 0.0); }

}  // namespace

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        double eps) {
  const double o1 = cross(b - a, c - a);
  const double o2 = cross(b - a, d - a);
  const double o3 = cross(d - c, a - c);
  const double o4 = cross(d - c, b - c);
  if (opposite(o1, o2) && opposite(o3, o4)) return true;
  return point_segment_distance(c, a, b) <= eps || point_segment_distance(d, a, b) <= eps ||
         point_segment_distance(a, c, d) <= eps || point_segment_distance(b, c, d) <= eps;
}

}  // namespace detail

EmbeddingResult is_embedded(std::span<const Point2> polygon) {
  const std::size_t n = polygon.size();
  EmbeddingResult result;
  if (n < 4) return result;

  const double length = total_length(polygon);
  const double eps = 1e-13 * length;
  const double cell = 2.0 * length / static_cast<double>(n);

  double min_x = polygon[0].x, min_y = polygon[0].y;
  for (const auto& p : polygon) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  min_x -= eps;
  min_y -= eps;

  // (cell key, edge) entries; sorting groups the edges sharing a cell.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
  entries.reserve(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[i + 1 == n ? 0 : i + 1];
    const auto x0 = static_cast<std::uint64_t>((std::min(a.x, b.x) - eps - min_x) / cell);
    const auto x1 = static_cast<std::uint64_t>((std::max(a.x, b.x) + eps - min_x) / cell);
    const auto y0 = static_cast<std::uint64_t>((std::min(a.y, b.y) - eps - min_y) / cell);
    const auto y1 = static_cast<std::uint64_t>((std::max(a.y, b.y) + eps - min_y) / cell);
    for (std::uint64_t x = x0; x <= x1; ++x) {
      for (std::uint64_t y = y0; y <= y1; ++y) {
        entries.emplace_back((x << 32) | y, static_cast<std::uint32_t>(i));
      }
    }
  }
  std::sort(entries.begin(), entries.end());

  auto adjacent = [n](std::size_t i, std::size_t j) {
    return j == i + 1 || (i == 0 && j == n - 1);
  };

  std::pair<std::size_t, std::size_t> best{n, n};
  for (std::size_t g = 0; g < entries.size();) {
    std::size_t h = g;
    while (h < entries.size() && entries[h].first == entries[g].first) ++h;
    for (std::size_t s = g; s < h; ++s) {
      for (std::size_t t = s + 1; t < h; ++t) {
        const std::size_t i = entries[s].second;  // i < j: entries sorted by edge within cell
        const std::size_t j = entries[t].second;
        if (adjacent(i, j)) continue;
        if (std::make_pair(i, j) >= best) continue;
        const Point2& a = polygon[i];
        const Point2& b = polygon[i + 1];
        const Point2& c = polygon[j];
        const Point2& d = polygon[j + 1 == n ? 0 : j + 1];
        if (detail::segments_intersect(a, b, c, d, eps)) best = {i, j};
      }
    }
    g = h;
  }
  if (best.first < n) {
    result.embedded = false;
    result.witness = best;
  }
  return result;
}

EmbeddingResult is_embedded(const DiscreteCurve& curve) { return is_embedded(curve.vertices()); }

}  // namespace chordarc
