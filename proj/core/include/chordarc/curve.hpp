#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordarc/vec2.hpp"

namespace chordarc {

/// Closed polygon with N >= 8 vertices and strictly positive edges, the
/// discrete stand-in for a smooth closed curve. Edge k joins vertex k to
/// vertex k+1 (mod N). Immutable after construction.
class DiscreteCurve {
 public:
  static constexpr std::size_t kMinVertices = 8;

  /// Throws CurveError when N < 8, a coordinate is not finite, or two
  /// consecutive vertices coincide.
  explicit DiscreteCurve(std::vector<Point2> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point2> vertices() const { return vertices_; }

  /// +1 when the shoelace area is positive, -1 otherwise.
  int orientation() const { return orientation_; }

  /// Same point set traversed in the opposite direction, vertex 0 kept.
  DiscreteCurve reversed() const;

  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

 private:
  std::vector<Point2> vertices_;
  int orientation_ = 1;
};

struct VertexFrame {
  Vec2 tangent;
  Vec2 normal;  // rotate_cw(tangent), outward for positive orientation
  double curvature = 0.0;
};

// Polygon-level measurements. The span overloads accept any closed polygon
// with at least 3 vertices (used for raw inputs such as a 4-corner square).
double total_length(std::span<const Point2> polygon);
double total_length(const DiscreteCurve& curve);

double signed_area(std::span<const Point2> polygon);

enum class AreaSign { kSigned, kRequirePositive };

/// Shoelace area. With kRequirePositive a non-positive value raises an
/// OrientationError.
double enclosed_area(const DiscreteCurve& curve, AreaSign sign = AreaSign::kSigned);

std::vector<double> edge_lengths(const DiscreteCurve& curve);

/// Vertex-centred length element: mean of the two adjacent edges.
std::vector<double> dual_lengths(const DiscreteCurve& curve);

/// Signed exterior angle at each vertex, in (-pi, pi). Throws CuspError on
/// an exact reversal.
std::vector<double> turning_angles(std::span<const Point2> polygon);
std::vector<double> turning_angles(const DiscreteCurve& curve);

/// Tangent from the normalized central difference, normal rotated clockwise
/// from it, curvature as turning angle over the dual length. A positively
/// oriented circle of radius R gets curvature 1/R. Throws
/// DegenerateEdgeError for edges shorter than 1e-14 L.
std::vector<VertexFrame> vertex_frames(const DiscreteCurve& curve);

/// Discrete integral of squared curvature, sum of kappa_i^2 * ds_i.
double integral_curvature_squared(const DiscreteCurve& curve);

/// max over edges / min over edges.
double edge_ratio(const DiscreteCurve& curve);

bool is_convex(const DiscreteCurve& curve);

enum class ResampleMode {
  kPolyline,  // output vertices lie on the input polygon
  kSpline,    // output vertices lie on the periodic cubic spline through it
};

/// N vertices with equal consecutive spacing (all N edges equal), vertex 0
/// kept in place. With kPolyline the output lies on the input polygon, so
/// a polygon whose corners fall on the new vertices is reproduced exactly.
DiscreteCurve resample_uniform(std::span<const Point2> polygon, std::size_t n,
                               ResampleMode mode = ResampleMode::kPolyline);
DiscreteCurve resample_uniform(const DiscreteCurve& curve, std::size_t n,
                               ResampleMode mode = ResampleMode::kPolyline);

struct EmbeddingResult {
  bool embedded = true;
  /// Lexicographically smallest pair of intersecting non-adjacent edges.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// True iff no two non-adjacent edges intersect or touch (contact closer
/// than 1e-13 L counts as touching). Spatial hashing, O(N) expected.
EmbeddingResult is_embedded(std::span<const Point2> polygon);
EmbeddingResult is_embedded(const DiscreteCurve& curve);

namespace detail {
/// Closed-segment intersection with distance tolerance eps.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                        double eps);
}  // namespace detail

/// Result of bringing an arbitrary vertex list into admissible form.
struct Admission {
  DiscreteCurve curve;
  bool reversed = false;
  std::vector<std::string> notices;
};

/// Validates the vertex list and flips negatively oriented input so the
/// returned curve is positively oriented; the flip is reported as a notice.
Admission admit_curve(std::vector<Point2> vertices);

}  // namespace chordarc
