#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordarc/curve.hpp"

namespace chordarc {

using VertexPair = std::pair<std::size_t, std::size_t>;

/// Two-point quantities for the ordered pair (i, j). The intrinsic distance
/// l runs from i to j in the direction of the parametrisation; theta is the
/// curvature integrated along that same arc.
struct PairRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;      // chord |X_j - X_i|
  double l = 0.0;      // arc length i -> j, in (0, L)
  double psi = 0.0;    // (L/pi) sin(pi l / L)
  double ratio = 0.0;  // d / psi
  double theta = 0.0;  // total curvature along the arc
  Vec2 w;              // (X_j - X_i) / d
};

/// (L/pi) sin(pi l / L). Symmetric under l -> L - l.
double psi_of(double arc, double length);

/// Per-curve tables (cumulative arc length, turning-angle prefix sums,
/// vertex frames) answering pair queries in O(1).
///
/// theta(i, j) sums the turning angles strictly between i and j plus half
/// of the angle at each endpoint, so theta(i, j) + theta(j, i) equals the
/// total turning exactly.
class PairContext {
 public:
  explicit PairContext(const DiscreteCurve& curve);

  const DiscreteCurve& curve() const { return curve_; }
  std::size_t size() const { return curve_.size(); }
  double length() const { return length_; }
  double total_turning() const { return total_turning_; }
  double max_turning() const { return max_turning_; }
  const std::vector<double>& turning() const { return turning_; }
  const std::vector<VertexFrame>& frames() const { return frames_; }
  /// Q_k = sum_{m<k} phi_m + phi_k / 2; theta(i, j) = Q_j - Q_i for i < j.
  const std::vector<double>& theta_prefix() const { return theta_prefix_; }

  double arc(std::size_t i, std::size_t j) const;
  double theta(std::size_t i, std::size_t j) const;

  /// Throws SelfTouchingError when X_i == X_j for i != j.
  PairRecord record(std::size_t i, std::size_t j) const;

  /// d / psi with l folded into (0, L/2]; symmetric in i and j.
  double ratio(std::size_t i, std::size_t j) const;

 private:
  DiscreteCurve curve_;
  double length_ = 0.0;
  double total_turning_ = 0.0;
  double max_turning_ = 0.0;
  std::vector<double> cumulative_arc_;  // size N + 1
  std::vector<double> turning_;
  std::vector<double> theta_prefix_;  // sum_{m<k} phi_m + phi_k / 2
  std::vector<VertexFrame> frames_;
};

PairRecord pair_record(const DiscreteCurve& curve, std::size_t i, std::size_t j);

struct ThetaScan {
  double theta_min = 0.0;
  double theta_max = 0.0;
  VertexPair argmin;
  VertexPair argmax;
  double max_turning = 0.0;  // largest |turning angle|, the discretization slack
};

/// Extrema of theta over all ordered pairs i != j, O(N) via prefix extrema.
ThetaScan theta_scan(const PairContext& ctx);
ThetaScan theta_scan(const DiscreteCurve& curve);

struct ChordArcMin {
  double ratio_min = 0.0;
  /// Minimizing pair oriented so that l <= L/2.
  PairRecord argmin;
};

/// Exhaustive scan of d/psi over unordered pairs. Ties go to the smallest
/// (i, j). Rows are split across worker_count() threads; the reduction is
/// order independent.
ChordArcMin min_chord_arc(const PairContext& ctx);
ChordArcMin min_chord_arc(const DiscreteCurve& curve);

/// True when no neighbouring pair (i +- 1, j +- 1) has a smaller d/psi.
bool is_local_minimizer(const PairContext& ctx, const PairRecord& rec);

enum class MinimizerCase { kI, kII, kIII };

std::string to_string(MinimizerCase c);

struct MinimizerClassification {
  MinimizerCase case_id = MinimizerCase::kIII;
  double beta = 0.0;  // in [0, pi]
  long k = 0;
  std::map<std::string, double> residuals;
};

inline constexpr double kDefaultFirstVariationTolerance = 0.05;

/// Sorts a critical pair into the three angle configurations: with
/// cos(beta/2) = <w, tau_p>, case I has <w,nu_p> = -<w,nu_q> = -sin(beta/2)
/// and theta = 2 pi k + beta, case II flips the normal signs and has
/// theta = 2 pi k - beta, case III has equal normal signs and
/// theta = 2 pi k. k is picked to minimize the theta residual.
///
/// Throws NotCriticalError when |<w,tau_p> - <w,tau_q>| exceeds tolerance.
MinimizerClassification classify_minimizer(
    const PairContext& ctx, const PairRecord& rec,
    double tolerance = kDefaultFirstVariationTolerance);
MinimizerClassification classify_minimizer(
    const DiscreteCurve& curve, const PairRecord& rec,
    double tolerance = kDefaultFirstVariationTolerance);

/// max(|<w,tau_p> - r cos(pi l/L)|, |<w,tau_q> - r cos(pi l/L)|), r = d/psi.
/// Zero at exact critical points of d/psi.
double first_variation_residual(const PairContext& ctx, const PairRecord& rec);
double first_variation_residual(const DiscreteCurve& curve, const PairRecord& rec);

/// <w, k_q - k_p> + 4 pi^2 d / L^2 with curvature vector k = -kappa nu.
/// Non-negative at minima of d/psi.
double second_variation_check(const PairContext& ctx, const PairRecord& rec);
double second_variation_check(const DiscreteCurve& curve, const PairRecord& rec);

/// CSV `i,j,d,l,psi,ratio,theta` over all ordered pairs i != j.
void write_pair_dump(std::ostream& out, const DiscreteCurve& curve);

}  // namespace chordarc
