#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordarc/flow.hpp"

namespace chordarc {

enum class CheckStatus { kPass, kFail, kInconclusive };

std::string to_string(CheckStatus status);

/// Monitored claims, in report order.
enum class CheckId {
  kHNonneg,           // h(t) >= 0
  kThetaRange,        // theta stays in (-pi, 3pi)
  kThetaMinMonotone,  // a negative theta_min increases
  kThetaHeat,         // theta solves the heat equation along the flow
  kLemma21Duality,    // sup theta = 2 pi - min theta
  kRatioLowerBound,   // min d/psi bounded away from zero
  kRatioLiminfAtMin,  // first/second variation identities at the argmin
  kEmbeddedness,      // no self-intersection at any sample
  kConservation,      // area or length drift for the preserving flows
};

std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

/// Margin is the signed distance to the claimed bound (positive: holds with
/// room). A FAIL always has margin < -tolerance_used.
struct CheckResult {
  CheckId id = CheckId::kHNonneg;
  CheckStatus status = CheckStatus::kInconclusive;
  double margin = 0.0;
  double worst_time = 0.0;
  std::optional<VertexPair> worst_pair;
  std::optional<std::size_t> worst_sample;  // index into the trajectory / snapshots
  double tolerance_used = 0.0;
  std::string note;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct MonitorReport {
  std::string forcing;
  std::string terminal_status;
  std::vector<CheckResult> checks;

  const CheckResult* find(CheckId id) const;
  bool any_fail() const;

  friend bool operator==(const MonitorReport&, const MonitorReport&) = default;
};

struct TheoremCatalog {
  std::vector<CheckId> enabled;

  static TheoremCatalog all();
  /// Comma-separated identifiers or "all". Throws DomainError on unknown
  /// or repeated names.
  static TheoremCatalog parse(std::string_view list);
  bool contains(CheckId id) const;
};

struct CheckOptions {
  double theta_active = 0.05;       // theta_min below -theta_active triggers monotonicity
  double theta_monotone_tol = 1e-3;
  double ratio_slack = 0.05;
  double ratio_reference_fraction = 0.1;  // leading share of samples defining the reference
  double heat_threshold = 0.2;
  double conservation_tol = 1e-4;
};

CheckResult check_h_nonneg(const Trajectory& traj);
CheckResult check_theta_range(const Trajectory& traj);
CheckResult check_theta_min_monotone(const Trajectory& traj, const CheckOptions& opts = {});

/// Compares a central time difference of theta at fixed vertex pairs with
/// the second arc-length derivatives at both ends, over sample triples with
/// no resample in between. Throws Error if no such triple exists.
CheckResult check_theta_heat(const Trajectory& traj, const CheckOptions& opts = {});

CheckResult check_lemma21_duality(const Trajectory& traj);
CheckResult check_ratio_lower_bound(const Trajectory& traj, const CheckOptions& opts = {});
CheckResult check_minimizer_identities(const Trajectory& traj);
CheckResult check_embeddedness(const Trajectory& traj);
CheckResult check_conservation(const Trajectory& traj, const CheckOptions& opts = {});

/// Smallest sample-to-sample change of ratio_min (negative when it drops).
double ratio_min_smallest_increment(const Trajectory& traj);

MonitorReport run_checks(const Trajectory& traj, const TheoremCatalog& catalog = TheoremCatalog::all(),
                         const CheckOptions& opts = {});

std::string render_report_text(const MonitorReport& report);
std::string report_to_json(const MonitorReport& report);
MonitorReport report_from_json(std::string_view text);

}  // namespace chordarc
