#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chordarc/curve.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/forcing.hpp"
#include "chordarc/pair_functionals.hpp"

namespace chordarc {

enum class Scheme { kExplicitEuler, kRk2 };

std::string to_string(Scheme scheme);
Scheme parse_scheme(std::string_view text);

struct StepperConfig {
  double cfl = 0.4;               // (0, 0.5]
  std::size_t mesh_size = 1024;   // vertices kept through resampling
  long resample_every = 100;      // steps between spline resamples
  Scheme scheme = Scheme::kRk2;
  double max_time = 1.0;
  long max_steps = 50'000'000;
  bool stop_on_embeddedness_loss = true;
  long monitor_every = 100;       // steps between monitor samples
  bool keep_snapshots = true;     // store the curve at every sample

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// Curve plus time. The scalars are recomputed from the curve after every
/// step, never updated incrementally.
struct FlowState {
  DiscreteCurve curve;
  double time = 0.0;
  long step_index = 0;
  GlobalScalars scalars;
  double forcing = 0.0;
  long last_resample_step = 0;

  static FlowState initial(DiscreteCurve curve, const ForcingSpec& spec);
};

enum class TerminalStatus {
  kClean,              // reached max_time or max_steps
  kEmbeddednessLost,   // a monitor sample found a self-intersection
  kBlowUp,             // non-finite coordinates
  kStiffnessCollapse,  // time step underflow
  kResolutionLost,     // max |kappa| * min edge > 1
};

std::string to_string(TerminalStatus status);

class FlowError : public Error {
 public:
  FlowError(TerminalStatus kind, const std::string& what, FlowState last_good)
      : Error(what), kind_(kind), last_good_(std::move(last_good)) {}
  TerminalStatus kind() const { return kind_; }
  const FlowState& last_good() const { return last_good_; }

 private:
  TerminalStatus kind_;
  FlowState last_good_;
};

/// Everything the theorem monitors need at one instant.
struct MonitorSample {
  double time = 0.0;
  long step_index = 0;
  std::size_t mesh_size = 0;
  double ratio_min = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
  double length = 0.0;
  double area = 0.0;
  double forcing = 0.0;
  double kappa_max = 0.0;
  double max_turning = 0.0;
  bool embedded = true;
  std::optional<VertexPair> intersection;  // witness edges when not embedded
  VertexPair ratio_argmin;
  double argmin_arc = 0.0;
  double argmin_theta = 0.0;
  double first_variation = 0.0;   // residual at the d/psi argmin
  double second_variation = 0.0;  // margin at the d/psi argmin
  bool resampled_since_previous = false;
};

struct Trajectory {
  ForcingSpec forcing;
  StepperConfig config;
  std::vector<MonitorSample> samples;
  std::vector<DiscreteCurve> snapshots;  // parallel to samples when kept
  TerminalStatus status = TerminalStatus::kClean;
  std::string status_detail;
  double theta0_min = 0.0;
  double theta0_tolerance = 0.0;
  bool admissible = true;  // theta_0 >= -pi up to discretization slack
  bool initial_convex = false;
  std::vector<std::string> notices;
};

/// F_i = h - kappa_i, the speed along the outward normal.
std::vector<double> normal_velocity(const DiscreteCurve& curve, double h);

/// min(cfl * ds_min^2, cfl * ds_min / max|h - kappa|).
double cfl_dt(const DiscreteCurve& curve, double h, const StepperConfig& config);

/// One explicit step of dX/dt = (h - kappa) nu, then a spline resample every
/// resample_every steps. Throws FlowError on blow-up, dt underflow, or an
/// unresolved curvature scale.
FlowState step(const FlowState& state, const ForcingSpec& spec, const StepperConfig& config);

MonitorSample sample_monitors(const DiscreteCurve& curve, double h);

/// Integrates from `initial` and records monitor samples every
/// monitor_every steps plus the first and last state. Throws AdmissionError
/// if the initial curve is not embedded; an initial curve violating
/// theta >= -pi is run anyway and flagged in `admissible` and `notices`.
Trajectory run(const DiscreteCurve& initial, const ForcingSpec& spec, const StepperConfig& config);

/// `time,ratio_min,theta_min,theta_max,L,A,h,kappa_max,embedded`
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// snapshots/t_<index>.curve under `dir`, one per stored snapshot.
void write_snapshots(const std::filesystem::path& dir, const Trajectory& traj);

}  // namespace chordarc
