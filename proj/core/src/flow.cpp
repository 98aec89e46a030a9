#include "chordarc/flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>

#include "chordarc/curve_io.hpp"

namespace chordarc {

using std::numbers::pi;

std::string to_string(Scheme scheme) {
  return scheme == Scheme::kRk2 ? "rk2" : "euler";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "rk2") return Scheme::kRk2;
  if (text == "euler") return Scheme::kExplicitEuler;
  throw DomainError("unknown scheme `" + std::string(text) + "` (expected euler|rk2)");
}

std::string to_string(TerminalStatus status) {
  switch (status) {
    case TerminalStatus::kClean:
      return "CLEAN";
    case TerminalStatus::kEmbeddednessLost:
      return "EMBEDDEDNESS_LOST";
    case TerminalStatus::kBlowUp:
      return "BLOW_UP";
    case TerminalStatus::kStiffnessCollapse:
      return "STIFFNESS_COLLAPSE";
    case TerminalStatus::kResolutionLost:
      return "RESOLUTION_LOST";
  }
  return "?";
}

void StepperConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 0.5)) throw DomainError("cfl must lie in (0, 0.5]");
  if (mesh_size < DiscreteCurve::kMinVertices) throw DomainError("mesh size must be >= 8");
  if (resample_every < 1) throw DomainError("resample_every must be >= 1");
  if (!(max_time > 0.0) || !std::isfinite(max_time)) throw DomainError("max_time must be > 0");
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  if (monitor_every < 1) throw DomainError("monitor_every must be >= 1");
}

namespace {

// Per-vertex normals and curvatures plus the global scalars, in one pass.
struct Kinematics {
  std::vector<Vec2> normal;
  std::vector<double> kappa;
  GlobalScalars scalars;
  double min_edge = 0.0;
  double max_abs_kappa = 0.0;
};

Kinematics analyze(std::span<const Point2> p) {
  const std::size_t n = p.size();
  Kinematics k;
  k.normal.resize(n);
  k.kappa.resize(n);
  std::vector<Vec2> edge(n);
  std::vector<double> len(n);
  double length = 0.0;
  double twice_area = 0.0;
  double min_edge = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = p[i];
    const Point2& b = p[i + 1 == n ? 0 : i + 1];
    edge[i] = b - a;
    len[i] = norm(edge[i]);
    length += len[i];
    twice_area += a.x * b.y - b.x * a.y;
    min_edge = std::min(min_edge, len[i]);
  }
  double k2 = 0.0;
  double kmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = i == 0 ? n - 1 : i - 1;
    const Vec2& a = edge[ip];
    const Vec2& b = edge[i];
    const double c = cross(a, b);
    const double d = dot(a, b);
    if (c == 0.0 && d < 0.0) throw CuspError(i);
    const double phi = std::atan2(c, d);
    const double ds = 0.5 * (len[ip] + len[i]);
    k.kappa[i] = phi / ds;
    k.normal[i] = rotate_cw(normalized(a + b));
    k2 += phi * phi / ds;
    kmax = std::max(kmax, std::fabs(k.kappa[i]));
  }
  k.scalars = {length, 0.5 * twice_area, k2};
  k.min_edge = min_edge;
  k.max_abs_kappa = kmax;
  return k;
}

double stable_dt(const Kinematics& k, double h, double cfl) {
  double speed = 0.0;
  for (double kappa : k.kappa) speed = std::max(speed, std::fabs(h - kappa));
  const double parabolic = cfl * k.min_edge * k.min_edge;
  const double displacement = cfl * k.min_edge / std::max(speed, 1e-12);
  return std::min(parabolic, displacement);
}

void advance(std::span<const Point2> base, const Kinematics& k, double h, double dt,
             std::vector<Point2>& out) {
  out.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out[i] = base[i] + (dt * (h - k.kappa[i])) * k.normal[i];
  }
}

bool all_finite(std::span<const Point2> pts) {
  return std::all_of(pts.begin(), pts.end(), [](const Point2& p) { return is_finite(p); });
}

}  // namespace

FlowState FlowState::initial(DiscreteCurve curve, const ForcingSpec& spec) {
  const Kinematics k = analyze(curve.vertices());
  const double h = evaluate_forcing(spec, k.scalars);
  return FlowState{std::move(curve), 0.0, 0, k.scalars, h, 0};
}

std::vector<double> normal_velocity(const DiscreteCurve& curve, double h) {
  const auto frames = vertex_frames(curve);
  std::vector<double> f(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) f[i] = h - frames[i].curvature;
  return f;
}

double cfl_dt(const DiscreteCurve& curve, double h, const StepperConfig& config) {
  return stable_dt(analyze(curve.vertices()), h, config.cfl);
}

FlowState step(const FlowState& state, const ForcingSpec& spec, const StepperConfig& config) {
  const auto base = state.curve.vertices();
  Kinematics k0;
  try {
    k0 = analyze(base);
  } catch (const CurveError& e) {
    throw FlowError(TerminalStatus::kBlowUp, e.what(), state);
  }
  const double h0 = evaluate_forcing(spec, k0.scalars);

  if (k0.max_abs_kappa * k0.min_edge > 1.0) {
    throw FlowError(TerminalStatus::kResolutionLost,
                    "curvature unresolved: max|kappa| * min edge = " +
                        std::to_string(k0.max_abs_kappa * k0.min_edge),
                    state);
  }
  double dt = stable_dt(k0, h0, config.cfl);
  if (!(dt >= 1e-16)) {
    throw FlowError(TerminalStatus::kStiffnessCollapse,
                    "time step underflow: dt = " + std::to_string(dt), state);
  }
  double new_time = state.time + dt;
  if (new_time >= config.max_time) {
    dt = config.max_time - state.time;
    new_time = config.max_time;
  }

  std::vector<Point2> next;
  try {
    if (config.scheme == Scheme::kExplicitEuler) {
      advance(base, k0, h0, dt, next);
    } else {
      std::vector<Point2> half;
      advance(base, k0, h0, 0.5 * dt, half);
      if (!all_finite(half)) throw CurveError("non-finite midpoint state");
      const Kinematics kh = analyze(half);
      const double hh = evaluate_forcing(spec, kh.scalars);
      advance(base, kh, hh, dt, next);
    }
    if (!all_finite(next)) throw CurveError("non-finite coordinates");
  } catch (const CurveError& e) {
    throw FlowError(TerminalStatus::kBlowUp, std::string("blow-up: ") + e.what(), state);
  }

  std::optional<DiscreteCurve> moved;
  try {
    moved.emplace(std::move(next));
  } catch (const CurveError& e) {
    throw FlowError(TerminalStatus::kBlowUp, std::string("blow-up: ") + e.what(), state);
  }
  FlowState out{std::move(*moved), new_time, state.step_index + 1, {}, 0.0,
                state.last_resample_step};
  if (out.step_index - out.last_resample_step >= config.resample_every) {
    try {
      out.curve = resample_uniform(out.curve, config.mesh_size, ResampleMode::kSpline);
    } catch (const CurveError& e) {
      throw FlowError(TerminalStatus::kResolutionLost,
                      std::string("resample failed: ") + e.what(), state);
    }
    out.last_resample_step = out.step_index;
  }
  try {
    const Kinematics k1 = analyze(out.curve.vertices());
    out.scalars = k1.scalars;
    out.forcing = evaluate_forcing(spec, k1.scalars);
  } catch (const CurveError& e) {
    throw FlowError(TerminalStatus::kBlowUp, std::string("blow-up: ") + e.what(), state);
  }
  return out;
}

MonitorSample sample_monitors(const DiscreteCurve& curve, double h) {
  MonitorSample s;
  s.mesh_size = curve.size();
  s.forcing = h;
  const PairContext ctx(curve);
  const auto scan = theta_scan(ctx);
  s.theta_min = scan.theta_min;
  s.theta_max = scan.theta_max;
  s.max_turning = scan.max_turning;
  s.length = ctx.length();
  s.area = enclosed_area(curve);
  for (const auto& f : ctx.frames()) s.kappa_max = std::max(s.kappa_max, std::fabs(f.curvature));

  const auto emb = is_embedded(curve);
  s.embedded = emb.embedded;
  s.intersection = emb.witness;
  try {
    const auto cm = min_chord_arc(ctx);
    s.ratio_min = cm.ratio_min;
    s.ratio_argmin = {cm.argmin.i, cm.argmin.j};
    s.argmin_arc = cm.argmin.l;
    s.argmin_theta = cm.argmin.theta;
    s.first_variation = first_variation_residual(ctx, cm.argmin);
    s.second_variation = second_variation_check(ctx, cm.argmin);
  } catch (const SelfTouchingError& e) {
    s.ratio_min = 0.0;
    s.ratio_argmin = e.pair();
    s.embedded = false;
  }
  return s;
}

namespace {

MonitorSample take_sample(const FlowState& state, bool resampled) {
  MonitorSample s = sample_monitors(state.curve, state.forcing);
  s.time = state.time;
  s.step_index = state.step_index;
  s.resampled_since_previous = resampled;
  return s;
}

}  // namespace

Trajectory run(const DiscreteCurve& initial, const ForcingSpec& spec, const StepperConfig& config) {
  config.validate();
  Trajectory traj;
  traj.forcing = spec;
  traj.config = config;

  const auto emb = is_embedded(initial);
  if (!emb.embedded) {
    throw AdmissionError("initial curve is not embedded: edges " +
                         std::to_string(emb.witness->first) + " and " +
                         std::to_string(emb.witness->second) + " intersect");
  }
  DiscreteCurve curve = initial;
  if (curve.orientation() < 0) {
    curve = curve.reversed();
    traj.notices.push_back("initial curve was negatively oriented; traversal reversed");
  }
  if (curve.size() != config.mesh_size || edge_ratio(curve) > 1.0 + 1e-9) {
    curve = resample_uniform(curve, config.mesh_size, ResampleMode::kPolyline);
    traj.notices.push_back("initial curve resampled to " + std::to_string(config.mesh_size) +
                           " equal edges");
    const auto emb2 = is_embedded(curve);
    if (!emb2.embedded) throw AdmissionError("initial curve is not embedded after resampling");
  }

  const auto scan0 = theta_scan(curve);
  traj.theta0_min = scan0.theta_min;
  traj.theta0_tolerance = 3.0 * scan0.max_turning;
  traj.admissible = scan0.theta_min >= -pi - traj.theta0_tolerance;
  traj.initial_convex = is_convex(curve);
  if (!traj.admissible) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "warning: initial theta_min = %.6f < -pi; outside the hypothesis class", scan0.theta_min);
    traj.notices.emplace_back(buf);
  }

  FlowState state = FlowState::initial(std::move(curve), spec);
  auto record = [&](const FlowState& s, bool resampled) {
    traj.samples.push_back(take_sample(s, resampled));
    if (config.keep_snapshots) traj.snapshots.push_back(s.curve);
  };
  record(state, false);

  bool resampled = false;
  while (state.time < config.max_time && state.step_index < config.max_steps) {
    try {
      FlowState next = step(state, spec, config);
      if (next.last_resample_step != state.last_resample_step) resampled = true;
      state = std::move(next);
    } catch (const FlowError& e) {
      traj.status = e.kind();
      traj.status_detail = e.what();
      state = e.last_good();
      break;
    }
    if (state.step_index % config.monitor_every == 0) {
      record(state, resampled);
      resampled = false;
      if (!traj.samples.back().embedded && config.stop_on_embeddedness_loss) {
        traj.status = TerminalStatus::kEmbeddednessLost;
        traj.status_detail = "self-intersection detected";
        break;
      }
    }
  }
  if (traj.samples.back().step_index != state.step_index) record(state, resampled);
  if (traj.status == TerminalStatus::kClean && !traj.samples.back().embedded &&
      config.stop_on_embeddedness_loss) {
    traj.status = TerminalStatus::kEmbeddednessLost;
    traj.status_detail = "self-intersection detected";
  }
  return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "time,ratio_min,theta_min,theta_max,L,A,h,kappa_max,embedded\n";
  char buf[512];
  for (const auto& s : traj.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", s.time,
                  s.ratio_min, s.theta_min, s.theta_max, s.length, s.area, s.forcing, s.kappa_max,
                  s.embedded ? 1 : 0);
    out << buf;
  }
}

void write_snapshots(const std::filesystem::path& dir, const Trajectory& traj) {
  const auto sub = dir / "snapshots";
  std::filesystem::create_directories(sub);
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    write_curve(sub / ("t_" + std::to_string(k) + ".curve"), traj.snapshots[k].vertices());
  }
}

}  // namespace chordarc
