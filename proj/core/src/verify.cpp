#include "chordarc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace chordarc {

using std::numbers::pi;

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

constexpr std::pair<CheckId, std::string_view> kCheckNames[] = {
    {CheckId::kHNonneg, "H_NONNEG"},
    {CheckId::kThetaRange, "THETA_RANGE"},
    {CheckId::kThetaMinMonotone, "THETA_MIN_MONOTONE"},
    {CheckId::kThetaHeat, "THETA_HEAT"},
    {CheckId::kLemma21Duality, "LEMMA21_DUALITY"},
    {CheckId::kRatioLowerBound, "RATIO_LOWER_BOUND"},
    {CheckId::kRatioLiminfAtMin, "RATIO_LIMINF_AT_MIN"},
    {CheckId::kEmbeddedness, "EMBEDDEDNESS"},
    {CheckId::kConservation, "CONSERVATION"},
};

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckResult make(CheckId id) {
  CheckResult r;
  r.id = id;
  return r;
}

CheckResult inconclusive(CheckId id, std::string note) {
  CheckResult r = make(id);
  r.status = CheckStatus::kInconclusive;
  r.note = std::move(note);
  return r;
}

// Pass iff every sample satisfies slack_k >= -tol_k; reports the sample
// closest to (or furthest past) its own bound.
template <class Slack, class Tol>
CheckResult worst_over_samples(CheckId id, const Trajectory& traj, Slack slack, Tol tol) {
  if (traj.samples.empty()) return inconclusive(id, "no samples");
  CheckResult r = make(id);
  double worst_excess = kInf;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    double m = slack(traj.samples[k]);
    if (std::isnan(m)) m = -kInf;
    const double t = tol(traj.samples[k]);
    if (m + t < worst_excess) {
      worst_excess = m + t;
      r.margin = m;
      r.tolerance_used = t;
      r.worst_time = traj.samples[k].time;
      r.worst_sample = k;
    }
  }
  r.status = worst_excess >= 0.0 ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  double m = *mid;
  if (v.size() % 2 == 0) m = 0.5 * (m + *std::max_element(v.begin(), mid));
  return m;
}

// Second derivative of f along arc length at vertex c from f at c-1, c, c+1.
double second_arc_derivative(double fm, double f0, double fp, double em, double ep) {
  return 2.0 * ((fp - f0) / ep - (f0 - fm) / em) / (em + ep);
}

}  // namespace

std::string to_string(CheckId id) {
  for (const auto& [key, name] : kCheckNames) {
    if (key == id) return std::string(name);
  }
  return "?";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const auto& [key, text] : kCheckNames) {
    if (text == name) return key;
  }
  return std::nullopt;
}

const CheckResult* MonitorReport::find(CheckId id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool MonitorReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

TheoremCatalog TheoremCatalog::all() {
  TheoremCatalog c;
  for (const auto& [key, name] : kCheckNames) c.enabled.push_back(key);
  return c;
}

TheoremCatalog TheoremCatalog::parse(std::string_view list) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(list) == "all") return all();
  std::set<CheckId> chosen;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    const auto id = parse_check_id(item);
    if (!id) throw DomainError("unknown monitor `" + std::string(item) + "`");
    if (!chosen.insert(*id).second) throw DomainError("monitor `" + std::string(item) + "` listed twice");
  }
  if (chosen.empty()) throw DomainError("empty monitor list");
  TheoremCatalog c;
  for (const auto& [key, name] : kCheckNames) {
    if (chosen.count(key) != 0) c.enabled.push_back(key);
  }
  return c;
}

bool TheoremCatalog::contains(CheckId id) const {
  return std::find(enabled.begin(), enabled.end(), id) != enabled.end();
}

CheckResult check_h_nonneg(const Trajectory& traj) {
  return worst_over_samples(
      CheckId::kHNonneg, traj, [](const MonitorSample& s) { return s.forcing; },
      [](const MonitorSample&) { return 0.0; });
}

CheckResult check_theta_range(const Trajectory& traj) {
  if (!traj.admissible) {
    return inconclusive(CheckId::kThetaRange, "initial curve has theta_min < -pi");
  }
  CheckResult r = worst_over_samples(
      CheckId::kThetaRange, traj,
      [](const MonitorSample& s) { return std::min(s.theta_min + pi, 3.0 * pi - s.theta_max); },
      [](const MonitorSample& s) { return std::max(0.05, 3.0 * s.max_turning); });
  return r;
}

CheckResult check_theta_min_monotone(const Trajectory& traj, const CheckOptions& opts) {
  const auto& s = traj.samples;
  if (s.size() < 10) {
    return inconclusive(CheckId::kThetaMinMonotone, "fewer than 10 samples");
  }
  CheckResult r = make(CheckId::kThetaMinMonotone);
  r.tolerance_used = opts.theta_monotone_tol;
  r.margin = kInf;
  bool active = false;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    if (!(s[k].theta_min < -opts.theta_active)) continue;
    active = true;
    const double inc = s[k + 1].theta_min - s[k].theta_min;
    if (inc < r.margin) {
      r.margin = inc;
      r.worst_time = s[k + 1].time;
      r.worst_sample = k + 1;
    }
  }
  if (!active) {
    return inconclusive(CheckId::kThetaMinMonotone, "theta_min never negative");
  }
  r.status = r.margin >= -r.tolerance_used ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

CheckResult check_theta_heat(const Trajectory& traj, const CheckOptions& opts) {
  const auto& s = traj.samples;
  if (traj.snapshots.size() != s.size()) {
    throw Error("theta heat check needs a snapshot at every sample");
  }
  std::vector<double> residuals;
  std::vector<double> laplacians;
  double worst = -1.0;
  CheckResult r = make(CheckId::kThetaHeat);
  std::size_t triples = 0;
  constexpr double kFractions[] = {0.1, 0.2, 0.3, 0.4, 0.5};
  constexpr std::size_t kBasePoints = 16;
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    if (s[k].resampled_since_previous || s[k + 1].resampled_since_previous) continue;
    const std::size_t n = s[k].mesh_size;
    if (s[k - 1].mesh_size != n || s[k + 1].mesh_size != n) continue;
    const double d1 = s[k].time - s[k - 1].time;
    const double d2 = s[k + 1].time - s[k].time;
    if (!(d1 > 0.0 && d2 > 0.0)) continue;
    ++triples;
    const PairContext c0(traj.snapshots[k - 1]);
    const PairContext c1(traj.snapshots[k]);
    const PairContext c2(traj.snapshots[k + 1]);
    const double w0 = -d2 / (d1 * (d1 + d2));
    const double w1 = (d2 - d1) / (d1 * d2);
    const double w2 = d1 / (d2 * (d1 + d2));
    for (std::size_t b = 0; b < kBasePoints; ++b) {
      const std::size_t i = b * n / kBasePoints;
      for (double f : kFractions) {
        const std::size_t off = static_cast<std::size_t>(std::lround(f * static_cast<double>(n)));
        const std::size_t j = (i + off) % n;
        const double theta_t = w0 * c0.theta(i, j) + w1 * c1.theta(i, j) + w2 * c2.theta(i, j);
        const auto& cv = c1.curve();
        const std::size_t ip = cv.prev(i), in = cv.next(i), jp = cv.prev(j), jn = cv.next(j);
        const double epm = distance(cv[ip], cv[i]), epp = distance(cv[i], cv[in]);
        const double eqm = distance(cv[jp], cv[j]), eqp = distance(cv[j], cv[jn]);
        const double th = c1.theta(i, j);
        const double lap_q = second_arc_derivative(c1.theta(i, jp), th, c1.theta(i, jn), eqm, eqp);
        const double lap_p = second_arc_derivative(c1.theta(ip, j), th, c1.theta(in, j), epm, epp);
        const double lap = lap_p + lap_q;
        const double res = std::fabs(theta_t - lap);
        residuals.push_back(res);
        laplacians.push_back(std::fabs(lap));
        if (res > worst) {
          worst = res;
          r.worst_pair = VertexPair{i, j};
          r.worst_time = s[k].time;
          r.worst_sample = k;
        }
      }
    }
  }
  if (triples == 0) {
    throw Error("theta heat check needs three consecutive samples without a resample between them");
  }
  const double scale = median(laplacians);
  const double noise_floor = 1e-6;
  r.tolerance_used = 0.0;
  if (scale < noise_floor) {
    r.status = CheckStatus::kInconclusive;
    r.note = "second derivatives of theta below the noise floor";
    r.margin = 0.0;
    return r;
  }
  const double rel = median(residuals) / scale;
  r.margin = opts.heat_threshold - rel;
  r.status = r.margin >= 0.0 ? CheckStatus::kPass : CheckStatus::kFail;
  r.note = "relative residual " + std::to_string(rel) + " over " + std::to_string(triples) + " triples";
  return r;
}

CheckResult check_lemma21_duality(const Trajectory& traj) {
  return worst_over_samples(
      CheckId::kLemma21Duality, traj,
      [](const MonitorSample& s) { return -std::fabs(s.theta_max + s.theta_min - 2.0 * pi); },
      [](const MonitorSample& s) { return std::max(1e-2, 3.0 * s.max_turning); });
}

CheckResult check_ratio_lower_bound(const Trajectory& traj, const CheckOptions& opts) {
  const auto& s = traj.samples;
  if (s.empty()) return inconclusive(CheckId::kRatioLowerBound, "no samples");
  const std::size_t lead = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(opts.ratio_reference_fraction * static_cast<double>(s.size()))));
  double ref = kInf;
  for (std::size_t k = 0; k < lead; ++k) ref = std::min(ref, s[k].ratio_min);
  const double bound = (1.0 - opts.ratio_slack) * ref;

  CheckResult r = make(CheckId::kRatioLowerBound);
  r.margin = kInf;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double m = s[k].ratio_min - bound;
    if (m < r.margin) {
      r.margin = m;
      r.worst_time = s[k].time;
      r.worst_sample = k;
      r.worst_pair = s[k].ratio_argmin;
    }
  }
  r.tolerance_used = 0.0;
  if (!traj.admissible) {
    r.status = CheckStatus::kInconclusive;
    r.note = "initial curve has theta_min < -pi";
    return r;
  }
  if (r.margin >= 0.0) {
    r.status = CheckStatus::kPass;
    return r;
  }
  const bool collapsed = s.back().ratio_min < 0.5 * s.front().ratio_min;
  const bool still_falling = s.size() >= 2 && s.back().ratio_min < s[s.size() - 2].ratio_min;
  if (collapsed && still_falling) {
    r.status = CheckStatus::kFail;
    r.note = "ratio_min collapsing at the end of the run";
  } else {
    r.status = CheckStatus::kInconclusive;
    r.note = "ratio_min dipped below the reference floor without collapsing";
  }
  return r;
}

CheckResult check_minimizer_identities(const Trajectory& traj) {
  CheckResult r = make(CheckId::kRatioLiminfAtMin);
  double worst_excess = kInf;
  std::size_t considered = 0;
  std::size_t wide = 0;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& s = traj.samples[k];
    if (!s.embedded || s.mesh_size == 0) continue;
    ++considered;
    const double tol = 10.0 * s.length / static_cast<double>(s.mesh_size);
    const double m = std::min(-s.first_variation, s.second_variation);
    if (m + tol < worst_excess) {
      worst_excess = m + tol;
      r.margin = m;
      r.tolerance_used = tol;
      r.worst_time = s.time;
      r.worst_sample = k;
      r.worst_pair = s.ratio_argmin;
    }
    if (s.ratio_min < 1.0 && 0.5 * s.argmin_theta > pi * s.argmin_arc / s.length) ++wide;
  }
  if (considered == 0) return inconclusive(CheckId::kRatioLiminfAtMin, "no embedded samples");
  r.status = worst_excess >= 0.0 ? CheckStatus::kPass : CheckStatus::kFail;
  r.note = "samples with theta/2 > pi l/L at the minimizer: " + std::to_string(wide) + "/" +
           std::to_string(considered);
  return r;
}

CheckResult check_embeddedness(const Trajectory& traj) {
  CheckResult r = make(CheckId::kEmbeddedness);
  std::size_t lost = 0;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& s = traj.samples[k];
    if (s.embedded) continue;
    if (lost == 0) {
      r.worst_time = s.time;
      r.worst_sample = k;
      if (s.intersection) r.worst_pair = s.intersection;
    }
    ++lost;
  }
  r.margin = lost == 0 ? 0.0 : -static_cast<double>(lost);
  r.status = lost == 0 ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

CheckResult check_conservation(const Trajectory& traj, const CheckOptions& opts) {
  const bool area = traj.forcing.kind == ForcingKind::kAreaPreserving;
  const bool length = traj.forcing.kind == ForcingKind::kLengthPreserving;
  if (!area && !length) {
    return inconclusive(CheckId::kConservation, "forcing " + traj.forcing.to_string() +
                                                    " conserves neither area nor length");
  }
  if (traj.samples.empty()) return inconclusive(CheckId::kConservation, "no samples");
  auto value = [&](const MonitorSample& s) { return area ? s.area : s.length; };
  const double q0 = value(traj.samples.front());
  CheckResult r = worst_over_samples(
      CheckId::kConservation, traj,
      [&](const MonitorSample& s) { return -std::fabs(value(s) - q0) / std::fabs(q0); },
      [&](const MonitorSample&) { return opts.conservation_tol; });
  r.note = area ? "relative area drift" : "relative length drift";
  return r;
}

double ratio_min_smallest_increment(const Trajectory& traj) {
  double worst = kInf;
  for (std::size_t k = 0; k + 1 < traj.samples.size(); ++k) {
    worst = std::min(worst, traj.samples[k + 1].ratio_min - traj.samples[k].ratio_min);
  }
  return worst;
}

MonitorReport run_checks(const Trajectory& traj, const TheoremCatalog& catalog,
                         const CheckOptions& opts) {
  MonitorReport report;
  report.forcing = traj.forcing.to_string();
  report.terminal_status = to_string(traj.status);
  for (const auto& [id, name] : kCheckNames) {
    if (!catalog.contains(id)) continue;
    switch (id) {
      case CheckId::kHNonneg:
        report.checks.push_back(check_h_nonneg(traj));
        break;
      case CheckId::kThetaRange:
        report.checks.push_back(check_theta_range(traj));
        break;
      case CheckId::kThetaMinMonotone:
        report.checks.push_back(check_theta_min_monotone(traj, opts));
        break;
      case CheckId::kThetaHeat:
        try {
          report.checks.push_back(check_theta_heat(traj, opts));
        } catch (const Error& e) {
          report.checks.push_back(inconclusive(id, e.what()));
        }
        break;
      case CheckId::kLemma21Duality:
        report.checks.push_back(check_lemma21_duality(traj));
        break;
      case CheckId::kRatioLowerBound:
        report.checks.push_back(check_ratio_lower_bound(traj, opts));
        break;
      case CheckId::kRatioLiminfAtMin:
        report.checks.push_back(check_minimizer_identities(traj));
        break;
      case CheckId::kEmbeddedness:
        report.checks.push_back(check_embeddedness(traj));
        break;
      case CheckId::kConservation:
        report.checks.push_back(check_conservation(traj, opts));
        break;
    }
  }
  return report;
}

}  // namespace chordarc
