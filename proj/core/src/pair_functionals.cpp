#include "chordarc/pair_functionals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <tuple>

#include "chordarc/errors.hpp"
#include "chordarc/parallel.hpp"

namespace chordarc {

using std::numbers::pi;

double psi_of(double arc, double length) { return length / pi * std::sin(pi * arc / length); }

PairContext::PairContext(const DiscreteCurve& curve)
    : curve_(curve), turning_(turning_angles(curve)), frames_(vertex_frames(curve)) {
  const std::size_t n = curve_.size();
  cumulative_arc_.resize(n + 1);
  cumulative_arc_[0] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cumulative_arc_[k + 1] = cumulative_arc_[k] + distance(curve_[k], curve_[curve_.next(k)]);
  }
  length_ = cumulative_arc_[n];

  theta_prefix_.resize(n);
  double running = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    theta_prefix_[k] = running + 0.5 * turning_[k];
    running += turning_[k];
    max_turning_ = std::max(max_turning_, std::fabs(turning_[k]));
  }
  total_turning_ = running;
}

double PairContext::arc(std::size_t i, std::size_t j) const {
  const double diff = cumulative_arc_[j] - cumulative_arc_[i];
  return j > i ? diff : length_ + diff;
}

double PairContext::theta(std::size_t i, std::size_t j) const {
  const double diff = theta_prefix_[j] - theta_prefix_[i];
  return j > i ? diff : total_turning_ + diff;
}

PairRecord PairContext::record(std::size_t i, std::size_t j) const {
  if (i == j || i >= size() || j >= size()) throw Error("pair_record: need distinct valid indices");
  PairRecord r;
  r.i = i;
  r.j = j;
  const Vec2 chord = curve_[j] - curve_[i];
  r.d = norm(chord);
  if (r.d == 0.0) throw SelfTouchingError(i, j);
  r.l = arc(i, j);
  r.psi = psi_of(r.l, length_);
  r.ratio = r.d / r.psi;
  r.theta = theta(i, j);
  r.w = chord / r.d;
  return r;
}

double PairContext::ratio(std::size_t i, std::size_t j) const {
  const double d = distance(curve_[i], curve_[j]);
  double l = arc(i, j);
  if (l > 0.5 * length_) l = length_ - l;
  return d / psi_of(l, length_);
}

PairRecord pair_record(const DiscreteCurve& curve, std::size_t i, std::size_t j) {
  return PairContext(curve).record(i, j);
}

ThetaScan theta_scan(const PairContext& ctx) {
  const std::size_t n = ctx.size();
  ThetaScan out;
  out.max_turning = ctx.max_turning();
  out.theta_min = std::numeric_limits<double>::infinity();
  out.theta_max = -std::numeric_limits<double>::infinity();

  auto consider = [&](double value, std::size_t i, std::size_t j) {
    const VertexPair p{i, j};
    if (value < out.theta_min || (value == out.theta_min && p < out.argmin)) {
      out.theta_min = value;
      out.argmin = p;
    }
    if (value > out.theta_max || (value == out.theta_max && p < out.argmax)) {
      out.theta_max = value;
      out.argmax = p;
    }
  };

  // i < j: theta = Q_j - Q_i, extremal against the prefix max/min of Q.
  const auto& q = ctx.theta_prefix();
  std::size_t imax = 0, imin = 0;
  for (std::size_t j = 1; j < n; ++j) {
    consider(ctx.theta(imax, j), imax, j);
    consider(ctx.theta(imin, j), imin, j);
    if (q[j] > q[imax]) imax = j;
    if (q[j] < q[imin]) imin = j;
  }
  // j < i: theta = T + Q_j - Q_i, same idea with the roles swapped.
  std::size_t jmax = 0, jmin = 0;
  for (std::size_t i = 1; i < n; ++i) {
    consider(ctx.theta(i, jmin), i, jmin);
    consider(ctx.theta(i, jmax), i, jmax);
    if (q[i] > q[jmax]) jmax = i;
    if (q[i] < q[jmin]) jmin = i;
  }
  return out;
}

ThetaScan theta_scan(const DiscreteCurve& curve) { return theta_scan(PairContext(curve)); }

namespace {

struct Candidate {
  double ratio = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;

  bool better_than(const Candidate& o) const {
    return std::tie(ratio, i, j) < std::tie(o.ratio, o.i, o.j);
  }
};

}  // namespace

ChordArcMin min_chord_arc(const PairContext& ctx) {
  const std::size_t n = ctx.size();
  const double length = ctx.length();
  const double half = 0.5 * length;
  const auto pts = ctx.curve().vertices();

  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = k == 0 ? 0.0 : ctx.arc(0, k);

  const std::size_t workers = n < 256 ? 1 : std::min<std::size_t>(worker_count(), 64);
  std::vector<Candidate> best(workers);
  std::vector<Candidate> touch(workers);

  run_workers(workers, [&](std::size_t w) {
    Candidate local, contact;
    for (std::size_t i = w; i + 1 < n; i += workers) {
      const Point2 p = pts[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pts[j].x - p.x;
        const double dy = pts[j].y - p.y;
        const double d = std::sqrt(dx * dx + dy * dy);
        double l = s[j] - s[i];
        if (l > half) l = length - l;
        const double ratio = d / (length / pi * std::sin(pi * l / length));
        if (d == 0.0) {
          const Candidate c{0.0, i, j};
          if (c.better_than(contact)) contact = c;
        }
        if (ratio < local.ratio) local = {ratio, i, j};
      }
    }
    best[w] = local;
    touch[w] = contact;
  });

  Candidate winner, contact;
  for (std::size_t w = 0; w < workers; ++w) {
    if (best[w].better_than(winner)) winner = best[w];
    if (touch[w].better_than(contact)) contact = touch[w];
  }
  if (std::isfinite(contact.ratio)) throw SelfTouchingError(contact.i, contact.j);

  ChordArcMin out;
  out.ratio_min = winner.ratio;
  const bool forward = ctx.arc(winner.i, winner.j) <= half;
  out.argmin = forward ? ctx.record(winner.i, winner.j) : ctx.record(winner.j, winner.i);
  return out;
}

ChordArcMin min_chord_arc(const DiscreteCurve& curve) { return min_chord_arc(PairContext(curve)); }

bool is_local_minimizer(const PairContext& ctx, const PairRecord& rec) {
  const std::size_t n = ctx.size();
  const double here = ctx.ratio(rec.i, rec.j);
  for (int di = -1; di <= 1; ++di) {
    for (int dj = -1; dj <= 1; ++dj) {
      if (di == 0 && dj == 0) continue;
      const std::size_t a = (rec.i + n + static_cast<std::size_t>(di + 1) - 1) % n;
      const std::size_t b = (rec.j + n + static_cast<std::size_t>(dj + 1) - 1) % n;
      if (a == b) continue;
      if (ctx.ratio(a, b) < here) return false;
    }
  }
  return true;
}

std::string to_string(MinimizerCase c) {
  switch (c) {
    case MinimizerCase::kI:
      return "I";
    case MinimizerCase::kII:
      return "II";
    case MinimizerCase::kIII:
      return "III";
  }
  return "?";
}

MinimizerClassification classify_minimizer(const PairContext& ctx, const PairRecord& rec,
                                           double tolerance) {
  const auto& fp = ctx.frames()[rec.i];
  const auto& fq = ctx.frames()[rec.j];
  const double cp = dot(rec.w, fp.tangent);
  const double cq = dot(rec.w, fq.tangent);
  const double mismatch = std::fabs(cp - cq);
  if (mismatch > tolerance) throw NotCriticalError(mismatch, tolerance);

  MinimizerClassification out;
  const double c = std::clamp(cp, 0.0, 1.0);
  out.beta = 2.0 * std::acos(c);
  const double sin_half = std::sin(0.5 * out.beta);
  const double sp = dot(rec.w, fp.normal);
  const double sq = dot(rec.w, fq.normal);

  double offset = 0.0;
  double expect_p = 0.0;
  double expect_q = 0.0;
  if (sin_half < 1e-6) {
    out.case_id = MinimizerCase::kIII;
  } else if (sp < 0.0 && sq > 0.0) {
    out.case_id = MinimizerCase::kI;
    offset = out.beta;
    expect_p = -sin_half;
    expect_q = sin_half;
  } else if (sp > 0.0 && sq < 0.0) {
    out.case_id = MinimizerCase::kII;
    offset = -out.beta;
    expect_p = sin_half;
    expect_q = -sin_half;
  } else {
    out.case_id = MinimizerCase::kIII;
  }
  if (out.case_id == MinimizerCase::kIII) {
    const double sign = sp >= 0.0 ? 1.0 : -1.0;
    expect_p = sign * sin_half;
    expect_q = sign * sin_half;
  }
  out.k = std::lround((rec.theta - offset) / (2.0 * pi));
  out.residuals["theta"] = std::fabs(rec.theta - (2.0 * pi * static_cast<double>(out.k) + offset));
  out.residuals["normal_p"] = std::fabs(sp - expect_p);
  out.residuals["normal_q"] = std::fabs(sq - expect_q);
  out.residuals["tangent_mismatch"] = mismatch;
  return out;
}

MinimizerClassification classify_minimizer(const DiscreteCurve& curve, const PairRecord& rec,
                                           double tolerance) {
  return classify_minimizer(PairContext(curve), rec, tolerance);
}

double first_variation_residual(const PairContext& ctx, const PairRecord& rec) {
  const double target = rec.ratio * std::cos(pi * rec.l / ctx.length());
  const double rp = std::fabs(dot(rec.w, ctx.frames()[rec.i].tangent) - target);
  const double rq = std::fabs(dot(rec.w, ctx.frames()[rec.j].tangent) - target);
  return std::max(rp, rq);
}

double first_variation_residual(const DiscreteCurve& curve, const PairRecord& rec) {
  return first_variation_residual(PairContext(curve), rec);
}

double second_variation_check(const PairContext& ctx, const PairRecord& rec) {
  const auto& fp = ctx.frames()[rec.i];
  const auto& fq = ctx.frames()[rec.j];
  const Vec2 kp = -fp.curvature * fp.normal;
  const Vec2 kq = -fq.curvature * fq.normal;
  const double length = ctx.length();
  return dot(rec.w, kq - kp) + 4.0 * pi * pi * rec.d / (length * length);
}

double second_variation_check(const DiscreteCurve& curve, const PairRecord& rec) {
  return second_variation_check(PairContext(curve), rec);
}

void write_pair_dump(std::ostream& out, const DiscreteCurve& curve) {
  const PairContext ctx(curve);
  out << "i,j,d,l,psi,ratio,theta\n";
  char buf[256];
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      if (i == j) continue;
      const PairRecord r = ctx.record(i, j);
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", i, j, r.d, r.l,
                    r.psi, r.ratio, r.theta);
      out << buf;
    }
  }
}

}  // namespace chordarc
