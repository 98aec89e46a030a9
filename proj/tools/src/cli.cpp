#include "chordarc_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chordarc/curve_io.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/parallel.hpp"

namespace chordarc::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

struct RunOutcome {
  Trajectory traj;
  MonitorReport report;
  GeneratedCurve generated;
};

RunOutcome execute(const RunConfig& cfg, std::ostream& err) {
  GeneratedCurve gen = generate(cfg.generator);
  for (const auto& n : gen.notices) err << "note: " << n << '\n';
  Trajectory traj = run(gen.curve, cfg.forcing, cfg.effective_stepper());
  for (const auto& n : traj.notices) err << "note: " << n << '\n';
  MonitorReport report = run_checks(traj, cfg.monitors);
  return {std::move(traj), std::move(report), std::move(gen)};
}

void write_outputs(const RunConfig& cfg, const fs::path& dir, const RunOutcome& r) {
  fs::create_directories(dir);
  std::ostringstream csv;
  write_trajectory_csv(csv, r.traj);
  write_text(dir / "trajectory.csv", csv.str());
  write_text(dir / "report.json", report_to_json(r.report));
  write_text(dir / "report.txt", render_report_text(r.report));
  if (cfg.write_snapshots) write_snapshots(dir, r.traj);
  if (cfg.write_pair_dump) {
    std::ostringstream pairs;
    write_pair_dump(pairs, r.generated.curve);
    write_text(dir / "pairs.csv", pairs.str());
  }
}

}  // namespace

int simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<RunOutcome> outcome;
  try {
    outcome.emplace(execute(cfg, err));
    write_outputs(cfg, cfg.output_dir, *outcome);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  const RunOutcome& r = *outcome;
  out << "status " << to_string(r.traj.status);
  if (!r.traj.status_detail.empty()) out << " (" << r.traj.status_detail << ")";
  out << ", t = " << num(r.traj.samples.back().time) << ", steps " << r.traj.samples.back().step_index
      << '\n';
  out << render_report_text(r.report);
  out << "wrote " << (cfg.output_dir / "trajectory.csv").string() << '\n';
  return r.report.any_fail() ? kExitFail : kExitOk;
}

int audit(const fs::path& curve_file, const std::optional<fs::path>& pairs_csv, std::ostream& out,
          std::ostream& err) {
  try {
    const auto points = read_curve_points(curve_file);
    const auto emb = is_embedded(points);  // indices as in the file
    Admission adm = admit_curve(points);
    for (const auto& n : adm.notices) err << "note: " << n << '\n';
    const DiscreteCurve& curve = adm.curve;
    const PairContext ctx(curve);
    const auto scan = theta_scan(ctx);
    const double duality = std::fabs(scan.theta_max + scan.theta_min - 2.0 * std::numbers::pi);
    const double duality_tol = std::max(1e-2, 3.0 * scan.max_turning);

    out << "N " << curve.size() << '\n';
    out << "length " << num(ctx.length()) << '\n';
    out << "area " << num(enclosed_area(curve)) << '\n';
    out << "embedded " << (emb.embedded ? "true" : "false");
    if (emb.witness) out << " (edges " << emb.witness->first << ", " << emb.witness->second << ")";
    out << '\n';
    out << "theta_min " << num(scan.theta_min) << " at (" << scan.argmin.first << ", " << scan.argmin.second
        << ")\n";
    out << "theta_max " << num(scan.theta_max) << " at (" << scan.argmax.first << ", " << scan.argmax.second
        << ")\n";
    out << "theta_min_ge_minus_pi " << (scan.theta_min >= -std::numbers::pi - 3.0 * scan.max_turning ? "true" : "false")
        << '\n';
    out << "duality_margin " << num(duality) << " (tolerance " << num(duality_tol) << ")\n";
    try {
      const auto cm = min_chord_arc(ctx);
      out << "ratio_min " << num(cm.ratio_min, "%.6f") << " at (" << cm.argmin.i << ", " << cm.argmin.j
          << ")\n";
      out << "first_variation_residual " << num(first_variation_residual(ctx, cm.argmin)) << '\n';
      out << "second_variation_margin " << num(second_variation_check(ctx, cm.argmin)) << '\n';
      try {
        const auto cls = classify_minimizer(ctx, cm.argmin);
        out << "minimizer_case " << to_string(cls.case_id) << " beta " << num(cls.beta) << " k " << cls.k
            << '\n';
      } catch (const NotCriticalError& e) {
        out << "minimizer_case none (" << e.what() << ")\n";
      }
    } catch (const SelfTouchingError& e) {
      out << "ratio_min 0 (vertices " << e.pair().first << ", " << e.pair().second << " coincide)\n";
    }
    if (pairs_csv) {
      std::ostringstream pairs;
      write_pair_dump(pairs, curve);
      write_text(*pairs_csv, pairs.str());
    }
    return duality <= duality_tol ? kExitOk : kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

std::vector<SweepPoint> expand_sweep(const RunConfig& cfg) {
  std::vector<SweepPoint> points{{"", cfg}};
  for (const auto& axis : cfg.sweep) {
    std::vector<SweepPoint> next;
    for (const auto& p : points) {
      for (const auto& v : axis.values) {
        SweepPoint q = p;
        q.label += (q.label.empty() ? "" : "_") + axis.key + "=" + v;
        q.config.set(axis.key == "forcing" ? "flow" : "generator", axis.key, v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  for (auto& p : points) {
    p.config.sweep.clear();
    if (p.label.empty()) p.label = "base";
    p.config.output_dir = cfg.output_dir / p.label;
  }
  return points;
}

int sweep(const RunConfig& cfg, unsigned threads, std::ostream& out, std::ostream& err) {
  std::vector<SweepPoint> points;
  try {
    points = expand_sweep(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  struct Row {
    std::string label;
    std::string line;
    bool error = false;
    bool fail = false;
    std::string log;
  };
  std::vector<Row> rows(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t) {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      const auto& p = points[k];
      Row& row = rows[k];
      row.label = p.label;
      std::ostringstream log;
      try {
        const RunOutcome r = execute(p.config, log);
        write_outputs(p.config, p.config.output_dir, r);
        double ratio_floor = INFINITY;
        for (const auto& s : r.traj.samples) ratio_floor = std::min(ratio_floor, s.ratio_min);
        std::string line = p.label + "," + to_string(r.traj.status) + "," + num(r.traj.theta0_min) + "," +
                           (r.traj.admissible ? "1" : "0") + "," + num(ratio_floor) + "," +
                           num(r.traj.samples.back().time);
        for (const auto& c : r.report.checks) line += "," + to_string(c.status);
        row.line = std::move(line);
        row.fail = r.report.any_fail();
      } catch (const Error& e) {
        row.error = true;
        log << "error: " << e.what() << '\n';
        row.line = p.label + ",ERROR,,,,";
        for (std::size_t c = 0; c < cfg.monitors.enabled.size(); ++c) row.line += ",";
      }
      row.log = log.str();
    }
  };
  run_workers(std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size()))), work);

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.label < b.label; });
  std::string csv = "label,status,theta0_min,admissible,ratio_min_floor,final_time";
  for (const auto id : cfg.monitors.enabled) csv += "," + to_string(id);
  csv += "\n";
  bool any_error = false, any_fail = false;
  for (const auto& row : rows) {
    csv += row.line + "\n";
    if (!row.log.empty()) err << "[" << row.label << "]\n" << row.log;
    any_error = any_error || row.error;
    any_fail = any_fail || row.fail;
  }
  try {
    fs::create_directories(cfg.output_dir);
    write_text(cfg.output_dir / "sweep.csv", csv);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  out << csv;
  if (any_error) return kExitError;
  return any_fail ? kExitFail : kExitOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve shortening flow with global forcing, and monitors for the distance comparison bound"};
  app.set_version_flag("--version", "chordarc 0.1.0");
  app.require_subcommand(1);

  std::string config_path, curve_path, pairs_path, out_dir;
  bool snapshots = false;
  unsigned threads = 0;

  auto* sim = app.add_subcommand("simulate", "Run one configuration and check the monitors");
  sim->add_option("config", config_path, "Run configuration")->required();
  sim->add_option("--out", out_dir, "Output directory (overrides [output] dir)");
  sim->add_flag("--snapshots", snapshots, "Write the curve at every monitor sample");

  auto* aud = app.add_subcommand("audit", "Static theta and chord-arc scan of one curve file");
  aud->add_option("curve", curve_path, "Curve file")->required();
  aud->add_option("--pairs-csv", pairs_path, "Write every pair's d, l, psi, ratio, theta");

  auto* swp = app.add_subcommand("sweep", "Run the [sweep] grid and aggregate the results");
  swp->add_option("config", config_path, "Run configuration")->required();
  swp->add_option("--out", out_dir, "Output directory (overrides [output] dir)");
  swp->add_option("--threads", threads, "Worker count (default: CHORDARC_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*aud) {
    std::optional<fs::path> pairs;
    if (!pairs_path.empty()) pairs = pairs_path;
    return audit(curve_path, pairs, out, err);
  }

  RunConfig cfg;
  try {
    cfg = load_run_config(config_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (*sim) {
    if (snapshots) cfg.write_snapshots = true;
    return simulate(cfg, out, err);
  }
  return sweep(cfg, threads == 0 ? static_cast<unsigned>(worker_count()) : threads, out, err);
}

}  // namespace chordarc::cli
