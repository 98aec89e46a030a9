#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chordarc/config.hpp"

namespace chordarc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;

/// Parses argv and dispatches to a subcommand.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Generates, integrates, checks, and writes trajectory.csv, report.json
/// and report.txt under cfg.output_dir.
int simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Static scan of one curve file.
int audit(const std::filesystem::path& curve_file, const std::optional<std::filesystem::path>& pairs_csv,
          std::ostream& out, std::ostream& err);

/// One configuration per point of the [sweep] grid.
struct SweepPoint {
  std::string label;  // `key=value` pairs joined by `_`, in axis order
  RunConfig config;
};

std::vector<SweepPoint> expand_sweep(const RunConfig& cfg);

/// Runs the grid on `threads` workers and writes sweep.csv (rows sorted by
/// label) plus a report per point under cfg.output_dir.
int sweep(const RunConfig& cfg, unsigned threads, std::ostream& out, std::ostream& err);

}  // namespace chordarc::cli
