#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chordarc/flow.hpp"
#include "chordarc/forcing.hpp"
#include "chordarc/generators.hpp"
#include "chordarc/verify.hpp"

namespace chordarc {

/// One value list of a [sweep] section, e.g. `epsilon = 0.1, 0.2`.
struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

/// Everything a `simulate` run needs. Parsed from sectioned key=value text:
///
///     [generator]  name, N, seed, path, and any generator parameter
///     [flow]       forcing, scheme, cfl, resample_every, max_time,
///                  max_steps, monitor_every, stop_on_embeddedness_loss
///     [monitors]   enabled = all | comma-separated check names
///     [output]     dir, snapshots, pair_dump
///     [sweep]      <key> = v1, v2, ...   (key from [generator] or forcing)
///
/// `#` starts a comment. N also sets the flow mesh size.
struct RunConfig {
  GeneratorSpec generator;
  ForcingSpec forcing;
  StepperConfig stepper;
  TheoremCatalog monitors = TheoremCatalog::all();
  std::filesystem::path output_dir = "chordarc_out";
  bool write_snapshots = false;
  bool write_pair_dump = false;
  std::vector<SweepAxis> sweep;

  /// Sets one key as if it appeared in `section`. Throws DomainError on
  /// unknown keys or malformed values.
  void set(const std::string& section, const std::string& key, const std::string& value);

  /// Snapshots are kept when requested or when the heat check needs them.
  StepperConfig effective_stepper() const;
};

/// Throws ConfigError carrying the 1-based line of the first problem.
/// A relative generator `path` resolves against `base_dir`; the output
/// `dir` stays relative to the working directory.
RunConfig parse_run_config(std::istream& in, const std::string& origin = "config",
                           const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace chordarc
