#include "chordarc/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw DomainError("`" + key + "` expects a number, got `" + v + "`");
  return out;
}

long to_long(const std::string& key, const std::string& v) {
  long out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw DomainError("`" + key + "` expects an integer, got `" + v + "`");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DomainError("`" + key + "` expects true or false, got `" + v + "`");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    const auto item = trim(std::string_view(v).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (item.empty()) throw DomainError("empty item in list `" + v + "`");
    out.push_back(unquote(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void RunConfig::set(const std::string& section, const std::string& key, const std::string& value) {
  if (section == "generator") {
    if (key == "name") {
      generator.name = value;
    } else if (key == "N") {
      const long n = to_long(key, value);
      if (n < static_cast<long>(DiscreteCurve::kMinVertices)) throw DomainError("N must be >= 8");
      generator.n = static_cast<std::size_t>(n);
      stepper.mesh_size = generator.n;
    } else if (key == "seed") {
      const long s = to_long(key, value);
      if (s < 0) throw DomainError("seed must be >= 0");
      generator.seed = static_cast<std::uint64_t>(s);
    } else if (key == "path") {
      generator.path = value;
    } else {
      generator.params[key] = to_double(key, value);
    }
  } else if (section == "flow") {
    const StepperConfig before = stepper;
    if (key == "forcing") {
      forcing = ForcingSpec::parse(value);
    } else if (key == "scheme") {
      stepper.scheme = parse_scheme(value);
    } else if (key == "cfl") {
      stepper.cfl = to_double(key, value);
    } else if (key == "resample_every") {
      stepper.resample_every = to_long(key, value);
    } else if (key == "max_time") {
      stepper.max_time = to_double(key, value);
    } else if (key == "max_steps") {
      stepper.max_steps = to_long(key, value);
    } else if (key == "monitor_every") {
      stepper.monitor_every = to_long(key, value);
    } else if (key == "stop_on_embeddedness_loss") {
      stepper.stop_on_embeddedness_loss = to_bool(key, value);
    } else {
      throw DomainError("unknown [flow] key `" + key + "`");
    }
    try {
      stepper.validate();
    } catch (const Error&) {
      stepper = before;
      throw;
    }
  } else if (section == "monitors") {
    if (key != "enabled") throw DomainError("unknown [monitors] key `" + key + "`");
    monitors = TheoremCatalog::parse(value);
  } else if (section == "output") {
    if (key == "dir") {
      output_dir = value;
    } else if (key == "snapshots") {
      write_snapshots = to_bool(key, value);
    } else if (key == "pair_dump") {
      write_pair_dump = to_bool(key, value);
    } else {
      throw DomainError("unknown [output] key `" + key + "`");
    }
  } else if (section == "sweep") {
    if (key == "name" || key == "path") {
      throw DomainError("[sweep] cannot vary `" + key + "`");
    }
    for (const auto& axis : sweep) {
      if (axis.key == key) throw DomainError("[sweep] key `" + key + "` listed twice");
    }
    auto values = split_list(value);
    // Validate each value against a scratch copy.
    RunConfig scratch = *this;
    for (const auto& v : values) scratch.set(key == "forcing" ? "flow" : "generator", key, v);
    sweep.push_back({key, std::move(values)});
  } else if (section.empty()) {
    throw DomainError("key `" + key + "` outside any section");
  } else {
    throw DomainError("unknown section [" + section + "]");
  }
}

StepperConfig RunConfig::effective_stepper() const {
  StepperConfig s = stepper;
  s.keep_snapshots = write_snapshots || monitors.contains(CheckId::kThetaHeat);
  return s;
}

RunConfig parse_run_config(std::istream& in, const std::string& origin,
                           const std::filesystem::path& base_dir) {
  RunConfig cfg;
  std::string section;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(std::string_view(raw).substr(0, hash));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(origin, line, "unterminated section header");
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      static const char* known[] = {"generator", "flow", "monitors", "output", "sweep"};
      bool ok = false;
      for (const char* k : known) ok = ok || section == k;
      if (!ok) throw ConfigError(origin, line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(origin, line, "expected key = value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = unquote(trim(std::string_view(text).substr(eq + 1)));
    if (key.empty()) throw ConfigError(origin, line, "empty key");
    if (value.empty()) throw ConfigError(origin, line, "empty value for `" + key + "`");
    try {
      cfg.set(section, key, value);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(origin, line, e.what());
    }
  }
  if (!cfg.generator.path.empty() && cfg.generator.path.is_relative() && !base_dir.empty()) {
    cfg.generator.path = base_dir / cfg.generator.path;
  }
  try {
    cfg.stepper.validate();
  } catch (const Error& e) {
    throw ConfigError(origin, line, e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  return parse_run_config(in, path.string(), path.parent_path());
}

}  // namespace chordarc
