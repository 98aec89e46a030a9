#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chordarc/verify.hpp"

namespace chordarc {

using nlohmann::json;

namespace {

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v + 0.0);  // no "-0"
  return buf;
}

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v + 0.0;
}

double number_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    throw Error("report: bad number `" + s + "`");
  }
  return j.get<double>();
}

CheckStatus status_from(const std::string& s) {
  if (s == "PASS") return CheckStatus::kPass;
  if (s == "FAIL") return CheckStatus::kFail;
  if (s == "INCONCLUSIVE") return CheckStatus::kInconclusive;
  throw Error("report: unknown status `" + s + "`");
}

}  // namespace

std::string render_report_text(const MonitorReport& report) {
  std::ostringstream out;
  out << "forcing " << report.forcing << ", terminal status " << report.terminal_status << '\n';
  int counts[3] = {0, 0, 0};
  for (const auto& c : report.checks) {
    ++counts[static_cast<int>(c.status)];
    char line[256];
    std::snprintf(line, sizeof line, "  %-12s %-20s margin %12s  tol %10s  t %10s", to_string(c.status).c_str(),
                  to_string(c.id).c_str(), fmt(c.margin).c_str(), fmt(c.tolerance_used).c_str(),
                  fmt(c.worst_time).c_str());
    out << line;
    if (c.worst_pair) out << "  pair (" << c.worst_pair->first << ", " << c.worst_pair->second << ")";
    if (!c.note.empty()) out << "  " << c.note;
    out << '\n';
  }
  out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " inconclusive\n";
  return out.str();
}

std::string report_to_json(const MonitorReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j;
    j["name"] = to_string(c.id);
    j["status"] = to_string(c.status);
    j["margin"] = number(c.margin);
    j["worst_time"] = number(c.worst_time);
    j["worst_pair"] = c.worst_pair ? json::array({c.worst_pair->first, c.worst_pair->second}) : json(nullptr);
    j["worst_sample"] = c.worst_sample ? json(*c.worst_sample) : json(nullptr);
    j["tolerance_used"] = number(c.tolerance_used);
    j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  json root;
  root["forcing"] = report.forcing;
  root["terminal_status"] = report.terminal_status;
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

MonitorReport report_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  }
  MonitorReport report;
  try {
    report.forcing = root.at("forcing").get<std::string>();
    report.terminal_status = root.at("terminal_status").get<std::string>();
    for (const auto& j : root.at("checks")) {
      CheckResult c;
      const auto name = j.at("name").get<std::string>();
      const auto id = parse_check_id(name);
      if (!id) throw Error("report: unknown check `" + name + "`");
      c.id = *id;
      c.status = status_from(j.at("status").get<std::string>());
      c.margin = number_from(j.at("margin"));
      c.worst_time = number_from(j.at("worst_time"));
      if (!j.at("worst_pair").is_null()) {
        c.worst_pair = VertexPair{j["worst_pair"].at(0).get<std::size_t>(),
                                  j["worst_pair"].at(1).get<std::size_t>()};
      }
      if (!j.at("worst_sample").is_null()) c.worst_sample = j["worst_sample"].get<std::size_t>();
      c.tolerance_used = number_from(j.at("tolerance_used"));
      c.note = j.at("note").get<std::string>();
      report.checks.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  }
  return report;
}

}  // namespace chordarc
