#include "chordarc/curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "chordarc/errors.hpp"

namespace chordarc {

namespace {

std::string format_point(const Point2& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g %.17g", p.x, p.y);
  return buf;
}

}  // namespace

std::vector<Point2> read_curve_points(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ConfigError(origin, 1, "empty curve file");
  std::istringstream header(line);
  std::string tag, closed;
  long long count = -1;
  header >> tag >> count >> closed;
  if (tag != "N" || count < 3 || closed != "closed") {
    throw ConfigError(origin, lineno, "expected header `N <count> closed`, got `" + line + "`");
  }

  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    if (!next_line()) {
      throw ConfigError(origin, lineno + 1,
                        "expected " + std::to_string(count) + " points, got " + std::to_string(k));
    }
    std::istringstream row(line);
    Point2 p;
    std::string extra;
    if (!(row >> p.x >> p.y) || (row >> extra)) {
      throw ConfigError(origin, lineno, "malformed point line `" + line + "`");
    }
    pts.push_back(p);
  }
  if (next_line()) throw ConfigError(origin, lineno, "trailing data after last point");
  return pts;
}

std::vector<Point2> read_curve_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open curve file " + path.string());
  return read_curve_points(in, path.string());
}

void write_curve(std::ostream& out, std::span<const Point2> points) {
  out << "N " << points.size() << " closed\n";
  for (const auto& p : points) out << format_point(p) << '\n';
}

void write_curve(const std::filesystem::path& path, std::span<const Point2> points) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write curve file " + path.string());
  write_curve(out, points);
}

}  // namespace chordarc
