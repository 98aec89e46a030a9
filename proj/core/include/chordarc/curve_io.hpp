#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "chordarc/curve.hpp"

namespace chordarc {

// Curve file: header line `N <count> closed`, then <count> lines `x y`.
// The writer emits 17 significant digits so values round-trip exactly.

std::vector<Point2> read_curve_points(std::istream& in, const std::string& origin = "curve");
std::vector<Point2> read_curve_points(const std::filesystem::path& path);

void write_curve(std::ostream& out, std::span<const Point2> points);
void write_curve(const std::filesystem::path& path, std::span<const Point2> points);

}  // namespace chordarc
