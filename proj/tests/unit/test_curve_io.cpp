#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "chordarc/curve_io.hpp"
#include "chordarc/errors.hpp"
#include "chordarc/generators.hpp"

using namespace chordarc;

TEST(CurveIo, RoundTripIsBitExact) {
  const auto pts = sample_star(0.4, 5, 97);
  std::stringstream buf;
  write_curve(buf, pts);
  const auto back = read_curve_points(buf);
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_EQ(back[k], pts[k]);
}

TEST(CurveIo, HeaderFormat) {
  std::stringstream buf;
  write_curve(buf, std::vector<Point2>{{0, 0}, {1, 0}, {0.1, 1}});
  std::string first;
  std::getline(buf, first);
  EXPECT_EQ(first, "N 3 closed");
  std::string second;
  std::getline(buf, second);
  EXPECT_EQ(second, "0 0");
}

TEST(CurveIo, MalformedInputsReportLine) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"", 1},
      {"N 3 open\n0 0\n1 0\n0 1\n", 1},
      {"N 3 closed\n0 0\n1 x\n0 1\n", 3},
      {"N 3 closed\n0 0\n1 0\n", 4},
      {"N 2 closed\n0 0\n1 0\n0 1\n", 1},
      {"N 3 closed\n0 0\n1 0 7\n0 1\n", 3},
  };
  for (const auto& [text, line] : cases) {
    std::istringstream in(text);
    try {
      read_curve_points(in, "t");
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
    }
  }
}

TEST(CurveIo, MissingFileIsError) {
  EXPECT_THROW(read_curve_points(std::filesystem::path("/nonexistent/x.curve")), Error);
}
