#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chordarc/curve.hpp"
#include "chordarc/pair_functionals.hpp"

namespace chordarc {

/// Named curve family plus its parameters.
///
/// | name          | parameters (defaults)                                   |
/// |---------------|---------------------------------------------------------|
/// | circle        | radius (1)                                              |
/// | ellipse       | a (2), b (1)                                            |
/// | star          | epsilon (0.4), m (5): r = 1 + epsilon cos(m phi)        |
/// | fourier       | modes (4), amplitude (0.15), decay (2); seeded          |
/// | dumbbell      | a (2), b (1), neck (0.9)                                |
/// | spiral_notch  | target (-1.1 pi), inner (1), outer (2)                  |
/// | file          | reads `path`; resampled along the polygon when N differs |
struct GeneratorSpec {
  std::string name = "circle";
  std::map<std::string, double> params;
  std::size_t n = 1024;
  std::uint64_t seed = 0;
  std::filesystem::path path;

  double param(const std::string& key, double fallback) const;
};

struct GeneratedCurve {
  DiscreteCurve curve;
  ThetaScan theta0;
  bool admissible = true;  // theta_0 >= -pi up to 3 max turning
  std::vector<std::string> notices;
};

/// Dense analytic samples resampled to n equal edges with vertex 0 at the
/// parameter origin, then admitted (embedded, positively oriented). Throws
/// DomainError on unknown names or parameters and on a self-intersecting
/// result, naming the offending edges.
GeneratedCurve generate(const GeneratorSpec& spec);

const std::vector<std::string>& generator_names();

// Raw samplers at m parameter-uniform points, t = 2 pi k / m.
std::vector<Point2> sample_circle(double radius, std::size_t m);
std::vector<Point2> sample_ellipse(double a, double b, std::size_t m);
std::vector<Point2> sample_star(double epsilon, int mode, std::size_t m);
std::vector<Point2> sample_dumbbell(double a, double b, double neck, std::size_t m);
std::vector<Point2> sample_fourier(std::uint64_t seed, int modes, double amplitude, double decay,
                                   std::size_t m);
/// Thick annular sector of opening angle `opening` with round caps; the inner
/// arc turns by -opening. Arc-length-uniform with spacing ~ total / m.
std::vector<Point2> sample_notch(double opening, double inner, double outer, std::size_t m);

}  // namespace chordarc
