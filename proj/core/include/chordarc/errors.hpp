#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace chordarc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex sequence that violates the DiscreteCurve invariants.
class CurveError : public Error {
 public:
  using Error::Error;
};

class DegenerateEdgeError : public CurveError {
 public:
  DegenerateEdgeError(std::size_t edge, double length)
      : CurveError("degenerate edge " + std::to_string(edge) + " (length " +
                   std::to_string(length) + ")"),
        edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

// Exterior angle of exactly +-pi: the polygon doubles back on itself.
class CuspError : public CurveError {
 public:
  explicit CuspError(std::size_t vertex)
      : CurveError("cusp (reflex angle of pi) at vertex " + std::to_string(vertex)),
        vertex_(vertex) {}
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

class OrientationError : public CurveError {
 public:
  using CurveError::CurveError;
};

// Two distinct vertices at the same position.
class SelfTouchingError : public Error {
 public:
  SelfTouchingError(std::size_t i, std::size_t j)
      : Error("curve self-touching at vertices " + std::to_string(i) + " and " +
              std::to_string(j)),
        pair_(i, j) {}
  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

class NotCriticalError : public Error {
 public:
  NotCriticalError(double mismatch, double tolerance)
      : Error("not a first-order critical pair: |<w,tau_p> - <w,tau_q>| = " +
              std::to_string(mismatch) + " > " + std::to_string(tolerance)),
        mismatch_(mismatch) {}
  double mismatch() const { return mismatch_; }

 private:
  double mismatch_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Input rejected before a run starts (not embedded, unusable geometry).
class AdmissionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& origin, std::size_t line, const std::string& what)
      : Error(origin + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chordarc
