#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twoatom {

namespace detail {
inline std::string format_magnitude(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}
}  // namespace detail

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its mathematical domain (e.g. a probability > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class HermiticityError : public Error {
 public:
  explicit HermiticityError(double defect)
      : Error("matrix is not Hermitian: max |M - M^dagger| = " + detail::format_magnitude(defect)),
        defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class NotPsdError : public Error {
 public:
  explicit NotPsdError(double min_eigenvalue)
      : Error("matrix is not positive semidefinite: min eigenvalue = " +
              detail::format_magnitude(min_eigenvalue)),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Raised when an iterative routine exhausts its iteration budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_value, int iterations)
      : Error(what), best_value_(best_value), iterations_(iterations) {}
  double best_value() const noexcept { return best_value_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double best_value_;
  int iterations_;
};

/// The state emits no light (e.g. both atoms in the ground state), so the
/// visibility (max - min) / (max + min) is 0/0.
class ZeroEmissionError : public Error {
 public:
  explicit ZeroEmissionError(double constant_term)
      : Error("zero emission: constant intensity term = " + detail::format_magnitude(constant_term)),
        constant_term_(constant_term) {}
  double constant_term() const noexcept { return constant_term_; }

 private:
  double constant_term_;
};

enum class DefectKind { non_finite, trace_deviation, hermiticity_violation, negativity };

inline const char* to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::non_finite: return "non-finite entry";
    case DefectKind::trace_deviation: return "trace deviation";
    case DefectKind::hermiticity_violation: return "hermiticity violation";
    case DefectKind::negativity: return "negative eigenvalue";
  }
  return "unknown";
}

struct StateDefect {
  DefectKind kind;
  double magnitude;
};

/// Carries every invariant a candidate density matrix violated.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<StateDefect> defects)
      : Error(describe(defects)), defects_(std::move(defects)) {}
  const std::vector<StateDefect>& defects() const noexcept { return defects_; }

  static std::string describe(const std::vector<StateDefect>& defects) {
    std::string out = "invalid density matrix:";
    for (const auto& d : defects) {
      out += "\n  ";
      out += to_string(d.kind);
      out += ": ";
      out += detail::format_magnitude(d.magnitude);
    }
    return out;
  }

 private:
  std::vector<StateDefect> defects_;
};

}  // namespace twoatom
