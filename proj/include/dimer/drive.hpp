#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dimer/params.hpp"

namespace dimer {

/// Detuning drive Delta(t) with its exact derivative. Four kinds:
/// constant, quench (step at t = 0), aperiodic Delta0 + cos(t^2), and
/// tabulated samples with natural cubic-spline interpolation.
class DriveProtocol {
 public:
  enum class Kind { constant, quench, aperiodic, tabulated };

  static DriveProtocol constant(double delta);
  static DriveProtocol quench(double delta_before, double delta_after);
  static DriveProtocol aperiodic(double delta0);
  static DriveProtocol tabulated(std::vector<double> times,
                                 std::vector<double> values);

  double delta(double t) const;
  double delta_dot(double t) const;

  Kind kind() const { return kind_; }
  std::string describe() const;

  // quench accessors
  double delta_before() const { return a_; }
  double delta_after() const { return b_; }

 private:
  DriveProtocol(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}

  Kind kind_;
  double a_ = 0.0, b_ = 0.0;  // meaning depends on kind
  // natural cubic spline data for tabulated drives
  std::vector<double> ts_, ys_, m_;  // knots, values, second derivatives
};

}  // namespace dimer
