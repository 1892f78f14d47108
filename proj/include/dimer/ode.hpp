#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dimer/params.hpp"

// Dormand-Prince 5(4) embedded pair for complex state vectors, with PI
// step-size control and the standard quartic dense output.

namespace dimer {

using OdeRhs =
    std::function<void(double t, const std::vector<cplx>& y, std::vector<cplx>& dydt)>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 0.0;    // 0 -> automatic
  double h_max = 0.0;     // 0 -> span
  long max_steps = 2000000;
};

/// One accepted step with the coefficients of the continuous extension.
struct DenseStep {
  double t0 = 0.0, t1 = 0.0;
  std::vector<cplx> r1, r2, r3, r4, r5;

  /// Evaluate the interpolant at t in [t0, t1].
  void eval(double t, std::vector<cplx>& y) const;
  /// Time derivative of the interpolant.
  void eval_derivative(double t, std::vector<cplx>& dydt) const;
};

struct OdeResult {
  std::vector<DenseStep> steps;   // contiguous over [t0, t_end]
  std::vector<cplx> y_end;
  long n_accepted = 0, n_rejected = 0, n_rhs = 0;
};

/// Integrate y' = f(t, y) from t0 to t1 (t1 > t0). The optional
/// `inspect` callback sees every accepted step and may throw to abort;
/// the exception propagates with the integration state discarded.
OdeResult integrate_dopri5(
    const OdeRhs& f, std::vector<cplx> y0, double t0, double t1,
    const OdeOptions& opts,
    const std::function<void(const DenseStep&, const std::vector<cplx>&)>&
        inspect = {});

}  // namespace dimer
