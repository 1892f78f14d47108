#include "dimer/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dimer {

namespace {

// Dormand-Prince RK5(4)7M tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                 a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

double error_norm(const std::vector<cplx>& y0, const std::vector<cplx>& y1,
                  const std::vector<cplx>& err, double atol, double rtol) {
  double acc = 0.0;
  for (size_t i = 0; i < err.size(); ++i) {
    const double sc =
        atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double q = std::abs(err[i]) / sc;
    acc += q * q;
  }
  return std::sqrt(acc / double(err.size()));
}

}  // namespace

void DenseStep::eval(double t, std::vector<cplx>& y) const {
  const double h = t1 - t0;
  const double th = (t - t0) / h, th1 = 1.0 - th;
  y.resize(r1.size());
  for (size_t i = 0; i < r1.size(); ++i)
    y[i] = r1[i] +
           th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
}

void DenseStep::eval_derivative(double t, std::vector<cplx>& dydt) const {
  const double h = t1 - t0;
  const double th = (t - t0) / h;
  dydt.resize(r1.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    const cplx dp = r2[i] + (1.0 - 2.0 * th) * r3[i] +
                    th * (2.0 - 3.0 * th) * r4[i] +
                    2.0 * th * (1.0 - th) * (1.0 - 2.0 * th) * r5[i];
    dydt[i] = dp / h;
  }
}

OdeResult integrate_dopri5(
    const OdeRhs& f, std::vector<cplx> y, double t0, double t1,
    const OdeOptions& opts,
    const std::function<void(const DenseStep&, const std::vector<cplx>&)>&
        inspect) {
  if (!(t1 > t0)) throw ConfigError("integrate_dopri5: need t1 > t0");
  const size_t n = y.size();
  OdeResult res;
  const double hmax = opts.h_max > 0.0 ? opts.h_max : (t1 - t0);

  std::vector<cplx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  std::vector<cplx> ytmp(n), ynew(n), errv(n);

  double t = t0;
  f(t, y, k1);
  ++res.n_rhs;

  // initial step size (Hairer hinit, simplified)
  double h = opts.h_init;
  if (h <= 0.0) {
    double dn0 = 0.0, dn1 = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double sc = opts.atol + opts.rtol * std::abs(y[i]);
      dn0 += std::norm(y[i] / sc);
      dn1 += std::norm(k1[i] / sc);
    }
    dn0 = std::sqrt(dn0 / n);
    dn1 = std::sqrt(dn1 / n);
    h = (dn0 < 1e-10 || dn1 < 1e-10) ? 1e-6 : 0.01 * dn0 / dn1;
    h = std::min(h, hmax);
  }

  constexpr double beta = 0.04, expo1 = 0.2 - beta * 0.75, safe = 0.9;
  double facold = 1e-4;
  bool last_rejected = false;

  while (t < t1) {
    if (res.n_accepted + res.n_rejected > opts.max_steps)
      throw ConvergenceError("integrate_dopri5: step budget exhausted",
                             int(opts.max_steps));
    if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::abs(t + h))
      throw ConvergenceError("integrate_dopri5: step size underflow at t=" +
                                 std::to_string(t),
                             int(res.n_accepted));
    h = std::min(h, t1 - t);

    for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, ytmp, k2);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, ytmp, k3);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, ytmp, k4);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] +
                h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, ytmp, k5);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    f(t + h, ytmp, k6);
    for (size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                            a75 * k5[i] + a76 * k6[i]);
    f(t + h, ynew, k7);
    res.n_rhs += 6;

    for (size_t i = 0; i < n; ++i)
      errv[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                     e6 * k6[i] + e7 * k7[i]);
    const double err = error_norm(y, ynew, errv, opts.atol, opts.rtol);

    const double fac11 = std::pow(std::max(err, 1e-300), expo1);
    if (err <= 1.0) {
      // accept; record dense coefficients
      DenseStep st;
      st.t0 = t;
      st.t1 = t + h;
      st.r1 = y;
      st.r2.resize(n);
      st.r3.resize(n);
      st.r4.resize(n);
      st.r5.resize(n);
      for (size_t i = 0; i < n; ++i) {
        const cplx dy = ynew[i] - y[i];
        st.r2[i] = dy;
        st.r3[i] = h * k1[i] - dy;
        st.r4[i] = dy - h * k7[i] - st.r3[i];
        st.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                        d6 * k6[i] + d7 * k7[i]);
      }
      if (inspect) inspect(st, ynew);
      res.steps.push_back(std::move(st));

      double fac = fac11 / std::pow(facold, beta);
      facold = std::max(err, 1e-4);
      t += h;
      y.swap(ynew);
      k1.swap(k7);  // FSAL
      ++res.n_accepted;

      fac = std::max(0.1, std::min(5.0, fac / safe));
      double hnew = h / fac;
      if (last_rejected) hnew = std::min(hnew, h);
      last_rejected = false;
      h = std::min(hnew, hmax);
    } else {
      ++res.n_rejected;
      last_rejected = true;
      h = h / std::min(5.0, fac11 / safe);
    }
  }
  res.y_end = std::move(y);
  return res;
}

}  // namespace dimer
