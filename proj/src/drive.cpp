#include "dimer/drive.hpp"

#include <algorithm>
#include <cmath>

namespace dimer {

DriveProtocol DriveProtocol::constant(double delta) {
  return DriveProtocol(Kind::constant, delta, delta);
}

DriveProtocol DriveProtocol::quench(double delta_before, double delta_after) {
  return DriveProtocol(Kind::quench, delta_before, delta_after);
}

DriveProtocol DriveProtocol::aperiodic(double delta0) {
  return DriveProtocol(Kind::aperiodic, delta0, 0.0);
}

DriveProtocol DriveProtocol::tabulated(std::vector<double> times,
                                       std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size())
    throw ConfigError("tabulated drive: need >= 2 samples, equal lengths");
  for (size_t i = 1; i < times.size(); ++i)
    if (times[i] <= times[i - 1])
      throw ConfigError("tabulated drive: times must increase strictly");
  DriveProtocol p(Kind::tabulated, 0.0, 0.0);
  p.ts_ = std::move(times);
  p.ys_ = std::move(values);
  // natural cubic spline second derivatives (tridiagonal sweep)
  const size_t n = p.ts_.size();
  p.m_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) {
    const double sig = (p.ts_[i] - p.ts_[i - 1]) / (p.ts_[i + 1] - p.ts_[i - 1]);
    const double pr = sig * p.m_[i - 1] + 2.0;
    p.m_[i] = (sig - 1.0) / pr;
    u[i] = (p.ys_[i + 1] - p.ys_[i]) / (p.ts_[i + 1] - p.ts_[i]) -
           (p.ys_[i] - p.ys_[i - 1]) / (p.ts_[i] - p.ts_[i - 1]);
    u[i] = (6.0 * u[i] / (p.ts_[i + 1] - p.ts_[i - 1]) - sig * u[i - 1]) / pr;
  }
  for (size_t i = n - 1; i-- > 1;) p.m_[i] = p.m_[i] * p.m_[i + 1] + u[i];
  p.m_[0] = p.m_[n - 1] = 0.0;
  return p;
}

namespace {
size_t locate(const std::vector<double>& ts, double t) {
  const auto it = std::upper_bound(ts.begin(), ts.end(), t);
  size_t hi = static_cast<size_t>(it - ts.begin());
  hi = std::clamp<size_t>(hi, 1, ts.size() - 1);
  return hi;
}
}  // namespace

double DriveProtocol::delta(double t) const {
  switch (kind_) {
    case Kind::constant:
      return a_;
    case Kind::quench:
      return t <= 0.0 ? a_ : b_;
    case Kind::aperiodic:
      return a_ + std::cos(t * t);
    case Kind::tabulated: {
      const size_t hi = locate(ts_, t), lo = hi - 1;
      const double h = ts_[hi] - ts_[lo];
      const double a = (ts_[hi] - t) / h, b = (t - ts_[lo]) / h;
      return a * ys_[lo] + b * ys_[hi] +
             ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[hi]) * h * h /
                 6.0;
    }
  }
  return a_;
}

double DriveProtocol::delta_dot(double t) const {
  switch (kind_) {
    case Kind::constant:
    case Kind::quench:
      return 0.0;
    case Kind::aperiodic:
      return -2.0 * t * std::sin(t * t);
    case Kind::tabulated: {
      const size_t hi = locate(ts_, t), lo = hi - 1;
      const double h = ts_[hi] - ts_[lo];
      const double a = (ts_[hi] - t) / h, b = (t - ts_[lo]) / h;
      return (ys_[hi] - ys_[lo]) / h +
             (-(3.0 * a * a - 1.0) * m_[lo] + (3.0 * b * b - 1.0) * m_[hi]) *
                 h / 6.0;
    }
  }
  return 0.0;
}

std::string DriveProtocol::describe() const {
  switch (kind_) {
    case Kind::constant:
      return "const:" + std::to_string(a_);
    case Kind::quench:
      return "quench:" + std::to_string(a_) + "->" + std::to_string(b_);
    case Kind::aperiodic:
      return "aperiodic:" + std::to_string(a_) + "+cos(t^2)";
    case Kind::tabulated:
      return "table[" + std::to_string(ts_.size()) + " samples]";
  }
  return "?";
}

}  // namespace dimer
