#include "dimer/ed.hpp"

#include <cmath>

#include "dimer/ode.hpp"

namespace dimer {

SectorHamiltonian build_hamiltonian(const ModelParams& p) {
  const int n = p.n_particles;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    h(k, k) = p.delta * double(n - k) + p.c * p.c * double(k) * double(n - k);
    if (k < n) {
      const double hop = std::sqrt(double((k + 1) * (n - k)));
      h(k + 1, k) = hop;
      h(k, k + 1) = hop;
    }
  }
  return {n, std::move(h)};
}

EigenSystem eigensolve(const SectorHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigensolve failed", 0);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

std::vector<FockVector> propagate_eigenstep(const FockVector& psi0,
                                            const DriveProtocol& protocol,
                                            std::span<const double> t_grid,
                                            const ModelParams& p) {
  const int n = p.n_particles;
  // segment Hamiltonians: t <= 0 uses delta_before, t > 0 delta_after
  const auto evolve_const = [&](double delta, const Eigen::VectorXcd& v,
                                double dt) {
    ModelParams q(delta, p.c, n);
    const EigenSystem es = eigensolve(build_hamiltonian(q));
    Eigen::VectorXcd w = es.eigenvectors.transpose().cast<cplx>() * v;
    for (int i = 0; i <= n; ++i)
      w[i] *= std::exp(cplx(0.0, -es.eigenvalues[i] * dt));
    return Eigen::VectorXcd(es.eigenvectors.cast<cplx>() * w);
  };
  std::vector<FockVector> out;
  out.reserve(t_grid.size());
  Eigen::VectorXcd v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = psi0.amplitudes[i];
  double tcur = t_grid.empty() ? 0.0 : t_grid.front();
  Eigen::VectorXcd cur = v;
  for (const double t : t_grid) {
    const double lo = tcur, hi = t;
    // split at zero for quench steps
    if (protocol.kind() == DriveProtocol::Kind::quench && lo < 0.0 && hi > 0.0) {
      cur = evolve_const(protocol.delta_before(), cur, 0.0 - lo);
      cur = evolve_const(protocol.delta_after(), cur, hi - 0.0);
    } else if (hi != lo) {
      cur = evolve_const(protocol.delta(0.5 * (lo + hi) > 0.0 || lo >= 0.0
                                            ? std::max(lo, 0.5 * (lo + hi))
                                            : lo),
                         cur, hi - lo);
    }
    tcur = t;
    std::vector<cplx> amps(n + 1);
    for (int i = 0; i <= n; ++i) amps[i] = cur[i];
    out.emplace_back(n, std::move(amps));
  }
  return out;
}

}  // namespace

std::vector<FockVector> propagate_adaptive(const FockVector& psi0,
                                           const DriveProtocol& protocol,
                                           std::span<const double> t_grid,
                                           const ModelParams& p, double rtol,
                                           double atol) {
  const int n = p.n_particles;
  if (psi0.n_particles != n)
    throw ConfigError("propagate: psi0 sector does not match params");
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1])
      throw ConfigError("propagate: grid must increase strictly");

  const OdeRhs rhs = [&](double t, const std::vector<cplx>& y,
                         std::vector<cplx>& dy) {
    const double delta = protocol.delta(t);
    dy.assign(n + 1, cplx(0.0));
    for (int k = 0; k <= n; ++k) {
      cplx acc = (delta * double(n - k) + p.c * p.c * k * (n - k)) * y[k];
      if (k < n) acc += std::sqrt(double((k + 1) * (n - k))) * y[k + 1];
      if (k > 0) acc += std::sqrt(double(k * (n - k + 1))) * y[k - 1];
      dy[k] = cplx(0.0, -1.0) * acc;
    }
  };

  std::vector<FockVector> out;
  out.reserve(t_grid.size());
  std::vector<cplx> y(psi0.amplitudes);
  double tcur = t_grid.front();
  out.push_back(psi0);
  OdeOptions opts;
  opts.rtol = rtol;
  opts.atol = atol;
  for (size_t i = 1; i < t_grid.size(); ++i) {
    // integrate segment by segment so every grid point is a step endpoint
    OdeResult r = integrate_dopri5(rhs, std::move(y), tcur, t_grid[i], opts);
    y = std::move(r.y_end);
    tcur = t_grid[i];
    out.emplace_back(n, y);
  }
  return out;
}

std::vector<FockVector> propagate(const FockVector& psi0,
                                  const DriveProtocol& protocol,
                                  std::span<const double> t_grid,
                                  const ModelParams& p, double rtol,
                                  double atol) {
  if (t_grid.empty()) return {};
  if (protocol.kind() == DriveProtocol::Kind::constant ||
      protocol.kind() == DriveProtocol::Kind::quench)
    return propagate_eigenstep(psi0, protocol, t_grid, p);
  return propagate_adaptive(psi0, protocol, t_grid, p, rtol, atol);
}

ObservableSeries observable_series(const std::vector<FockVector>& states) {
  ObservableSeries s;
  s.coherence.reserve(states.size());
  s.mode_b_occupation.reserve(states.size());
  for (const FockVector& v : states) {
    s.coherence.push_back(coherence(v));
    s.mode_b_occupation.push_back(mode_b_occupation(v));
  }
  return s;
}

}  // namespace dimer
