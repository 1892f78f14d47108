#include "dimer/aba.hpp"

#include <algorithm>
#include <cmath>

namespace dimer {

namespace {
constexpr double kPoleTol = 1e-14;

void require_distinct(cplx mu, cplx lambda, const char* what) {
  if (std::abs(mu - lambda) <= kPoleTol * (1.0 + std::abs(mu) + std::abs(lambda)))
    throw PoleError(std::string(what) + ": coincident spectral parameters");
}
}  // namespace

ModelParams params_from_physical(double epsilon, double j, double u, double v,
                                 int n) {
  if (j == 0.0) throw ConfigError("params_from_physical: J must be nonzero");
  const double ratio = (u - v) / j;
  if (ratio < 0.0)
    throw ConfigError(
        "params_from_physical: (U-V)/J < 0 gives imaginary coupling, "
        "unsupported");
  if (ratio == 0.0)
    throw ConfigError("params_from_physical: U = V gives degenerate c = 0");
  return ModelParams(2.0 * epsilon / j, std::sqrt(ratio), n);
}

double RootSet::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      best = std::min(best, std::abs(roots[i] - roots[j]));
  return best;
}

double RootSet::min_abs() const {
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& r : roots) best = std::min(best, std::abs(r));
  return best;
}

void RootSet::validate(double dist_tol, double zero_tol) const {
  for (size_t i = 0; i < roots.size(); ++i) {
    if (std::abs(roots[i]) <= zero_tol)
      throw SingularStateError("RootSet: root at zero",
                               {static_cast<int>(i)});
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= dist_tol)
        throw SingularStateError(
            "RootSet: coincident roots",
            {static_cast<int>(i), static_cast<int>(j)});
  }
}

RootSet RootSet::sorted() const {
  RootSet out = *this;
  std::sort(out.roots.begin(), out.roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

cplx rmatrix_f(cplx mu, cplx lambda, double c) {
  require_distinct(mu, lambda, "rmatrix_f");
  return 1.0 - c / (mu - lambda);
}

cplx rmatrix_g(cplx mu, cplx lambda, double c) {
  require_distinct(mu, lambda, "rmatrix_g");
  return -c / (mu - lambda);
}

VacuumEigenvalues vacuum_eigenvalues(cplx lambda, const ModelParams& p) {
  return {lambda * (lambda - p.delta / p.c), cplx(1.0 / (p.c * p.c), 0.0)};
}

cplx theta(cplx mu, const RootSet& roots, const ModelParams& p) {
  cplx prod_f(1.0), prod_fr(1.0);
  for (const cplx& l : roots.roots) {
    prod_f *= rmatrix_f(mu, l, p.c);
    prod_fr *= rmatrix_f(l, mu, p.c);
  }
  const auto [a, d] = vacuum_eigenvalues(mu, p);
  return a * prod_f + d * prod_fr;
}

cplx off_shell_phi(cplx mu, int n, const RootSet& roots,
                   const ModelParams& p) {
  const int nn = roots.size();
  if (n < 0 || n >= nn) throw ConfigError("off_shell_phi: index out of range");
  const cplx ln = roots.roots[n];
  cplx big(1.0), bigbar(1.0);
  for (int j = 0; j < nn; ++j) {
    if (j == n) continue;
    big *= rmatrix_f(ln, roots.roots[j], p.c);
    bigbar *= rmatrix_f(roots.roots[j], ln, p.c);
  }
  const auto [a, d] = vacuum_eigenvalues(ln, p);
  return a * rmatrix_g(ln, mu, p.c) * big + d * rmatrix_g(mu, ln, p.c) * bigbar;
}

cplx off_shell_phi_hamiltonian(int n, const RootSet& roots,
                               const ModelParams& p, OffShellNorm norm) {
  const int nn = roots.size();
  if (n < 0 || n >= nn)
    throw ConfigError("off_shell_phi_hamiltonian: index out of range");
  const cplx ln = roots.roots[n];
  if (std::abs(ln) == 0.0)
    throw SingularStateError("off_shell_phi_hamiltonian: zero root", {n});
  cplx pn(1.0), qn(1.0);
  for (int j = 0; j < nn; ++j) {
    if (j == n) continue;
    const cplx diff = ln - roots.roots[j];
    if (std::abs(diff) == 0.0)
      throw SingularStateError("off_shell_phi_hamiltonian: coincident roots",
                               {n, j});
    pn *= 1.0 - p.c / diff;
    qn *= 1.0 + p.c / diff;
  }
  const double w = (norm == OffShellNorm::c_weighted) ? p.c : 1.0;
  return w * (p.delta / p.c - ln) * pn + qn / (p.c * ln);
}

std::vector<cplx> off_shell_all(const RootSet& roots, const ModelParams& p,
                                OffShellNorm norm) {
  std::vector<cplx> out(roots.size());
  for (int n = 0; n < roots.size(); ++n)
    out[n] = off_shell_phi_hamiltonian(n, roots, p, norm);
  return out;
}

std::vector<cplx> off_shell_jacobian(const RootSet& roots,
                                     const ModelParams& p, OffShellNorm norm) {
  const int nn = roots.size();
  const double w = (norm == OffShellNorm::c_weighted) ? p.c : 1.0;
  std::vector<cplx> jac(static_cast<size_t>(nn) * nn, cplx(0.0));
  for (int n = 0; n < nn; ++n) {
    const cplx ln = roots.roots[n];
    cplx pn(1.0), qn(1.0);
    for (int j = 0; j < nn; ++j) {
      if (j == n) continue;
      const cplx diff = ln - roots.roots[j];
      pn *= 1.0 - p.c / diff;
      qn *= 1.0 + p.c / diff;
    }
    const cplx apref = w * (p.delta / p.c - ln);
    const cplx bpref = 1.0 / (p.c * ln);
    // d/d l_n: differentiate prefactors and every product factor
    cplx sp(0.0), sq(0.0);
    for (int j = 0; j < nn; ++j) {
      if (j == n) continue;
      const cplx diff = ln - roots.roots[j];
      sp += (p.c / (diff * diff)) / (1.0 - p.c / diff);
      sq += (-p.c / (diff * diff)) / (1.0 + p.c / diff);
    }
    jac[n * nn + n] = -w * pn + apref * pn * sp -
                      qn / (p.c * ln * ln) + bpref * qn * sq;
    for (int m = 0; m < nn; ++m) {
      if (m == n) continue;
      const cplx diff = ln - roots.roots[m];
      const cplx dp = (-p.c / (diff * diff)) / (1.0 - p.c / diff);
      const cplx dq = (p.c / (diff * diff)) / (1.0 + p.c / diff);
      jac[n * nn + m] = apref * pn * dp + bpref * qn * dq;
    }
  }
  return jac;
}

cplx energy(const RootSet& roots, const ModelParams& p) {
  cplx prod(1.0);
  for (const cplx& l : roots.roots) {
    if (std::abs(l) == 0.0)
      throw SingularStateError("energy: zero root");
    prod *= 1.0 - p.c / l;
  }
  const double c2 = p.c * p.c;
  return (prod - 1.0) / c2;
}

}  // namespace dimer
