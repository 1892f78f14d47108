#include "dimer/fock.hpp"

#include <cmath>
#include <numeric>

namespace dimer {

namespace {

double sqrt_factorial(int n) {
  // exact up to 170!, far beyond the supported N
  return std::sqrt(std::tgamma(static_cast<double>(n) + 1.0));
}

bigint binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  bigint acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);
  }
  return acc;
}

}  // namespace

double norm(const FockVector& v) {
  double acc = 0.0;
  for (const cplx& a : v.amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

cplx scalar_product(const FockVector& dual_row, const FockVector& ket) {
  if (dual_row.n_particles != ket.n_particles)
    throw ConfigError("scalar_product: particle numbers differ");
  cplx acc(0.0);
  for (size_t k = 0; k < ket.amplitudes.size(); ++k)
    acc += dual_row.amplitudes[k] * ket.amplitudes[k];
  return acc;
}

cplx inner_product(const FockVector& bra, const FockVector& ket) {
  if (bra.n_particles != ket.n_particles)
    throw ConfigError("inner_product: particle numbers differ");
  cplx acc(0.0);
  for (size_t k = 0; k < ket.amplitudes.size(); ++k)
    acc += std::conj(bra.amplitudes[k]) * ket.amplitudes[k];
  return acc;
}

bigint stirling_d(int m, int k) {
  if (m < 0 || k < 0) throw ConfigError("stirling_d: negative argument");
  if (k > m) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  // D(m,k) over rows 1..m
  std::vector<bigint> row(m + 1, 0), prev(m + 1, 0);
  prev[1] = 1;  // D(1,1)
  for (int mm = 2; mm <= m; ++mm) {
    for (int kk = 1; kk <= mm; ++kk)
      row[kk] = kk * prev[kk] + prev[kk - 1];
    std::swap(row, prev);
    std::fill(row.begin(), row.end(), 0);
  }
  return prev[k];
}

bigint stirling_d_nested_sum(int m, int k) {
  if (m < 0 || k < 0) throw ConfigError("stirling_d_nested_sum: negative");
  if (k > m) return 0;
  if (k == 0) return m == 0 ? 1 : 0;
  // sum over n1..n_{k-1} >= 0 with n1+...+n_{k-1} <= m-k of
  // k^{n1} (k-1)^{n2} ... 2^{n_{k-1}}
  struct Rec {
    int k;
    bigint run(int level, int budget) const {
      // level indexes the base k+1-level (k, k-1, ..., 2)
      if (level > k - 1) return 1;
      const int base = k + 1 - level;
      bigint total = 0, pw = 1;
      for (int n = 0; n <= budget; ++n) {
        total += pw * run(level + 1, budget - n);
        pw *= base;
      }
      return total;
    }
  };
  return Rec{k}.run(1, m - k);
}

std::vector<cplx> elem_sym(const RootSet& roots) {
  const int n = roots.size();
  std::vector<cplx> e(n + 1, cplx(0.0));
  e[0] = 1.0;
  for (int i = 0; i < n; ++i)
    for (int m = i + 1; m >= 1; --m) e[m] += roots.roots[i] * e[m - 1];
  return e;
}

cplx elem_sym(int m, const RootSet& roots) {
  if (m < 0 || m > roots.size())
    throw ConfigError("elem_sym: order out of range");
  return elem_sym(roots)[m];
}

TwoModeOperator::TwoModeOperator(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw ConfigError("TwoModeOperator: n_max must be >= 0");
  const int d = block_offset(n_max + 1);
  mat_ = Eigen::MatrixXcd::Zero(d, d);
}

FockVector TwoModeOperator::apply(const FockVector& v) const {
  if (v.n_particles > n_max_)
    throw ConfigError("TwoModeOperator::apply: sector exceeds n_max");
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(dim());
  const int off = block_offset(v.n_particles);
  for (int k = 0; k <= v.n_particles; ++k) full[off + k] = v.amplitudes[k];
  full = mat_ * full;
  // locate the image sector: the operators used here either preserve the
  // block or raise it by one
  for (int m : {v.n_particles, v.n_particles + 1}) {
    if (m > n_max_) continue;
    const int o = block_offset(m);
    double mass = 0.0;
    for (int k = 0; k <= m; ++k) mass += std::norm(full[o + k]);
    if (m == v.n_particles + 1 && mass > 0.0) {
      std::vector<cplx> amps(m + 1);
      for (int k = 0; k <= m; ++k) amps[k] = full[o + k];
      return FockVector(m, std::move(amps));
    }
  }
  std::vector<cplx> amps(v.n_particles + 1);
  const int o = block_offset(v.n_particles);
  for (int k = 0; k <= v.n_particles; ++k) amps[k] = full[o + k];
  return FockVector(v.n_particles, std::move(amps));
}

TwoModeOperator build_x_operator(const ModelParams& p, int n_max) {
  TwoModeOperator op(n_max);
  auto& mat = op.matrix();
  // X = (delta/c) b^dag + c a^dag a b^dag + (1/c) a^dag, block M -> M+1.
  for (int m = 0; m < n_max; ++m) {
    const int src = TwoModeOperator::block_offset(m);
    const int dst = TwoModeOperator::block_offset(m + 1);
    for (int k = 0; k <= m; ++k) {
      const int nb = m - k;
      // b^dag terms keep k, raise nb
      mat(dst + k, src + k) +=
          (p.delta / p.c + p.c * k) * std::sqrt(double(nb + 1));
      // a^dag term raises k
      mat(dst + k + 1, src + k) += (1.0 / p.c) * std::sqrt(double(k + 1));
    }
  }
  return op;
}

TwoModeOperator build_b_operator(cplx lambda, const ModelParams& p,
                                 int n_max) {
  TwoModeOperator op = build_x_operator(p, n_max);
  auto& mat = op.matrix();
  mat *= -1.0;
  for (int m = 0; m < n_max; ++m) {
    const int src = TwoModeOperator::block_offset(m);
    const int dst = TwoModeOperator::block_offset(m + 1);
    for (int k = 0; k <= m; ++k) {
      const int nb = m - k;
      mat(dst + k, src + k) += lambda * std::sqrt(double(nb + 1));
    }
  }
  return op;
}

FockVector apply_x(const FockVector& v, const ModelParams& p) {
  const int m = v.n_particles;
  FockVector out = FockVector::zero(m + 1);
  for (int k = 0; k <= m; ++k) {
    const cplx amp = v.amplitudes[k];
    if (amp == cplx(0.0)) continue;
    const int nb = m - k;
    out.amplitudes[k] += amp * (p.delta / p.c + p.c * k) *
                         std::sqrt(double(nb + 1));
    out.amplitudes[k + 1] += amp * (1.0 / p.c) * std::sqrt(double(k + 1));
  }
  return out;
}

FockVector bethe_vector_oracle(const RootSet& roots, const ModelParams& p) {
  FockVector v(0, {cplx(1.0)});
  for (const cplx& lambda : roots.roots) {
    const int m = v.n_particles;
    FockVector next = FockVector::zero(m + 1);
    // B(lambda) = (lambda - delta/c - c a^dag a) b^dag - (1/c) a^dag
    for (int k = 0; k <= m; ++k) {
      const cplx amp = v.amplitudes[k];
      if (amp == cplx(0.0)) continue;
      const int nb = m - k;
      next.amplitudes[k] += amp * (lambda - p.delta / p.c - p.c * double(k)) *
                            std::sqrt(double(nb + 1));
      next.amplitudes[k + 1] += amp * (-1.0 / p.c) * std::sqrt(double(k + 1));
    }
    v = std::move(next);
  }
  return v;
}

FockVector bethe_vector_closed_form(const RootSet& roots,
                                    const ModelParams& p) {
  const int n = roots.size();
  const auto e = elem_sym(roots);
  FockVector v = FockVector::zero(n);
  for (int m = 0; m <= n; ++m) {
    const double sgn = ((n - m) % 2 == 0) ? 1.0 : -1.0;
    for (int l = 0; l <= n - m; ++l) {
      const double binom = static_cast<double>(binomial(n - m, l));
      for (int k = 0; k <= l; ++k) {
        const bigint d = stirling_d(l, k);
        if (d == 0) continue;
        const double gamma = std::pow(p.delta, n - m - l) *
                             std::pow(p.c, m + 2 * l - 2 * k - n);
        v.amplitudes[k] += sgn * sqrt_factorial(k) * sqrt_factorial(n - k) *
                           static_cast<double>(d) * binom * gamma * e[m];
      }
    }
  }
  return v;
}

FockVector dual_vector_closed_form(const RootSet& roots,
                                   const ModelParams& p) {
  const int n = roots.size();
  const auto e = elem_sym(roots);
  FockVector row = FockVector::zero(n);
  for (int m = 0; m <= n; ++m) {
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    for (int k = 0; k <= n - m; ++k) {
      const bigint d = stirling_d(n - m, k);
      if (d == 0) continue;
      // bra <n-k|_a <k|_b pairs with the ket component at a-occupation n-k
      row.amplitudes[n - k] += sgn * sqrt_factorial(k) * sqrt_factorial(n - k) *
                               std::pow(p.c, n - m - 2 * k) *
                               static_cast<double>(d) * e[m];
    }
  }
  return row;
}

FockVector apply_a(cplx mu, const FockVector& v, const ModelParams& p) {
  const int n = v.n_particles;
  FockVector out = FockVector::zero(n);
  // A(mu) = mu^2 - mu (c n_a + c n_b + delta/c) + delta n_b + a^dag b
  //         + c^2 n_a n_b
  for (int k = 0; k <= n; ++k) {
    const cplx amp = v.amplitudes[k];
    if (amp == cplx(0.0)) continue;
    const int nb = n - k;
    out.amplitudes[k] += amp * (mu * mu - mu * (p.c * n + p.delta / p.c) +
                                p.delta * double(nb) + p.c * p.c * k * nb);
    if (k < n)
      out.amplitudes[k + 1] += amp * std::sqrt(double((k + 1) * nb));
  }
  return out;
}

FockVector apply_d(cplx mu, const FockVector& v, const ModelParams& p) {
  (void)mu;  // D(mu) = a b^dag + c^-2 has no explicit mu dependence
  const int n = v.n_particles;
  FockVector out = FockVector::zero(n);
  for (int k = 0; k <= n; ++k) {
    const cplx amp = v.amplitudes[k];
    if (amp == cplx(0.0)) continue;
    const int nb = n - k;
    out.amplitudes[k] += amp / (p.c * p.c);
    if (k > 0)
      out.amplitudes[k - 1] += amp * std::sqrt(double(k * (nb + 1)));
  }
  return out;
}

FockVector apply_tau(cplx mu, const FockVector& v, const ModelParams& p) {
  FockVector out = apply_a(mu, v, p);
  const FockVector dv = apply_d(mu, v, p);
  for (size_t k = 0; k < out.amplitudes.size(); ++k)
    out.amplitudes[k] += dv.amplitudes[k];
  return out;
}

FockVector apply_hamiltonian(const FockVector& v, const ModelParams& p) {
  FockVector out = apply_tau(cplx(0.0), v, p);
  for (size_t k = 0; k < out.amplitudes.size(); ++k)
    out.amplitudes[k] -= v.amplitudes[k] / (p.c * p.c);
  return out;
}

double coherence(const FockVector& v) {
  const int n = v.n_particles;
  if (n < 1) throw ConfigError("coherence: requires N >= 1");
  const double nrm = norm(v);
  if (nrm == 0.0) throw ConfigError("coherence: zero vector");
  cplx acc(0.0);
  for (int k = 0; k + 1 <= n; ++k)
    acc += std::conj(v.amplitudes[k + 1]) * v.amplitudes[k] *
           std::sqrt(double((k + 1) * (n - k)));
  return std::abs(acc) / (nrm * nrm) / double(n);
}

double mode_b_occupation(const FockVector& v) {
  const int n = v.n_particles;
  const double nrm2 = norm(v) * norm(v);
  if (nrm2 == 0.0) throw ConfigError("mode_b_occupation: zero vector");
  double acc = 0.0;
  for (int k = 0; k <= n; ++k)
    acc += double(n - k) * std::norm(v.amplitudes[k]);
  return acc / nrm2;
}

double off_shell_identity_residual(const RootSet& roots,
                                   const ModelParams& p, OffShellNorm norm_id) {
  const int n = roots.size();
  const FockVector psi = bethe_vector_oracle(roots, p);
  const FockVector lhs = apply_hamiltonian(psi, p);
  const cplx en = energy(roots, p);
  FockVector rhs = psi;
  for (auto& a : rhs.amplitudes) a *= en;
  for (int k = 0; k < n; ++k) {
    RootSet sub;
    for (int j = 0; j < n; ++j)
      if (j != k) sub.roots.push_back(roots.roots[j]);
    const cplx phi = off_shell_phi_hamiltonian(k, roots, p, norm_id);
    const FockVector xpart = apply_x(bethe_vector_oracle(sub, p), p);
    for (int i = 0; i <= n; ++i) rhs.amplitudes[i] -= phi * xpart.amplitudes[i];
  }
  double num = 0.0;
  for (int i = 0; i <= n; ++i)
    num += std::norm(lhs.amplitudes[i] - rhs.amplitudes[i]);
  const double den = std::max(dimer::norm(lhs), dimer::norm(psi));
  return std::sqrt(num) / std::max(den, 1e-300);
}

}  // namespace dimer
