#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dimer/aba.hpp"
#include "dimer/params.hpp"

// Truncated two-mode Fock representation: Bethe vectors by explicit operator
// products (the oracle) and by the closed-form expansion, dual vectors,
// scalar products and observables.
//
// Basis convention used throughout: a sector of total particle number M is
// spanned by |k>_a (x) |M-k>_b with k = number of particles in mode a,
// k = 0..M. Amplitude index == k.

namespace dimer {

using bigint = boost::multiprecision::cpp_int;

struct FockVector {
  int n_particles = 0;
  std::vector<cplx> amplitudes;  // size n_particles + 1

  FockVector() = default;
  FockVector(int n, std::vector<cplx> amps)
      : n_particles(n), amplitudes(std::move(amps)) {
    if (static_cast<int>(amplitudes.size()) != n + 1)
      throw ConfigError("FockVector: amplitude count must be N+1");
  }
  static FockVector zero(int n) {
    return FockVector(n, std::vector<cplx>(n + 1, cplx(0.0)));
  }
};

double norm(const FockVector& v);

/// Bilinear pairing sum_k dual_k ket_k (no conjugation); dual vectors
/// already encode the Bethe dual structure.
cplx scalar_product(const FockVector& dual_row, const FockVector& ket);

/// Physical inner product sum_k conj(bra_k) ket_k.
cplx inner_product(const FockVector& bra, const FockVector& ket);

/// Coefficients D(M,k) from the recurrence
/// D(M,k) = k D(M-1,k) + D(M-1,k-1), D(1,1) = 1, D(M,k) = 0 for k > M,
/// with D(0,0) = 1. Exact integers.
bigint stirling_d(int m, int k);

/// Independent evaluation of D(M,k) by the explicit nested sum
/// sum k^{n1} (k-1)^{n2} ... 2^{n_{k-1}} over n1+...+n_{k-1} <= M-k.
bigint stirling_d_nested_sum(int m, int k);

/// Elementary symmetric polynomials e_0..e_N of the roots.
std::vector<cplx> elem_sym(const RootSet& roots);

/// m-th elementary symmetric polynomial, 0 <= m <= N.
cplx elem_sym(int m, const RootSet& roots);

/// Dense operator over the truncated two-mode space with blocks of fixed
/// total particle number M = 0..n_max. Block M has dimension M+1.
class TwoModeOperator {
 public:
  explicit TwoModeOperator(int n_max);

  int n_max() const { return n_max_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  static int block_offset(int m) { return m * (m + 1) / 2; }

  Eigen::MatrixXcd& matrix() { return mat_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

  /// Apply to a fixed-N FockVector. Block-changing operators (B) return a
  /// vector in the image sector.
  FockVector apply(const FockVector& v) const;

 private:
  int n_max_;
  Eigen::MatrixXcd mat_;
};

/// Generalized creation operator B(lambda) = lambda b^dag - X with
/// X = (delta/c) b^dag + c a^dag a b^dag + (1/c) a^dag. Maps block M to M+1.
TwoModeOperator build_b_operator(cplx lambda, const ModelParams& params,
                                 int n_max);

/// The X operator above, as a matrix (block M -> M+1).
TwoModeOperator build_x_operator(const ModelParams& params, int n_max);

/// Oracle: prod_j B(lambda_j) |vac> by explicit operator application.
/// Ground truth for the closed-form expansion.
FockVector bethe_vector_oracle(const RootSet& roots, const ModelParams& params);

/// Closed-form Fock expansion of the Bethe vector. The overall sign is
/// (-1)^(N-m) per term, fixed against the operator-product oracle.
FockVector bethe_vector_closed_form(const RootSet& roots,
                                    const ModelParams& params);

/// Closed-form dual (row) vector; component index is the a-mode occupation
/// of the paired ket. Not the Hermitian conjugate of the ket.
FockVector dual_vector_closed_form(const RootSet& roots,
                                   const ModelParams& params);

FockVector apply_a(cplx mu, const FockVector& v, const ModelParams& params);
FockVector apply_d(cplx mu, const FockVector& v, const ModelParams& params);
FockVector apply_tau(cplx mu, const FockVector& v, const ModelParams& params);

/// H = tau(0) - c^-2 applied in the fixed-N sector.
FockVector apply_hamiltonian(const FockVector& v, const ModelParams& params);

/// X applied to a fixed-M vector (image lives in the M+1 sector).
FockVector apply_x(const FockVector& v, const ModelParams& params);

/// Intersite coherence nu = |<a^dag b>| / N of a normalized state.
double coherence(const FockVector& v);

/// <b^dag b> of a normalized state.
double mode_b_occupation(const FockVector& v);

/// Runs the operator identity H|Psi> = E|Psi> - sum_n phi_n X|Psi_(n)> on the
/// given roots and returns the relative residual. Decides the off-shell
/// normalization calibration.
double off_shell_identity_residual(const RootSet& roots,
                                   const ModelParams& params,
                                   OffShellNorm norm);

}  // namespace dimer
