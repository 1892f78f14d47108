#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "dimer/drive.hpp"
#include "dimer/fock.hpp"
#include "dimer/params.hpp"

// Exact-diagonalization reference for the fixed-N sector. Authoritative for
// all acceptance checks.

namespace dimer {

/// Dense N-particle-sector Hamiltonian; real symmetric tridiagonal in the
/// basis |k>_a |N-k>_b (index k = particles in mode a).
struct SectorHamiltonian {
  int n_particles = 0;
  Eigen::MatrixXd matrix;
};

SectorHamiltonian build_hamiltonian(const ModelParams& params);

struct EigenSystem {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

EigenSystem eigensolve(const SectorHamiltonian& h);

/// Integrate i dpsi/dt = H(t) psi on the given increasing grid.
/// Smooth drives use the adaptive embedded integrator; piecewise-constant
/// drives (constant, quench) use exact eigendecomposition stepping. The norm
/// is never renormalized; drift is the caller's diagnostic.
std::vector<FockVector> propagate(const FockVector& psi0,
                                  const DriveProtocol& protocol,
                                  std::span<const double> t_grid,
                                  const ModelParams& params,
                                  double rtol = 1e-10, double atol = 1e-12);

/// Force the adaptive path even for piecewise-constant drives (used to
/// cross-validate the two propagation routes).
std::vector<FockVector> propagate_adaptive(const FockVector& psi0,
                                           const DriveProtocol& protocol,
                                           std::span<const double> t_grid,
                                           const ModelParams& params,
                                           double rtol = 1e-10,
                                           double atol = 1e-12);

struct ObservableSeries {
  std::vector<double> coherence;
  std::vector<double> mode_b_occupation;
};

ObservableSeries observable_series(const std::vector<FockVector>& states);

}  // namespace dimer
