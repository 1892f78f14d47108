#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimer {

using cplx = std::complex<double>;

// Error kinds are distinguished by type so callers can map them to exit codes.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Root collision or zero root; `indices` names the offending roots.
struct SingularStateError : std::runtime_error {
  std::vector<int> indices;
  SingularStateError(const std::string& msg, std::vector<int> idx = {})
      : std::runtime_error(msg), indices(std::move(idx)) {}
};

struct ConvergenceError : std::runtime_error {
  int iterations = 0;
  ConvergenceError(const std::string& msg, int iters)
      : std::runtime_error(msg), iterations(iters) {}
};

struct IncompleteSpectrumError : std::runtime_error {
  int found = 0;
  int expected = 0;
  IncompleteSpectrumError(const std::string& msg, int nfound, int nexpected)
      : std::runtime_error(msg), found(nfound), expected(nexpected) {}
};

/// Dimensionless model parameters: detuning delta, coupling c (c^2 = (U-V)/J),
/// particle number N. The coupling is restricted to real c > 0.
struct ModelParams {
  double delta;
  double c;
  int n_particles;

  ModelParams(double delta_, double c_, int n)
      : delta(delta_), c(c_), n_particles(n) {
    if (!(c > 0.0))
      throw ConfigError("ModelParams: coupling c must be positive (got " +
                        std::to_string(c_) + ")");
    if (n < 0)
      throw ConfigError("ModelParams: n_particles must be >= 0");
  }
};

/// Map physical parameters (epsilon, J, U, V) to the dimensionless form:
/// delta = 2*epsilon/J, c = sqrt((U-V)/J).
ModelParams params_from_physical(double epsilon, double j, double u, double v,
                                 int n);

/// Ordered set of Bethe roots, optionally tagged with the state label sigma.
struct RootSet {
  std::vector<cplx> roots;
  std::optional<int> sigma;

  RootSet() = default;
  explicit RootSet(std::vector<cplx> r, std::optional<int> s = std::nullopt)
      : roots(std::move(r)), sigma(s) {}

  int size() const { return static_cast<int>(roots.size()); }

  double min_pairwise_distance() const;
  double min_abs() const;

  // Throws SingularStateError when roots collide (distance <= dist_tol) or a
  // root sits at zero (|root| <= zero_tol).
  void validate(double dist_tol = 0.0, double zero_tol = 0.0) const;

  // Copy with roots ordered by (real, imaginary) part.
  RootSet sorted() const;
};

}  // namespace dimer
