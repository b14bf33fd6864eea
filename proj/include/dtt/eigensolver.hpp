#pragma once

#include "dtt/core.hpp"

#include <optional>
#include <vector>

namespace dtt {

struct EigenResult {
  std::size_t n = 0;
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column j is the unit eigenvector for eigenvalues[j].
  std::optional<Matrix> eigenvectors;
  int sweeps_used = 0;
  /// Frobenius norm of the off-diagonal part at exit.
  double off_diag_norm = 0.0;
  bool converged = false;
};

inline constexpr int jacobi_max_sweeps = 60;

/// Cyclic-by-rows Jacobi eigenvalue algorithm for a dense symmetric matrix.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls to
/// 1e-13 * n * ||m||_F, or after jacobi_max_sweeps. A run that hits the sweep
/// limit is returned with converged == false rather than thrown away.
/// Throws NotSymmetric when |m(i,j) - m(j,i)| exceeds 1e-12 * max|m|.
EigenResult jacobi_eigen(const Matrix &m, bool want_vectors);

struct Cluster {
  double value; // arithmetic mean of the members
  long long multiplicity;
};

struct ClusteredSpectrum {
  std::vector<Cluster> clusters;
  long long total() const;
};

/// Greedy left-to-right grouping of sorted values. A value joins the current
/// cluster iff |value - mean| <= tol_abs + tol_rel * max(1, |mean|).
ClusteredSpectrum cluster_eigenvalues(const std::vector<double> &sorted_values,
                                      double tol_abs, double tol_rel);

/// Default tolerances for an order-n matrix: tol_abs = 1e-8 sqrt(n),
/// tol_rel = 1e-8.
double default_cluster_tol_abs(std::size_t n);
inline constexpr double default_cluster_tol_rel = 1e-8;

} // namespace dtt
