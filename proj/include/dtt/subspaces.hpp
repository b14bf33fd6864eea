#pragma once

#include "dtt/core.hpp"

#include <array>
#include <string_view>
#include <vector>

// Invariant-subspace decompositions for the three kinds whose square is not a
// multiple of the identity (DCT-5, DST-8, DCT-1).
//
// R^n splits into a constraint subspace V1, on which A^2 acts as c * I, and one
// or two 2-dimensional subspaces spanned by a generator pair (q1, q2). Inside a
// pair's span A acts as a 2x2 matrix, whose eigenpairs give the simple
// eigenvalues of A together with explicit eigenvectors q1 + x q2.
//
// All vector indices are zero-based.
namespace dtt::subspaces {

enum class QCase {
  dct5,
  dst8,
  dct1_odd_V2,
  dct1_odd_V3,
  dct1_even_V2,
  dct1_even_V3,
};

std::string_view name(QCase c);
TransformKind kind_of(QCase c);
/// Generator pairs used for (kind, n); empty when none apply.
std::vector<QCase> q_cases(TransformKind kind, std::size_t n);

struct QPair {
  TransformKind kind;
  std::size_t n;
  QCase tag;
  Vector q1;
  Vector q2;
};

/// A q1 = a q1 + b q2,  A q2 = c q1 + d q2.
struct ActionCoeffs {
  double a;
  double b;
  double c;
  double d;
};

/// Coefficients recovered numerically, with the largest reconstruction error
/// |A q_i - (projection onto span{q1, q2})| over both generators.
struct ActionFit {
  ActionCoeffs coeffs;
  double residual;
};

struct V1Basis {
  TransformKind kind;
  std::size_t n;
  std::vector<Vector> vectors;
};

/// Whether the kind has a V1 / q-pair decomposition at all.
bool has_decomposition(TransformKind kind);

/// Basis of V1:
///   dct5: v_0 = 0 and sum of the rest = 0        -> e_k - e_{k+1}, k = 1..n-2
///   dst8: v_{n-1} = 0 and sum (-1)^k v_k = 0     -> e_k + e_{k+1}, k = 0..n-3
///   dct1: v_0 = v_{n-1} = 0, even-index sum = 0,
///         odd-index sum = 0                      -> e_k - e_{k+2}, k = 1..n-4
/// Requires n >= 3 (dct5, dst8) or n >= 5 (dct1).
V1Basis v1_basis(TransformKind kind, std::size_t n);

/// c such that A^2 v = c v on V1: (2n-1)/4 for dct5 and dst8, (n-1)/2 for dct1.
double v1_square_eigenvalue(TransformKind kind, std::size_t n);

/// Generators for one case. Requirements: n >= 2 (dct5, dst8), odd n >= 3
/// (dct1_odd_V2), odd n >= 5 (dct1_odd_V3), even n >= 4 (dct1_even_*).
QPair q_pair(QCase c, std::size_t n);

/// Exact action of A on the generators.
ActionCoeffs expected_action_coeffs(QCase c, std::size_t n);

/// Projects A q1 and A q2 onto span{q1, q2} through the 2x2 Gram system and
/// reports the residual without judging it. Throws DegenerateSystem if q1, q2
/// are linearly dependent.
ActionFit fit_action(const Matrix &a, const QPair &pair);

/// fit_action, plus NotInvariant when the residual exceeds 1e-9 * n.
ActionFit action_coeffs(const Matrix &a, const QPair &pair);
ActionFit action_coeffs(TransformKind kind, std::size_t n, const QPair &pair);

/// Eigenpair of the reduced system: the eigenvector is alpha q1 + beta q2,
/// with alpha = 1 (beta is then the x of q1 + x q2) unless the eigenvector is q2.
struct ReducedEigen {
  double value;
  double alpha;
  double beta;
};

/// Both eigenpairs of [[a, c], [b, d]], ascending. Throws DegenerateSystem if
/// the matrix has complex or defective eigenvalues.
std::array<ReducedEigen, 2> reduced_eigen(const ActionCoeffs &coeffs);

struct AnalyticEigenvector {
  QCase source;
  double value;
  Vector vector;
};

/// Simple eigenvalues with eigenvectors q1 + x q2, from the exact action
/// coefficients. Requires n >= 2 (dct5, dst8), odd n >= 5 or even n >= 4
/// (dct1). Sorted ascending by eigenvalue.
std::vector<AnalyticEigenvector> analytic_eigenvectors(TransformKind kind,
                                                       std::size_t n);
bool has_analytic_eigenvectors(TransformKind kind, std::size_t n);

} // namespace dtt::subspaces
