#include "dtt/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace dtt {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

double off_diagonal_norm(const Matrix &a) {
  const auto n = a.order();
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

void require_symmetric(const Matrix &m) {
  const auto n = m.order();
  const double tol = 1e-12 * m.max_abs();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol) {
        throw Error(ErrorCode::NotSymmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) +
                        ") and its transpose differ");
      }
    }
  }
}

// Annihilates a(p, q) with a plane rotation applied from both sides.
void rotate(Matrix &a, Matrix *v, std::size_t p, std::size_t q) {
  const auto n = a.order();
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  // smaller root of t^2 + 2 t theta - 1 = 0
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0)
      t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q)
      continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = c * arp - s * arq;
    a(r, q) = a(q, r) = s * arp + c * arq;
  }
  if (v) {
    for (std::size_t r = 0; r < n; ++r) {
      const double vrp = (*v)(r, p);
      const double vrq = (*v)(r, q);
      (*v)(r, p) = c * vrp - s * vrq;
      (*v)(r, q) = s * vrp + c * vrq;
    }
  }
}

} // namespace

EigenResult jacobi_eigen(const Matrix &m, bool want_vectors) {
  const auto n = m.order();
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "empty matrix");
  require_symmetric(m);

  Matrix a = m;
  std::optional<Matrix> v;
  if (want_vectors)
    v = Matrix::identity(n);

  const double target = 1e-13 * static_cast<double>(n) * m.frobenius_norm();
  EigenResult result;
  result.n = n;
  for (;;) {
    result.off_diag_norm = off_diagonal_norm(a);
    if (result.off_diag_norm <= target) {
      result.converged = true;
      break;
    }
    if (result.sweeps_used == jacobi_max_sweeps)
      break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq < 1e-300)
          continue;
        // negligible next to both diagonal entries
        if (apq <= eps * std::sqrt(std::abs(a(p, p) * a(q, q)))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotate(a, v ? &*v : nullptr, p, q);
      }
    }
    ++result.sweeps_used;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) < a(j, j);
  });
  result.eigenvalues.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    result.eigenvalues[j] = a(order[j], order[j]);
  if (v) {
    Matrix sorted(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        sorted(r, j) = (*v)(r, order[j]);
    result.eigenvectors = std::move(sorted);
  }
  return result;
}

//------------------------------------------------------------------------------
long long ClusteredSpectrum::total() const {
  long long t = 0;
  for (const auto &c : clusters)
    t += c.multiplicity;
  return t;
}

ClusteredSpectrum cluster_eigenvalues(const std::vector<double> &values,
                                      double tol_abs, double tol_rel) {
  if (!(tol_abs > 0.0) || !(tol_rel > 0.0))
    throw Error(ErrorCode::InvalidArgument, "clustering tolerances must be > 0");
  if (!std::is_sorted(values.begin(), values.end()))
    throw Error(ErrorCode::InvalidArgument, "values must be sorted ascending");

  ClusteredSpectrum out;
  double sum = 0.0;
  for (double x : values) {
    if (!out.clusters.empty()) {
      auto &c = out.clusters.back();
      const double mean = c.value;
      if (std::abs(x - mean) <= tol_abs + tol_rel * std::max(1.0, std::abs(mean))) {
        sum += x;
        ++c.multiplicity;
        c.value = sum / static_cast<double>(c.multiplicity);
        continue;
      }
    }
    sum = x;
    out.clusters.push_back({x, 1});
  }
  return out;
}

double default_cluster_tol_abs(std::size_t n) {
  return 1e-8 * std::sqrt(static_cast<double>(n));
}

} // namespace dtt
