#include "dtt/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dtt::subspaces {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

[[noreturn]] void too_small(std::string_view what, std::size_t n,
                            std::string_view need) {
  throw Error(ErrorCode::SizeTooSmall, std::string(what) + " requires " +
                                           std::string(need) + ", got n=" +
                                           std::to_string(n));
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i] * y[i];
  return s;
}

bool interior(std::size_t k, std::size_t n) { return k > 0 && k + 1 < n; }

} // namespace

std::string_view name(QCase c) {
  switch (c) {
  case QCase::dct5:
    return "dct5";
  case QCase::dst8:
    return "dst8";
  case QCase::dct1_odd_V2:
    return "dct1_odd_V2";
  case QCase::dct1_odd_V3:
    return "dct1_odd_V3";
  case QCase::dct1_even_V2:
    return "dct1_even_V2";
  case QCase::dct1_even_V3:
    return "dct1_even_V3";
  }
  return "?";
}

TransformKind kind_of(QCase c) {
  switch (c) {
  case QCase::dct5:
    return TransformKind::dct5;
  case QCase::dst8:
    return TransformKind::dst8;
  default:
    return TransformKind::dct1;
  }
}

bool has_decomposition(TransformKind kind) {
  return kind == TransformKind::dct5 || kind == TransformKind::dst8 ||
         kind == TransformKind::dct1;
}

std::vector<QCase> q_cases(TransformKind kind, std::size_t n) {
  switch (kind) {
  case TransformKind::dct5:
    return n >= 2 ? std::vector{QCase::dct5} : std::vector<QCase>{};
  case TransformKind::dst8:
    return n >= 2 ? std::vector{QCase::dst8} : std::vector<QCase>{};
  case TransformKind::dct1:
    if (n % 2 == 1) {
      if (n >= 5)
        return {QCase::dct1_odd_V2, QCase::dct1_odd_V3};
      if (n == 3)
        return {QCase::dct1_odd_V2};
      return {};
    }
    return n >= 4 ? std::vector{QCase::dct1_even_V2, QCase::dct1_even_V3}
                  : std::vector<QCase>{};
  default:
    return {};
  }
}

//------------------------------------------------------------------------------
V1Basis v1_basis(TransformKind kind, std::size_t n) {
  V1Basis basis{kind, n, {}};
  auto pair_vector = [n](std::size_t i, std::size_t j, double sj) {
    Vector v(n, 0.0);
    v[i] = 1.0;
    v[j] = sj;
    return v;
  };
  switch (kind) {
  case TransformKind::dct5:
    if (n < 3)
      too_small("dct5 V1 basis", n, "n >= 3");
    for (std::size_t k = 1; k + 1 < n; ++k)
      basis.vectors.push_back(pair_vector(k, k + 1, -1.0));
    break;
  case TransformKind::dst8:
    if (n < 3)
      too_small("dst8 V1 basis", n, "n >= 3");
    for (std::size_t k = 0; k + 2 < n; ++k)
      basis.vectors.push_back(pair_vector(k, k + 1, 1.0));
    break;
  case TransformKind::dct1:
    if (n < 5)
      too_small("dct1 V1 basis", n, "n >= 5");
    for (std::size_t k = 1; k + 3 < n; ++k)
      basis.vectors.push_back(pair_vector(k, k + 2, -1.0));
    break;
  default:
    throw Error(ErrorCode::InvalidArgument,
                std::string(dtt::name(kind)) + " has no V1 decomposition");
  }
  return basis;
}

double v1_square_eigenvalue(TransformKind kind, std::size_t n) {
  const double N = static_cast<double>(n);
  switch (kind) {
  case TransformKind::dct5:
  case TransformKind::dst8:
    return (2.0 * N - 1.0) / 4.0;
  case TransformKind::dct1:
    return (N - 1.0) / 2.0;
  default:
    throw Error(ErrorCode::InvalidArgument,
                std::string(dtt::name(kind)) + " has no V1 decomposition");
  }
}

//------------------------------------------------------------------------------
QPair q_pair(QCase c, std::size_t n) {
  QPair p{kind_of(c), n, c, Vector(n, 0.0), Vector(n, 0.0)};
  const bool odd = n % 2 == 1;
  switch (c) {
  case QCase::dct5:
    if (n < 2)
      too_small(name(c), n, "n >= 2");
    p.q1[0] = 1.0;
    std::fill(p.q2.begin() + 1, p.q2.end(), 1.0);
    break;
  case QCase::dst8:
    if (n < 2)
      too_small(name(c), n, "n >= 2");
    p.q1[n - 1] = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k)
      p.q2[k] = k % 2 == 0 ? 1.0 : -1.0;
    break;
  case QCase::dct1_odd_V2:
  case QCase::dct1_odd_V3: {
    const bool v2 = c == QCase::dct1_odd_V2;
    if (!odd || n < (v2 ? 3u : 5u))
      too_small(name(c), n, v2 ? "odd n >= 3" : "odd n >= 5");
    // V2: e_0 - e_{n-1} and the odd interior indicator
    // V3: e_0 + e_{n-1} and the even interior indicator
    p.q1[0] = 1.0;
    p.q1[n - 1] = v2 ? -1.0 : 1.0;
    for (std::size_t k = 1; k + 1 < n; ++k)
      p.q2[k] = (k % 2 == 1) == v2 ? 1.0 : 0.0;
    break;
  }
  case QCase::dct1_even_V2:
  case QCase::dct1_even_V3: {
    if (odd || n < 4)
      too_small(name(c), n, "even n >= 4");
    const bool v2 = c == QCase::dct1_even_V2;
    // V2: [1, 0, ..., 0, sqrt2 - 1],  [0, 1, 1 + sqrt2, 1, ..., 1 + sqrt2, 0]
    // V3: [1, 0, ..., 0, -1 - sqrt2], [0, 1, 1 - sqrt2, 1, ..., 1 - sqrt2, 0]
    p.q1[0] = 1.0;
    p.q1[n - 1] = v2 ? sqrt2 - 1.0 : -1.0 - sqrt2;
    const double even_weight = v2 ? 1.0 + sqrt2 : 1.0 - sqrt2;
    for (std::size_t k = 0; k < n; ++k) {
      if (interior(k, n))
        p.q2[k] = k % 2 == 1 ? 1.0 : even_weight;
    }
    break;
  }
  }
  return p;
}

ActionCoeffs expected_action_coeffs(QCase c, std::size_t n) {
  const double N = static_cast<double>(n);
  const double sign_n = n % 2 == 0 ? 1.0 : -1.0; // (-1)^n
  switch (c) {
  case QCase::dct5:
    return {1.0, 1.0, N - 1.0, -0.5};
  case QCase::dst8:
    return {-sign_n, 1.0, N - 1.0, sign_n / 2.0};
  case QCase::dct1_odd_V2:
    return {0.0, 2.0, (N - 1.0) / 2.0, 0.0};
  case QCase::dct1_odd_V3:
    return {2.0, 2.0, (N - 3.0) / 2.0, -1.0};
  case QCase::dct1_even_V2:
    return {sqrt2, 2.0 - sqrt2, (N - 2.0) * (1.0 + sqrt2 / 2.0), -sqrt2 / 2.0};
  case QCase::dct1_even_V3:
    return {-sqrt2, 2.0 + sqrt2, (N - 2.0) * (1.0 - sqrt2 / 2.0), sqrt2 / 2.0};
  }
  return {};
}

ActionFit fit_action(const Matrix &a, const QPair &pair) {
  const auto n = pair.n;
  if (a.order() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix and generators differ in size");

  const double g11 = dot(pair.q1, pair.q1);
  const double g12 = dot(pair.q1, pair.q2);
  const double g22 = dot(pair.q2, pair.q2);
  const double det = g11 * g22 - g12 * g12;
  if (!(det > 1e-12 * g11 * g22))
    throw Error(ErrorCode::DegenerateSystem, "generators are linearly dependent");

  double residual = 0.0;
  // coordinates of y in span{q1, q2}
  auto fit = [&](const Vector &y) {
    const double r1 = dot(pair.q1, y);
    const double r2 = dot(pair.q2, y);
    const double alpha = (g22 * r1 - g12 * r2) / det;
    const double beta = (g11 * r2 - g12 * r1) / det;
    for (std::size_t k = 0; k < n; ++k) {
      residual = std::max(
          residual, std::abs(y[k] - alpha * pair.q1[k] - beta * pair.q2[k]));
    }
    return std::pair{alpha, beta};
  };
  const auto [a1, b1] = fit(dtt::apply(a, pair.q1));
  const auto [c2, d2] = fit(dtt::apply(a, pair.q2));
  return {{a1, b1, c2, d2}, residual};
}

ActionFit action_coeffs(const Matrix &a, const QPair &pair) {
  const auto n = pair.n;
  const auto result = fit_action(a, pair);
  const double residual = result.residual;
  if (residual > 1e-9 * static_cast<double>(n)) {
    throw Error(ErrorCode::NotInvariant,
                std::string(name(pair.tag)) + " n=" + std::to_string(n) +
                    ": span is not invariant, residual " +
                    std::to_string(residual));
  }
  return result;
}

ActionFit action_coeffs(TransformKind kind, std::size_t n, const QPair &pair) {
  if (kind != pair.kind || n != pair.n)
    throw Error(ErrorCode::InvalidArgument, "generator pair built for another transform");
  return action_coeffs(build_matrix(kind, n).entries(), pair);
}

//------------------------------------------------------------------------------
std::array<ReducedEigen, 2> reduced_eigen(const ActionCoeffs &m) {
  const double scale =
      std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  const double tiny = 1e-14 * scale;

  if (std::abs(m.b) <= tiny && std::abs(m.c) <= tiny) {
    ReducedEigen first{m.a, 1.0, 0.0};
    ReducedEigen second{m.d, 0.0, 1.0};
    if (second.value < first.value)
      std::swap(first, second);
    return {first, second};
  }

  const double half_gap = (m.a - m.d) / 2.0;
  const double disc = half_gap * half_gap + m.b * m.c;
  if (disc <= 1e-12 * scale * scale) {
    throw Error(ErrorCode::DegenerateSystem,
                disc < 0.0 ? "reduced system has complex eigenvalues"
                           : "reduced system is defective");
  }
  const double mean = (m.a + m.d) / 2.0;
  const double root = std::sqrt(disc);

  // (a - l) alpha + c beta = 0  and  b alpha + (d - l) beta = 0; take alpha = 1
  // from whichever row is better conditioned.
  auto eigenpair = [&](double value) -> ReducedEigen {
    const double from_first = std::abs(m.c);
    const double from_second = std::abs(value - m.d);
    if (std::max(from_first, from_second) <= tiny)
      return {value, 0.0, 1.0};
    if (from_first >= from_second)
      return {value, 1.0, (value - m.a) / m.c};
    return {value, 1.0, m.b / (value - m.d)};
  };
  return {eigenpair(mean - root), eigenpair(mean + root)};
}

bool has_analytic_eigenvectors(TransformKind kind, std::size_t n) {
  switch (kind) {
  case TransformKind::dct5:
  case TransformKind::dst8:
    return n >= 2;
  case TransformKind::dct1:
    return n % 2 == 1 ? n >= 5 : n >= 4;
  default:
    return false;
  }
}

std::vector<AnalyticEigenvector> analytic_eigenvectors(TransformKind kind,
                                                       std::size_t n) {
  if (!has_decomposition(kind)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(dtt::name(kind)) + " has no q-pair decomposition");
  }
  if (!has_analytic_eigenvectors(kind, n)) {
    too_small(std::string(dtt::name(kind)) + " eigenvectors", n,
              kind == TransformKind::dct1 ? "odd n >= 5 or even n >= 4"
                                          : "n >= 2");
  }
  std::vector<AnalyticEigenvector> out;
  for (auto c : q_cases(kind, n)) {
    const auto pair = q_pair(c, n);
    for (const auto &e : reduced_eigen(expected_action_coeffs(c, n))) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k)
        v[k] = e.alpha * pair.q1[k] + e.beta * pair.q2[k];
      out.push_back({c, e.value, std::move(v)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto &x, const auto &y) { return x.value < y.value; });
  return out;
}

} // namespace dtt::subspaces
