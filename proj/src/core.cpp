#include "dtt/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dtt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::SizeTooSmall:
    return "SizeTooSmall";
  case ErrorCode::DimensionMismatch:
    return "DimensionMismatch";
  case ErrorCode::DivisibilityViolation:
    return "DivisibilityViolation";
  case ErrorCode::DegenerateSpectrum:
    return "DegenerateSpectrum";
  case ErrorCode::NotInvariant:
    return "NotInvariant";
  case ErrorCode::DegenerateSystem:
    return "DegenerateSystem";
  case ErrorCode::NotSymmetric:
    return "NotSymmetric";
  case ErrorCode::InvalidArgument:
    return "InvalidArgument";
  }
  return "UnknownError";
}

//------------------------------------------------------------------------------
Family family(TransformKind kind) {
  switch (kind) {
  case TransformKind::dct1:
  case TransformKind::dct4:
  case TransformKind::dct5:
  case TransformKind::dct8:
    return Family::cosine;
  default:
    return Family::sine;
  }
}

int variant(TransformKind kind) {
  switch (kind) {
  case TransformKind::dct1:
  case TransformKind::dst1:
    return 1;
  case TransformKind::dct4:
  case TransformKind::dst4:
    return 4;
  case TransformKind::dct5:
  case TransformKind::dst5:
    return 5;
  default:
    return 8;
  }
}

std::string_view name(TransformKind kind) {
  switch (kind) {
  case TransformKind::dct1:
    return "dct1";
  case TransformKind::dct4:
    return "dct4";
  case TransformKind::dct5:
    return "dct5";
  case TransformKind::dct8:
    return "dct8";
  case TransformKind::dst1:
    return "dst1";
  case TransformKind::dst4:
    return "dst4";
  case TransformKind::dst5:
    return "dst5";
  case TransformKind::dst8:
    return "dst8";
  }
  return "?";
}

std::optional<TransformKind> parse_kind(std::string_view text) {
  for (auto kind : all_kinds) {
    if (name(kind) == text)
      return kind;
  }
  return std::nullopt;
}

std::size_t min_size(TransformKind kind) {
  return kind == TransformKind::dct1 ? 2 : 1;
}

bool admissible(TransformKind kind, std::size_t n) {
  return n >= min_size(kind);
}

void require_admissible(TransformKind kind, std::size_t n) {
  if (!admissible(kind, n)) {
    throw Error(ErrorCode::SizeTooSmall,
                std::string(name(kind)) + " requires n >= " +
                    std::to_string(min_size(kind)) + ", got " +
                    std::to_string(n));
  }
}

//------------------------------------------------------------------------------
Vector basis_vector(std::size_t n, std::size_t k) {
  Vector e(n, 0.0);
  e.at(k) = 1.0;
  return e;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto &r : rows) {
    if (r.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "matrix rows must be square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = 1.0;
  return m;
}

Vector Matrix::column(std::size_t l) const {
  Vector c(n_);
  for (std::size_t k = 0; k < n_; ++k)
    c[k] = (*this)(k, l);
  return c;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t k = 0; k < n_; ++k)
    t += (*this)(k, k);
  return t;
}

double Matrix::max_abs() const { return dtt::max_abs(data_); }

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_)
    s += x * x;
  return std::sqrt(s);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

double max_abs_difference(const Matrix &a, const Matrix &b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i)
    m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

Vector apply(const Matrix &m, std::span<const double> v) {
  const auto n = m.order();
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length " + std::to_string(v.size()) +
                    " does not match matrix order " + std::to_string(n));
  }
  Vector out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto r = m.row(k);
    double s = 0.0;
    for (std::size_t l = 0; l < n; ++l)
      s += r[l] * v[l];
    out[k] = s;
  }
  return out;
}

Matrix matrix_multiply(const Matrix &a, const Matrix &b) {
  const auto n = a.order();
  if (b.order() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

//------------------------------------------------------------------------------
double cos_pi_ratio(long long p, long long q) {
  if (q <= 0)
    throw Error(ErrorCode::InvalidArgument, "angle denominator must be > 0");
  const long long period = 2 * q;
  long long r = p % period;
  if (r < 0)
    r += period;
  // cos is even about 0 and 2 pi: fold into [0, pi]
  if (r > q)
    r = period - r;
  // cos(pi - t) = -cos(t): fold into [0, pi/2]
  double sign = 1.0;
  if (2 * r > q) {
    r = q - r;
    sign = -1.0;
  }
  if (2 * r == q)
    return 0.0;
  constexpr double pi = std::numbers::pi;
  double value;
  if (4 * r > q) {
    // (pi/4, pi/2): use sin of the complement, which lies in (0, pi/4)
    value = std::sin(pi * static_cast<double>(q - 2 * r) /
                     static_cast<double>(2 * q));
  } else {
    value = std::cos(pi * static_cast<double>(r) / static_cast<double>(q));
  }
  return sign * value + 0.0;
}

double sin_pi_ratio(long long p, long long q) {
  // sin(x) = cos(pi/2 - x)
  return cos_pi_ratio(q - 2 * p, 2 * q);
}

double dtt_entry(TransformKind kind, std::size_t n, std::size_t k,
                 std::size_t l) {
  const auto N = static_cast<long long>(n);
  const auto K = static_cast<long long>(k);
  const auto L = static_cast<long long>(l);
  switch (kind) {
  case TransformKind::dct1:
    return cos_pi_ratio(K * L, N - 1);
  case TransformKind::dct4:
    return cos_pi_ratio((2 * K + 1) * (2 * L + 1), 4 * N);
  case TransformKind::dct5:
    return cos_pi_ratio(2 * K * L, 2 * N - 1);
  case TransformKind::dct8:
    return cos_pi_ratio((2 * K + 1) * (2 * L + 1), 4 * N + 2);
  case TransformKind::dst1:
    return sin_pi_ratio((K + 1) * (L + 1), N + 1);
  case TransformKind::dst4:
    return sin_pi_ratio((2 * K + 1) * (2 * L + 1), 4 * N);
  case TransformKind::dst5:
    return sin_pi_ratio(2 * (K + 1) * (L + 1), 2 * N + 1);
  case TransformKind::dst8:
    return sin_pi_ratio((2 * K + 1) * (2 * L + 1), 4 * N - 2);
  }
  return 0.0;
}

DttMatrix build_matrix(TransformKind kind, std::size_t n) {
  require_admissible(kind, n);
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      const double v = dtt_entry(kind, n, k, l);
      m(k, l) = v;
      m(l, k) = v;
    }
  }
  return DttMatrix(kind, std::move(m));
}

} // namespace dtt
