#pragma once

#include "dtt/error.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dtt {

//==============================================================================
// Transform kinds
//==============================================================================

enum class Family { cosine, sine };

/// The eight symmetric, non-normalized discrete trigonometric transforms.
enum class TransformKind { dct1, dct4, dct5, dct8, dst1, dst4, dst5, dst8 };

inline constexpr std::array<TransformKind, 8> all_kinds{
    TransformKind::dct1, TransformKind::dct4, TransformKind::dct5,
    TransformKind::dct8, TransformKind::dst1, TransformKind::dst4,
    TransformKind::dst5, TransformKind::dst8};

Family family(TransformKind kind);
/// Type number: 1, 4, 5 or 8.
int variant(TransformKind kind);

/// Lowercase shell-friendly name, e.g. "dct1".
std::string_view name(TransformKind kind);
std::optional<TransformKind> parse_kind(std::string_view text);

/// Smallest admissible order: 2 for DCT-1 (its angle denominator is n-1),
/// 1 for every other kind.
std::size_t min_size(TransformKind kind);
bool admissible(TransformKind kind, std::size_t n);
/// Throws ErrorCode::SizeTooSmall when n is below min_size(kind).
void require_admissible(TransformKind kind, std::size_t n);

//==============================================================================
// Dense values
//==============================================================================

using Vector = std::vector<double>;

/// Standard basis vector e_k of length n (zero-based k).
Vector basis_vector(std::size_t n, std::size_t k);

/// Square n x n matrix, flat row-major storage, element (k, l) is row k,
/// column l, zero-based.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t order() const { return n_; }

  double &operator()(std::size_t k, std::size_t l) { return data_[k * n_ + l]; }
  double operator()(std::size_t k, std::size_t l) const {
    return data_[k * n_ + l];
  }

  std::span<const double> row(std::size_t k) const {
    return {data_.data() + k * n_, n_};
  }
  Vector column(std::size_t l) const;
  std::span<const double> data() const { return data_; }

  double trace() const;
  /// Largest absolute entry.
  double max_abs() const;
  double frobenius_norm() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Largest absolute entry of a - b.
double max_abs_difference(const Matrix &a, const Matrix &b);
double max_abs(std::span<const double> v);

/// Matrix-vector product. Throws DimensionMismatch on order mismatch.
Vector apply(const Matrix &m, std::span<const double> v);

/// Plain triple-loop product a * b.
Matrix matrix_multiply(const Matrix &a, const Matrix &b);

//==============================================================================
// Transform matrices
//==============================================================================

/// cos(p * pi / q) with the integer argument reduced into the first octant
/// before any floating-point work. Multiples of pi/2 come out exactly.
double cos_pi_ratio(long long p, long long q);
/// sin(p * pi / q), same reduction as cos_pi_ratio.
double sin_pi_ratio(long long p, long long q);

class DttMatrix {
public:
  TransformKind kind() const { return kind_; }
  std::size_t order() const { return entries_.order(); }
  const Matrix &entries() const { return entries_; }
  double operator()(std::size_t k, std::size_t l) const { return entries_(k, l); }

private:
  DttMatrix(TransformKind kind, Matrix entries)
      : kind_(kind), entries_(std::move(entries)) {}
  friend DttMatrix build_matrix(TransformKind, std::size_t);

  TransformKind kind_;
  Matrix entries_;
};

/// Entry (k, l) of the order-n transform matrix, k, l in [0, n).
double dtt_entry(TransformKind kind, std::size_t n, std::size_t k,
                 std::size_t l);

/// Builds the n x n matrix of the given kind. Throws SizeTooSmall when n is
/// not admissible.
DttMatrix build_matrix(TransformKind kind, std::size_t n);

inline Vector apply(const DttMatrix &m, std::span<const double> v) {
  return apply(m.entries(), v);
}

} // namespace dtt
