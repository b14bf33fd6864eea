#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

// Closed forms of the cosine-sum identities used to square the transform
// matrices, and of the two quadratic (Gauss-type) sums used for their traces.
// Each closed form has a matching term-by-term summation of its left-hand side.
namespace dtt::trig_sums {

enum class IdentityId { Lag1, Lag2, Id1, Id2, Id3, Id4, GaussCos, GaussSin };

inline constexpr std::array<IdentityId, 8> all_identities{
    IdentityId::Lag1, IdentityId::Lag2,     IdentityId::Id1,
    IdentityId::Id2,  IdentityId::Id3,      IdentityId::Id4,
    IdentityId::GaussCos, IdentityId::GaussSin};

std::string_view name(IdentityId id);
bool is_gauss(IdentityId id);

/// Structural parameter (n, or m for the Gauss sums) and the free integer
/// (a or b). `a` is ignored by the Gauss sums.
struct SumParams {
  std::int64_t n = 1;
  std::int64_t a = 0;
};

/// The integer that must not divide `a`: 2n, 2n+1, 2n, 2n+1, 2n+2, 2n+1
/// for Lag1..Id4. Gauss sums have no such modulus and return nullopt.
std::optional<std::int64_t> forbidden_divisor(IdentityId id, std::int64_t n);

/// Number of terms in the left-hand side.
std::int64_t term_count(IdentityId id, std::int64_t n);

/// True when (id, params) lies inside the identity's domain.
bool admissible(IdentityId id, const SumParams &params);

// sum_{m=0}^{n} cos(m a pi / n) = (1 + (-1)^a) / 2, for 2n not dividing a.
double lag1(std::int64_t n, std::int64_t a);
// sum_{m=0}^{n} cos(2 m b pi / (2n+1)) = 1/2, for 2n+1 not dividing b.
double lag2(std::int64_t n, std::int64_t b);
// sum_{m=0}^{n-1} cos((2m+1) a pi / (2n)) = 0, for 2n not dividing a.
double id1(std::int64_t n, std::int64_t a);
// sum_{m=0}^{n-1} cos((2m+1) a pi / (2n+1)) = (-1)^(a+1) / 2.
double id2(std::int64_t n, std::int64_t a);
// sum_{m=1}^{n} cos(m a pi / (n+1)) = -((-1)^a + 1) / 2, for 2n+2 not dividing a.
double id3(std::int64_t n, std::int64_t a);
// sum_{m=0}^{n-1} cos(2 (m+1) a pi / (2n+1)) = -1/2.
double id4(std::int64_t n, std::int64_t a);

/// sum_{k=0}^{m-1} cos(2 k^2 pi / m) = sqrt(m)/2 (1 + cos(m pi/2) + sin(m pi/2))
double gauss_cos(std::int64_t m);
/// sum_{k=0}^{m-1} sin(2 k^2 pi / m) = sqrt(m)/2 (1 + cos(m pi/2) - sin(m pi/2))
double gauss_sin(std::int64_t m);

/// Dispatches to the closed form for `id`.
double closed_form(IdentityId id, const SumParams &params);

/// Term-by-term floating-point sum of the left-hand side. Testing oracle;
/// shares no code with the closed forms.
double direct_sum(IdentityId id, const SumParams &params);

/// Oracle for many values of `a` at one structural parameter. Tabulates
/// cos(j pi / Q) for j in [0, 2Q) once, then sums table entries term by term.
class DirectSummer {
public:
  DirectSummer(IdentityId id, std::int64_t n);

  IdentityId id() const { return id_; }
  std::int64_t n() const { return n_; }
  /// Same contract as direct_sum(id, {n, a}).
  double sum(std::int64_t a) const;
  /// sum(a) and sum(a + index_period()) visit the same table entries in the
  /// same order, so their results are bit-identical.
  std::int64_t index_period() const { return 2 * denom_; }

private:
  IdentityId id_;
  std::int64_t n_;
  std::int64_t denom_; // angles are j * pi / denom_
  std::vector<double> cos_table_;
  std::vector<double> sin_table_; // Gauss sine sum only
};

} // namespace dtt::trig_sums
