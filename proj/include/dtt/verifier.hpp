#pragma once

#include "dtt/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtt {

enum class ClaimId {
  SquareForm,
  TraceForm,
  Spectrum,
  Multiplicities,
  V1Action,
  QInvariance,
  EigvecResidual,
  IdentitySum,
};

std::string_view name(ClaimId id);

/// One checked statement. `measured` is kept even when the claim passes.
struct Claim {
  ClaimId id;
  std::optional<TransformKind> kind; // empty for identity-sum claims
  std::size_t n;
  std::string detail;
  double measured;
  double tolerance;
  bool passed;
};

/// passed = measured <= tolerance (NaN never passes).
Claim make_claim(ClaimId id, std::optional<TransformKind> kind, std::size_t n,
                 std::string detail, double measured, double tolerance);

/// Tolerance factors. Each check multiplies its factor by the scale noted.
struct Tolerances {
  double square = 1e-9;          // * n
  double trace = 1e-10;          // * n
  double spectrum_value = 1e-9;  // * max(1, |lambda|)
  double v1_action = 1e-9;       // * n
  double q_residual = 1e-9;      // * n
  double q_coeff = 1e-9;         // absolute
  double eigvec = 1e-9;          // * n * |v|_inf
  double eigval_match = 1e-12;   // * max(1, |lambda|)
  double identity = 1e-10;       // * number of terms
  double cluster_abs = 1e-8;     // * sqrt(n)
  double cluster_rel = 1e-8;
  /// Identity-sum claims cover structural parameters 1..identity_max_param.
  int identity_max_param = 16;
};

/// A note attached to one (kind, n) cell of a sweep.
struct CellNote {
  TransformKind kind;
  std::size_t n;
  std::string reason;
};

struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  friend bool operator==(const Tally &, const Tally &) = default;
};

struct VerificationReport {
  std::vector<TransformKind> kinds;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  Tolerances tolerances;
  bool fail_fast = false;
  /// Set when fail_fast cut the sweep short.
  bool stopped_early = false;

  std::vector<Claim> claims;
  std::vector<CellNote> skipped;
  /// Cells whose analytic spectrum merged coincident table rows.
  std::vector<CellNote> merged;
  std::map<std::string, Tally> by_id;
  std::map<std::string, Tally> by_kind; // identity claims tally under "identity"

  std::size_t failed_count() const;
};

/// Recomputes by_id / by_kind from the claim list.
void summarize(VerificationReport &report);

/// Every applicable check for one admissible (kind, n). Failed checks are
/// returned as failing claims, never thrown. Throws SizeTooSmall if n is not
/// admissible.
std::vector<Claim> verify_kind(TransformKind kind, std::size_t n,
                               const Tolerances &tol = {});

/// Identity-sum claims over n = 1..tol.identity_max_param: one claim per
/// (identity, n) with the largest |closed form - direct sum| over every
/// admissible a with |a| <= 4 * forbidden divisor.
std::vector<Claim> verify_identities(const Tolerances &tol = {});

/// verify_kind over kinds x [n_min, n_max] in (kind, n) order, skipping
/// inadmissible cells, followed by identity claims when `kinds` is non-empty.
/// Throws InvalidArgument when n_min > n_max.
VerificationReport sweep(const std::vector<TransformKind> &kinds,
                         std::size_t n_min, std::size_t n_max,
                         const Tolerances &tol = {}, bool fail_fast = false);

} // namespace dtt
