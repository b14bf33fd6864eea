#include "dtt/verifier.hpp"

#include "dtt/closed_forms.hpp"
#include "dtt/eigensolver.hpp"
#include "dtt/spectrum.hpp"
#include "dtt/subspaces.hpp"
#include "dtt/trig_sums.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dtt {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
} // namespace

std::string_view name(ClaimId id) {
  switch (id) {
  case ClaimId::SquareForm:
    return "SquareForm";
  case ClaimId::TraceForm:
    return "TraceForm";
  case ClaimId::Spectrum:
    return "Spectrum";
  case ClaimId::Multiplicities:
    return "Multiplicities";
  case ClaimId::V1Action:
    return "V1Action";
  case ClaimId::QInvariance:
    return "QInvariance";
  case ClaimId::EigvecResidual:
    return "EigvecResidual";
  case ClaimId::IdentitySum:
    return "IdentitySum";
  }
  return "?";
}

Claim make_claim(ClaimId id, std::optional<TransformKind> kind, std::size_t n,
                 std::string detail, double measured, double tolerance) {
  return {id, kind, n, std::move(detail), measured, tolerance,
          measured <= tolerance};
}

std::size_t VerificationReport::failed_count() const {
  return static_cast<std::size_t>(std::count_if(
      claims.begin(), claims.end(), [](const Claim &c) { return !c.passed; }));
}

void summarize(VerificationReport &report) {
  report.by_id.clear();
  report.by_kind.clear();
  for (const auto &c : report.claims) {
    auto &id = report.by_id[std::string(name(c.id))];
    auto &kind = report.by_kind[c.kind ? std::string(name(*c.kind)) : "identity"];
    ++id.total;
    ++kind.total;
    if (!c.passed) {
      ++id.failed;
      ++kind.failed;
    }
  }
}

//------------------------------------------------------------------------------
namespace {

void spectrum_claims(std::vector<Claim> &out, TransformKind kind, std::size_t n,
                     const Matrix &a, const Tolerances &tol) {
  const double mult_tol = 0.0;
  SpectrumSpec analytic;
  try {
    analytic = analytic_spectrum(kind, n);
  } catch (const Error &e) {
    out.push_back(make_claim(ClaimId::Spectrum, kind, n, e.what(), inf,
                             tol.spectrum_value));
    out.push_back(make_claim(ClaimId::Multiplicities, kind, n, e.what(), inf,
                             mult_tol));
    return;
  }
  const std::string path = analytic.merged
                               ? "jacobi vs analytic (merged coincident rows)"
                               : "jacobi vs analytic";

  const auto eig = jacobi_eigen(a, false);
  if (!eig.converged) {
    const auto why = path + ": jacobi did not converge";
    out.push_back(make_claim(ClaimId::Spectrum, kind, n, why, inf, tol.spectrum_value));
    out.push_back(make_claim(ClaimId::Multiplicities, kind, n, why, inf, mult_tol));
    return;
  }
  const auto clusters =
      cluster_eigenvalues(eig.eigenvalues,
                          tol.cluster_abs * std::sqrt(static_cast<double>(n)),
                          tol.cluster_rel)
          .clusters;

  if (clusters.size() != analytic.pairs.size()) {
    const auto why = path + ": cluster count " + std::to_string(clusters.size()) +
                     " != analytic count " + std::to_string(analytic.pairs.size());
    out.push_back(make_claim(ClaimId::Spectrum, kind, n, why, inf, tol.spectrum_value));
    out.push_back(make_claim(ClaimId::Multiplicities, kind, n, why, inf, mult_tol));
    return;
  }
  double value_dev = 0.0;
  double mult_dev = 0.0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto &p = analytic.pairs[i];
    value_dev = std::max(value_dev, std::abs(clusters[i].value - p.value) /
                                        std::max(1.0, std::abs(p.value)));
    mult_dev += static_cast<double>(std::llabs(clusters[i].multiplicity - p.multiplicity));
  }
  out.push_back(make_claim(ClaimId::Spectrum, kind, n, path, value_dev,
                           tol.spectrum_value));
  out.push_back(make_claim(ClaimId::Multiplicities, kind, n,
                           std::to_string(analytic.pairs.size()) + " distinct values",
                           mult_dev, mult_tol));
}

void subspace_claims(std::vector<Claim> &out, TransformKind kind, std::size_t n,
                     const Matrix &a, const Tolerances &tol) {
  namespace ss = subspaces;
  const double N = static_cast<double>(n);

  const bool has_v1 = kind == TransformKind::dct1 ? n >= 5 : n >= 3;
  if (has_v1) {
    const double c = ss::v1_square_eigenvalue(kind, n);
    double worst = 0.0;
    for (const auto &v : ss::v1_basis(kind, n).vectors) {
      const auto av = dtt::apply(a, v);
      const auto aav = dtt::apply(a, av);
      for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(aav[k] - c * v[k]));
    }
    out.push_back(make_claim(ClaimId::V1Action, kind, n,
                             "A^2 v = " + format_value(c) + " v on V1", worst,
                             tol.v1_action * N));
  }

  for (auto qc : ss::q_cases(kind, n)) {
    const auto pair = ss::q_pair(qc, n);
    const auto label = std::string(ss::name(qc));
    ss::ActionFit fit;
    try {
      fit = ss::fit_action(a, pair);
    } catch (const Error &e) {
      out.push_back(make_claim(ClaimId::QInvariance, kind, n, label + ": " + e.what(),
                               inf, tol.q_residual * N));
      continue;
    }
    out.push_back(make_claim(ClaimId::QInvariance, kind, n,
                             label + " span residual", fit.residual,
                             tol.q_residual * N));
    const auto want = ss::expected_action_coeffs(qc, n);
    const double coeff_dev = std::max({std::abs(fit.coeffs.a - want.a),
                                       std::abs(fit.coeffs.b - want.b),
                                       std::abs(fit.coeffs.c - want.c),
                                       std::abs(fit.coeffs.d - want.d)});
    out.push_back(make_claim(ClaimId::QInvariance, kind, n,
                             label + " action coefficients", coeff_dev, tol.q_coeff));
  }

  if (!ss::has_analytic_eigenvectors(kind, n))
    return;
  std::vector<double> simple;
  try {
    for (const auto &p : analytic_spectrum(kind, n).pairs) {
      if (p.multiplicity == 1)
        simple.push_back(p.value);
    }
  } catch (const Error &) {
    // reported by the spectrum claims
  }
  for (const auto &ev : ss::analytic_eigenvectors(kind, n)) {
    const auto label = std::string(ss::name(ev.source)) +
                       " lambda=" + format_value(ev.value);
    const auto av = dtt::apply(a, ev.vector);
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      r = std::max(r, std::abs(av[k] - ev.value * ev.vector[k]));
    out.push_back(make_claim(ClaimId::EigvecResidual, kind, n,
                             label + " |Av - lambda v| / |v|",
                             r / max_abs(ev.vector), tol.eigvec * N));

    double match = inf;
    for (double s : simple)
      match = std::min(match, std::abs(ev.value - s) / std::max(1.0, std::abs(s)));
    out.push_back(make_claim(ClaimId::EigvecResidual, kind, n,
                             label + " matches a simple analytic eigenvalue", match,
                             tol.eigval_match));
  }
}

} // namespace

std::vector<Claim> verify_kind(TransformKind kind, std::size_t n,
                               const Tolerances &tol) {
  const auto dtt = build_matrix(kind, n);
  const auto &a = dtt.entries();
  const double N = static_cast<double>(n);
  std::vector<Claim> out;

  const auto square = square_closed_form(kind, n);
  out.push_back(make_claim(
      ClaimId::SquareForm, kind, n,
      "A*A vs closed form (" + std::string(name(square.perturbation)) + ")",
      max_abs_difference(materialize(square), matrix_multiply(a, a)),
      tol.square * N));

  const auto trace = trace_closed_form(kind, n);
  out.push_back(make_claim(ClaimId::TraceForm, kind, n,
                           "closed form " + format_value(trace.value),
                           std::abs(trace.value - a.trace()), tol.trace * N));

  spectrum_claims(out, kind, n, a, tol);
  if (subspaces::has_decomposition(kind))
    subspace_claims(out, kind, n, a, tol);
  return out;
}

std::vector<Claim> verify_identities(const Tolerances &tol) {
  using namespace trig_sums;
  std::vector<Claim> out;
  for (auto id : all_identities) {
    for (std::int64_t n = 1; n <= tol.identity_max_param; ++n) {
      const DirectSummer oracle(id, n);
      const double terms = static_cast<double>(term_count(id, n));
      double worst = 0.0;
      std::size_t points = 0;
      if (is_gauss(id)) {
        worst = std::abs(closed_form(id, {n, 0}) - oracle.sum(0));
        points = 1;
      } else {
        const auto d = *forbidden_divisor(id, n);
        for (std::int64_t a = -4 * d; a <= 4 * d; ++a) {
          if (a % d == 0)
            continue;
          worst = std::max(worst, std::abs(closed_form(id, {n, a}) - oracle.sum(a)));
          ++points;
        }
      }
      out.push_back(make_claim(ClaimId::IdentitySum, std::nullopt,
                               static_cast<std::size_t>(n),
                               std::string(name(id)) + " over " +
                                   std::to_string(points) + " parameter values",
                               worst, tol.identity * terms));
    }
  }
  return out;
}

VerificationReport sweep(const std::vector<TransformKind> &kinds,
                         std::size_t n_min, std::size_t n_max,
                         const Tolerances &tol, bool fail_fast) {
  if (n_min > n_max) {
    throw Error(ErrorCode::InvalidArgument,
                "empty range: n_min " + std::to_string(n_min) + " > n_max " +
                    std::to_string(n_max));
  }
  VerificationReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.tolerances = tol;
  report.fail_fast = fail_fast;
  for (auto kind : all_kinds) {
    if (std::find(kinds.begin(), kinds.end(), kind) != kinds.end())
      report.kinds.push_back(kind);
  }

  auto append = [&](std::vector<Claim> claims) {
    for (auto &c : claims) {
      const bool failed = !c.passed;
      report.claims.push_back(std::move(c));
      if (failed && fail_fast) {
        report.stopped_early = true;
        return false;
      }
    }
    return true;
  };

  bool going = true;
  for (auto kind : report.kinds) {
    for (std::size_t n = n_min; going && n <= n_max; ++n) {
      if (!admissible(kind, n)) {
        report.skipped.push_back(
            {kind, n, "requires n >= " + std::to_string(min_size(kind))});
        continue;
      }
      going = append(verify_kind(kind, n, tol));
      try {
        if (analytic_spectrum(kind, n).merged)
          report.merged.push_back({kind, n, "coincident table rows merged"});
      } catch (const Error &) {
      }
    }
  }
  if (going && !report.kinds.empty())
    append(verify_identities(tol));

  summarize(report);
  return report;
}

} // namespace dtt
