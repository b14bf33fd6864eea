// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [path-to-dtt-binary]
//
// Criterion 7 runs the binary as a child process when a path is given and
// falls back to the in-process entry point otherwise.

#include "dtt/cli.hpp"
#include "dtt/closed_forms.hpp"
#include "dtt/core.hpp"
#include "dtt/eigensolver.hpp"
#include "dtt/spectrum.hpp"
#include "dtt/subspaces.hpp"
#include "dtt/trig_sums.hpp"
#include "dtt/verifier.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace dtt;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string fmt(const char *f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int run_criterion(int id, const char *title, double limit_s,
                  const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s)
    o.require(false, fmt("runtime %.2f s exceeds %.0f s", secs, limit_s));
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title,
              secs, o.note.empty() ? "" : " - ", o.note.c_str());
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

//------------------------------------------------------------------------------
Outcome identity_suite() {
  using namespace trig_sums;
  Outcome o;
  double worst = 0.0;
  long long points = 0;
  for (auto id : all_identities) {
    for (std::int64_t n = 1; n <= 512; ++n) {
      const DirectSummer oracle(id, n);
      const double tol = 1e-10 * static_cast<double>(term_count(id, n));
      const auto period = oracle.index_period();
      std::vector<double> by_residue(static_cast<std::size_t>(period), std::nan(""));
      auto direct = [&](std::int64_t a) {
        auto &slot = by_residue[static_cast<std::size_t>(((a % period) + period) % period)];
        if (std::isnan(slot))
          slot = oracle.sum(a);
        return slot;
      };
      auto check = [&](std::int64_t a) {
        const double dev = std::abs(closed_form(id, {n, a}) - direct(a));
        worst = std::max(worst, dev / tol);
        ++points;
        if (!(dev <= tol))
          o.require(false, fmt("%s n=%lld a=%lld deviation %.3g",
                               std::string(name(id)).c_str(), (long long)n,
                               (long long)a, dev));
      };
      if (is_gauss(id)) {
        check(0);
        continue;
      }
      const auto d = *forbidden_divisor(id, n);
      for (std::int64_t a = -4 * d; a <= 4 * d; ++a) {
        if (a % d != 0)
          check(a);
      }
    }
  }
  if (o.ok)
    o.note = fmt("%lld points, worst deviation %.3g of tolerance", points, worst);
  return o;
}

Outcome square_suite() {
  Outcome o;
  double worst = 0.0;
  for (auto k : all_kinds) {
    for (std::size_t n = min_size(k); n <= 96; ++n) {
      const auto a = build_matrix(k, n).entries();
      const double dev =
          max_abs_difference(materialize(square_closed_form(k, n)), matrix_multiply(a, a));
      worst = std::max(worst, dev / n);
      o.require(dev <= 1e-9 * n, fmt("%s n=%zu deviation %.3g",
                                     std::string(name(k)).c_str(), n, dev));
    }
  }
  if (o.ok)
    o.note = fmt("worst deviation / n = %.3g", worst);
  return o;
}

Outcome trace_suite() {
  Outcome o;
  double worst = 0.0;
  for (auto k : all_kinds) {
    for (std::size_t n = min_size(k); n <= 256; ++n) {
      const auto a = build_matrix(k, n).entries();
      const double closed = trace_closed_form(k, n).value;
      const double dev = std::abs(closed - a.trace());
      worst = std::max(worst, dev / n);
      o.require(dev <= 1e-10 * n,
                fmt("%s n=%zu deviation %.3g", std::string(name(k)).c_str(), n, dev));
      if (n % 2 == 0 && k == TransformKind::dct5)
        o.require(closed == 0.5, fmt("dct5 n=%zu trace %.17g, expected 1/2", n, closed));
      if (n % 2 == 0 && k == TransformKind::dst8)
        o.require(closed == -0.5, fmt("dst8 n=%zu trace %.17g, expected -1/2", n, closed));
      if (n % 2 == 1 && k == TransformKind::dct1) {
        const double want = (2.0 + std::sqrt(2.0 * n - 2.0)) / 2.0;
        o.require(std::abs(closed - want) <= 1e-15 * want,
                  fmt("dct1 n=%zu trace %.17g, expected %.17g", n, closed, want));
      }
    }
  }
  if (o.ok)
    o.note = fmt("worst deviation / n = %.3g", worst);
  return o;
}

Outcome spectrum_suite() {
  Outcome o;
  int merged = 0;
  for (auto k : all_kinds) {
    for (std::size_t n = min_size(k); n <= 64; ++n) {
      const auto label = std::string(name(k)) + " n=" + std::to_string(n);
      const auto spec = analytic_spectrum(k, n);
      merged += spec.merged;
      const auto eig = jacobi_eigen(build_matrix(k, n).entries(), false);
      o.require(eig.converged, label + ": jacobi did not converge");
      const auto clusters = cluster_eigenvalues(eig.eigenvalues, default_cluster_tol_abs(n),
                                                default_cluster_tol_rel)
                                .clusters;
      o.require(clusters.size() == spec.pairs.size(),
                label + fmt(": %zu clusters vs %zu analytic values", clusters.size(),
                            spec.pairs.size()));
      if (clusters.size() != spec.pairs.size())
        continue;
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto &p = spec.pairs[i];
        o.require(std::abs(clusters[i].value - p.value) <=
                      1e-9 * std::max(1.0, std::abs(p.value)),
                  label + fmt(": value %.17g vs %.17g", clusters[i].value, p.value));
        o.require(clusters[i].multiplicity == p.multiplicity,
                  label + fmt(": multiplicity %lld vs %lld", clusters[i].multiplicity,
                              p.multiplicity));
      }
    }
  }
  for (auto [k, n] : {std::pair{TransformKind::dct1, std::size_t{2}},
                      {TransformKind::dct1, std::size_t{3}},
                      {TransformKind::dct5, std::size_t{1}},
                      {TransformKind::dst8, std::size_t{1}}}) {
    o.require(analytic_spectrum(k, n).merged,
              std::string(name(k)) + fmt(" n=%zu did not take the merge path", n));
  }
  if (o.ok)
    o.note = fmt("%d cells used merged rows", merged);
  return o;
}

Outcome subspace_suite() {
  namespace ss = subspaces;
  Outcome o;
  long long checks = 0;
  for (auto k : {TransformKind::dct5, TransformKind::dst8, TransformKind::dct1}) {
    for (std::size_t n = min_size(k); n <= 64; ++n) {
      const auto label = std::string(name(k)) + " n=" + std::to_string(n);
      const auto a = build_matrix(k, n).entries();
      const double N = static_cast<double>(n);
      if (n >= (k == TransformKind::dct1 ? 5u : 3u)) {
        const double c = ss::v1_square_eigenvalue(k, n);
        for (const auto &v : ss::v1_basis(k, n).vectors) {
          const auto aav = dtt::apply(a, dtt::apply(a, v));
          double r = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            r = std::max(r, std::abs(aav[i] - c * v[i]));
          o.require(r <= 1e-9 * N, label + fmt(": V1 residual %.3g", r));
          ++checks;
        }
      }
      for (auto qc : ss::q_cases(k, n)) {
        const auto fit = ss::fit_action(a, ss::q_pair(qc, n));
        const auto want = ss::expected_action_coeffs(qc, n);
        const double dev = std::max({std::abs(fit.coeffs.a - want.a),
                                     std::abs(fit.coeffs.b - want.b),
                                     std::abs(fit.coeffs.c - want.c),
                                     std::abs(fit.coeffs.d - want.d)});
        o.require(fit.residual <= 1e-9 * N,
                  label + " " + std::string(ss::name(qc)) + fmt(": span residual %.3g", fit.residual));
        o.require(dev <= 1e-9,
                  label + " " + std::string(ss::name(qc)) + fmt(": coefficients off by %.3g", dev));
        ++checks;
      }
      if (!ss::has_analytic_eigenvectors(k, n))
        continue;
      for (const auto &e : ss::analytic_eigenvectors(k, n)) {
        const auto av = dtt::apply(a, e.vector);
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          r = std::max(r, std::abs(av[i] - e.value * e.vector[i]));
        o.require(r <= 1e-9 * N * max_abs(e.vector),
                  label + fmt(": eigenvector residual %.3g at %.6g", r, e.value));
        ++checks;
      }
    }
  }
  // odd-n and even-n V3 relations, checked directly
  const auto odd = ss::fit_action(build_matrix(TransformKind::dct1, 9).entries(),
                                  ss::q_pair(ss::QCase::dct1_odd_V3, 9));
  o.require(std::abs(odd.coeffs.c - 3.0) <= 1e-9 && std::abs(odd.coeffs.d + 1.0) <= 1e-9,
            "odd V3 second relation");
  const auto even = ss::fit_action(build_matrix(TransformKind::dct1, 10).entries(),
                                   ss::q_pair(ss::QCase::dct1_even_V3, 10));
  o.require(std::abs(even.coeffs.c - 8.0 * (1.0 - std::sqrt(2.0) / 2.0)) <= 1e-9,
            "even V3 third coefficient");
  if (o.ok)
    o.note = fmt("%lld checks", checks);
  return o;
}

Outcome closure_suite() {
  Outcome o;
  double worst = 0.0;
  for (auto k : all_kinds) {
    for (std::size_t n = min_size(k); n <= 256; ++n) {
      const auto spec = analytic_spectrum(k, n);
      const auto a = build_matrix(k, n).entries();
      double square_diag = 0.0; // sum of diag(A^2) for symmetric A
      for (double x : a.data())
        square_diag += x * x;
      const double d1 = std::abs(spec.trace() - trace_closed_form(k, n).value);
      const double d2 = std::abs(spec.sum_of_squares() - square_diag);
      worst = std::max({worst, d1 / n, d2 / n});
      o.require(d1 <= 1e-9 * n, std::string(name(k)) + fmt(" n=%zu trace closure %.3g", n, d1));
      o.require(d2 <= 1e-9 * n,
                std::string(name(k)) + fmt(" n=%zu square closure %.3g", n, d2));
    }
  }
  if (o.ok)
    o.note = fmt("worst deviation / n = %.3g", worst);
  return o;
}

//------------------------------------------------------------------------------
struct ProcessResult {
  int code;
  std::string out;
};

ProcessResult run_tool(const std::string &tool, const std::vector<std::string> &args) {
  if (tool.empty()) {
    std::vector<const char *> argv{"dtt"};
    for (const auto &a : args)
      argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str()};
  }
  std::string cmd = "'" + tool + "'";
  for (const auto &a : args)
    cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_suite(const std::string &tool) {
  Outcome o;
  const auto gate = run_tool(tool, {"verify", "--all", "--n-max", "16", "--format", "json"});
  o.require(gate.code == 0, fmt("verify gate exited %d", gate.code));
  const auto doc = nlohmann::json::parse(gate.out);
  const auto failed = doc["results"]["summary"]["failed"].get<long long>();
  o.require(failed == 0, fmt("%lld failed claims", failed));
  o.require(doc.dump(2) + "\n" == gate.out, "verify json does not round-trip");
  for (const auto &key : {"tool_version", "command", "params", "results"})
    o.require(doc.contains(key), std::string("missing key ") + key);

  for (auto kind : all_kinds) {
    const std::size_t n = kind == TransformKind::dct1 ? 9 : 7;
    const auto r = run_tool(tool, {"spectrum", "--kind", std::string(name(kind)), "--n",
                                   std::to_string(n), "--format", "json"});
    o.require(r.code == 0, "spectrum exited non-zero");
    o.require(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out,
              "spectrum json does not round-trip for " + std::string(name(kind)));
  }

  const std::vector<std::pair<std::vector<std::string>, int>> crafted{
      {{"matrix", "--kind", "dct1", "--n", "1"}, 2},
      {{"matrix", "--kind", "dct7", "--n", "4"}, 2},
      {{"matrix", "--kind", "dct4", "--n", "four"}, 2},
      {{"spectrum", "--kind", "dst8"}, 2},
      {{"verify", "--n-min", "5", "--n-max", "4"}, 2},
      {{"verify", "--all", "--format", "yaml"}, 2},
      {{"identities", "--max-m", "0"}, 2},
      {{"identities", "--max-m", "-7"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
      {{"verify", "--kind", "dct1", "--n-min", "2", "--n-max", "2"}, 0},
      {{"identities", "--max-m", "1"}, 0},
  };
  for (const auto &[args, want] : crafted) {
    const auto r = run_tool(tool, args);
    std::string joined;
    for (const auto &a : args)
      joined += " " + a;
    o.require(r.code == want, fmt("'%s' exited %d, expected %d", joined.c_str(), r.code, want));
  }
  if (o.ok)
    o.note = fmt("%zu claims, %s", doc["results"]["claims"].size(),
                 tool.empty() ? "in-process" : "child process");
  return o;
}

} // namespace

int main(int argc, char **argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  int failures = 0;
  failures += run_criterion(1, "identity suite", 10, identity_suite);
  failures += run_criterion(2, "square reproduction", 30, square_suite);
  failures += run_criterion(3, "trace reproduction", 5, trace_suite);
  failures += run_criterion(4, "spectrum reproduction", 60, spectrum_suite);
  failures += run_criterion(5, "subspace relations", 20, subspace_suite);
  failures += run_criterion(6, "consistency closures", 0, closure_suite);
  failures += run_criterion(7, "cli end-to-end", 0, [&] { return cli_suite(tool); });
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
