#include "dtt/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace dtt;

namespace {
std::size_t count_id(const std::vector<Claim> &claims, ClaimId id) {
  return static_cast<std::size_t>(std::count_if(
      claims.begin(), claims.end(), [&](const Claim &c) { return c.id == id; }));
}

bool same(const Claim &a, const Claim &b) {
  return a.id == b.id && a.kind == b.kind && a.n == b.n && a.detail == b.detail &&
         (a.measured == b.measured || (std::isnan(a.measured) && std::isnan(b.measured))) &&
         a.tolerance == b.tolerance && a.passed == b.passed;
}
} // namespace

TEST_CASE("claims pass exactly when measured is within tolerance") {
  CHECK(make_claim(ClaimId::TraceForm, TransformKind::dct4, 3, "", 1e-12, 1e-12).passed);
  CHECK_FALSE(make_claim(ClaimId::TraceForm, TransformKind::dct4, 3, "", 2e-12, 1e-12).passed);
  CHECK_FALSE(make_claim(ClaimId::TraceForm, std::nullopt, 3, "", NAN, 1.0).passed);
}

TEST_CASE("verify_kind sample cells") {
  auto claims = verify_kind(TransformKind::dst4, 7);
  CHECK(std::all_of(claims.begin(), claims.end(), [](auto &c) { return c.passed; }));
  CHECK(count_id(claims, ClaimId::SquareForm) == 1);
  CHECK(count_id(claims, ClaimId::TraceForm) == 1);
  CHECK(count_id(claims, ClaimId::Spectrum) == 1);
  CHECK(count_id(claims, ClaimId::Multiplicities) == 1);
  CHECK(count_id(claims, ClaimId::QInvariance) == 0);

  claims = verify_kind(TransformKind::dct5, 6);
  CHECK(std::all_of(claims.begin(), claims.end(), [](auto &c) { return c.passed; }));
  CHECK(count_id(claims, ClaimId::V1Action) == 1);
  CHECK(count_id(claims, ClaimId::QInvariance) == 2);
  CHECK(count_id(claims, ClaimId::EigvecResidual) == 4);

  claims = verify_kind(TransformKind::dct1, 2);
  CHECK(std::all_of(claims.begin(), claims.end(), [](auto &c) { return c.passed; }));
  const auto spectrum = std::find_if(claims.begin(), claims.end(),
                                     [](auto &c) { return c.id == ClaimId::Spectrum; });
  REQUIRE(spectrum != claims.end());
  CHECK(spectrum->detail.find("merged") != std::string::npos);

  CHECK_THROWS_AS(verify_kind(TransformKind::dct1, 1), Error);
}

TEST_CASE("tight tolerances turn into failing claims, not errors") {
  Tolerances tol;
  tol.square = 0.0;
  tol.trace = 0.0;
  const auto claims = verify_kind(TransformKind::dct4, 5, tol);
  bool some_failed = false;
  for (const auto &c : claims)
    some_failed = some_failed || !c.passed;
  CHECK(some_failed);
  for (const auto &c : claims)
    CHECK(c.measured >= 0.0);
}

TEST_CASE("sweep") {
  const std::vector<TransformKind> all(all_kinds.begin(), all_kinds.end());
  const auto report = sweep(all, 1, 16);
  CHECK(report.failed_count() == 0);
  CHECK_FALSE(report.stopped_early);
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.skipped[0].kind == TransformKind::dct1);
  CHECK(report.skipped[0].n == 1);
  CHECK(report.merged.size() == 4);

  std::size_t tallied = 0;
  for (const auto &[key, t] : report.by_id)
    tallied += t.total;
  CHECK(tallied == report.claims.size());
  tallied = 0;
  for (const auto &[key, t] : report.by_kind)
    tallied += t.total;
  CHECK(tallied == report.claims.size());

  // completeness per admissible cell
  for (auto k : all_kinds) {
    for (std::size_t n = min_size(k); n <= 16; ++n) {
      std::vector<Claim> cell;
      for (const auto &c : report.claims)
        if (c.kind == k && c.n == n)
          cell.push_back(c);
      CHECK(count_id(cell, ClaimId::SquareForm) == 1);
      CHECK(count_id(cell, ClaimId::TraceForm) == 1);
      CHECK(count_id(cell, ClaimId::Spectrum) == 1);
      CHECK(count_id(cell, ClaimId::Multiplicities) == 1);
      const bool decomposed = k == TransformKind::dct1 || k == TransformKind::dct5 ||
                              k == TransformKind::dst8;
      if (!decomposed) {
        CHECK(count_id(cell, ClaimId::QInvariance) == 0);
        CHECK(count_id(cell, ClaimId::V1Action) == 0);
        CHECK(count_id(cell, ClaimId::EigvecResidual) == 0);
      } else if (n >= 6) {
        CHECK(count_id(cell, ClaimId::QInvariance) > 0);
        CHECK(count_id(cell, ClaimId::V1Action) == 1);
        CHECK(count_id(cell, ClaimId::EigvecResidual) > 0);
      }
    }
  }

  const auto again = sweep(all, 1, 16);
  REQUIRE(again.claims.size() == report.claims.size());
  for (std::size_t i = 0; i < again.claims.size(); ++i)
    CHECK(same(again.claims[i], report.claims[i]));
}

TEST_CASE("sweep edge cases") {
  const auto one = sweep({TransformKind::dct1}, 2, 2);
  CHECK(count_id(one.claims, ClaimId::Spectrum) == 1);
  REQUIRE(one.merged.size() == 1);
  CHECK(one.failed_count() == 0);

  const auto empty = sweep({}, 1, 16);
  CHECK(empty.claims.empty());
  CHECK(empty.by_id.empty());
  CHECK(empty.by_kind.empty());
  CHECK(empty.failed_count() == 0);

  CHECK_THROWS_AS(sweep({TransformKind::dct4}, 5, 4), Error);

  Tolerances strict;
  strict.trace = 0.0;
  const auto ff = sweep({TransformKind::dct1, TransformKind::dct5}, 3, 12, strict, true);
  CHECK(ff.stopped_early);
  CHECK(ff.failed_count() == 1);
  CHECK_FALSE(ff.claims.back().passed);
}

TEST_CASE("identity claims") {
  Tolerances tol;
  tol.identity_max_param = 6;
  const auto claims = verify_identities(tol);
  CHECK(claims.size() == 8 * 6);
  for (const auto &c : claims) {
    CHECK(c.passed);
    CHECK_FALSE(c.kind);
  }
}
