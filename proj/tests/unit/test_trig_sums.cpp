#include "dtt/trig_sums.hpp"
#include "dtt/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace dtt;
using namespace dtt::trig_sums;

namespace {
ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}
} // namespace

TEST_CASE("closed forms at sample points") {
  CHECK(lag1(4, 2) == 1.0);
  CHECK(lag1(4, 3) == 0.0);
  CHECK(lag1(5, 7) == 0.0);
  CHECK(lag2(2, 1) == 0.5);
  CHECK(lag2(3, 8) == 0.5);
  CHECK(id1(3, 1) == 0.0);
  CHECK(id2(3, 2) == -0.5);
  CHECK(id4(4, 5) == -0.5);
  CHECK(id3(3, 2) == -1.0);
  CHECK(id3(3, 1) == 0.0);
}

TEST_CASE("divisibility violations") {
  CHECK(code_of([] { lag2(1, 3); }) == ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { lag1(3, 12); }) == ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { id1(2, 0); }) == ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { id3(2, -6); }) == ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { direct_sum(IdentityId::Id2, {3, 7}); }) ==
        ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { lag1(0, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { gauss_cos(0); }) == ErrorCode::InvalidArgument);
  CHECK_FALSE(admissible(IdentityId::Id4, {4, 9}));
  CHECK(admissible(IdentityId::Id4, {4, 5}));
  CHECK(admissible(IdentityId::GaussSin, {5, 0}));
}

TEST_CASE("gauss sums") {
  CHECK(gauss_cos(1) == 1.0);
  CHECK(gauss_cos(4) == 2.0);
  CHECK(gauss_cos(8) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(gauss_sin(1) == 0.0);
  // m = 0 mod 4: cos(m pi/2) = 1, so both sums equal sqrt(m)
  CHECK(gauss_sin(4) == 2.0);
  CHECK(gauss_sin(12) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  CHECK(std::abs(direct_sum(IdentityId::GaussSin, {4, 0}) - 2.0) < 1e-12);
  // m = 2 mod 4 gives zero for both
  CHECK(gauss_cos(6) == 0.0);
  CHECK(gauss_sin(6) == 0.0);
  CHECK(gauss_cos(5) == doctest::Approx(std::sqrt(5.0)));
  CHECK(gauss_sin(5) == 0.0);
  CHECK(gauss_cos(7) == 0.0);
  CHECK(gauss_sin(7) == doctest::Approx(std::sqrt(7.0)));
}

TEST_CASE("direct summation oracle") {
  CHECK(direct_sum(IdentityId::Lag1, {4, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(direct_sum(IdentityId::GaussCos, {4, 0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(direct_sum(IdentityId::Id3, {3, 2}) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(direct_sum(IdentityId::Lag1, {5, 7})) < 1e-12);
  CHECK(direct_sum(IdentityId::Id4, {4, 5}) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(direct_sum(IdentityId::Lag2, {3, 8}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("oracle matches a naive libm summation") {
  const double pi = std::acos(-1.0);
  for (std::int64_t n = 1; n <= 9; ++n) {
    for (std::int64_t a = -20; a <= 20; ++a) {
      if (a % (2 * n + 1) == 0)
        continue;
      double s = 0.0;
      for (std::int64_t m = 0; m < n; ++m)
        s += std::cos((2.0 * m + 1.0) * a * pi / (2.0 * n + 1.0));
      CHECK(direct_sum(IdentityId::Id2, {n, a}) == doctest::Approx(s).epsilon(1e-12));
    }
  }
  for (std::int64_t m = 1; m <= 20; ++m) {
    double c = 0.0, s = 0.0;
    for (std::int64_t k = 0; k < m; ++k) {
      c += std::cos(2.0 * k * k * pi / m);
      s += std::sin(2.0 * k * k * pi / m);
    }
    CHECK(std::abs(direct_sum(IdentityId::GaussCos, {m, 0}) - c) < 1e-12);
    CHECK(std::abs(direct_sum(IdentityId::GaussSin, {m, 0}) - s) < 1e-12);
  }
}

TEST_CASE("identities hold over a small lattice") {
  for (auto id : all_identities) {
    for (std::int64_t n = 1; n <= 24; ++n) {
      const DirectSummer oracle(id, n);
      const double tol = 1e-10 * static_cast<double>(term_count(id, n));
      if (is_gauss(id)) {
        CHECK(std::abs(closed_form(id, {n, 0}) - oracle.sum(0)) <= tol);
        continue;
      }
      const auto d = *forbidden_divisor(id, n);
      for (std::int64_t a = -4 * d; a <= 4 * d; ++a) {
        if (a % d == 0)
          continue;
        CHECK(std::abs(closed_form(id, {n, a}) - oracle.sum(a)) <= tol);
      }
    }
  }
}

TEST_CASE("term counts and moduli") {
  CHECK(term_count(IdentityId::Lag1, 4) == 5);
  CHECK(term_count(IdentityId::Lag2, 4) == 5);
  CHECK(term_count(IdentityId::Id3, 4) == 4);
  CHECK(term_count(IdentityId::GaussCos, 9) == 9);
  CHECK(*forbidden_divisor(IdentityId::Lag1, 4) == 8);
  CHECK(*forbidden_divisor(IdentityId::Id3, 4) == 10);
  CHECK(*forbidden_divisor(IdentityId::Id4, 4) == 9);
  CHECK_FALSE(forbidden_divisor(IdentityId::GaussSin, 4));
}

TEST_CASE("oracle is periodic in a") {
  for (auto id : all_identities) {
    if (is_gauss(id))
      continue;
    for (std::int64_t n = 1; n <= 12; ++n) {
      const DirectSummer oracle(id, n);
      const auto p = oracle.index_period();
      const auto d = *forbidden_divisor(id, n);
      for (std::int64_t a = -p; a <= p; ++a) {
        if (a % d == 0)
          continue;
        CHECK(oracle.sum(a) == oracle.sum(a + p));
        CHECK(oracle.sum(a) == oracle.sum(a - 3 * p));
      }
    }
  }
}
