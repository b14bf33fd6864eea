#include "dtt/trig_sums.hpp"

#include "dtt/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dtt::trig_sums {

namespace {

bool is_odd(std::int64_t a) { return a % 2 != 0; }

void require_positive(std::int64_t n, const char *what) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be >= 1, got " + std::to_string(n));
  }
}

void require_not_divisible(IdentityId id, std::int64_t n, std::int64_t a) {
  require_positive(n, "n");
  const auto d = *forbidden_divisor(id, n);
  if (a % d == 0) {
    throw Error(ErrorCode::DivisibilityViolation,
                std::string(name(id)) + ": " + std::to_string(d) +
                    " divides a = " + std::to_string(a));
  }
}

// Term m of every Lagrange-type sum is cos((first + m * step) * pi / denom).
struct Progression {
  std::int64_t denom;
  std::int64_t first;
  std::int64_t step;
  std::int64_t count;
};

Progression progression(IdentityId id, std::int64_t n, std::int64_t a) {
  switch (id) {
  case IdentityId::Lag1:
    return {n, 0, a, n + 1};
  case IdentityId::Lag2:
    return {2 * n + 1, 0, 2 * a, n + 1};
  case IdentityId::Id1:
    return {2 * n, a, 2 * a, n};
  case IdentityId::Id2:
    return {2 * n + 1, a, 2 * a, n};
  case IdentityId::Id3:
    return {n + 1, a, a, n};
  case IdentityId::Id4:
    return {2 * n + 1, 2 * a, 2 * a, n};
  default:
    throw Error(ErrorCode::InvalidArgument, "not a Lagrange-type identity");
  }
}

std::int64_t angle_denominator(IdentityId id, std::int64_t n) {
  return is_gauss(id) ? n : progression(id, n, 1).denom;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const auto r = x % m;
  return r < 0 ? r + m : r;
}

} // namespace

std::string_view name(IdentityId id) {
  switch (id) {
  case IdentityId::Lag1:
    return "Lag1";
  case IdentityId::Lag2:
    return "Lag2";
  case IdentityId::Id1:
    return "Id1";
  case IdentityId::Id2:
    return "Id2";
  case IdentityId::Id3:
    return "Id3";
  case IdentityId::Id4:
    return "Id4";
  case IdentityId::GaussCos:
    return "GaussCos";
  case IdentityId::GaussSin:
    return "GaussSin";
  }
  return "?";
}

bool is_gauss(IdentityId id) {
  return id == IdentityId::GaussCos || id == IdentityId::GaussSin;
}

std::optional<std::int64_t> forbidden_divisor(IdentityId id, std::int64_t n) {
  switch (id) {
  case IdentityId::Lag1:
  case IdentityId::Id1:
    return 2 * n;
  case IdentityId::Lag2:
  case IdentityId::Id2:
  case IdentityId::Id4:
    return 2 * n + 1;
  case IdentityId::Id3:
    return 2 * n + 2;
  default:
    return std::nullopt;
  }
}

std::int64_t term_count(IdentityId id, std::int64_t n) {
  switch (id) {
  case IdentityId::Lag1:
  case IdentityId::Lag2:
    return n + 1;
  default:
    return n;
  }
}

bool admissible(IdentityId id, const SumParams &params) {
  if (params.n < 1)
    return false;
  const auto d = forbidden_divisor(id, params.n);
  return !d || params.a % *d != 0;
}

//------------------------------------------------------------------------------
double lag1(std::int64_t n, std::int64_t a) {
  require_not_divisible(IdentityId::Lag1, n, a);
  return is_odd(a) ? 0.0 : 1.0;
}

double lag2(std::int64_t n, std::int64_t b) {
  require_not_divisible(IdentityId::Lag2, n, b);
  return 0.5;
}

double id1(std::int64_t n, std::int64_t a) {
  require_not_divisible(IdentityId::Id1, n, a);
  return 0.0;
}

double id2(std::int64_t n, std::int64_t a) {
  require_not_divisible(IdentityId::Id2, n, a);
  return is_odd(a) ? 0.5 : -0.5;
}

double id3(std::int64_t n, std::int64_t a) {
  require_not_divisible(IdentityId::Id3, n, a);
  return is_odd(a) ? 0.0 : -1.0;
}

double id4(std::int64_t n, std::int64_t a) {
  require_not_divisible(IdentityId::Id4, n, a);
  return -0.5;
}

namespace {
// cos(m pi / 2) and sin(m pi / 2), exactly.
struct QuarterTurn {
  double cos;
  double sin;
};

QuarterTurn quarter_turn(std::int64_t m) {
  switch (m % 4) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}
} // namespace

double gauss_cos(std::int64_t m) {
  require_positive(m, "m");
  const auto q = quarter_turn(m);
  return std::sqrt(static_cast<double>(m)) / 2.0 * (1.0 + q.cos + q.sin);
}

double gauss_sin(std::int64_t m) {
  require_positive(m, "m");
  const auto q = quarter_turn(m);
  return std::sqrt(static_cast<double>(m)) / 2.0 * (1.0 + q.cos - q.sin);
}

double closed_form(IdentityId id, const SumParams &p) {
  switch (id) {
  case IdentityId::Lag1:
    return lag1(p.n, p.a);
  case IdentityId::Lag2:
    return lag2(p.n, p.a);
  case IdentityId::Id1:
    return id1(p.n, p.a);
  case IdentityId::Id2:
    return id2(p.n, p.a);
  case IdentityId::Id3:
    return id3(p.n, p.a);
  case IdentityId::Id4:
    return id4(p.n, p.a);
  case IdentityId::GaussCos:
    return gauss_cos(p.n);
  case IdentityId::GaussSin:
    return gauss_sin(p.n);
  }
  return 0.0;
}

//------------------------------------------------------------------------------
DirectSummer::DirectSummer(IdentityId id, std::int64_t n)
    : id_(id), n_(n), denom_(0) {
  require_positive(n, is_gauss(id) ? "m" : "n");
  denom_ = angle_denominator(id, n);
  const auto period = 2 * denom_;
  constexpr double pi = std::numbers::pi;
  cos_table_.resize(static_cast<std::size_t>(period));
  for (std::int64_t j = 0; j < period; ++j)
    cos_table_[j] = std::cos(pi * static_cast<double>(j) / denom_);
  if (id == IdentityId::GaussSin) {
    sin_table_.resize(static_cast<std::size_t>(period));
    for (std::int64_t j = 0; j < period; ++j)
      sin_table_[j] = std::sin(pi * static_cast<double>(j) / denom_);
  }
}

double DirectSummer::sum(std::int64_t a) const {
  const auto period = 2 * denom_;
  double s = 0.0;
  if (is_gauss(id_)) {
    // angle 2 k^2 pi / m
    const auto &table = id_ == IdentityId::GaussCos ? cos_table_ : sin_table_;
    for (std::int64_t k = 0; k < n_; ++k)
      s += table[floor_mod(2 * ((k * k) % n_), period)];
    return s;
  }
  require_not_divisible(id_, n_, a);
  const auto p = progression(id_, n_, a);
  auto j = floor_mod(p.first, period);
  const auto step = floor_mod(p.step, period);
  auto next = [&] {
    const double c = cos_table_[j];
    j += step;
    const auto wrapped = j - period;
    j = wrapped >= 0 ? wrapped : j;
    return c;
  };
  // four independent partial sums
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::int64_t m = 0;
  for (; m + 4 <= p.count; m += 4) {
    s += next();
    s1 += next();
    s2 += next();
    s3 += next();
  }
  for (; m < p.count; ++m)
    s += next();
  return (s + s1) + (s2 + s3);
}

double direct_sum(IdentityId id, const SumParams &params) {
  return DirectSummer(id, params.n).sum(params.a);
}

} // namespace dtt::trig_sums
