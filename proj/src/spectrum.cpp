#include "dtt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dtt {

using exact::Rational;
using exact::Surd;

double SpectrumSpec::trace() const {
  double t = 0.0;
  for (const auto &p : pairs)
    t += p.value * static_cast<double>(p.multiplicity);
  return t;
}

double SpectrumSpec::sum_of_squares() const {
  double t = 0.0;
  for (const auto &p : pairs)
    t += p.value * p.value * static_cast<double>(p.multiplicity);
  return t;
}

namespace {

struct Offset {
  Surd exact;
  double value;
};

Offset rational_offset(std::int64_t num, std::int64_t den) {
  return {Surd(Rational(num, den)),
          static_cast<double>(num) / static_cast<double>(den)};
}

Offset no_offset() { return {Surd(), 0.0}; }

// offset + sign * sqrt(num / den)
EigenPair row(const Offset &offset, int sign, std::int64_t num,
              std::int64_t den, long long multiplicity) {
  const Rational radicand(num, den);
  const double root =
      std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  Surd e = Surd::sqrt(radicand);
  if (sign < 0)
    e = -e;
  return {offset.value + sign * root, multiplicity, offset.exact + e};
}

// +/- sqrt(num/den) with the two-eigenvalue multiplicity split.
std::vector<EigenPair> symmetric_pair(std::int64_t n, std::int64_t num,
                                      std::int64_t den) {
  const bool even = n % 2 == 0;
  const long long negative = even ? n / 2 : (n - 1) / 2;
  const long long positive = even ? n / 2 : (n + 1) / 2;
  return {row(no_offset(), -1, num, den, negative),
          row(no_offset(), +1, num, den, positive)};
}

// Four-eigenvalue families: offset -/+ sqrt(n - 7/16) simple, and
// -/+ sqrt((2n-1)/4) with multiplicities (m, p).
std::vector<EigenPair> four_value_family(std::int64_t n, const Offset &offset) {
  const bool even = n % 2 == 0;
  const long long m = even ? n / 2 - 1 : (n - 3) / 2;
  const long long p = even ? n / 2 - 1 : (n - 1) / 2;
  return {row(offset, -1, 16 * n - 7, 16, 1),
          row(no_offset(), -1, 2 * n - 1, 4, m),
          row(no_offset(), +1, 2 * n - 1, 4, p),
          row(offset, +1, 16 * n - 7, 16, 1)};
}

std::vector<EigenPair> dct1_table(std::int64_t n) {
  if (n % 2 != 0) {
    const auto half = rational_offset(1, 2);
    return {row(no_offset(), -1, n - 1, 1, 1),
            row(half, -1, 4 * n - 3, 4, 1),
            row(no_offset(), -1, n - 1, 2, (n - 5) / 2),
            row(no_offset(), +1, n - 1, 2, (n - 3) / 2),
            row(no_offset(), +1, n - 1, 1, 1),
            row(half, +1, 4 * n - 3, 4, 1)};
  }
  // +/- sqrt(2)/4
  const Offset plus{Rational(1, 4) * Surd::sqrt(Rational(2)),
                    std::sqrt(2.0) / 4.0};
  const Offset minus{-plus.exact, -plus.value};
  const long long mid = n / 2 - 2;
  return {row(minus, -1, 8 * n - 7, 8, 1),
          row(plus, -1, 8 * n - 7, 8, 1),
          row(no_offset(), -1, n - 1, 2, mid),
          row(no_offset(), +1, n - 1, 2, mid),
          row(minus, +1, 8 * n - 7, 8, 1),
          row(plus, +1, 8 * n - 7, 8, 1)};
}

} // namespace

std::vector<EigenPair> spectrum_table(TransformKind kind, std::size_t n) {
  require_admissible(kind, n);
  const auto N = static_cast<std::int64_t>(n);
  switch (kind) {
  case TransformKind::dct4:
  case TransformKind::dst4:
    return symmetric_pair(N, N, 2);
  case TransformKind::dct8:
  case TransformKind::dst5:
    return symmetric_pair(N, 2 * N + 1, 4);
  case TransformKind::dst1:
    return symmetric_pair(N, N + 1, 2);
  case TransformKind::dct5:
    return four_value_family(N, rational_offset(1, 4));
  case TransformKind::dst8:
    // -(-1)^n / 4
    return four_value_family(N, rational_offset(N % 2 == 0 ? -1 : 1, 4));
  case TransformKind::dct1:
    return dct1_table(N);
  }
  return {};
}

SpectrumSpec analytic_spectrum(TransformKind kind, std::size_t n) {
  SpectrumSpec spec{kind, n, {}, false};
  for (auto &r : spectrum_table(kind, n)) {
    auto same = std::find_if(spec.pairs.begin(), spec.pairs.end(),
                             [&](const EigenPair &p) { return p.exact == r.exact; });
    if (same == spec.pairs.end()) {
      spec.pairs.push_back(std::move(r));
    } else {
      same->multiplicity += r.multiplicity;
      spec.merged = true;
    }
  }
  std::erase_if(spec.pairs, [](const EigenPair &p) { return p.multiplicity == 0; });
  std::sort(spec.pairs.begin(), spec.pairs.end(),
            [](const EigenPair &a, const EigenPair &b) { return a.value < b.value; });

  const auto where = std::string(name(kind)) + " n=" + std::to_string(n);
  long long total = 0;
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const auto &p = spec.pairs[i];
    if (p.multiplicity < 0) {
      throw Error(ErrorCode::DegenerateSpectrum,
                  where + ": negative multiplicity for " + p.exact.to_string());
    }
    if (i > 0 && !(spec.pairs[i - 1].value < p.value)) {
      throw Error(ErrorCode::DegenerateSpectrum,
                  where + ": eigenvalues not strictly increasing");
    }
    total += p.multiplicity;
  }
  if (total != static_cast<long long>(n)) {
    throw Error(ErrorCode::DegenerateSpectrum,
                where + ": multiplicities sum to " + std::to_string(total));
  }
  return spec;
}

std::size_t distinct_eigenvalue_count(TransformKind kind, std::size_t n) {
  return analytic_spectrum(kind, n).pairs.size();
}

} // namespace dtt
