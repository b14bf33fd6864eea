#include "dtt/closed_forms.hpp"

#include <cmath>

namespace dtt {

std::string_view name(PerturbationPattern p) {
  switch (p) {
  case PerturbationPattern::None:
    return "none";
  case PerturbationPattern::AllOnesHalf:
    return "all_ones_half";
  case PerturbationPattern::ParityP:
    return "parity";
  case PerturbationPattern::AlternatingHalf:
    return "alternating_half";
  }
  return "?";
}

double perturbation_entry(PerturbationPattern p, std::size_t k, std::size_t l) {
  const bool even = (k + l) % 2 == 0;
  switch (p) {
  case PerturbationPattern::None:
    return 0.0;
  case PerturbationPattern::AllOnesHalf:
    return 0.5;
  case PerturbationPattern::ParityP:
    return even ? 1.0 : 0.0;
  case PerturbationPattern::AlternatingHalf:
    return even ? 0.5 : -0.5;
  }
  return 0.0;
}

namespace {
// Rationals are formed from integers and divided once.
double ratio(std::size_t num, double den) {
  return static_cast<double>(num) / den;
}
} // namespace

SquareClosedForm square_closed_form(TransformKind kind, std::size_t n) {
  require_admissible(kind, n);
  SquareClosedForm f{kind, n, Vector(n, 0.0), PerturbationPattern::None};
  auto &d = f.diagonal;
  switch (kind) {
  case TransformKind::dct4:
  case TransformKind::dst4:
    d.assign(n, ratio(n, 2.0));
    break;
  case TransformKind::dst1:
    d.assign(n, ratio(n + 1, 2.0));
    break;
  case TransformKind::dct8:
  case TransformKind::dst5:
    d.assign(n, ratio(2 * n + 1, 4.0));
    break;
  case TransformKind::dct1:
    // diag(n-1, (n-1)/2, ..., (n-1)/2, n-1) + P
    d.assign(n, ratio(n - 1, 2.0));
    d.front() = static_cast<double>(n - 1);
    d.back() = static_cast<double>(n - 1);
    f.perturbation = PerturbationPattern::ParityP;
    break;
  case TransformKind::dct5:
    // diag((2n-1)/2, (2n-1)/4, ..., (2n-1)/4) + (1/2) ones
    d.assign(n, ratio(2 * n - 1, 4.0));
    d.front() = ratio(2 * n - 1, 2.0);
    f.perturbation = PerturbationPattern::AllOnesHalf;
    break;
  case TransformKind::dst8:
    // diag((2n-1)/4, ..., (2n-1)/4, (2n-1)/2) + (1/2) (-1)^(k+l)
    d.assign(n, ratio(2 * n - 1, 4.0));
    d.back() = ratio(2 * n - 1, 2.0);
    f.perturbation = PerturbationPattern::AlternatingHalf;
    break;
  }
  return f;
}

Matrix materialize(const SquareClosedForm &form) {
  Matrix m(form.n);
  for (std::size_t k = 0; k < form.n; ++k) {
    for (std::size_t l = 0; l < form.n; ++l)
      m(k, l) = perturbation_entry(form.perturbation, k, l);
    m(k, k) += form.diagonal[k];
  }
  return m;
}

double square_trace(const SquareClosedForm &form) {
  double t = 0.0;
  for (std::size_t k = 0; k < form.n; ++k)
    t += form.diagonal[k] + perturbation_entry(form.perturbation, k, k);
  return t;
}

//------------------------------------------------------------------------------
TraceValue trace_closed_form(TransformKind kind, std::size_t n) {
  require_admissible(kind, n);
  const bool even = n % 2 == 0;
  const double N = static_cast<double>(n);
  double t = 0.0;
  switch (kind) {
  case TransformKind::dct1:
    t = even ? 0.0 : (2.0 + std::sqrt(2.0 * N - 2.0)) / 2.0;
    break;
  case TransformKind::dct4:
  case TransformKind::dst4:
    t = even ? 0.0 : std::sqrt(N / 2.0);
    break;
  case TransformKind::dct5:
    t = even ? 0.5 : (1.0 + std::sqrt(2.0 * N - 1.0)) / 2.0;
    break;
  case TransformKind::dct8:
  case TransformKind::dst5:
    t = even ? 0.0 : std::sqrt(2.0 * N + 1.0) / 2.0;
    break;
  case TransformKind::dst1:
    t = even ? 0.0 : std::sqrt((N + 1.0) / 2.0);
    break;
  case TransformKind::dst8:
    t = even ? -0.5 : (1.0 + std::sqrt(2.0 * N - 1.0)) / 2.0;
    break;
  }
  return {kind, n, t};
}

} // namespace dtt
