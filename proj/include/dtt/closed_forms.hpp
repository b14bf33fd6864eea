#pragma once

#include "dtt/core.hpp"

#include <string_view>

namespace dtt {

/// Structured part of a squared transform matrix. Each pattern is a full n x n
/// matrix, diagonal included:
///   None            -> 0
///   AllOnesHalf     -> 1/2 everywhere
///   ParityP         -> (1 + (-1)^(k+l)) / 2
///   AlternatingHalf -> (-1)^(k+l) / 2
enum class PerturbationPattern { None, AllOnesHalf, ParityP, AlternatingHalf };

std::string_view name(PerturbationPattern p);
double perturbation_entry(PerturbationPattern p, std::size_t k, std::size_t l);

/// A^2 = diag(diagonal) + pattern.
struct SquareClosedForm {
  TransformKind kind;
  std::size_t n;
  Vector diagonal;
  PerturbationPattern perturbation;
};

SquareClosedForm square_closed_form(TransformKind kind, std::size_t n);
Matrix materialize(const SquareClosedForm &form);
/// Sum of the diagonal of the materialized square.
double square_trace(const SquareClosedForm &form);

struct TraceValue {
  TransformKind kind;
  std::size_t n;
  double value;
};

TraceValue trace_closed_form(TransformKind kind, std::size_t n);

} // namespace dtt
