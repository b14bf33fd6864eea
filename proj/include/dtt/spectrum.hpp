#pragma once

#include "dtt/core.hpp"
#include "dtt/surd.hpp"

#include <string>
#include <vector>

namespace dtt {

/// One distinct eigenvalue. `value` is evaluated from its radical expression
/// directly; `exact` is the same number in canonical surd form.
struct EigenPair {
  double value;
  long long multiplicity;
  exact::Surd exact;
};

/// Analytic spectrum, pairs strictly ascending by value, multiplicities >= 1
/// and summing to n.
struct SpectrumSpec {
  TransformKind kind;
  std::size_t n;
  std::vector<EigenPair> pairs;
  /// True when two table rows coincided exactly and were combined.
  bool merged = false;

  double trace() const;          // sum of value * multiplicity
  double sum_of_squares() const; // sum of value^2 * multiplicity
};

/// Raw table rows, before merging. Multiplicities may be zero or negative for
/// small n.
std::vector<EigenPair> spectrum_table(TransformKind kind, std::size_t n);

/// Eigenvalues and multiplicities for any admissible n. Rows whose exact values
/// coincide are merged by adding their multiplicities; rows with zero
/// multiplicity are dropped. Throws DegenerateSpectrum if the result has a
/// negative multiplicity or does not account for all n eigenvalues.
SpectrumSpec analytic_spectrum(TransformKind kind, std::size_t n);

std::size_t distinct_eigenvalue_count(TransformKind kind, std::size_t n);

} // namespace dtt
