#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

// Exact arithmetic for the eigenvalue expressions: rationals, and finite sums
// of rational multiples of square roots of squarefree integers. Because
// square roots of distinct squarefree integers are linearly independent over
// the rationals, two Surds are equal iff their canonical term maps are equal.
namespace dtt::exact {

class Rational {
public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_zero() const { return num_ == 0; }
  std::string to_string() const;

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a) { return {-a.num_, a.den_}; }
  friend bool operator==(const Rational &, const Rational &) = default;

private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Splits x >= 1 as square * squarefree; returns {root of square, squarefree}.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t x);

class Surd {
public:
  Surd() = default;
  Surd(Rational r); // NOLINT: rationals are surds

  /// Exact square root of a non-negative rational, simplified to
  /// (s/q) sqrt(c) with c squarefree.
  static Surd sqrt(const Rational &r);

  double to_double() const;
  std::string to_string() const;

  friend Surd operator+(const Surd &a, const Surd &b);
  friend Surd operator-(const Surd &a);
  friend Surd operator-(const Surd &a, const Surd &b) { return a + (-b); }
  friend Surd operator*(const Rational &k, const Surd &s);
  friend bool operator==(const Surd &, const Surd &) = default;

private:
  void add_term(std::int64_t radical, const Rational &coef);
  std::map<std::int64_t, Rational> terms_; // squarefree radical -> coefficient
};

} // namespace dtt::exact
