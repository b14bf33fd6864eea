#include "dtt/surd.hpp"

#include "dtt/error.hpp"

#include <cmath>
#include <numeric>

namespace dtt::exact {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0)
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const auto g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational &a, const Rational &b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

std::pair<std::int64_t, std::int64_t> split_square(std::int64_t x) {
  if (x < 1)
    throw Error(ErrorCode::InvalidArgument, "split_square needs x >= 1");
  std::int64_t root = 1;
  std::int64_t rest = x;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {root, rest};
}

//------------------------------------------------------------------------------
Surd::Surd(Rational r) { add_term(1, r); }

Surd Surd::sqrt(const Rational &r) {
  if (r.num() < 0)
    throw Error(ErrorCode::InvalidArgument, "square root of a negative value");
  Surd s;
  if (r.is_zero())
    return s;
  // sqrt(p/q) = sqrt(p q) / q
  const auto [root, radical] = split_square(r.num() * r.den());
  s.add_term(radical, Rational(root, r.den()));
  return s;
}

void Surd::add_term(std::int64_t radical, const Rational &coef) {
  if (coef.is_zero())
    return;
  auto it = terms_.find(radical);
  if (it == terms_.end()) {
    terms_.emplace(radical, coef);
    return;
  }
  it->second = it->second + coef;
  if (it->second.is_zero())
    terms_.erase(it);
}

double Surd::to_double() const {
  double v = 0.0;
  for (const auto &[radical, coef] : terms_)
    v += coef.to_double() * std::sqrt(static_cast<double>(radical));
  return v;
}

std::string Surd::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[radical, coef] : terms_) {
    const bool negative = coef.num() < 0;
    const Rational mag = negative ? -coef : coef;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (radical == 1) {
      out += mag.to_string();
    } else {
      if (!(mag == Rational(1)))
        out += mag.to_string() + "*";
      out += "sqrt(" + std::to_string(radical) + ")";
    }
  }
  return out;
}

Surd operator+(const Surd &a, const Surd &b) {
  Surd s = a;
  for (const auto &[radical, coef] : b.terms_)
    s.add_term(radical, coef);
  return s;
}

Surd operator-(const Surd &a) { return Rational(-1) * a; }

Surd operator*(const Rational &k, const Surd &s) {
  Surd out;
  for (const auto &[radical, coef] : s.terms_)
    out.add_term(radical, k * coef);
  return out;
}

} // namespace dtt::exact
