#pragma once

#include <vector>

#include "rslab/rational.hpp"

namespace rslab {

// Exact scalar of the form rat * sqrt(rad) with rad a positive square-free
// rational (square-free numerator and denominator).  rat == 0 forces rad == 1.
class SqrtRational {
 public:
  SqrtRational() : rat_(0), rad_(1) {}
  SqrtRational(const Rational& rat) : rat_(rat), rad_(1) {}  // NOLINT: implicit
  SqrtRational(long v) : rat_(v), rad_(1) {}                 // NOLINT: implicit
  SqrtRational(const Rational& rat, const Rational& rad);

  static SqrtRational sqrt_of(const Rational& q);  // q >= 0

  const Rational& rat() const { return rat_; }
  const Rational& rad() const { return rad_; }

  bool is_zero() const { return rat_ == 0; }
  bool is_rational() const { return rad_ == 1; }
  double value() const;

  SqrtRational operator-() const;
  SqrtRational operator*(const SqrtRational& o) const;
  SqrtRational operator/(const SqrtRational& o) const;
  // Addition requires matching radicals; use SqrtSum otherwise.
  SqrtRational operator+(const SqrtRational& o) const;

  bool operator==(const SqrtRational& o) const = default;

 private:
  Rational rat_;
  Rational rad_;
};

SqrtRational abs(const SqrtRational& x);

// Finite sum of SqrtRational terms with pairwise distinct radicals.
class SqrtSum {
 public:
  SqrtSum() = default;
  SqrtSum(const SqrtRational& x) { add(x); }  // NOLINT: implicit

  void add(const SqrtRational& x);
  const std::vector<SqrtRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool equals(const Rational& q) const;
  double value() const;

  bool operator==(const SqrtSum& o) const { return terms_ == o.terms_; }

 private:
  std::vector<SqrtRational> terms_;  // sorted by radical
};

}  // namespace rslab
