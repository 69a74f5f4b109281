#include "rslab/sqrt_rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rslab {

namespace {

constexpr unsigned long kTrialBound = 100000;

// v = sq^2 * f with f square-free up to the trial bound; large leftover
// cofactors are tested for being perfect squares, otherwise kept in f.
Integer squarefree_part(Integer v, Integer& sq) {
  sq = 1;
  Integer f = 1;
  if (v == 0) throw std::logic_error("squarefree_part of zero");
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2) ? 1 : 2) {
    if (mpz_cmp_ui(v.get_mpz_t(), p * p) < 0) break;
    if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) sq *= p;
    if (e % 2) f *= p;
  }
  if (v > 1) {
    if (mpz_perfect_square_p(v.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
      sq *= root;
    } else {
      f *= v;
    }
  }
  return f;
}

}  // namespace

SqrtRational::SqrtRational(const Rational& rat, const Rational& rad) : rat_(rat), rad_(rad) {
  if (rad_ <= 0) throw std::domain_error("radical must be positive");
  if (rat_ == 0) {
    rad_ = 1;
    return;
  }
  rad_.canonicalize();
  Integer sq_num, sq_den;
  Integer f_num = squarefree_part(rad_.get_num(), sq_num);
  Integer f_den = squarefree_part(rad_.get_den(), sq_den);
  // sqrt(f_num / f_den) = sqrt(f_num * f_den) / f_den, so the radicand is the
  // square-free integer f_num * f_den.
  rat_ *= Rational(sq_num, sq_den * f_den);
  rat_.canonicalize();
  rad_ = Rational(f_num * f_den);
}

SqrtRational SqrtRational::sqrt_of(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return SqrtRational();
  return SqrtRational(1, q);
}

double SqrtRational::value() const { return rat_.get_d() * std::sqrt(rad_.get_d()); }

SqrtRational SqrtRational::operator-() const {
  SqrtRational r;
  r.rat_ = -rat_;
  r.rad_ = rad_;
  if (r.rat_ == 0) r.rad_ = 1;
  return r;
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
  if (is_zero() || o.is_zero()) return SqrtRational();
  return SqrtRational(rat_ * o.rat_, rad_ * o.rad_);
}

SqrtRational SqrtRational::operator/(const SqrtRational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero SqrtRational");
  if (is_zero()) return SqrtRational();
  return SqrtRational(rat_ / (o.rat_ * o.rad_), rad_ * o.rad_);
}

SqrtRational SqrtRational::operator+(const SqrtRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (rad_ != o.rad_) throw std::domain_error("adding mismatched radicals");
  SqrtRational r;
  r.rat_ = rat_ + o.rat_;
  r.rad_ = (r.rat_ == 0) ? Rational(1) : rad_;
  return r;
}

SqrtRational abs(const SqrtRational& x) { return x.rat() < 0 ? -x : x; }

void SqrtSum::add(const SqrtRational& x) {
  if (x.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                             [](const SqrtRational& a, const SqrtRational& b) {
                               return a.rad() < b.rad();
                             });
  if (it != terms_.end() && it->rad() == x.rad()) {
    SqrtRational s = *it + x;
    if (s.is_zero())
      terms_.erase(it);
    else
      *it = s;
  } else {
    terms_.insert(it, x);
  }
}

bool SqrtSum::equals(const Rational& q) const {
  if (q == 0) return terms_.empty();
  return terms_.size() == 1 && terms_[0].rad() == 1 && terms_[0].rat() == q;
}

double SqrtSum::value() const {
  double v = 0;
  for (const auto& t : terms_) v += t.value();
  return v;
}

}  // namespace rslab
