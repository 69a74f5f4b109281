#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "rslab/gt.hpp"
#include "rslab/sqrt_rational.hpp"

namespace rslab {

// Basis tags for vectors in an irreducible representation V_lam or its
// conjugate.  "zeta" is the orthonormal basis, "xi" the rational-action
// rescaling xi_M = sqrt(r(M)) zeta_M.  Barred tags live in the conjugate
// representation; all structure constants stay real.
enum class Basis { zeta, xi, zeta_bar, xi_bar };

inline bool is_barred(Basis b) {
  return b == Basis::zeta_bar || b == Basis::xi_bar;
}

inline Basis bar_of(Basis b) {
  switch (b) {
    case Basis::zeta: return Basis::zeta_bar;
    case Basis::xi: return Basis::xi_bar;
    case Basis::zeta_bar: return Basis::zeta;
    case Basis::xi_bar: return Basis::xi;
  }
  throw std::logic_error("bad basis");
}

inline Basis unbarred(Basis b) {
  return is_barred(b) ? bar_of(b) : b;
}

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::zeta: return "zeta";
    case Basis::xi: return "xi";
    case Basis::zeta_bar: return "zeta_bar";
    case Basis::xi_bar: return "xi_bar";
  }
  return "?";
}

struct Term {
  GTPattern pat;
  SqrtRational coef;
};

// A finite linear combination of basis vectors of V_lam (or its conjugate),
// with coefficients in the ring Q + Q*sqrt(d).  Terms are kept sorted by
// (pattern, radicand); only terms with identical pattern and radicand merge.
class LinCombo {
 public:
  LinCombo(Basis basis, Weight lam) : basis_(basis), lam_(std::move(lam)) {}

  static LinCombo unit(Basis basis, const GTPattern& m) {
    LinCombo v(basis, m.top());
    v.add(m, SqrtRational(1));
    return v;
  }

  Basis basis() const { return basis_; }
  const Weight& lam() const { return lam_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const GTPattern& pat, const SqrtRational& coef) {
    if (coef.is_zero()) return;
    if (pat.top() != lam_) throw std::invalid_argument("pattern has wrong top row");
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), std::make_pair(pat, coef.rad()),
        [](const Term& t, const std::pair<GTPattern, Rational>& key) {
          if (t.pat != key.first) return t.pat < key.first;
          return t.coef.rad() < key.second;
        });
    if (it != terms_.end() && it->pat == pat && it->coef.rad() == coef.rad()) {
      SqrtRational merged(it->coef.rat() + coef.rat(), coef.rad());
      if (merged.is_zero())
        terms_.erase(it);
      else
        it->coef = merged;
    } else {
      terms_.insert(it, Term{pat, coef});
    }
  }

  LinCombo& operator+=(const LinCombo& o) {
    if (o.basis_ != basis_ || o.lam_ != lam_)
      throw std::invalid_argument("adding combos from different spaces");
    for (const auto& t : o.terms_) add(t.pat, t.coef);
    return *this;
  }

  LinCombo operator*(const SqrtRational& s) const {
    LinCombo out(basis_, lam_);
    for (const auto& t : terms_) out.add(t.pat, t.coef * s);
    return out;
  }

  LinCombo operator-() const { return *this * SqrtRational(-1); }

  // Sum of coefficients attached to `pat` (possibly several radicands).
  SqrtSum coef_of(const GTPattern& pat) const {
    SqrtSum s;
    for (const auto& t : terms_)
      if (t.pat == pat) s.add(t.coef);
    return s;
  }

  bool operator==(const LinCombo& o) const {
    return basis_ == o.basis_ && lam_ == o.lam_ && terms_ == o.terms_;
  }

 private:
  Basis basis_;
  Weight lam_;
  std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.pat == b.pat && a.coef == b.coef;
}

// Hermitian inner product in which zeta is orthonormal and
// <xi_M, xi_M> = r(M).  Both arguments must carry the same basis letter and
// the same bar status; all coefficients are real, so no conjugation happens.
SqrtSum inner(const LinCombo& x, const LinCombo& y);

}  // namespace rslab
