#include "rslab/tensor_cg.hpp"

#include <stdexcept>

namespace rslab {

Rational S_circ(const Weight& a, const Weight& b) {
  const int k = static_cast<int>(a.size());
  if (b.size() != a.size()) throw std::invalid_argument("S_circ wants equal lengths");
  Integer num = 1, den = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) num *= factorial(a[i - 1] - b[j - 1] - i + j);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = i; j <= k - 1; ++j) den *= factorial(b[i - 1] - a[j] - i + j);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational S_plus(const Weight& a, const Weight& b) {
  const int k = static_cast<int>(a.size());
  if (b.size() + 1 != a.size()) throw std::invalid_argument("S_plus wants lengths k, k-1");
  Integer num = 1, den = 1;
  for (int i = 1; i <= k - 1; ++i)
    for (int j = i; j <= k - 1; ++j) {
      num *= factorial(a[i - 1] - b[j - 1] - i + j);
      den *= factorial(b[i - 1] - a[j] - i + j);
    }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational C_circ(const Weight& lamp, const Weight& lam) {
  const int n = static_cast<int>(lam.size());
  if (lamp.size() != lam.size()) throw std::invalid_argument("C_circ wants equal lengths");
  Integer num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= factorial(lamp[i - 1] - lamp[j - 1] - i + j);
      num *= factorial(lam[i - 1] - lam[j - 1] - i + j - 1);
      den *= factorial(lamp[i - 1] - lam[j - 1] - i + j);
      den *= factorial(lam[i - 1] - lamp[j - 1] - i + j - 1);
    }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

SqrtRational isoscalar_factor(const Weight& lam, long l, const Weight& lamp,
                              const Weight& mu, long q, const Weight& mup) {
  Rational rad = Rational(factorial(l - q)) * S_circ(lamp, lamp) * S_plus(lam, mu) *
                 S_circ(mup, mu) * S_circ(mu, mu) / (S_circ(lamp, lam) * S_plus(lamp, mup));
  rad.canonicalize();

  Rational sum = 0;
  // alpha runs over weights interlacing both top rows, squeezed between the
  // two second rows in the alternating order
  for (const Weight& alpha : branching_plus(lam)) {
    if (!in_branching_plus(alpha, lamp)) continue;
    if (!in_branching_circ(mup, alpha)) continue;
    if (!in_branching_circ(alpha, mu)) continue;
    long sgn_exp = ell(alpha) - ell(mu);
    Rational term = S_circ(alpha, alpha) / (S_circ(mup, alpha) * S_circ(alpha, mu));
    term *= S_plus(lamp, alpha) / S_plus(lam, alpha);
    if (sgn_exp % 2 != 0) term = -term;
    sum += term;
  }
  return SqrtRational::sqrt_of(rad) * SqrtRational(sum);
}

namespace {

bool elementary_top(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) return false;
  return w[0] >= 0;
}

}  // namespace

SqrtRational cg_coef(const GTPattern& m, const GTPattern& p, const GTPattern& mprime) {
  const int n = m.n();
  if (p.n() != n || mprime.n() != n) throw std::invalid_argument("pattern sizes differ");
  if (!elementary_top(p.top())) throw std::invalid_argument("second factor must be one-line");
  if (n == 1) return (mprime.top()[0] == m.top()[0] + p.top()[0]) ? SqrtRational(1) : SqrtRational(0);

  const Weight& lam = m.top();
  const Weight& lamp = mprime.top();
  const long l = p.top()[0];
  if (ell(lamp) != ell(lam) + l) return SqrtRational(0);
  if (!in_branching_circ(lamp, lam)) return SqrtRational(0);

  const Weight mu = m.row(n - 1);
  const Weight mup = mprime.row(n - 1);
  const long q = p.m(1, n - 1);
  if (ell(mup) != ell(mu) + q) return SqrtRational(0);
  if (!in_branching_circ(mup, mu)) return SqrtRational(0);

  SqrtRational sub = cg_coef(m.drop_top(), p.drop_top(), mprime.drop_top());
  if (sub.is_zero()) return sub;
  return isoscalar_factor(lam, l, lamp, mu, q, mup) * sub;
}

Rational cg_coef_rational(const GTPattern& m, const GTPattern& p, const GTPattern& mprime) {
  SqrtRational c = cg_coef(m, p, mprime);
  if (c.is_zero()) return Rational(0);
  Weight gamma = sub(mprime.top(), m.top());
  Rational scale = multinomial(gamma) * C_circ(mprime.top(), m.top()) * pattern_norm(mprime) /
                   (pattern_norm(m) * pattern_norm(p));
  SqrtRational out = SqrtRational::sqrt_of(scale) * c;
  if (!out.is_rational()) throw std::logic_error("rational coupling coefficient has a radical part");
  return out.rat();
}

std::vector<TensorTerm> tensor_expand(const GTPattern& mprime, const Weight& lam) {
  const int n = mprime.n();
  if (static_cast<int>(lam.size()) != n) throw std::invalid_argument("length mismatch");
  const long l = ell(mprime.top()) - ell(lam);
  Weight etop(n, 0);
  etop[0] = l;
  std::vector<TensorTerm> out;
  if (l < 0 || !in_branching_circ(mprime.top(), lam)) return out;
  Weight wprime = mprime.weight();
  for (const auto& p : enumerate_patterns(etop)) {
    Weight need = sub(wprime, p.weight());
    for (const auto& m : enumerate_patterns(lam)) {
      if (m.weight() != need) continue;
      SqrtRational c = cg_coef(m, p, mprime);
      if (!c.is_zero()) out.push_back(TensorTerm{m, p, c});
    }
  }
  return out;
}

}  // namespace rslab
