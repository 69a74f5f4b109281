#pragma once

#include "rslab/lincombo.hpp"

namespace rslab {

// Factorial-product ladder weights used by the branching coefficients.
// S_circ takes two weights of equal length, S_plus a weight and one of
// length one less; all factorial arguments are nonnegative exactly when the
// relevant interlacing conditions hold.
Rational S_circ(const Weight& a, const Weight& b);
Rational S_plus(const Weight& a, const Weight& b);

// Ratio of content factorials attached to a pair lam' over lam with lam'
// dominating lam in the alternating interlace order.
Rational C_circ(const Weight& lamp, const Weight& lam);

// One level of the coupling recursion between rows of the three patterns.
SqrtRational isoscalar_factor(const Weight& lam, long l, const Weight& lamp,
                              const Weight& mu, long q, const Weight& mup);

// Coefficient of zeta_M (x) zeta_P in the image of zeta_{M'} under the
// orthonormal coupling map V_{lam'} -> V_lam (x) V_(l,0,...,0).  Returns 0
// whenever the row-by-row selection rules fail.
SqrtRational cg_coef(const GTPattern& m, const GTPattern& p, const GTPattern& mprime);

// Rational normalization: coefficient of xi_M (x) xi_P in the image of
// xi_{M'} under the rationally normalized coupling map.  Throws if the value
// fails to be rational (it never should).
Rational cg_coef_rational(const GTPattern& m, const GTPattern& p, const GTPattern& mprime);

struct TensorTerm {
  GTPattern m;
  GTPattern p;
  SqrtRational coef;
};

// All nonzero terms of the image of zeta_{M'} inside V_lam (x) V_(l,0,...,0),
// where l is the total-size difference of the top rows.
std::vector<TensorTerm> tensor_expand(const GTPattern& mprime, const Weight& lam);

}  // namespace rslab
