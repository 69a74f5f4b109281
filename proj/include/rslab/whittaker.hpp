#pragma once

#include <functional>
#include <vector>

#include "rslab/gl_action.hpp"
#include "rslab/quadrature.hpp"
#include "rslab/schwartz.hpp"
#include "rslab/special_functions.hpp"

namespace rslab {

// Decomposition g = n a k with n upper unipotent, a positive diagonal and
// k with orthonormal rows (counterpart of iwasawa_lower).
Iwasawa iwasawa_upper(const CMatrix& g);

// Haar probability grid on the orthogonal (field R) or unitary (field C)
// group of rank n <= 3.  Angular directions use uniform grids and radial
// directions Gauss-Legendre nodes, so polynomial matrix coefficients of
// total degree below res are integrated exactly.
struct KGrid {
  std::vector<CMatrix> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};

KGrid k_grid(Field f, int n, int res);

// Generic character of the upper unipotent group: the standard additive
// character of parameter eps applied to the superdiagonal sum.
Complex psi_character(Field f, int eps, const CMatrix& x);

// Value of the principal series section attached to the minimal compact
// type.  With barred = false the parameter d must be dominant (entries in
// {0,1} over R) and v lives in the representation with top row d; the value
// at u a k is eta_{nu - rho}(a) <tau_d(k) v, xi_{H(d)}>.  With barred = true
// the parameter -d must be dominant, v is given on barred basis tokens of
// the representation with top row -d, and the compact factor is conjugated.
class SectionEvaluator {
 public:
  SectionEvaluator(Field f, const Weight& d, std::vector<Complex> nu,
                   const LinCombo& v, bool barred = false);

  Complex operator()(const CMatrix& g) const;

  Field field() const { return field_; }
  int rank() const { return static_cast<int>(nu_.size()); }

 private:
  Field field_;
  std::vector<Complex> nu_;
  long dn_;
  MatPolynomial ktype_;
};

Complex section_value(Field f, const Weight& d, const std::vector<Complex>& nu,
                      const LinCombo& v, const CMatrix& g, bool barred = false);

// Normalized radial part of the minimal-type Whittaker function on the
// positive diagonal torus, by the recursive rank-lowering integral.  Each
// entry of points is a diagonal (a_1, ..., a_n); rank n <= 3.
std::vector<Complex> whittaker_radial(Field f, const Weight& d,
                                      const std::vector<Complex>& nu,
                                      const std::vector<std::vector<double>>& points,
                                      int half_nodes);

// Whittaker integral of an arbitrary section evaluator over the upper
// unipotent group (rank <= 2), against the conjugate standard character.
// Convergence requires the section parameters to be in the standard region.
Complex jacquet_of_section(Field f, int n,
                           const std::function<Complex(const CMatrix&)>& sec,
                           const CMatrix& g, int eps, const Quadrature& osc);

// Minimal-type Whittaker function by direct unipotent quadrature.
Complex whittaker_jacquet(Field f, const Weight& d, const std::vector<Complex>& nu,
                          const LinCombo& v, const CMatrix& g, int eps,
                          const Quadrature& osc, bool barred = false);

// Rank-raising kernel section on GL(2): the gaussian-kernel integral over
// GL(1) that produces a section of the rank-two principal series from a
// rank-one section and a Schwartz function on 1 x 2 matrices.
Complex godement_plus_section(Field f, const Weight& dhat,
                              const std::vector<Complex>& nuhat, const LinCombo& vhat,
                              long dn, Complex nun, const SchwartzFn& phi,
                              const CMatrix& g, int half_nodes,
                              bool barred = false);

// Same-rank kernel section on GL(2): integral over GL(2) pairing a section
// with a Schwartz function on 2 x 2 matrices and a determinant character.
// The group integral runs over torus, lower unipotent and compact grids, so
// it is practical over R; convergence needs Re(s) large.
Complex godement_zero_section(Field f, const Weight& d,
                              const std::vector<Complex>& nu, const LinCombo& v,
                              long l, Complex s, const SchwartzFn& phi,
                              const CMatrix& g, int half_nodes, int kres,
                              bool barred = false);

// Whittaker function of the rank-raising kernel section on GL(2), by the
// kernel representation: the unipotent quadrature collapses to a closed
// gaussian line integral, so the result converges for every nu.
Complex whittaker_godement_plus(Field f, const Weight& dhat,
                                const std::vector<Complex>& nuhat,
                                const LinCombo& vhat, long dn, Complex nun,
                                const SchwartzFn& phi, const CMatrix& g, int eps,
                                int half_nodes, bool barred = false);

// Minimal-type Whittaker function on GL(2) through the rank-raising kernel
// route.  The kernel data is precomputed once, so repeated evaluation at
// many group points is cheap; valid for every nu.
class Whittaker2 {
 public:
  Whittaker2(Field f, const Weight& d, const std::vector<Complex>& nu,
             const LinCombo& v, int eps, int half_nodes, bool barred = false);

  Complex operator()(const CMatrix& g) const;

 private:
  Field field_;
  int eps_;
  long dn_;
  Complex nu1_, nun_;
  Complex gamma_div_;
  SectionEvaluator sec1_;
  SchwartzFn phi_;
  Quadrature qt_;
};

// One-shot form of Whittaker2.
Complex whittaker_godement2(Field f, const Weight& d, const std::vector<Complex>& nu,
                            const LinCombo& v, const CMatrix& g, int eps,
                            int half_nodes, bool barred = false);

// Whittaker function of the same-rank kernel section on GL(2), by the kernel
// representation: the group integral of the Whittaker function of the input
// section against the Schwartz weight.  The group point is moved into the
// Schwartz argument by left translation, the unipotent axis is integrated in
// closed form against the character, and torus translates are expanded over
// the compact type with radial values supplied by Whittaker2.
Complex whittaker_godement_zero(Field f, const Weight& d,
                                const std::vector<Complex>& nu, const LinCombo& v,
                                long l, Complex s, const SchwartzFn& phi,
                                const CMatrix& g, int eps, int half_nodes,
                                int kres, bool barred = false);

// Haar integral of exp(-pi c_F |g|^2) |det g|_F^s over GL(n) in the
// a-u-k coordinates, with the unipotent gaussian factors integrated on
// their own axes; calibrates the measure normalization against the
// closed product of gamma factors.
Complex gaussian_det_integral(Field f, int n, Complex s, int half_nodes);

}  // namespace rslab
