#pragma once

#include <vector>

#include "rslab/gl_action.hpp"
#include "rslab/special_functions.hpp"

namespace rslab {

// Holomorphic polynomial in the entries of a rows x cols complex matrix.
// Coefficients are exact sums of square roots of rationals; terms are kept
// sorted by exponent vector (row-major) with like terms merged.
struct ExactTerm {
  std::vector<int> a;
  SqrtSum coef;
};

inline bool operator==(const ExactTerm& x, const ExactTerm& y) {
  return x.a == y.a && x.coef == y.coef;
}

class ExactPoly {
 public:
  ExactPoly() : rows_(0), cols_(0) {}
  ExactPoly(int rows, int cols) : rows_(rows), cols_(cols) {}

  static ExactPoly constant(int rows, int cols, const SqrtRational& c);
  static ExactPoly monomial(int rows, int cols, const std::vector<int>& a,
                            const SqrtRational& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<ExactTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& a, const SqrtRational& c);
  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly scaled(const SqrtRational& s) const;
  ExactPoly operator*(const ExactPoly& o) const;
  bool operator==(const ExactPoly& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && terms_ == o.terms_;
  }

  bool touches_row(int i) const;  // 1-based
  bool touches_col(int j) const;
  ExactPoly drop_last_row() const;  // throws if the last row occurs
  ExactPoly drop_last_col() const;
  // Reinterpret on a larger matrix, keeping entry indices.
  ExactPoly padded(int new_rows, int new_cols) const;

  Complex eval(const CMatrix& z) const;

 private:
  int rows_, cols_;
  std::vector<ExactTerm> terms_;
};

// Matrix-entry polynomials of the irreducible representation with dominant
// top row lam (last entry >= 0): the block entry (r, c), stored at r*dim + c
// in the order of enumerate_patterns(lam), is the unique polynomial on n x n
// matrices restricting to z -> <tau_lam(z) zeta_c, zeta_r> on the invertible
// ones.  Cached per weight.
const std::vector<ExactPoly>& entry_polynomials(const Weight& lam);
ExactPoly entry_polynomial(const GTPattern& m1, const GTPattern& m2);

// Rectangular variant on (n-1) x n matrices: m1 lives one rank down (top row
// mu), m2 has top row (mu, 0).  The pullback along z -> top (n-1) x n block
// of the square entry for (m1.with_top((mu, 0)), m2) never involves the last
// matrix row, and this returns that polynomial on the rectangle.
ExactPoly entry_polynomial_rect(const GTPattern& m1, const GTPattern& m2);

// Polynomial in matrix entries and their conjugates, complex coefficients.
struct MatMonomial {
  std::vector<int> a, b;
  Complex coef;
};

class MatPolynomial {
 public:
  MatPolynomial() : rows_(0), cols_(0) {}
  MatPolynomial(int rows, int cols) : rows_(rows), cols_(cols) {}

  static MatPolynomial constant(int rows, int cols, Complex c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<MatMonomial>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const std::vector<int>& a, const std::vector<int>& b, Complex c);
  MatPolynomial& operator+=(const MatPolynomial& o);
  MatPolynomial operator*(const MatPolynomial& o) const;
  MatPolynomial scaled(Complex c) const;
  MatPolynomial conjugated() const;
  MatPolynomial folded() const;  // merge conjugate exponents (real variables)

  Complex eval(const CMatrix& z) const;
  double max_abs_coef() const;

 private:
  int rows_, cols_;
  std::vector<MatMonomial> terms_;
};

MatPolynomial to_complex_poly(const ExactPoly& p, bool conjugate = false);

// exp(-pi c_F sum |z_ij|^2); over R pass real-valued entries.
double gaussian_weight(Field f, const CMatrix& z);

// A polynomial multiple of the standard gaussian on a fixed matrix shape.
struct SchwartzFn {
  Field field = Field::R;
  MatPolynomial poly;

  int rows() const { return poly.rows(); }
  int cols() const { return poly.cols(); }
  Complex operator()(const CMatrix& z) const {
    return poly.eval(z) * gaussian_weight(field, z);
  }
};

// Gaussian families attached to representation vectors.  Inputs are linear
// combinations in any basis letter with the bar status indicated by the
// name; vectors are converted to the orthonormal letter internally.
//
//   phi_row      on 1 x n, v in the one-row space, monomials z^gamma
//   phi_col      on n x 1, holomorphic despite the barred argument
//   phi_square   on n x n, entry polynomial pairing times the gaussian
//   phi_rect     on (n-1) x n, rectangular entry pairing
//
// The *_bar variants carry the complex-conjugated polynomial.
SchwartzFn phi_row(Field f, const LinCombo& v);
SchwartzFn phi_row_bar(Field f, const LinCombo& vbar);
SchwartzFn phi_col(Field f, const LinCombo& vbar);
SchwartzFn phi_col_bar(Field f, const LinCombo& v);
SchwartzFn phi_square(Field f, const LinCombo& v1bar, const LinCombo& v2);
SchwartzFn phi_square_bar(Field f, const LinCombo& v1, const LinCombo& v2bar);
SchwartzFn phi_rect(Field f, const LinCombo& v1bar, const LinCombo& v2);
SchwartzFn phi_rect_bar(Field f, const LinCombo& v1, const LinCombo& v2bar);

// Polynomial part p of the weighted moment
//   int_F z^a conj(z)^b exp(-pi c_F |z|^2 + pi c_F i (z t + conj(z t))) dz
//     = p(t) exp(-pi c_F |t|^2),
// as a 1 x 1 polynomial in t and conj(t).  Over R the two exponents merge.
MatPolynomial gauss_moment(Field f, int a, int b);

// Fourier transform from the n x 1 to the 1 x n shape against the character
// z -> exp(-pi c_F eps i (t z + conj(t z))), computed in closed form.
SchwartzFn fourier_column(const SchwartzFn& phi, int eps);

}  // namespace rslab
