#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rslab/lincombo.hpp"

namespace rslab {

// Generators of gl(n): Raise(j) = E_{j,j+1}, Lower(j) = E_{j+1,j} for
// 1 <= j < n, Diag(k) = E_{k,k} for 1 <= k <= n.
struct Generator {
  enum Kind { raise, lower, diag } kind;
  int idx;
};

inline Generator Raise(int j) { return Generator{Generator::raise, j}; }
inline Generator Lower(int j) { return Generator{Generator::lower, j}; }
inline Generator Diag(int k) { return Generator{Generator::diag, k}; }

// Coefficient of pattern M + Delta_{i,j} in E_{j,j+1} zeta_M (square-root
// form), and of M - Delta_{i,j} in E_{j+1,j} zeta_M.  The move must be valid.
SqrtRational zeta_raise_coef(const GTPattern& m, int i, int j);
SqrtRational zeta_lower_coef(const GTPattern& m, int i, int j);

// Coefficient of M + Delta_{i,j} in E_{j,j+1} xi_M: a rational number.
Rational xi_raise_coef(const GTPattern& m, int i, int j);

// Action of a generator on a linear combination, in whichever basis the
// combination carries.  On barred vectors, X acts by -conj(action of X^t).
LinCombo act(const Generator& g, const LinCombo& v);

// Change between zeta and xi coordinates (bar status preserved).
LinCombo convert_basis(const LinCombo& v, Basis target);

// Orthogonal projection of V_lam onto the subrepresentation of the
// lower-rank group indexed by mu, expressed by dropping the top row of every
// pattern whose second row equals mu.
LinCombo branch_project(const LinCombo& v, const Weight& mu);

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Cached per-weight data: the pattern list and the generator matrices in
// the zeta basis, column M = image of zeta_M.
class RepBasis {
 public:
  explicit RepBasis(Weight lam);

  const Weight& lam() const { return lam_; }
  int dim() const { return static_cast<int>(patterns_.size()); }
  const std::vector<GTPattern>& patterns() const { return patterns_; }
  int index_of(const GTPattern& m) const { return static_cast<int>(pattern_index(patterns_, m)); }
  double sqrt_norm(int idx) const { return sqrt_norms_[idx]; }

  // dtau(E_{pq}) in the zeta basis, 1-based indices.
  const CMatrix& E(int p, int q) const;

 private:
  Weight lam_;
  std::vector<GTPattern> patterns_;
  std::vector<double> sqrt_norms_;
  mutable std::vector<CMatrix> cache_;       // (p-1)*n + (q-1), empty if unset
  mutable std::vector<char> cache_set_;
  const CMatrix& compute(int p, int q) const;
};

// Shared cache keyed by lam; throws if dim V_lam > 512.
const RepBasis& rep_basis(const Weight& lam);

// Iwasawa decomposition g = u a k with u lower unipotent, a positive
// diagonal, k unitary.  Requires invertible g.
struct Iwasawa {
  CMatrix u;
  Eigen::VectorXd a;
  CMatrix k;
};
Iwasawa iwasawa_lower(const CMatrix& g);

// tau_lam(g) in the requested basis (column N = image of basis vector N).
// Exact-structure path: unipotent part by a terminating nilpotent series,
// diagonal part by monomials in the entries, unitary part by Schur
// diagonalization and a self-adjoint exponential.
CMatrix group_matrix(const Weight& lam, const CMatrix& g, Basis basis = Basis::zeta);

// Coordinates of v in the pattern order of rep_basis(v.lam()), as doubles,
// in the zeta (or zeta_bar) basis.
Eigen::VectorXcd coordinates(const LinCombo& v);

}  // namespace rslab
