#include "rslab/gl_action.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace rslab {

namespace {

// Signed integer products for the raising/lowering structure constants.
Integer prod(const std::vector<long>& fac) {
  Integer p = 1;
  for (long f : fac) p *= f;
  return p;
}

}  // namespace

SqrtSum inner(const LinCombo& x, const LinCombo& y) {
  if (unbarred(x.basis()) != unbarred(y.basis()) || x.lam() != y.lam())
    throw std::invalid_argument("inner product across different coordinate systems");
  const bool xi = unbarred(x.basis()) == Basis::xi;
  SqrtSum s;
  for (const auto& tx : x.terms())
    for (const auto& ty : y.terms())
      if (tx.pat == ty.pat) {
        SqrtRational c = tx.coef * ty.coef;
        if (xi) c = c * SqrtRational(pattern_norm(tx.pat));
        s.add(c);
      }
  return s;
}

SqrtRational zeta_raise_coef(const GTPattern& m, int i, int j) {
  std::vector<long> num, den;
  const long mij = m.m(i, j);
  for (int h = 1; h <= j + 1; ++h) num.push_back(m.m(h, j + 1) - mij - h + i);
  for (int h = 1; h <= j - 1; ++h) num.push_back(m.m(h, j - 1) - mij - h + i - 1);
  for (int h = 1; h <= j; ++h) {
    if (h == i) continue;
    den.push_back(m.m(h, j) - mij - h + i);
    den.push_back(m.m(h, j) - mij - h + i - 1);
  }
  Integer dp = prod(den);
  if (dp == 0) throw std::logic_error("raise coefficient pole on a valid move");
  Rational q(prod(num), dp);
  q.canonicalize();
  return SqrtRational::sqrt_of(abs(q));
}

SqrtRational zeta_lower_coef(const GTPattern& m, int i, int j) {
  std::vector<long> num, den;
  const long mij = m.m(i, j);
  for (int h = 1; h <= j + 1; ++h) num.push_back(m.m(h, j + 1) - mij - h + i + 1);
  for (int h = 1; h <= j - 1; ++h) num.push_back(m.m(h, j - 1) - mij - h + i);
  for (int h = 1; h <= j; ++h) {
    if (h == i) continue;
    den.push_back(m.m(h, j) - mij - h + i);
    den.push_back(m.m(h, j) - mij - h + i + 1);
  }
  Integer dp = prod(den);
  if (dp == 0) throw std::logic_error("lower coefficient pole on a valid move");
  Rational q(prod(num), dp);
  q.canonicalize();
  return SqrtRational::sqrt_of(abs(q));
}

Rational xi_raise_coef(const GTPattern& m, int i, int j) {
  std::vector<long> num, den;
  const long mij = m.m(i, j);
  for (int h = 1; h <= i; ++h) num.push_back(m.m(h, j + 1) - mij - h + i);
  for (int h = 1; h <= i - 1; ++h) den.push_back(m.m(h, j) - mij - h + i);
  for (int h = 2; h <= i; ++h) {
    num.push_back(m.m(h - 1, j - 1) - mij - h + i);
    den.push_back(m.m(h - 1, j) - mij - h + i);
  }
  Integer dp = prod(den);
  if (dp == 0) throw std::logic_error("rational raise coefficient pole on a valid move");
  Rational q(prod(num), dp);
  q.canonicalize();
  return q;
}

namespace {

LinCombo act_unbarred(const Generator& g, const LinCombo& v) {
  const int n = static_cast<int>(v.lam().size());
  LinCombo out(v.basis(), v.lam());
  const bool xi = v.basis() == Basis::xi;
  switch (g.kind) {
    case Generator::diag: {
      if (g.idx < 1 || g.idx > n) throw std::invalid_argument("diagonal index out of range");
      for (const auto& t : v.terms()) {
        long w = t.pat.weight()[g.idx - 1];
        if (w != 0) out.add(t.pat, t.coef * SqrtRational(w));
      }
      return out;
    }
    case Generator::raise: {
      const int j = g.idx;
      if (j < 1 || j >= n) throw std::invalid_argument("raise index out of range");
      for (const auto& t : v.terms())
        for (int i = 1; i <= j; ++i) {
          GTPattern target = t.pat.bumped(i, j, +1);
          if (!target.interlaced()) continue;
          SqrtRational c = xi ? SqrtRational(xi_raise_coef(t.pat, i, j))
                              : zeta_raise_coef(t.pat, i, j);
          out.add(target, t.coef * c);
        }
      return out;
    }
    case Generator::lower: {
      const int j = g.idx;
      if (j < 1 || j >= n) throw std::invalid_argument("lower index out of range");
      for (const auto& t : v.terms())
        for (int i = 1; i <= j; ++i) {
          if (xi) {
            GTPattern target = t.pat.bumped(j + 1 - i, j, -1);
            if (!target.interlaced()) continue;
            out.add(target, t.coef * SqrtRational(xi_raise_coef(t.pat.dual(), i, j)));
          } else {
            GTPattern target = t.pat.bumped(i, j, -1);
            if (!target.interlaced()) continue;
            out.add(target, t.coef * zeta_lower_coef(t.pat, i, j));
          }
        }
      return out;
    }
  }
  throw std::logic_error("bad generator");
}

}  // namespace

LinCombo act(const Generator& g, const LinCombo& v) {
  if (!is_barred(v.basis())) return act_unbarred(g, v);
  // X acts on the conjugate space by -conj(transpose(X) acting underneath);
  // all structure constants are real, so conjugation is the identity.
  Generator tg = g;
  if (g.kind == Generator::raise) tg = Lower(g.idx);
  if (g.kind == Generator::lower) tg = Raise(g.idx);
  LinCombo plain(unbarred(v.basis()), v.lam());
  for (const auto& t : v.terms()) plain.add(t.pat, t.coef);
  LinCombo res = act_unbarred(tg, plain);
  LinCombo out(v.basis(), v.lam());
  for (const auto& t : res.terms()) out.add(t.pat, -t.coef);
  return out;
}

LinCombo convert_basis(const LinCombo& v, Basis target) {
  if (is_barred(target) != is_barred(v.basis()))
    throw std::invalid_argument("basis change must preserve bar status");
  if (target == v.basis()) return v;
  LinCombo out(target, v.lam());
  const bool to_xi = unbarred(target) == Basis::xi;
  for (const auto& t : v.terms()) {
    Rational r = pattern_norm(t.pat);
    SqrtRational f = SqrtRational::sqrt_of(to_xi ? Rational(1) / r : r);
    out.add(t.pat, t.coef * f);
  }
  return out;
}

LinCombo branch_project(const LinCombo& v, const Weight& mu) {
  if (mu.size() + 1 != v.lam().size())
    throw std::invalid_argument("projection target must drop exactly one row");
  LinCombo out(v.basis(), mu);
  const bool xi = unbarred(v.basis()) == Basis::xi;
  const int n = static_cast<int>(v.lam().size());
  for (const auto& t : v.terms()) {
    if (t.pat.row(n - 1) != mu) continue;
    GTPattern hat = t.pat.drop_top();
    if (xi) {
      out.add(hat, t.coef);
    } else {
      Rational ratio = pattern_norm(hat) / pattern_norm(t.pat);
      out.add(hat, t.coef * SqrtRational::sqrt_of(ratio));
    }
  }
  return out;
}

RepBasis::RepBasis(Weight lam) : lam_(std::move(lam)) {
  patterns_ = enumerate_patterns(lam_);
  sqrt_norms_.reserve(patterns_.size());
  for (const auto& m : patterns_)
    sqrt_norms_.push_back(std::sqrt(to_double(pattern_norm(m))));
  const int n = static_cast<int>(lam_.size());
  cache_.resize(static_cast<std::size_t>(n) * n);
  cache_set_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) compute(p, q);
}

const CMatrix& RepBasis::E(int p, int q) const {
  const int n = static_cast<int>(lam_.size());
  if (p < 1 || p > n || q < 1 || q > n) throw std::invalid_argument("generator index out of range");
  return cache_[static_cast<std::size_t>(p - 1) * n + (q - 1)];
}

const CMatrix& RepBasis::compute(int p, int q) const {
  const int n = static_cast<int>(lam_.size());
  auto& slot = cache_[static_cast<std::size_t>(p - 1) * n + (q - 1)];
  auto& set = cache_set_[static_cast<std::size_t>(p - 1) * n + (q - 1)];
  if (set) return slot;
  const int d = dim();
  CMatrix m = CMatrix::Zero(d, d);
  if (p == q) {
    for (int c = 0; c < d; ++c) m(c, c) = static_cast<double>(patterns_[c].weight()[p - 1]);
  } else if (q == p + 1 || p == q + 1) {
    const int j = std::min(p, q);
    const bool raising = (q == p + 1);
    for (int c = 0; c < d; ++c) {
      const GTPattern& src = patterns_[c];
      for (int i = 1; i <= j; ++i) {
        GTPattern target = src.bumped(i, j, raising ? +1 : -1);
        if (!target.interlaced()) continue;
        SqrtRational coef = raising ? zeta_raise_coef(src, i, j) : zeta_lower_coef(src, i, j);
        m(index_of(target), c) += coef.value();
      }
    }
  } else if (q > p + 1) {
    const CMatrix& a = compute(p, q - 1);
    const CMatrix& b = compute(q - 1, q);
    m = a * b - b * a;
  } else {
    const CMatrix& a = compute(p, p - 1);
    const CMatrix& b = compute(p - 1, q);
    m = a * b - b * a;
  }
  slot = std::move(m);
  set = 1;
  return slot;
}

const RepBasis& rep_basis(const Weight& lam) {
  static std::mutex mu;
  static std::map<Weight, std::unique_ptr<RepBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(lam);
  if (it != cache.end()) return *it->second;
  if (weyl_dimension(lam) > 512) throw std::invalid_argument("representation dimension above cap 512");
  auto rb = std::make_unique<RepBasis>(lam);
  auto [pos, ok] = cache.emplace(lam, std::move(rb));
  (void)ok;
  return *pos->second;
}

Iwasawa iwasawa_lower(const CMatrix& g) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n) throw std::invalid_argument("square matrix required");
  Iwasawa iw;
  iw.u = CMatrix::Identity(n, n);
  iw.a = Eigen::VectorXd::Zero(n);
  iw.k = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::RowVectorXcd w = g.row(i);
    Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(n);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < i; ++j) {
        Complex c = iw.k.row(j).dot(w);
        coef(j) += c;
        w -= c * iw.k.row(j);
      }
    }
    double norm = w.norm();
    if (norm < 1e-250) throw std::invalid_argument("singular matrix in Iwasawa decomposition");
    iw.a(i) = norm;
    iw.k.row(i) = w / norm;
    for (int j = 0; j < i; ++j) iw.u(i, j) = coef(j) / iw.a(j);
  }
  return iw;
}

namespace {

// tau(k) for unitary k, by Schur diagonalization.  A -1 eigenvalue would sit
// on the branch cut of the logarithm, so such k are split into a square.
CMatrix unitary_matrix(const RepBasis& rb, const CMatrix& k, int depth = 0) {
  const int n = static_cast<int>(k.rows());
  const int d = rb.dim();
  Eigen::ComplexSchur<CMatrix> schur(k);
  if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition failed");
  const CMatrix& Q = schur.matrixU();
  Eigen::VectorXcd eig(n);
  for (int i = 0; i < n; ++i) {
    Complex t = schur.matrixT()(i, i);
    eig(i) = t / std::abs(t);
  }
  double recon = (Q * eig.asDiagonal() * Q.adjoint() - k).cwiseAbs().maxCoeff();
  if (recon > 1e-9) throw std::runtime_error("unitary input expected");
  bool near_minus_one = false;
  for (int i = 0; i < n; ++i)
    if (std::abs(eig(i) + Complex(1, 0)) < 1e-8) near_minus_one = true;
  if (near_minus_one) {
    if (depth > 2) throw std::runtime_error("eigenvalue splitting failed to converge");
    Eigen::VectorXcd half(n);
    for (int i = 0; i < n; ++i) half(i) = std::exp(Complex(0, std::arg(eig(i)) / 2));
    CMatrix s = Q * half.asDiagonal() * Q.adjoint();
    CMatrix m = unitary_matrix(rb, s, depth + 1);
    return m * m;
  }
  CMatrix X = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) eig(i) = Complex(0, std::arg(eig(i)));
  X = Q * eig.asDiagonal() * Q.adjoint();
  CMatrix dX = CMatrix::Zero(d, d);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      Complex c = X(p - 1, q - 1);
      if (std::abs(c) > 0) dX += c * rb.E(p, q);
    }
  // dX is skew-hermitian; exponentiate through its hermitian partner.
  CMatrix B = Complex(0, -1) * dX;
  B = (B + CMatrix(B.adjoint())) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(B);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  Eigen::VectorXcd ph(d);
  for (int i = 0; i < d; ++i) ph(i) = std::exp(Complex(0, es.eigenvalues()(i)));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

CMatrix group_matrix(const Weight& lam, const CMatrix& g, Basis basis) {
  const int n = static_cast<int>(lam.size());
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("matrix size does not match weight length");
  const RepBasis& rb = rep_basis(lam);
  const int d = rb.dim();

  Iwasawa iw = iwasawa_lower(g);
  double scale = 1.0 + g.cwiseAbs().maxCoeff();
  CMatrix recon = iw.u * iw.a.cast<Complex>().asDiagonal();
  recon = recon * iw.k;
  if ((recon - g).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw std::runtime_error("Iwasawa reconstruction drift");

  // Unipotent factor: matrix logarithm of u is a terminating series, and the
  // representation of a strictly lower matrix is nilpotent of computable order.
  CMatrix N = iw.u - CMatrix::Identity(n, n);
  CMatrix X = CMatrix::Zero(n, n);
  CMatrix Npow = N;
  for (int m = 1; m < n; ++m) {
    X += (m % 2 == 1 ? 1.0 : -1.0) / m * Npow;
    Npow = Npow * N;
  }
  CMatrix dX = CMatrix::Zero(d, d);
  for (int p = 2; p <= n; ++p)
    for (int q = 1; q < p; ++q) {
      Complex c = X(p - 1, q - 1);
      if (std::abs(c) > 0) dX += c * rb.E(p, q);
    }
  long fmin = 0, fmax = 0;
  for (int c = 0; c < d; ++c) {
    Weight w = rb.patterns()[c].weight();
    long f = 0;
    for (int k = 0; k < n; ++k) f += (k + 1) * w[k];
    if (c == 0 || f < fmin) fmin = f;
    if (c == 0 || f > fmax) fmax = f;
  }
  CMatrix tu = CMatrix::Identity(d, d);
  CMatrix term = CMatrix::Identity(d, d);
  for (long m = 1; m <= fmax - fmin; ++m) {
    term = term * dX / static_cast<double>(m);
    tu += term;
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
  }

  Eigen::VectorXd ta(d);
  for (int c = 0; c < d; ++c) {
    Weight w = rb.patterns()[c].weight();
    double v = 1.0;
    for (int k = 0; k < n; ++k) v *= std::pow(iw.a(k), static_cast<double>(w[k]));
    ta(c) = v;
  }

  CMatrix tk = unitary_matrix(rb, iw.k);
  CMatrix out = tu * ta.cast<Complex>().asDiagonal();
  out = out * tk;

  if (unbarred(basis) == Basis::xi)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) out(r, c) *= rb.sqrt_norm(c) / rb.sqrt_norm(r);
  if (is_barred(basis)) out = out.conjugate();
  return out;
}

Eigen::VectorXcd coordinates(const LinCombo& v) {
  Basis target = is_barred(v.basis()) ? Basis::zeta_bar : Basis::zeta;
  LinCombo z = convert_basis(v, target);
  const RepBasis& rb = rep_basis(v.lam());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rb.dim());
  for (const auto& t : z.terms()) out(rb.index_of(t.pat)) += t.coef.value();
  return out;
}

}  // namespace rslab
