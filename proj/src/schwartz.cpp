#include "rslab/schwartz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "rslab/tensor_cg.hpp"

namespace rslab {

namespace {

Complex pow_int(Complex z, int e) {
  Complex r(1.0, 0.0);
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

}  // namespace

ExactPoly ExactPoly::constant(int rows, int cols, const SqrtRational& c) {
  ExactPoly p(rows, cols);
  p.add_term(std::vector<int>(rows * cols, 0), c);
  return p;
}

ExactPoly ExactPoly::monomial(int rows, int cols, const std::vector<int>& a,
                              const SqrtRational& c) {
  ExactPoly p(rows, cols);
  p.add_term(a, c);
  return p;
}

void ExactPoly::add_term(const std::vector<int>& a, const SqrtRational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(a.size()) != rows_ * cols_)
    throw std::invalid_argument("exponent vector has wrong length");
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), a,
      [](const ExactTerm& t, const std::vector<int>& key) { return t.a < key; });
  if (it != terms_.end() && it->a == a) {
    it->coef.add(c);
    if (it->coef.is_zero()) terms_.erase(it);
  } else {
    ExactTerm t;
    t.a = a;
    t.coef.add(c);
    terms_.insert(it, std::move(t));
  }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw std::invalid_argument("adding polynomials on different shapes");
  for (const auto& t : o.terms_)
    for (const auto& s : t.coef.terms()) add_term(t.a, s);
  return *this;
}

ExactPoly ExactPoly::scaled(const SqrtRational& s) const {
  ExactPoly out(rows_, cols_);
  if (s.is_zero()) return out;
  for (const auto& t : terms_)
    for (const auto& c : t.coef.terms()) out.add_term(t.a, c * s);
  return out;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw std::invalid_argument("multiplying polynomials on different shapes");
  ExactPoly out(rows_, cols_);
  std::vector<int> e(rows_ * cols_);
  for (const auto& t1 : terms_)
    for (const auto& t2 : o.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = t1.a[k] + t2.a[k];
      for (const auto& c1 : t1.coef.terms())
        for (const auto& c2 : t2.coef.terms()) out.add_term(e, c1 * c2);
    }
  return out;
}

bool ExactPoly::touches_row(int i) const {
  for (const auto& t : terms_)
    for (int j = 1; j <= cols_; ++j)
      if (t.a[(i - 1) * cols_ + (j - 1)] != 0) return true;
  return false;
}

bool ExactPoly::touches_col(int j) const {
  for (const auto& t : terms_)
    for (int i = 1; i <= rows_; ++i)
      if (t.a[(i - 1) * cols_ + (j - 1)] != 0) return true;
  return false;
}

ExactPoly ExactPoly::drop_last_row() const {
  if (touches_row(rows_))
    throw std::logic_error("polynomial involves the last row");
  ExactPoly out(rows_ - 1, cols_);
  for (const auto& t : terms_) {
    std::vector<int> a(t.a.begin(), t.a.end() - cols_);
    for (const auto& c : t.coef.terms()) out.add_term(a, c);
  }
  return out;
}

ExactPoly ExactPoly::drop_last_col() const {
  if (touches_col(cols_))
    throw std::logic_error("polynomial involves the last column");
  ExactPoly out(rows_, cols_ - 1);
  for (const auto& t : terms_) {
    std::vector<int> a;
    a.reserve(rows_ * (cols_ - 1));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j + 1 < cols_; ++j) a.push_back(t.a[i * cols_ + j]);
    for (const auto& c : t.coef.terms()) out.add_term(a, c);
  }
  return out;
}

ExactPoly ExactPoly::padded(int new_rows, int new_cols) const {
  if (new_rows < rows_ || new_cols < cols_)
    throw std::invalid_argument("padded shape must grow");
  ExactPoly out(new_rows, new_cols);
  for (const auto& t : terms_) {
    std::vector<int> a(new_rows * new_cols, 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) a[i * new_cols + j] = t.a[i * cols_ + j];
    for (const auto& c : t.coef.terms()) out.add_term(a, c);
  }
  return out;
}

Complex ExactPoly::eval(const CMatrix& z) const {
  if (z.rows() != rows_ || z.cols() != cols_)
    throw std::invalid_argument("evaluation point has wrong shape");
  Complex sum(0.0, 0.0);
  for (const auto& t : terms_) {
    Complex m(t.coef.value(), 0.0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m *= pow_int(z(i, j), t.a[i * cols_ + j]);
    sum += m;
  }
  return sum;
}

namespace {

// Transition coefficients of the one-row representation (l, 0, ..., 0) in
// the weight-monomial model: collect x^{gamp} from prod_i (sum_j z_{ji} x_j)
// raised to gam_i.  Enumerates nonnegative integer matrices with column sums
// gam and row sums gamp; each contributes prod_i gam_i!/prod_j k_{ji}! times
// the monomial z^k, and the whole sum carries sqrt(b(gam)/b(gamp)).
void one_row_distribute(const Weight& gam, int n, int i, std::vector<long>& rowleft,
                        std::vector<int>& expo, std::vector<long>& col,
                        const Rational& acc, ExactPoly* out) {
  if (i == n) {
    bool done = true;
    for (long r : rowleft)
      if (r != 0) done = false;
    if (done) out->add_term(expo, SqrtRational(acc));
    return;
  }
  // distribute gam[i] over rows j = 0..n-1 into col
  std::function<void(int, long)> rec = [&](int j, long left) {
    if (j == n - 1) {
      if (left > rowleft[j]) return;
      col[j] = left;
      rowleft[j] -= left;
      expo[j * n + i] += static_cast<int>(left);
      Weight colw(col.begin(), col.end());
      one_row_distribute(gam, n, i + 1, rowleft, expo, col,
                         acc * multinomial(colw), out);
      expo[j * n + i] -= static_cast<int>(left);
      rowleft[j] += left;
      col[j] = 0;
      return;
    }
    long cap = std::min(left, rowleft[j]);
    for (long k = 0; k <= cap; ++k) {
      col[j] = k;
      rowleft[j] -= k;
      expo[j * n + i] += static_cast<int>(k);
      rec(j + 1, left - k);
      expo[j * n + i] -= static_cast<int>(k);
      rowleft[j] += k;
      col[j] = 0;
    }
  };
  rec(0, gam[i]);
}

ExactPoly one_row_entry(const Weight& gamp, const Weight& gam) {
  const int n = static_cast<int>(gam.size());
  ExactPoly raw(n, n);
  std::vector<long> rowleft(gamp.begin(), gamp.end());
  std::vector<int> expo(n * n, 0);
  std::vector<long> col(n, 0);
  one_row_distribute(gam, n, 0, rowleft, expo, col, Rational(1), &raw);
  return raw.scaled(SqrtRational::sqrt_of(multinomial(gam) / multinomial(gamp)));
}

std::vector<ExactPoly> build_entry_block(const Weight& lam) {
  const int n = static_cast<int>(lam.size());
  if (!is_dominant(lam) || lam.back() < 0)
    throw std::invalid_argument("entry polynomials need a dominant top row with nonnegative entries");
  auto pats = enumerate_patterns(lam);
  const int dim = static_cast<int>(pats.size());
  bool one_row = true;
  for (int i = 1; i < n; ++i)
    if (lam[i] != 0) one_row = false;
  std::vector<ExactPoly> out(static_cast<std::size_t>(dim) * dim, ExactPoly(n, n));
  if (one_row) {
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        out[static_cast<std::size_t>(r) * dim + c] =
            one_row_entry(pats[r].weight(), pats[c].weight());
    return out;
  }

  // Split off the largest part: couple through the lower weight and the
  // one-row factor, using the orthonormal coupling coefficients.
  Weight low(lam.begin() + 1, lam.end());
  low.push_back(0);
  Weight box(n, 0);
  box[0] = lam[0];
  const auto& low_block = entry_polynomials(low);
  const auto& box_block = entry_polynomials(box);
  auto low_pats = enumerate_patterns(low);
  auto box_pats = enumerate_patterns(box);
  const int ldim = static_cast<int>(low_pats.size());
  const int bdim = static_cast<int>(box_pats.size());

  std::vector<std::vector<TensorTerm>> expans(dim);
  for (int r = 0; r < dim; ++r) expans[r] = tensor_expand(pats[r], low);

  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      ExactPoly acc(n, n);
      for (const auto& t1 : expans[r])
        for (const auto& t2 : expans[c]) {
          int l1 = static_cast<int>(pattern_index(low_pats, t1.m));
          int l2 = static_cast<int>(pattern_index(low_pats, t2.m));
          int b1 = static_cast<int>(pattern_index(box_pats, t1.p));
          int b2 = static_cast<int>(pattern_index(box_pats, t2.p));
          ExactPoly prod = low_block[static_cast<std::size_t>(l1) * ldim + l2] *
                           box_block[static_cast<std::size_t>(b1) * bdim + b2];
          acc += prod.scaled(t1.coef * t2.coef);
        }
      out[static_cast<std::size_t>(r) * dim + c] = std::move(acc);
    }
  return out;
}

}  // namespace

const std::vector<ExactPoly>& entry_polynomials(const Weight& lam) {
  static std::recursive_mutex mu;
  static std::map<std::string, std::unique_ptr<std::vector<ExactPoly>>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  std::string key = weight_key(lam);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (weyl_dimension_long(lam) > 512)
      throw std::invalid_argument("representation too large for entry polynomials");
    it = cache.emplace(key, std::make_unique<std::vector<ExactPoly>>(
                                build_entry_block(lam)))
             .first;
  }
  return *it->second;
}

ExactPoly entry_polynomial(const GTPattern& m1, const GTPattern& m2) {
  if (m1.top() != m2.top())
    throw std::invalid_argument("patterns belong to different representations");
  const auto& block = entry_polynomials(m1.top());
  auto pats = enumerate_patterns(m1.top());
  std::size_t dim = pats.size();
  return block[pattern_index(pats, m1) * dim + pattern_index(pats, m2)];
}

ExactPoly entry_polynomial_rect(const GTPattern& m1, const GTPattern& m2) {
  Weight mu0 = m1.top();
  mu0.push_back(0);
  if (m2.top() != mu0)
    throw std::invalid_argument("second pattern must extend the first top row by a zero");
  return entry_polynomial(m1.with_top(mu0), m2).drop_last_row();
}

MatPolynomial MatPolynomial::constant(int rows, int cols, Complex c) {
  MatPolynomial p(rows, cols);
  p.add_term(std::vector<int>(rows * cols, 0), std::vector<int>(rows * cols, 0), c);
  return p;
}

void MatPolynomial::add_term(const std::vector<int>& a, const std::vector<int>& b,
                             Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  if (static_cast<int>(a.size()) != rows_ * cols_ ||
      static_cast<int>(b.size()) != rows_ * cols_)
    throw std::invalid_argument("exponent vector has wrong length");
  auto key = std::make_pair(a, b);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const MatMonomial& t,
                                const std::pair<std::vector<int>, std::vector<int>>& k) {
                               if (t.a != k.first) return t.a < k.first;
                               return t.b < k.second;
                             });
  if (it != terms_.end() && it->a == a && it->b == b) {
    it->coef += c;
    if (it->coef == Complex(0.0, 0.0)) terms_.erase(it);
  } else {
    terms_.insert(it, MatMonomial{a, b, c});
  }
}

MatPolynomial& MatPolynomial::operator+=(const MatPolynomial& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw std::invalid_argument("adding polynomials on different shapes");
  for (const auto& t : o.terms_) add_term(t.a, t.b, t.coef);
  return *this;
}

MatPolynomial MatPolynomial::operator*(const MatPolynomial& o) const {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw std::invalid_argument("multiplying polynomials on different shapes");
  MatPolynomial out(rows_, cols_);
  std::vector<int> ea(rows_ * cols_), eb(rows_ * cols_);
  for (const auto& t1 : terms_)
    for (const auto& t2 : o.terms_) {
      for (std::size_t k = 0; k < ea.size(); ++k) {
        ea[k] = t1.a[k] + t2.a[k];
        eb[k] = t1.b[k] + t2.b[k];
      }
      out.add_term(ea, eb, t1.coef * t2.coef);
    }
  return out;
}

MatPolynomial MatPolynomial::scaled(Complex c) const {
  MatPolynomial out(rows_, cols_);
  for (const auto& t : terms_) out.add_term(t.a, t.b, t.coef * c);
  return out;
}

MatPolynomial MatPolynomial::conjugated() const {
  MatPolynomial out(rows_, cols_);
  for (const auto& t : terms_) out.add_term(t.b, t.a, std::conj(t.coef));
  return out;
}

MatPolynomial MatPolynomial::folded() const {
  MatPolynomial out(rows_, cols_);
  std::vector<int> zero(terms_.empty() ? 0 : terms_[0].a.size(), 0);
  for (const auto& t : terms_) {
    std::vector<int> a = t.a;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += t.b[i];
    out.add_term(a, zero, t.coef);
  }
  return out;
}

Complex MatPolynomial::eval(const CMatrix& z) const {
  if (z.rows() != rows_ || z.cols() != cols_)
    throw std::invalid_argument("evaluation point has wrong shape");
  Complex sum(0.0, 0.0);
  for (const auto& t : terms_) {
    Complex m = t.coef;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        m *= pow_int(z(i, j), t.a[i * cols_ + j]);
        m *= pow_int(std::conj(z(i, j)), t.b[i * cols_ + j]);
      }
    sum += m;
  }
  return sum;
}

double MatPolynomial::max_abs_coef() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
  return m;
}

MatPolynomial to_complex_poly(const ExactPoly& p, bool conjugate) {
  MatPolynomial out(p.rows(), p.cols());
  std::vector<int> zero(p.rows() * p.cols(), 0);
  for (const auto& t : p.terms()) {
    Complex c(t.coef.value(), 0.0);
    if (conjugate)
      out.add_term(zero, t.a, c);
    else
      out.add_term(t.a, zero, c);
  }
  return out;
}

double gaussian_weight(Field f, const CMatrix& z) {
  double s = 0.0;
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) s += std::norm(z(i, j));
  return std::exp(-M_PI * field_c(f) * s);
}

namespace {

LinCombo as_zeta(const LinCombo& v, bool barred) {
  if (is_barred(v.basis()) != barred)
    throw std::invalid_argument("vector has the wrong bar status");
  return convert_basis(v, barred ? Basis::zeta_bar : Basis::zeta);
}

void require_one_row(const Weight& lam) {
  for (std::size_t i = 1; i < lam.size(); ++i)
    if (lam[i] != 0) throw std::invalid_argument("weight is not of one-row type");
  if (lam[0] < 0) throw std::invalid_argument("weight is not of one-row type");
}

// Holomorphic monomial polynomial of the one-row family: for each pattern
// with weight gamma, sqrt(b(gamma)) z^gamma laid out along the given shape.
MatPolynomial monomial_family(const LinCombo& zeta_combo, int rows, int cols) {
  const int n = static_cast<int>(zeta_combo.lam().size());
  MatPolynomial out(rows, cols);
  std::vector<int> zero(rows * cols, 0);
  for (const auto& t : zeta_combo.terms()) {
    Weight gam = t.pat.weight();
    std::vector<int> a(rows * cols, 0);
    for (int i = 0; i < n; ++i) a[i] = static_cast<int>(gam[i]);
    double c = (t.coef * SqrtRational::sqrt_of(multinomial(gam))).value();
    out.add_term(a, zero, Complex(c, 0.0));
  }
  return out;
}

}  // namespace


namespace {

// Over the reals the variables are self-conjugate, so canonicalize by
// merging conjugate exponents; over the complexes keep both slots.
SchwartzFn make_schwartz(Field f, MatPolynomial p) {
  if (f == Field::R) p = p.folded();
  return SchwartzFn{f, std::move(p)};
}

}  // namespace

SchwartzFn phi_row(Field f, const LinCombo& v) {
  LinCombo z = as_zeta(v, false);
  require_one_row(z.lam());
  int n = static_cast<int>(z.lam().size());
  return make_schwartz(f, monomial_family(z, 1, n));
}

SchwartzFn phi_row_bar(Field f, const LinCombo& vbar) {
  LinCombo z = as_zeta(vbar, true);
  require_one_row(z.lam());
  int n = static_cast<int>(z.lam().size());
  return make_schwartz(f, monomial_family(z, 1, n).conjugated());
}

SchwartzFn phi_col(Field f, const LinCombo& vbar) {
  LinCombo z = as_zeta(vbar, true);
  require_one_row(z.lam());
  int n = static_cast<int>(z.lam().size());
  return make_schwartz(f, monomial_family(z, n, 1));
}

SchwartzFn phi_col_bar(Field f, const LinCombo& v) {
  LinCombo z = as_zeta(v, false);
  require_one_row(z.lam());
  int n = static_cast<int>(z.lam().size());
  return make_schwartz(f, monomial_family(z, n, 1).conjugated());
}

namespace {

ExactPoly pair_polynomial_square(const LinCombo& z1, const LinCombo& z2) {
  if (z1.lam() != z2.lam())
    throw std::invalid_argument("pairing requires a common representation");
  const Weight& lam = z1.lam();
  const int n = static_cast<int>(lam.size());
  const auto& block = entry_polynomials(lam);
  auto pats = enumerate_patterns(lam);
  std::size_t dim = pats.size();
  ExactPoly acc(n, n);
  for (const auto& t1 : z1.terms())
    for (const auto& t2 : z2.terms()) {
      std::size_t i1 = pattern_index(pats, t1.pat);
      std::size_t i2 = pattern_index(pats, t2.pat);
      acc += block[i1 * dim + i2].scaled(t1.coef * t2.coef);
    }
  return acc;
}

ExactPoly pair_polynomial_rect(const LinCombo& z1, const LinCombo& z2) {
  Weight mu0 = z1.lam();
  mu0.push_back(0);
  if (z2.lam() != mu0)
    throw std::invalid_argument("rectangular pairing needs tops mu and (mu, 0)");
  const int n = static_cast<int>(mu0.size());
  ExactPoly acc(n - 1, n);
  for (const auto& t1 : z1.terms())
    for (const auto& t2 : z2.terms())
      acc += entry_polynomial_rect(t1.pat, t2.pat).scaled(t1.coef * t2.coef);
  return acc;
}

}  // namespace

SchwartzFn phi_square(Field f, const LinCombo& v1bar, const LinCombo& v2) {
  ExactPoly acc = pair_polynomial_square(as_zeta(v1bar, true), as_zeta(v2, false));
  return make_schwartz(f, to_complex_poly(acc, false));
}

SchwartzFn phi_square_bar(Field f, const LinCombo& v1, const LinCombo& v2bar) {
  ExactPoly acc = pair_polynomial_square(as_zeta(v1, false), as_zeta(v2bar, true));
  return make_schwartz(f, to_complex_poly(acc, true));
}

SchwartzFn phi_rect(Field f, const LinCombo& v1bar, const LinCombo& v2) {
  ExactPoly acc = pair_polynomial_rect(as_zeta(v1bar, true), as_zeta(v2, false));
  return make_schwartz(f, to_complex_poly(acc, false));
}

SchwartzFn phi_rect_bar(Field f, const LinCombo& v1, const LinCombo& v2bar) {
  ExactPoly acc = pair_polynomial_rect(as_zeta(v1, false), as_zeta(v2bar, true));
  return make_schwartz(f, to_complex_poly(acc, true));
}

namespace {

// Derivative of a 1 x 1 polynomial in t (conj_var = false) or conj t (true).
MatPolynomial deriv_1x1(const MatPolynomial& p, bool conj_var) {
  MatPolynomial out(1, 1);
  for (const auto& t : p.terms()) {
    int e = conj_var ? t.b[0] : t.a[0];
    if (e == 0) continue;
    std::vector<int> a = t.a, b = t.b;
    (conj_var ? b[0] : a[0]) -= 1;
    out.add_term(a, b, t.coef * static_cast<double>(e));
  }
  return out;
}

// One raising step of the moment recursion: differentiate in one variable,
// rescale, and add i times the other (over R both are the plain variable).
MatPolynomial moment_step(const MatPolynomial& p, bool diff_conj, bool mult_conj) {
  const Complex inv_2pii(0.0, -1.0 / (2.0 * M_PI));
  MatPolynomial out = deriv_1x1(p, diff_conj).scaled(inv_2pii);
  std::vector<int> a(1, 0), b(1, 0);
  (mult_conj ? b[0] : a[0]) = 1;
  MatPolynomial lin(1, 1);
  lin.add_term(a, b, Complex(0.0, 1.0));
  out += p * lin;
  return out;
}

}  // namespace

MatPolynomial gauss_moment(Field f, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative moment exponent");
  MatPolynomial p = MatPolynomial::constant(1, 1, Complex(1.0, 0.0));
  if (f == Field::R) {
    for (int k = 0; k < a + b; ++k) p = moment_step(p, false, false);
    return p;
  }
  for (int k = 0; k < a; ++k) p = moment_step(p, false, true);
  for (int k = 0; k < b; ++k) p = moment_step(p, true, false);
  return p;
}

SchwartzFn fourier_column(const SchwartzFn& phi, int eps) {
  if (phi.cols() != 1) throw std::invalid_argument("fourier_column needs an n x 1 shape");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
  const int n = phi.rows();
  MatPolynomial out(1, n);
  for (const auto& mono : phi.poly.terms()) {
    MatPolynomial acc = MatPolynomial::constant(1, n, mono.coef);
    for (int i = 0; i < n; ++i) {
      MatPolynomial mom = gauss_moment(phi.field, mono.a[i], mono.b[i]);
      MatPolynomial placed(1, n);
      for (const auto& u : mom.terms()) {
        std::vector<int> a(n, 0), b(n, 0);
        a[i] = u.a[0];
        b[i] = u.b[0];
        // substitute t -> -eps t
        double sign = ((u.a[0] + u.b[0]) % 2 == 0) ? 1.0 : -static_cast<double>(eps);
        placed.add_term(a, b, u.coef * sign);
      }
      acc = acc * placed;
    }
    out += acc;
  }
  return make_schwartz(phi.field, std::move(out));
}

}  // namespace rslab
