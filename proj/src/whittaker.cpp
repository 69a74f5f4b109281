#include "rslab/whittaker.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex ipow(Complex z, long m) {
  if (m < 0) {
    z = Complex(1.0, 0.0) / z;
    m = -m;
  }
  Complex r(1.0, 0.0);
  for (; m > 0; --m) r *= z;
  return r;
}

Complex unit_part(Complex z) {
  double a = std::abs(z);
  if (a < 1e-300) throw std::invalid_argument("zero has no phase");
  return z / a;
}

double binom_d(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

double fact_d(std::size_t j) {
  double r = 1.0;
  for (std::size_t i = 2; i <= j; ++i) r *= static_cast<double>(i);
  return r;
}

// (j - 1)!! for even j >= 0.
double semifact(std::size_t j) {
  double r = 1.0;
  for (std::size_t i = 3; i < j; i += 2) r *= static_cast<double>(i);
  return r;
}

// Coefficients of prod_j (p_j + z q_j)^(e_j) as a polynomial in z, seeded
// with the monomial coefficient.
std::vector<Complex> line_poly(Complex seed, const std::vector<Complex>& p,
                               const std::vector<Complex>& q, const std::vector<int>& e) {
  std::vector<Complex> zc{seed};
  for (std::size_t j = 0; j < e.size(); ++j)
    for (int r = 0; r < e[j]; ++r) {
      std::vector<Complex> nz(zc.size() + 1, Complex(0.0, 0.0));
      for (std::size_t k = 0; k < zc.size(); ++k) {
        nz[k] += zc[k] * p[j];
        nz[k + 1] += zc[k] * q[j];
      }
      zc = std::move(nz);
    }
  return zc;
}

// int_F phi(p + z q) psi_{-eps}(z) d_F z in closed form for a gaussian
// Schwartz function phi on single-row matrices: completing the square
// reduces every monomial to shifted gaussian moments.
Complex fourier_line_integral(const SchwartzFn& phi, const Eigen::RowVectorXcd& p,
                              const Eigen::RowVectorXcd& q, int eps) {
  const int m = static_cast<int>(p.size());
  if (phi.poly.rows() * phi.poly.cols() != m || q.size() != m)
    throw std::invalid_argument("line integral shape mismatch");
  if (phi.field == Field::R) {
    double s = 0.0, pq = 0.0, pp = 0.0;
    std::vector<Complex> pv(m), qv(m);
    for (int j = 0; j < m; ++j) {
      double pj = p(j).real(), qj = q(j).real();
      s += qj * qj;
      pq += pj * qj;
      pp += pj * pj;
      pv[j] = pj;
      qv[j] = qj;
    }
    if (s < 1e-280) throw std::invalid_argument("degenerate line direction");
    const Complex mu = 2.0 * Complex(pq, static_cast<double>(eps));
    const Complex e0 = kPi * mu * mu / (4.0 * s) - kPi * pp;
    if (e0.real() < -700.0) return Complex(0.0, 0.0);
    const Complex w0 = std::exp(e0);
    Complex total(0.0, 0.0);
    for (const auto& t : phi.poly.terms()) {
      std::vector<int> e(m);
      for (int j = 0; j < m; ++j) e[j] = t.a[j] + t.b[j];
      std::vector<Complex> zc = line_poly(t.coef, pv, qv, e);
      for (std::size_t k = 0; k < zc.size(); ++k) {
        Complex mk(0.0, 0.0);
        for (std::size_t j = 0; j <= k; j += 2)
          mk += binom_d(k, j) * ipow(-mu / (2.0 * s), static_cast<long>(k - j)) *
                semifact(j) /
                (std::pow(2.0 * kPi, 0.5 * static_cast<double>(j)) *
                 std::pow(s, 0.5 * static_cast<double>(j + 1)));
        total += zc[k] * mk;
      }
    }
    return w0 * total;
  }
  double s = 0.0, pp = 0.0;
  Complex u(0.0, 0.0);
  std::vector<Complex> pv(m), qv(m), pcv(m), qcv(m);
  for (int j = 0; j < m; ++j) {
    s += std::norm(q(j));
    pp += std::norm(p(j));
    u += q(j) * std::conj(p(j));
    pv[j] = p(j);
    qv[j] = q(j);
    pcv[j] = std::conj(p(j));
    qcv[j] = std::conj(q(j));
  }
  if (s < 1e-280) throw std::invalid_argument("degenerate line direction");
  const Complex A = u + Complex(0.0, static_cast<double>(eps));
  const Complex B = std::conj(u) + Complex(0.0, static_cast<double>(eps));
  const Complex e0 = 2.0 * kPi * (A * B / s - pp);
  if (e0.real() < -700.0) return Complex(0.0, 0.0);
  const Complex w0 = std::exp(e0);
  Complex total(0.0, 0.0);
  for (const auto& t : phi.poly.terms()) {
    std::vector<Complex> ca = line_poly(t.coef, pv, qv, t.a);
    std::vector<Complex> cb = line_poly(Complex(1.0, 0.0), pcv, qcv, t.b);
    for (std::size_t al = 0; al < ca.size(); ++al)
      for (std::size_t be = 0; be < cb.size(); ++be) {
        Complex mk(0.0, 0.0);
        const std::size_t jm = std::min(al, be);
        for (std::size_t j = 0; j <= jm; ++j)
          mk += binom_d(al, j) * binom_d(be, j) * fact_d(j) *
                ipow(-B / s, static_cast<long>(al - j)) *
                ipow(-A / s, static_cast<long>(be - j)) /
                (std::pow(2.0 * kPi * s, static_cast<double>(j)) * s);
        total += ca[al] * cb[be] * mk;
      }
  }
  return w0 * total;
}

struct UnitGrid {
  std::vector<Complex> u;
  std::vector<double> w;
};

UnitGrid unit_grid(Field f, int res) {
  UnitGrid g;
  if (f == Field::R) {
    g.u = {Complex(1.0, 0.0), Complex(-1.0, 0.0)};
    g.w = {0.5, 0.5};
    return g;
  }
  for (int j = 0; j < res; ++j) {
    double th = 2.0 * kPi * j / res;
    g.u.push_back(Complex(std::cos(th), std::sin(th)));
    g.w.push_back(1.0 / res);
  }
  return g;
}

// Shared integration core for the rank-raising kernel on GL(2): integrate
// over GL(1) = {phase} x {scale} with either the Schwartz value on the first
// row (section route) or its gaussian line integral along the second row
// (Whittaker route).
Complex god_plus_core(Field f, const SectionEvaluator& sec1, Complex nu1, long dn,
                      Complex nun, const SchwartzFn& phi, const CMatrix& g, int eps,
                      bool whittaker, const Quadrature& qt, const UnitGrid& ug) {
  if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("rank two only");
  const double c = field_c(f);
  const Complex detg = g.determinant();
  const double adet = std::abs(detg);
  if (adet < 1e-250) throw std::invalid_argument("singular evaluation point");
  const Complex pref = ipow(detg / adet, dn) * std::exp((nun + 0.5) * c * std::log(adet));
  const Eigen::RowVectorXcd r0 = g.row(0), r1 = g.row(1);
  const double decay = c * (nun.real() + 1.0 - nu1.real());
  Complex acc(0.0, 0.0);
  for (std::size_t iu = 0; iu < ug.u.size(); ++iu) {
    const Complex uph = ug.u[iu];
    const Complex updn = ipow(uph, dn);
    for (std::size_t it = 0; it < qt.size(); ++it) {
      const double t = qt.x[it];
      const double lt = std::log(t);
      if (decay * lt < -650.0) continue;
      const Complex h = uph * t;
      Complex zval;
      if (whittaker) {
        zval = fourier_line_integral(phi, h * r0, h * r1, eps);
      } else {
        const Eigen::RowVectorXcd prow = h * r0;
        double ge = 0.0;
        for (int j = 0; j < prow.size(); ++j) ge += std::norm(prow(j));
        ge *= -kPi * c;
        if (ge < -700.0) continue;
        CMatrix pm(1, prow.size());
        pm.row(0) = prow;
        zval = phi.poly.eval(pm) * std::exp(ge);
      }
      if (zval == Complex(0.0, 0.0)) continue;
      CMatrix hinv(1, 1);
      hinv(0, 0) = Complex(1.0, 0.0) / h;
      acc += ug.w[iu] * qt.w[it] * 2.0 * c * zval * sec1(hinv) * updn *
             std::exp((nun + 1.0) * c * lt);
    }
  }
  return pref * acc;
}

LinCombo rank1_top_vector(const Weight& d, bool barred) {
  Weight dh = hat(d);
  if (barred) return LinCombo::unit(Basis::zeta_bar, highest_pattern(negate(dh)));
  return LinCombo::unit(Basis::zeta, highest_pattern(dh));
}

// Rectangular gaussian kernel whose rank-raising integral reproduces the
// minimal-type section with vector v: tokens are shifted so the second slot
// has polynomial top row.
SchwartzFn make_plus_kernel(Field f, const Weight& d, const LinCombo& v, bool barred) {
  const long d2 = d.at(1);
  if (!barred) {
    LinCombo vz = convert_basis(v, Basis::zeta);
    LinCombo v2(Basis::zeta, shifted(d, -d2));
    for (const auto& t : vz.terms()) v2.add(t.pat.shifted(-d2), t.coef);
    LinCombo v1bar = LinCombo::unit(Basis::zeta_bar, highest_pattern(hat(shifted(d, -d2))));
    return phi_rect(f, v1bar, v2);
  }
  LinCombo vz = convert_basis(v, Basis::zeta_bar);
  LinCombo v2bar(Basis::zeta_bar, shifted(negate(d), d2));
  for (const auto& t : vz.terms()) v2bar.add(t.pat.shifted(d2), t.coef);
  LinCombo v1 = LinCombo::unit(Basis::zeta, highest_pattern(hat(shifted(negate(d), d2))));
  return phi_rect_bar(f, v1, v2bar);
}

Complex check_rank2(const Weight& d, const std::vector<Complex>& nu) {
  if (d.size() != 2 || nu.size() != 2) throw std::invalid_argument("rank two only");
  return nu[1];
}

}  // namespace

Iwasawa iwasawa_upper(const CMatrix& g) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n || n == 0) throw std::invalid_argument("square matrix required");
  Iwasawa iw;
  iw.u = CMatrix::Identity(n, n);
  iw.a = Eigen::VectorXd::Zero(n);
  iw.k = CMatrix::Zero(n, n);
  for (int i = n - 1; i >= 0; --i) {
    Eigen::RowVectorXcd w = g.row(i);
    Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(n);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = n - 1; j > i; --j) {
        Complex c = iw.k.row(j).dot(w);
        coef(j) += c;
        w -= c * iw.k.row(j);
      }
    double norm = w.norm();
    if (norm < 1e-250) throw std::invalid_argument("singular matrix in Iwasawa decomposition");
    iw.a(i) = norm;
    iw.k.row(i) = w / norm;
    for (int j = i + 1; j < n; ++j) iw.u(i, j) = coef(j) / iw.a(j);
  }
  return iw;
}

KGrid k_grid(Field f, int n, int res) {
  if (res < 2) throw std::invalid_argument("resolution too small");
  KGrid kg;
  auto push = [&kg](const CMatrix& m, double w) {
    kg.points.push_back(m);
    kg.weights.push_back(w);
  };
  if (n == 1) {
    CMatrix m(1, 1);
    if (f == Field::R) {
      m(0, 0) = Complex(1.0, 0.0);
      push(m, 0.5);
      m(0, 0) = Complex(-1.0, 0.0);
      push(m, 0.5);
    } else {
      for (int j = 0; j < res; ++j) {
        double th = 2.0 * kPi * j / res;
        m(0, 0) = Complex(std::cos(th), std::sin(th));
        push(m, 1.0 / res);
      }
    }
    return kg;
  }
  if (n == 2 && f == Field::R) {
    for (int j = 0; j < res; ++j) {
      double th = 2.0 * kPi * j / res;
      double cs = std::cos(th), sn = std::sin(th);
      CMatrix rot(2, 2);
      rot << cs, -sn, sn, cs;
      push(rot, 0.5 / res);
      CMatrix ref(2, 2);
      ref << cs, -sn, -sn, -cs;
      push(ref, 0.5 / res);
    }
    return kg;
  }
  if (n == 2 && f == Field::C) {
    Quadrature gl = gauss_legendre(res);
    for (std::size_t ix = 0; ix < gl.size(); ++ix) {
      double x = 0.5 * (gl.x[ix] + 1.0);
      double wx = 0.5 * gl.w[ix];
      double ct = std::sqrt(1.0 - x), st = std::sqrt(x);
      for (int j1 = 0; j1 < res; ++j1)
        for (int j2 = 0; j2 < res; ++j2)
          for (int j3 = 0; j3 < res; ++j3) {
            double p1 = 2.0 * kPi * j1 / res;
            double p2 = 2.0 * kPi * j2 / res;
            double dl = 2.0 * kPi * j3 / res;
            Complex al = ct * Complex(std::cos(p1), std::sin(p1));
            Complex be = st * Complex(std::cos(p2), std::sin(p2));
            Complex ph(std::cos(dl), std::sin(dl));
            CMatrix m(2, 2);
            m << al, -std::conj(be) * ph, be, std::conj(al) * ph;
            push(m, wx / (static_cast<double>(res) * res * res));
          }
    }
    return kg;
  }
  if (n == 3 && f == Field::R) {
    Quadrature gl = gauss_legendre(res);
    for (std::size_t ix = 0; ix < gl.size(); ++ix) {
      double cb = gl.x[ix];
      double sb = std::sqrt(std::max(0.0, 1.0 - cb * cb));
      double wu = 0.5 * gl.w[ix];
      for (int j1 = 0; j1 < res; ++j1)
        for (int j2 = 0; j2 < res; ++j2) {
          double ph = 2.0 * kPi * j1 / res;
          double ps = 2.0 * kPi * j2 / res;
          double cf = std::cos(ph), sf = std::sin(ph);
          double cp = std::cos(ps), sp = std::sin(ps);
          CMatrix m(3, 3);
          m << cf * cb * cp - sf * sp, -cf * cb * sp - sf * cp, cf * sb,
               sf * cb * cp + cf * sp, -sf * cb * sp + cf * cp, sf * sb,
               -sb * cp, sb * sp, cb;
          double w = 0.5 * wu / (static_cast<double>(res) * res);
          push(m, w);
          push(-m, w);
        }
    }
    return kg;
  }
  throw std::invalid_argument("no grid for this compact group");
}

Complex psi_character(Field f, int eps, const CMatrix& x) {
  double s = 0.0;
  for (int i = 0; i + 1 < x.rows(); ++i) s += x(i, i + 1).real();
  return std::exp(Complex(0.0, 2.0 * kPi * field_c(f) * eps * s));
}

SectionEvaluator::SectionEvaluator(Field f, const Weight& d, std::vector<Complex> nu,
                                   const LinCombo& v, bool barred)
    : field_(f), nu_(std::move(nu)), dn_(d.empty() ? 0 : d.back()) {
  const int n = static_cast<int>(d.size());
  if (n == 0 || nu_.size() != d.size()) throw std::invalid_argument("rank mismatch");
  Weight lam = barred ? negate(d) : d;
  if (!is_dominant(lam)) throw std::invalid_argument("parameter is not dominant");
  if (f == Field::R && !is_zero_one(lam))
    throw std::invalid_argument("real parameters need entries in {0, 1}");
  if (is_barred(v.basis()) != barred) throw std::invalid_argument("wrong bar status");
  if (v.lam() != lam) throw std::invalid_argument("vector lives in the wrong representation");
  LinCombo vz = convert_basis(v, barred ? Basis::zeta_bar : Basis::zeta);
  const long shift = barred ? dn_ : -dn_;
  const GTPattern top = highest_pattern(shifted(lam, shift));
  ExactPoly acc(n, n);
  for (const auto& t : vz.terms()) acc += entry_polynomial(top, t.pat.shifted(shift)).scaled(t.coef);
  ktype_ = to_complex_poly(acc, barred);
}

Complex SectionEvaluator::operator()(const CMatrix& g) const {
  const int n = rank();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("wrong shape");
  Iwasawa iw = iwasawa_lower(g);
  const double c = field_c(field_);
  Complex le(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    double rho = 0.5 * (n + 1) - (i + 1);
    le += (nu_[i] - rho) * c * std::log(iw.a(i));
  }
  return std::exp(le) * ipow(iw.k.determinant(), dn_) * ktype_.eval(iw.k);
}

Complex section_value(Field f, const Weight& d, const std::vector<Complex>& nu,
                      const LinCombo& v, const CMatrix& g, bool barred) {
  return SectionEvaluator(f, d, nu, v, barred)(g);
}

std::vector<Complex> whittaker_radial(Field f, const Weight& d,
                                      const std::vector<Complex>& nu,
                                      const std::vector<std::vector<double>>& points,
                                      int half_nodes) {
  const int n = static_cast<int>(d.size());
  if (n < 1 || n > 3) throw std::invalid_argument("rank 1 to 3 only");
  if (nu.size() != d.size()) throw std::invalid_argument("rank mismatch");
  if (!is_dominant(d) && !is_dominant(negate(d)))
    throw std::invalid_argument("need a dominant parameter or its negative");
  const double c = field_c(f);
  std::vector<Complex> out;
  out.reserve(points.size());
  if (n == 1) {
    for (const auto& a : points) {
      if (a.size() != 1 || a[0] <= 0.0) throw std::invalid_argument("bad torus point");
      out.push_back(std::exp(nu[0] * c * std::log(a[0])));
    }
    return out;
  }
  const Quadrature q = mult_axis(half_nodes, 2.8);
  const std::size_t N = q.size();
  std::vector<std::vector<double>> tgrid;
  if (n == 2) {
    tgrid.reserve(N);
    for (double t : q.x) tgrid.push_back({t});
  } else {
    tgrid.reserve(N * N);
    for (double t1 : q.x)
      for (double t2 : q.x) tgrid.push_back({t1, t2});
  }
  const std::vector<Complex> inner =
      whittaker_radial(f, hat(d), std::vector<Complex>(nu.begin(), nu.end() - 1), tgrid, half_nodes);
  std::vector<long> m(n - 1);
  for (int i = 0; i + 1 < n; ++i) m[i] = std::labs(d[i] - d[n - 1]);
  Complex gprod(1.0, 0.0);
  for (int i = 0; i + 1 < n; ++i) gprod *= gamma_F(f, nu[n - 1] - nu[i] + 1.0, m[i]);
  const Complex nc = nu[n - 1] * c;
  std::vector<std::vector<Complex>> lpw(n - 1, std::vector<Complex>(N));
  for (int i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < N; ++j) lpw[i][j] = (-nc - static_cast<double>(m[i])) * std::log(q.x[j]);
  for (const auto& a : points) {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("bad torus point");
    for (double ai : a)
      if (ai <= 0.0) throw std::invalid_argument("bad torus point");
    Complex lp(0.0, 0.0);
    for (int i = 0; i < n; ++i)
      lp += (nc + static_cast<double>(i + 1 < n ? m[i] : 0)) * std::log(a[i]);
    const Complex pref = std::exp(lp) / gprod;
    Complex sum(0.0, 0.0);
    if (n == 2) {
      for (std::size_t j = 0; j < N; ++j) {
        const double t = q.x[j];
        const double ee = -kPi * c * (t * t / (a[1] * a[1]) + a[0] * a[0] / (t * t));
        if (ee < -745.0) continue;
        sum += inner[j] * std::exp(lpw[0][j] + ee) * (q.w[j] * 2.0 * c);
      }
    } else {
      std::vector<Complex> f1(N), f2(N);
      for (std::size_t j = 0; j < N; ++j) {
        const double t = q.x[j];
        const double e1 = -kPi * c * (t * t / (a[1] * a[1]) + a[0] * a[0] / (t * t));
        const double e2 = -kPi * c * (t * t / (a[2] * a[2]) + a[1] * a[1] / (t * t));
        f1[j] = e1 < -745.0 ? Complex(0.0, 0.0) : std::exp(lpw[0][j] + e1) * (q.w[j] * 2.0 * c);
        f2[j] = e2 < -745.0 ? Complex(0.0, 0.0) : std::exp(lpw[1][j] + e2) * (q.w[j] * 2.0 * c);
      }
      for (std::size_t j = 0; j < N; ++j) {
        if (f1[j] == Complex(0.0, 0.0)) continue;
        Complex row(0.0, 0.0);
        for (std::size_t k = 0; k < N; ++k) {
          if (f2[k] == Complex(0.0, 0.0)) continue;
          row += inner[j * N + k] * f2[k];
        }
        sum += f1[j] * row;
      }
    }
    out.push_back(pref * sum);
  }
  return out;
}

Complex jacquet_of_section(Field f, int n,
                           const std::function<Complex(const CMatrix&)>& sec,
                           const CMatrix& g, int eps, const Quadrature& osc) {
  if (n == 1) return sec(g);
  if (n != 2) throw std::invalid_argument("unipotent quadrature only up to rank 2");
  Complex acc(0.0, 0.0);
  CMatrix x = CMatrix::Identity(2, 2);
  if (f == Field::R) {
    for (std::size_t i = 0; i < osc.size(); ++i) {
      x(0, 1) = osc.x[i];
      acc += osc.w[i] * sec(x * g) * std::exp(Complex(0.0, -2.0 * kPi * eps * osc.x[i]));
    }
    return acc;
  }
  for (std::size_t i = 0; i < osc.size(); ++i) {
    Complex row(0.0, 0.0);
    for (std::size_t j = 0; j < osc.size(); ++j) {
      x(0, 1) = Complex(osc.x[i], osc.x[j]);
      row += osc.w[j] * sec(x * g);
    }
    acc += 2.0 * osc.w[i] * row * std::exp(Complex(0.0, -4.0 * kPi * eps * osc.x[i]));
  }
  return acc;
}

Complex whittaker_jacquet(Field f, const Weight& d, const std::vector<Complex>& nu,
                          const LinCombo& v, const CMatrix& g, int eps,
                          const Quadrature& osc, bool barred) {
  SectionEvaluator sec(f, d, nu, v, barred);
  return jacquet_of_section(
      f, static_cast<int>(d.size()), [&sec](const CMatrix& h) { return sec(h); }, g, eps, osc);
}

Complex godement_plus_section(Field f, const Weight& dhat,
                              const std::vector<Complex>& nuhat, const LinCombo& vhat,
                              long dn, Complex nun, const SchwartzFn& phi,
                              const CMatrix& g, int half_nodes, bool barred) {
  if (dhat.size() != 1 || nuhat.size() != 1) throw std::invalid_argument("rank two only");
  SectionEvaluator sec1(f, dhat, nuhat, vhat, barred);
  const Quadrature qt = mult_axis(half_nodes, 3.2);
  const UnitGrid ug = unit_grid(f, 48);
  return god_plus_core(f, sec1, nuhat[0], dn, nun, phi, g, 0, false, qt, ug);
}

Complex whittaker_godement_plus(Field f, const Weight& dhat,
                                const std::vector<Complex>& nuhat,
                                const LinCombo& vhat, long dn, Complex nun,
                                const SchwartzFn& phi, const CMatrix& g, int eps,
                                int half_nodes, bool barred) {
  if (dhat.size() != 1 || nuhat.size() != 1) throw std::invalid_argument("rank two only");
  SectionEvaluator sec1(f, dhat, nuhat, vhat, barred);
  const Quadrature qt = mult_axis(half_nodes, 3.2);
  const UnitGrid ug = unit_grid(f, 48);
  return god_plus_core(f, sec1, nuhat[0], dn, nun, phi, g, eps, true, qt, ug);
}

Whittaker2::Whittaker2(Field f, const Weight& d, const std::vector<Complex>& nu,
                       const LinCombo& v, int eps, int half_nodes, bool barred)
    : field_(f),
      eps_(eps),
      dn_(d.at(1)),
      nu1_(nu.at(0)),
      nun_(check_rank2(d, nu)),
      gamma_div_(gamma_F(f, nu.at(1) - nu.at(0) + 1.0,
                         barred ? d.at(1) - d.at(0) : d.at(0) - d.at(1))),
      sec1_(f, hat(d), {nu.at(0)}, rank1_top_vector(d, barred), barred),
      phi_(make_plus_kernel(f, d, v, barred)),
      qt_(mult_axis(half_nodes, 3.2)) {}

Complex Whittaker2::operator()(const CMatrix& g) const {
  const UnitGrid ug = unit_grid(field_, 48);
  return god_plus_core(field_, sec1_, nu1_, dn_, nun_, phi_, g, eps_, true, qt_, ug) /
         gamma_div_;
}

Complex whittaker_godement2(Field f, const Weight& d, const std::vector<Complex>& nu,
                            const LinCombo& v, const CMatrix& g, int eps,
                            int half_nodes, bool barred) {
  return Whittaker2(f, d, nu, v, eps, half_nodes, barred)(g);
}

Complex godement_zero_section(Field f, const Weight& d,
                              const std::vector<Complex>& nu, const LinCombo& v,
                              long l, Complex s, const SchwartzFn& phi,
                              const CMatrix& g, int half_nodes, int kres, bool barred) {
  check_rank2(d, nu);
  if (phi.poly.rows() != 2 || phi.poly.cols() != 2 || g.rows() != 2 || g.cols() != 2)
    throw std::invalid_argument("rank two only");
  SectionEvaluator sec(f, d, nu, v, barred);
  const double c = field_c(f);
  // Left translation by g^{-1} moves the group point into the Schwartz
  // argument; in lower-triangular coordinates the section value is then
  // explicit, so no matrix decomposition happens at any sample.  The
  // unipotent entry is rescaled by the torus, w = a_2 u, to keep the
  // gaussian width fixed, at the price of a factor a_2^{-c} in the measure.
  const CMatrix ginv = g.inverse();
  const Complex detg = g.determinant();
  const Quadrature qa = mult_axis(half_nodes, 3.2);
  const Quadrature qu = real_axis(half_nodes + half_nodes / 12, 1.8);
  const KGrid kg = k_grid(f, 2, kres);
  std::vector<Complex> kfac(kg.size());
  for (std::size_t j = 0; j < kg.size(); ++j)
    kfac[j] = ipow(unit_part(kg.points[j].determinant()), l) * sec(kg.points[j]);
  const bool cplx = f == Field::C;
  const std::size_t nu2 = cplx ? qu.size() : 1;
  Complex acc(0.0, 0.0);
  CMatrix ua(2, 2);
  for (std::size_t i1 = 0; i1 < qa.size(); ++i1) {
    const double a1 = qa.x[i1];
    for (std::size_t i2 = 0; i2 < qa.size(); ++i2) {
      const double a2 = qa.x[i2];
      // eta_{nu - rho}(a) |det a|^{s + 1/2} with the rescaling density
      const Complex apow =
          std::exp((nu[0] + s) * c * std::log(a1) + (nu[1] + s) * c * std::log(a2)) * qa.w[i1] *
          qa.w[i2] * (2.0 * c) * (2.0 * c);
      ua(0, 0) = a1;
      ua(0, 1) = 0.0;
      ua(1, 1) = a2;
      for (std::size_t ju = 0; ju < qu.size(); ++ju)
        for (std::size_t jv = 0; jv < nu2; ++jv) {
          ua(1, 0) = cplx ? Complex(qu.x[ju], qu.x[jv]) : Complex(qu.x[ju], 0.0);
          const double wu = cplx ? 2.0 * qu.w[ju] * qu.w[jv] : qu.w[ju];
          const CMatrix base = ginv * ua;
          const double ge = -kPi * c * base.squaredNorm();
          if (ge < -700.0) continue;
          Complex ksum(0.0, 0.0);
          for (std::size_t j = 0; j < kg.size(); ++j)
            ksum += kg.weights[j] * phi.poly.eval(base * kg.points[j]) * kfac[j];
          acc += apow * wu * std::exp(ge) * ksum;
        }
    }
  }
  return ipow(unit_part(detg), -l) * std::exp(-(s + 0.5) * c * std::log(std::abs(detg))) * acc;
}

Complex whittaker_godement_zero(Field f, const Weight& d,
                                const std::vector<Complex>& nu, const LinCombo& v,
                                long l, Complex s, const SchwartzFn& phi,
                                const CMatrix& g, int eps, int half_nodes,
                                int kres, bool barred) {
  check_rank2(d, nu);
  if (phi.poly.rows() != 2 || phi.poly.cols() != 2 || g.rows() != 2 || g.cols() != 2)
    throw std::invalid_argument("rank two only");
  const double c = field_c(f);
  const Weight lam = barred ? negate(d) : d;
  const RepBasis& rb = rep_basis(lam);
  const int dim = rb.dim();
  const Basis bas = barred ? Basis::zeta_bar : Basis::zeta;
  // the radial factors sit inside every torus sample, so they get a finer
  // grid than the outer axes
  const int radial_nodes = half_nodes + 48;
  std::vector<Whittaker2> wfun;
  wfun.reserve(dim);
  for (int i = 0; i < dim; ++i)
    wfun.emplace_back(f, d, nu, LinCombo::unit(bas, rb.patterns()[i]), eps, radial_nodes, barred);
  const Eigen::VectorXcd cv = coordinates(convert_basis(v, bas));
  const KGrid kg = k_grid(f, 2, kres);
  std::vector<Eigen::VectorXcd> ycol;
  ycol.reserve(kg.size());
  std::vector<Complex> detl(kg.size());
  for (std::size_t j = 0; j < kg.size(); ++j) {
    ycol.push_back(group_matrix(lam, kg.points[j], bas) * cv);
    detl[j] = ipow(unit_part(kg.points[j].determinant()), l);
  }
  // Translating the integration variable by g^{-1} on the left moves the
  // group point into the Schwartz argument.  In upper-unipotent coordinates
  // the character of the Whittaker function then sits on its own axis, which
  // collapses to the closed gaussian line integral, so no oscillatory
  // quadrature remains.
  const CMatrix ginv = g.inverse();
  const Complex detg = g.determinant();
  const Quadrature qa = mult_axis(half_nodes, 3.2);
  Complex acc(0.0, 0.0);
  CMatrix ad = CMatrix::Zero(2, 2);
  Eigen::RowVectorXcd pf(4), qf(4);
  for (std::size_t i1 = 0; i1 < qa.size(); ++i1) {
    const double a1 = qa.x[i1];
    for (std::size_t i2 = 0; i2 < qa.size(); ++i2) {
      const double a2 = qa.x[i2];
      // |det a|^{s+1/2} with the unipotent-left Haar density folded in
      const Complex apow =
          std::exp((s - 0.5) * c * std::log(a1) + (s + 1.5) * c * std::log(a2)) * qa.w[i1] *
          qa.w[i2] * (2.0 * c) * (2.0 * c);
      ad(0, 0) = a1;
      ad(1, 1) = a2;
      Eigen::RowVectorXcd wv(dim);
      double wmax = 0.0;
      for (int i = 0; i < dim; ++i) {
        wv(i) = wfun[i](ad);
        wmax = std::max(wmax, std::abs(wv(i)));
      }
      if (wmax == 0.0) continue;
      const CMatrix base = ginv * ad;
      const CMatrix gcol = a2 * ginv.col(0);
      for (std::size_t j = 0; j < kg.size(); ++j) {
        const CMatrix am = base * kg.points[j];
        const CMatrix bm = gcol * kg.points[j].row(1);
        pf << am(0, 0), am(0, 1), am(1, 0), am(1, 1);
        qf << bm(0, 0), bm(0, 1), bm(1, 0), bm(1, 1);
        const Complex z = fourier_line_integral(phi, pf, qf, -eps);
        if (z == Complex(0.0, 0.0)) continue;
        acc += apow * kg.weights[j] * detl[j] * z * (wv * ycol[j])(0);
      }
    }
  }
  return ipow(unit_part(detg), -l) * std::exp(-(s + 0.5) * c * std::log(std::abs(detg))) * acc;
}

Complex gaussian_det_integral(Field f, int n, Complex s, int half_nodes) {
  if (n < 1) throw std::invalid_argument("positive rank required");
  const double c = field_c(f);
  const Quadrature qa = mult_axis(half_nodes, 3.2);
  const Quadrature qu = real_axis(3 * half_nodes / 2, 3.6);
  std::vector<double> qmass(qa.size(), 0.0);
  for (std::size_t j = 0; j < qa.size(); ++j) {
    const double t2 = qa.x[j] * qa.x[j];
    double m1 = 0.0;
    for (std::size_t i = 0; i < qu.size(); ++i)
      m1 += qu.w[i] * std::exp(-kPi * c * t2 * qu.x[i] * qu.x[i]);
    qmass[j] = f == Field::R ? m1 : 2.0 * m1 * m1;
  }
  Complex result(1.0, 0.0);
  for (int i = 1; i <= n; ++i) {
    Complex fi(0.0, 0.0);
    for (std::size_t j = 0; j < qa.size(); ++j) {
      const double t = qa.x[j];
      const double lt = std::log(t);
      const double er = s.real() * c * lt - kPi * c * t * t;
      if (er < -700.0) continue;
      fi += qa.w[j] * 2.0 * c * std::exp(Complex(er, s.imag() * c * lt)) *
            std::pow(qmass[j], static_cast<double>(i - 1));
    }
    result *= fi;
  }
  return result;
}

}  // namespace rslab
