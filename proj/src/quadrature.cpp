#include "rslab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace rslab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;
}  // namespace

Quadrature mult_axis(int half_nodes, double T) {
  if (half_nodes < 1) throw std::invalid_argument("need at least one node");
  Quadrature q;
  const double h = T / half_nodes;
  for (int k = -half_nodes; k <= half_nodes; ++k) {
    double u = k * h;
    q.x.push_back(std::exp(kHalfPi * std::sinh(u)));
    q.w.push_back(h * kHalfPi * std::cosh(u));
  }
  return q;
}

Quadrature real_axis(int half_nodes, double T) {
  if (half_nodes < 1) throw std::invalid_argument("need at least one node");
  Quadrature q;
  const double h = T / half_nodes;
  for (int k = -half_nodes; k <= half_nodes; ++k) {
    double u = k * h;
    double s = kHalfPi * std::sinh(u);
    q.x.push_back(std::sinh(s));
    q.w.push_back(h * kHalfPi * std::cosh(u) * std::cosh(s));
  }
  return q;
}

Quadrature gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  Quadrature q;
  q.x.assign(n, 0.0);
  q.w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    q.x[i] = -z;
    q.x[n - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    q.w[i] = w;
    q.w[n - 1 - i] = w;
  }
  return q;
}

Quadrature panel_axis(double X, double panel, int per_panel) {
  if (X <= 0 || panel <= 0) throw std::invalid_argument("positive extent required");
  Quadrature base = gauss_legendre(per_panel);
  const int panels = std::max(1, static_cast<int>(std::ceil(2.0 * X / panel)));
  const double len = 2.0 * X / panels;
  Quadrature q;
  for (int p = 0; p < panels; ++p) {
    double lo = -X + p * len;
    for (std::size_t i = 0; i < base.size(); ++i) {
      q.x.push_back(lo + 0.5 * len * (base.x[i] + 1.0));
      q.w.push_back(0.5 * len * base.w[i]);
    }
  }
  return q;
}

Quadrature angle_axis(int n) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  Quadrature q;
  for (int k = 0; k < n; ++k) {
    q.x.push_back(2.0 * kPi * k / n);
    q.w.push_back(2.0 * kPi / n);
  }
  return q;
}

}  // namespace rslab
