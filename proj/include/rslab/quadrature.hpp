#pragma once

#include <vector>

namespace rslab {

struct Quadrature {
  std::vector<double> x, w;
  std::size_t size() const { return x.size(); }
};

// Nodes and weights for int_0^infty f(x) dx/x, double-exponential in the log
// variable; 2*half_nodes + 1 points.
Quadrature mult_axis(int half_nodes, double T = 5.0);

// Nodes and weights for int_R f(x) dx, double-exponential.
Quadrature real_axis(int half_nodes, double T = 2.4);

// Gauss-Legendre rule on [-1, 1].
Quadrature gauss_legendre(int n);

// Composite Gauss-Legendre rule for int_{-X}^{X} f(x) dx with panels of
// (at most) the given length; suited to oscillatory slowly-decaying tails.
Quadrature panel_axis(double X, double panel, int per_panel);

// Uniform angles on [0, 2pi) with total weight 2pi (trapezoid on the circle,
// spectrally accurate for smooth periodic integrands).
Quadrature angle_axis(int n);

}  // namespace rslab
