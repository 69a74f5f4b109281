#pragma once

#include <complex>
#include <vector>

#include "rslab/gt.hpp"

namespace rslab {

using Complex = std::complex<double>;

enum class Field { R, C };

inline int field_c(Field f) { return f == Field::R ? 1 : 2; }
inline const char* field_name(Field f) { return f == Field::R ? "R" : "C"; }

// Log-gamma and gamma on the complex plane (Lanczos approximation with
// reflection); gamma_c is accurate to ~1e-13 relative away from the poles.
Complex lgamma_c(Complex z);
Complex gamma_c(Complex z);

// Normalized gamma factor: c (pi c)^{-(s c + m)/2} Gamma((s c + m)/2) with
// c = 1 over the reals and 2 over the complexes.
Complex gamma_F(Field f, Complex s, long m);

// Product over i < j of gamma_F(nu_j - nu_i + 1; |d_i - d_j|).
Complex gamma_prod(Field f, const std::vector<Complex>& nu, const Weight& d);

// Product over all (i, j) of gamma_F(s + nu_i + nu'_j; |d_i + d'_j|).
Complex L_factor(Field f, Complex s, const std::vector<Complex>& nu, const Weight& d,
                 const std::vector<Complex>& nup, const Weight& dp);

}  // namespace rslab
