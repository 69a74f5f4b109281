#include "rslab/special_functions.hpp"

#include <cmath>

namespace rslab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Complex lgamma_c(Complex z) {
  static const double p[9] = {0.99999999999980993,     676.5203681218851,
                              -1259.1392167224028,     771.32342877765313,
                              -176.61502916214059,     12.507343278686905,
                              -0.13857109526572012,    9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5)
    return std::log(kPi / std::sin(kPi * z)) - lgamma_c(1.0 - z);
  z -= 1.0;
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex gamma_c(Complex z) { return std::exp(lgamma_c(z)); }

Complex gamma_F(Field f, Complex s, long m) {
  const double c = field_c(f);
  Complex a = (s * c + static_cast<double>(m)) / 2.0;
  return c * std::exp(-a * std::log(kPi * c)) * gamma_c(a);
}

Complex gamma_prod(Field f, const std::vector<Complex>& nu, const Weight& d) {
  const std::size_t n = nu.size();
  if (d.size() != n) throw std::invalid_argument("parameter lengths differ");
  Complex out = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out *= gamma_F(f, nu[j] - nu[i] + 1.0, std::labs(d[i] - d[j]));
  return out;
}

Complex L_factor(Field f, Complex s, const std::vector<Complex>& nu, const Weight& d,
                 const std::vector<Complex>& nup, const Weight& dp) {
  if (d.size() != nu.size() || dp.size() != nup.size())
    throw std::invalid_argument("parameter lengths differ");
  Complex out = 1.0;
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (std::size_t j = 0; j < nup.size(); ++j)
      out *= gamma_F(f, s + nu[i] + nup[j], std::labs(d[i] + dp[j]));
  return out;
}

}  // namespace rslab
