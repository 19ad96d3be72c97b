#ifndef BORELSUM_GAMMAFN_HPP
#define BORELSUM_GAMMAFN_HPP

#include <cmath>

#include "borelsum/types.hpp"

namespace borelsum {

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey). Relative error on
// the real axis is a few 1e-15, well inside the 1e-13 budget needed for the
// fractional transform factors.
inline constexpr double kLanczosG = 4.7421875;
inline constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

inline Complex lanczos_sum(Complex z) {
  Complex s(kLanczosC[0], 0.0);
  for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (z + double(k - 1));
  return s;
}

}  // namespace detail

/// Gamma function for complex argument, Lanczos approximation with
/// reflection for Re z < 1/2. Poles at nonpositive integers throw.
inline Complex gamma_fn(Complex z) {
  if (z.imag() == 0.0 && near_nonpositive_integer(z.real()))
    throw GammaPole("gamma pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));
  }
  Complex zm1 = z - 1.0;
  Complex t = zm1 + detail::kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) *
         detail::lanczos_sum(z);
}

inline double gamma_fn(double x) { return gamma_fn(Complex(x, 0.0)).real(); }

/// 1/Gamma, finite everywhere (zero at the poles).
inline Complex rgamma_fn(Complex z) {
  if (z.imag() == 0.0 && near_nonpositive_integer(z.real()))
    return Complex(0.0, 0.0);
  return 1.0 / gamma_fn(z);
}

inline double rgamma_fn(double x) { return rgamma_fn(Complex(x, 0.0)).real(); }

}  // namespace borelsum

#endif  // BORELSUM_GAMMAFN_HPP
