#ifndef BORELSUM_CHEB_HPP
#define BORELSUM_CHEB_HPP

#include <cmath>
#include <vector>

#include "borelsum/types.hpp"

namespace borelsum {

// Chebyshev-Lobatto machinery on [-1, 1]. Nodes are stored in ascending
// order, x_j = -cos(j pi / m) with m = n-1, so x_0 = -1 and x_{n-1} = +1.

inline std::vector<double> cheb_nodes(int n) {
  std::vector<double> x(n);
  int m = n - 1;
  for (int j = 0; j <= m; ++j) x[j] = -std::cos(kPi * j / m);
  x[0] = -1.0;
  x[m] = 1.0;
  return x;
}

/// Barycentric weights for the Lobatto grid above.
inline std::vector<double> cheb_bary_weights(int n) {
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = (j % 2 == 0) ? 1.0 : -1.0;
  w[0] *= 0.5;
  w[n - 1] *= 0.5;
  return w;
}

/// Barycentric interpolation of values f_j given at the Lobatto nodes.
inline Complex cheb_bary_eval(const std::vector<double>& x,
                              const std::vector<double>& w, const CVector& f,
                              double xq) {
  Complex num(0.0, 0.0);
  double den = 0.0;
  for (size_t j = 0; j < x.size(); ++j) {
    double d = xq - x[j];
    if (std::abs(d) < 1e-14) return f[j];
    double c = w[j] / d;
    num += c * f[j];
    den += c;
  }
  return num / den;
}

/// Chebyshev coefficients a_k of the degree n-1 interpolant through the
/// Lobatto values, f(x) = sum_k a_k T_k(x).
inline CVector cheb_coeffs(const CVector& f) {
  int n = int(f.size());
  int m = n - 1;
  CVector a(n, Complex(0.0, 0.0));
  for (int k = 0; k <= m; ++k) {
    Complex s(0.0, 0.0);
    for (int j = 0; j <= m; ++j) {
      double c = std::cos(kPi * j * k / m);
      Complex term = f[j] * c;
      if (j == 0 || j == m) term *= 0.5;
      s += term;
    }
    // the sign twist accounts for the ascending node ordering
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    a[k] = sign * (2.0 / m) * s;
    if (k == 0 || k == m) a[k] *= 0.5;
  }
  return a;
}

/// Clenshaw evaluation of sum_k a_k T_k(x).
inline Complex cheb_clenshaw(const CVector& a, double x) {
  Complex b1(0.0, 0.0), b2(0.0, 0.0);
  for (int k = int(a.size()) - 1; k >= 1; --k) {
    Complex b0 = 2.0 * x * b1 - b2 + a[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + a[0];
}

/// Coefficients of d/dx applied to a Chebyshev series (on [-1,1]).
inline CVector cheb_derivative_coeffs(const CVector& a) {
  int n = int(a.size());
  CVector b(n, Complex(0.0, 0.0));
  if (n < 2) return b;
  b[n - 1] = Complex(0.0, 0.0);
  b[n - 2] = 2.0 * double(n - 1) * a[n - 1];
  for (int k = n - 2; k >= 1; --k)
    b[k - 1] = (k + 1 < n ? b[k + 1] : Complex(0, 0)) + 2.0 * double(k) * a[k];
  b[0] *= 0.5;
  return b;
}

/// Coefficients of the antiderivative, normalized so it vanishes at x = -1.
inline CVector cheb_antiderivative_coeffs(const CVector& a) {
  int n = int(a.size());
  CVector A(n + 1, Complex(0.0, 0.0));
  for (int k = 1; k <= n; ++k) {
    Complex prev = a[k - 1];
    if (k == 1) prev *= 2.0;  // integral of T_0 is T_1, not T_1/2
    Complex next = (k + 1 < n) ? a[k + 1] : Complex(0.0, 0.0);
    A[k] = (prev - next) / (2.0 * k);
  }
  Complex at_minus1(0.0, 0.0);
  for (int k = 1; k <= n; ++k)
    at_minus1 += (k % 2 == 0) ? A[k] : -A[k];
  A[0] = -at_minus1;
  return A;
}

}  // namespace borelsum

#endif  // BORELSUM_CHEB_HPP
