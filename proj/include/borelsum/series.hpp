#ifndef BORELSUM_SERIES_HPP
#define BORELSUM_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "borelsum/gammafn.hpp"
#include "borelsum/types.hpp"

namespace borelsum {

enum class Var { position, frequency };

/// Finitely many coefficients of x^shift * (c_0 + c_1 x + ... + c_N x^N),
/// where x is the position variable zeta (ascending powers) or the frequency
/// variable 1/z (descending powers of z). The shift may be fractional; the
/// integrability condition shift > -1 is enforced where a Laplace transform
/// is actually taken, not here.
struct ShiftedSeries {
  double shift = 0.0;
  Var var = Var::position;
  CVector coeffs;

  ShiftedSeries() : coeffs(1, Complex(0, 0)) {}
  ShiftedSeries(double shift_, Var var_, CVector coeffs_)
      : shift(shift_), var(var_), coeffs(std::move(coeffs_)) {
    if (coeffs.empty()) throw DomainError("ShiftedSeries needs >= 1 coefficient");
  }

  int order() const { return int(coeffs.size()) - 1; }
};

/// An element of e^{-alpha z} z^{-tau} C[[1/z]], truncated. tau is carried as
/// a complex scalar; the paper examples all have real tau but the recurrence
/// machinery does not care.
struct TransMonomial {
  Complex alpha{0.0, 0.0};
  Complex tau{0.0, 0.0};
  ShiftedSeries series;  // frequency tag, shift 0: c_0 + c_1/z + ...

  TransMonomial() = default;
  TransMonomial(Complex alpha_, Complex tau_, CVector coeffs_)
      : alpha(alpha_), tau(tau_),
        series(0.0, Var::frequency, std::move(coeffs_)) {}

  int order() const { return series.order(); }
};

/// delta_coeff * delta + series; delta participates only through the unit
/// law of the convolution product.
struct DeltaPlusSeries {
  Complex delta{0.0, 0.0};
  ShiftedSeries series;

  DeltaPlusSeries() = default;
  DeltaPlusSeries(Complex delta_, ShiftedSeries series_)
      : delta(delta_), series(std::move(series_)) {}

  bool pure_delta() const {
    for (const Complex& c : series.coeffs)
      if (c != Complex(0.0, 0.0)) return false;
    return true;
  }
};

namespace detail {
inline bool integer_like(double x, double tol = 1e-12) {
  return std::abs(x - std::round(x)) < tol;
}
}  // namespace detail

/// Formal Borel transform of a trans-monomial. Each term
/// e^{-alpha z} z^{-tau-k} maps to zeta_alpha^{tau+k-1} / Gamma(tau+k); a
/// pure constant (tau + k = 0) maps to the convolution unit delta. A term
/// with tau + k a negative integer has no Borel image (Gamma pole).
inline DeltaPlusSeries borel_transform(const TransMonomial& t) {
  if (std::abs(t.tau.imag()) > 1e-10 * (1.0 + std::abs(t.tau)))
    throw ParameterUnsupported("borel_transform: complex tau not supported");
  const double tau = t.tau.real();
  const CVector& c = t.series.coeffs;
  const int N = t.series.order();

  Complex delta(0.0, 0.0);
  int k_start = 0;
  if (detail::integer_like(tau) && std::round(tau) <= 0.0) {
    int j = int(-std::round(tau));  // tau + j == 0
    for (int k = 0; k < std::min(j, N + 1); ++k) {
      if (std::abs(c[k]) != 0.0)
        throw GammaPole("borel_transform: term k=" + std::to_string(k) +
                        " has exponent tau+k = " + std::to_string(tau + k) +
                        ", a nonpositive integer");
    }
    if (j <= N) delta = c[j];
    k_start = j + 1;
  }
  CVector out;
  if (k_start > N) {
    out.assign(1, Complex(0.0, 0.0));
    return DeltaPlusSeries(delta,
                           ShiftedSeries(0.0, Var::position, out));
  }
  out.resize(N + 1 - k_start);
  for (int k = k_start; k <= N; ++k)
    out[k - k_start] = c[k] / gamma_fn(tau + k);
  return DeltaPlusSeries(
      delta, ShiftedSeries(tau + k_start - 1.0, Var::position, out));
}

/// Formal Laplace transform, the exact left inverse of borel_transform on
/// truncated data: zeta_alpha^{shift+k} -> Gamma(shift+k+1) z^{-shift-k-1},
/// with the e^{-alpha z} factor attached per the change-of-chart identity.
inline TransMonomial formal_laplace(const ShiftedSeries& s, Complex alpha) {
  if (s.var != Var::position)
    throw DomainError("formal_laplace expects a position-domain series");
  if (s.shift <= -1.0)
    throw DomainError("formal_laplace requires shift > -1");
  CVector out(s.coeffs.size());
  for (size_t k = 0; k < s.coeffs.size(); ++k)
    out[k] = s.coeffs[k] * gamma_fn(s.shift + double(k) + 1.0);
  return TransMonomial(alpha, Complex(s.shift + 1.0, 0.0), std::move(out));
}

/// Generic coefficient kernel for the Cauchy product, usable with any field
/// (complex doubles or exact rationals).
template <typename T>
std::vector<T> cauchy_coeffs(const std::vector<T>& a, const std::vector<T>& b) {
  size_t n = std::min(a.size(), b.size());
  std::vector<T> out(n, T(0));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
  return out;
}

/// Cauchy product of shifted series: shifts add, coefficients convolve,
/// truncated at min(N_a, N_b).
inline ShiftedSeries cauchy_product(const ShiftedSeries& a,
                                    const ShiftedSeries& b) {
  if (a.var != b.var)
    throw DomainError("cauchy_product: mixed position/frequency series");
  return ShiftedSeries(a.shift + b.shift, a.var,
                       cauchy_coeffs(a.coeffs, b.coeffs));
}

/// Convolution product on delta + series. On monomials,
/// zeta^a/Gamma(a+1) * zeta^b/Gamma(b+1) = zeta^{a+b+1}/Gamma(a+b+2);
/// delta is the unit.
inline DeltaPlusSeries convolution_product(const DeltaPlusSeries& a,
                                           const DeltaPlusSeries& b) {
  if (a.pure_delta()) {
    DeltaPlusSeries r = b;
    r.delta *= a.delta;
    for (Complex& v : r.series.coeffs) v *= a.delta;
    return r;
  }
  if (b.pure_delta()) {
    DeltaPlusSeries r = a;
    r.delta *= b.delta;
    for (Complex& v : r.series.coeffs) v *= b.delta;
    return r;
  }
  const ShiftedSeries& sa = a.series;
  const ShiftedSeries& sb = b.series;
  if (sa.var != Var::position || sb.var != Var::position)
    throw DomainError("convolution_product expects position-domain series");
  int Na = sa.order(), Nb = sb.order();
  bool has_da = std::abs(a.delta) != 0.0;
  bool has_db = std::abs(b.delta) != 0.0;

  // three contributions: the pure convolution (shift sa+sb+1, complete
  // through order min(Na,Nb)+1) and the two delta pass-throughs. They merge
  // into one container when their shifts differ by integers.
  double shift_conv = sa.shift + sb.shift + 1.0;
  double base = shift_conv;
  if (has_da) base = std::min(base, sb.shift);
  if (has_db) base = std::min(base, sa.shift);

  auto offset_of = [&](double shift) {
    double o = shift - base;
    if (!detail::integer_like(o) || o < -0.5)
      throw DomainError(
          "convolution_product: contributions land on incommensurable "
          "shifts; not representable as one shifted series");
    return int(std::round(o));
  };
  int o_conv = offset_of(shift_conv);
  int Nout = o_conv + std::min(Na, Nb);
  if (has_da) Nout = std::min(Nout, offset_of(sb.shift) + Nb);
  if (has_db) Nout = std::min(Nout, offset_of(sa.shift) + Na);

  CVector out(Nout + 1, Complex(0.0, 0.0));
  for (int i = 0; i <= Na; ++i) {
    for (int j = 0; j <= Nb; ++j) {
      int k = o_conv + i + j;
      if (k > Nout) continue;
      out[k] += sa.coeffs[i] * sb.coeffs[j] *
                (gamma_fn(sa.shift + i + 1.0) * gamma_fn(sb.shift + j + 1.0) /
                 gamma_fn(sa.shift + sb.shift + i + j + 2.0));
    }
  }
  if (has_da) {
    int o = offset_of(sb.shift);
    for (int k = 0; k <= Nb && o + k <= Nout; ++k)
      out[o + k] += a.delta * sb.coeffs[k];
  }
  if (has_db) {
    int o = offset_of(sa.shift);
    for (int k = 0; k <= Na && o + k <= Nout; ++k)
      out[o + k] += b.delta * sa.coeffs[k];
  }
  return DeltaPlusSeries(a.delta * b.delta,
                         ShiftedSeries(base, Var::position, out));
}

// ---------------------------------------------------------------------------
// Exact-arithmetic kernels (integer shifts). Instantiated with
// boost::multiprecision::cpp_rational these let rational inputs be checked
// exactly; with double they mirror the generic path.

template <typename T>
T factorial_t(int n) {
  T f(1);
  for (int k = 2; k <= n; ++k) f *= T(k);
  return f;
}

/// delta + zeta^shift (c_0 + c_1 zeta + ...) with exact coefficients.
template <typename T>
struct ExactDeltaSeries {
  T delta = T(0);
  int shift = 0;
  std::vector<T> coeffs;
};

/// Borel transform of z^{-tau} sum c_k z^{-k} for integer tau >= 0:
/// z^{-tau-k} maps to zeta^{tau+k-1}/(tau+k-1)!, the constant term to delta.
template <typename T>
ExactDeltaSeries<T> borel_exact(int tau, const std::vector<T>& c) {
  if (tau < 0) throw DomainError("borel_exact: tau must be >= 0");
  ExactDeltaSeries<T> out;
  int N = int(c.size()) - 1;
  if (tau == 0) {
    out.delta = c[0];
    out.shift = 0;
    out.coeffs.assign(std::max(N, 1), T(0));
    for (int k = 1; k <= N; ++k) out.coeffs[k - 1] = c[k] / factorial_t<T>(k - 1);
  } else {
    out.shift = tau - 1;
    out.coeffs.assign(N + 1, T(0));
    for (int k = 0; k <= N; ++k)
      out.coeffs[k] = c[k] / factorial_t<T>(tau + k - 1);
  }
  return out;
}

/// Exact convolution of two integer-shift delta+series objects.
template <typename T>
ExactDeltaSeries<T> convolution_exact(const ExactDeltaSeries<T>& a,
                                      const ExactDeltaSeries<T>& b) {
  int Na = int(a.coeffs.size()) - 1, Nb = int(b.coeffs.size()) - 1;
  int shift_conv = a.shift + b.shift + 1;
  int base = shift_conv;
  bool has_da = a.delta != T(0), has_db = b.delta != T(0);
  if (has_da) base = std::min(base, b.shift);
  if (has_db) base = std::min(base, a.shift);
  int Nout = (shift_conv - base) + std::min(Na, Nb);
  if (has_da) Nout = std::min(Nout, (b.shift - base) + Nb);
  if (has_db) Nout = std::min(Nout, (a.shift - base) + Na);

  ExactDeltaSeries<T> out;
  out.delta = a.delta * b.delta;
  out.shift = base;
  out.coeffs.assign(Nout + 1, T(0));
  for (int i = 0; i <= Na; ++i)
    for (int j = 0; j <= Nb; ++j) {
      int k = (shift_conv - base) + i + j;
      if (k > Nout) continue;
      out.coeffs[k] += a.coeffs[i] * b.coeffs[j] *
                       factorial_t<T>(a.shift + i) * factorial_t<T>(b.shift + j) /
                       factorial_t<T>(a.shift + b.shift + i + j + 1);
    }
  if (has_da)
    for (int k = 0; k <= Nb && (b.shift - base) + k <= Nout; ++k)
      out.coeffs[(b.shift - base) + k] += a.delta * b.coeffs[k];
  if (has_db)
    for (int k = 0; k <= Na && (a.shift - base) + k <= Nout; ++k)
      out.coeffs[(a.shift - base) + k] += b.delta * a.coeffs[k];
  return out;
}

/// Estimate of the Borel-plane radius of convergence from the coefficient
/// list of a frequency-side series: limsup fit of |c_n / n!|^{-1/n} over the
/// top half of available orders. Returns +infinity when the ratios keep
/// growing (coefficients decay faster than any geometric-times-factorial).
inline double gevrey_radius_estimate(const ShiftedSeries& s) {
  if (s.var != Var::frequency)
    throw DomainError("gevrey_radius_estimate expects a frequency series");
  int N = s.order();
  if (N < 4) throw DomainError("gevrey_radius_estimate requires order >= 4");
  std::vector<double> r;
  double lg = 0.0;  // log n!
  for (int n = 1; n <= N; ++n) {
    lg += std::log(double(n));
    if (n < (N + 1) / 2) continue;
    double mag = std::abs(s.coeffs[n]);
    if (mag == 0.0) continue;
    r.push_back(-(std::log(mag) - lg) / double(n));  // log of |c_n/n!|^{-1/n}
  }
  if (r.size() < 2) return std::numeric_limits<double>::infinity();
  // growing r_n across the window means a super-factorially decaying tail
  double first = r.front(), last = r.back();
  if (last - first > std::log(1.4))
    return std::numeric_limits<double>::infinity();
  size_t q = std::max<size_t>(2, r.size() / 2);
  double acc = 0.0;
  for (size_t i = r.size() - q; i < r.size(); ++i) acc += r[i];
  return std::exp(acc / double(q));
}

}  // namespace borelsum

#endif  // BORELSUM_SERIES_HPP
