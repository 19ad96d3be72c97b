#ifndef BORELSUM_ODE_HPP
#define BORELSUM_ODE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "borelsum/poly.hpp"
#include "borelsum/series.hpp"
#include "borelsum/types.hpp"

namespace borelsum {

using Rational = boost::multiprecision::cpp_rational;

/// The level-1 operator P(d/dz) + (1/z) Q(d/dz) + (1/z^2) R(1/z), with P
/// monic of degree d, Q of degree <= d-1, and R a truncated series in 1/z.
struct Level1Operator {
  Poly P;
  Poly Q;
  CVector R;  // R(1/z) = R[0] + R[1]/z + ...
  std::string name;

  Level1Operator() = default;
  Level1Operator(Poly P_, Poly Q_, CVector R_, std::string name_ = "")
      : P(std::move(P_)), Q(std::move(Q_)), R(std::move(R_)),
        name(std::move(name_)) {
    if (P.degree() < 1) throw SchemaError("operator: P must have degree >= 1");
    Complex lead = P.coeffs().back();
    if (std::abs(lead - Complex(1.0, 0.0)) > 1e-12) {
      // normalize the whole operator; solutions are unchanged
      P = P * (1.0 / lead);
      Q = Q * (1.0 / lead);
      for (Complex& r : R) r /= lead;
    }
    if (Q.degree() > P.degree() - 1)
      throw SchemaError("operator: deg Q must be <= deg P - 1");
    if (R.empty()) R.assign(1, Complex(0.0, 0.0));
  }

  int degree() const { return P.degree(); }
};

/// Characteristic data at one root: alpha with P(-alpha) = 0, the power
/// tau = Q(-alpha)/P'(-alpha), and the directions from alpha toward the
/// other singularities of P(-zeta), which a summation ray must avoid.
struct CharacteristicDatum {
  Complex alpha;
  Complex tau;
  std::vector<double> forbidden_directions;
};

/// All d characteristic roots with tau and forbidden directions.
inline std::vector<CharacteristicDatum> characteristic_roots(
    const Level1Operator& op) {
  CVector roots = poly_roots(op.P);  // roots of P, i.e. -alpha
  double scale = 1.0;
  for (const Complex& r : roots) scale = std::max(scale, std::abs(r));
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-8 * scale)
        throw NonSimpleRoots("P has a (nearly) repeated root near " +
                             std::to_string(roots[i].real()));
  Poly dP = op.P.derivative();
  // companion eigenvalues of a true double root can land ~sqrt(eps) apart;
  // the derivative magnitude is the robust simplicity check
  double dscale = std::max(1.0, dP.scale());
  for (const Complex& r : roots)
    if (std::abs(dP(r)) < 1e-7 * dscale * std::max(1.0, std::abs(r)))
      throw NonSimpleRoots("|P'| nearly vanishes at a root of P");
  double qscale = std::max(1.0, op.Q.scale());
  std::vector<CharacteristicDatum> out;
  for (const Complex& r : roots) {
    Complex alpha = -r;
    Complex qv = op.Q(r);
    if (std::abs(qv) < 1e-10 * qscale)
      throw DegenerateQ("Q vanishes at the characteristic root -alpha = " +
                        std::to_string(r.real()));
    CharacteristicDatum d;
    d.alpha = alpha;
    d.tau = qv / dP(r);
    for (const Complex& r2 : roots) {
      if (&r2 == &r) continue;
      Complex other_alpha = -r2;
      d.forbidden_directions.push_back(std::arg(other_alpha - alpha));
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace detail {

/// Taylor coefficients p^{(j)}(x0)/j! by repeated synthetic division;
/// works for any field T.
template <typename T>
std::vector<T> taylor_at(std::vector<T> a, const T& x0) {
  int d = int(a.size()) - 1;
  for (int j = 0; j <= d; ++j)
    for (int i = d - 1; i >= j; --i) a[i] += x0 * a[i + 1];
  return a;
}

/// Poincare recurrence over a field T. Basis monomials e^{-alpha z}
/// z^{-tau-k} map into themselves under d/dz, 1/z and R(1/z); collecting the
/// coefficient of z^{-tau-m} gives a lower-triangular system solved by
/// forward substitution. Inputs: Taylor data of P and Q at -alpha, the R
/// coefficients, tau = Q(-alpha)/P'(-alpha).
template <typename T>
std::vector<T> poincare_coeffs(const std::vector<T>& Ptay,
                               const std::vector<T>& Qtay,
                               const std::vector<T>& R, const T& tau,
                               const T& c0, int N) {
  int d = int(Ptay.size()) - 1;
  const T pprime = Ptay.size() > 1 ? Ptay[1] : T(0);
  if (pprime == T(0))
    throw ResonanceError("P'(-alpha) vanishes; root is not simple");

  // A_j(k): coefficient with which c_k feeds the equation at order k+j
  auto A = [&](int j, int k) -> T {
    T acc(0);
    T poch(1);  // (tau+k)_i, built incrementally
    // i = j term from P, i = j-1 from Q
    for (int i = 0; i < j - 1; ++i) poch *= (tau + T(k) + T(i));
    T poch_jm1 = poch;                       // (tau+k)_{j-1}
    T poch_j = poch * (tau + T(k) + T(j - 1));  // (tau+k)_j
    T sign_j = (j % 2 == 0) ? T(1) : T(-1);
    if (j <= d) acc += Ptay[j] * sign_j * poch_j;
    if (j - 1 <= int(Qtay.size()) - 1) acc += Qtay[j - 1] * (-sign_j) * poch_jm1;
    if (j >= 2 && j - 2 <= int(R.size()) - 1) acc += R[j - 2];
    return acc;
  };

  std::vector<T> c(N + 1, T(0));
  c[0] = c0;
  for (int j = 1; j <= N; ++j) {
    T s(0);
    for (int k = 0; k < j; ++k) s += A(j + 1 - k, k) * c[k];
    T diag = pprime * T(j);
    if (diag == T(0)) throw ResonanceError("triangular diagonal vanished");
    c[j] = s / diag;
  }
  return c;
}

}  // namespace detail

/// Formal trans-monomial solution e^{-alpha z} z^{-tau} (c0 + c1/z + ...),
/// determined order by order. Applying the operator term-by-term to the
/// result annihilates every determinable order.
inline TransMonomial poincare_solution(const Level1Operator& op,
                                       const CharacteristicDatum& datum,
                                       int N, Complex c0) {
  if (N < 1) throw DomainError("poincare_solution: N >= 1 required");
  if (std::abs(c0) == 0.0) throw DomainError("poincare_solution: c0 != 0");
  Complex malpha = -datum.alpha;
  std::vector<Complex> Ptay = detail::taylor_at(op.P.coeffs(), malpha);
  std::vector<Complex> Qtay = detail::taylor_at(op.Q.coeffs(), malpha);
  std::vector<Complex> R(op.R.begin(),
                         op.R.begin() + std::min<size_t>(op.R.size(), N + 1));
  CVector c = detail::poincare_coeffs<Complex>(Ptay, Qtay, R, datum.tau, c0, N);
  return TransMonomial(datum.alpha, datum.tau, std::move(c));
}

/// Coefficients of the operator applied term-by-term to a trans-monomial:
/// (P psi)(z) = e^{-alpha z} z^{-tau} sum_m r_m z^{-m}. Orders m = 0..N are
/// fully determined by the stored coefficients; for an exact formal solution
/// they all vanish.
inline CVector apply_level1_formal(const Level1Operator& op,
                                   const TransMonomial& tm) {
  Complex malpha = -tm.alpha;
  std::vector<Complex> Ptay = detail::taylor_at(op.P.coeffs(), malpha);
  std::vector<Complex> Qtay = detail::taylor_at(op.Q.coeffs(), malpha);
  int N = tm.order();
  int d = op.degree();
  CVector r(N + 1, Complex(0.0, 0.0));
  for (int m = 0; m <= N; ++m) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k <= m; ++k) {
      int j = m - k;
      Complex term(0.0, 0.0);
      Complex poch_jm1(1.0, 0.0);
      for (int i = 0; i < j - 1; ++i) poch_jm1 *= (tm.tau + double(k) + double(i));
      Complex poch_j = (j == 0) ? Complex(1.0, 0.0)
                                : poch_jm1 * (tm.tau + double(k) + double(j - 1));
      double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
      if (j <= d) term += Ptay[j] * sign_j * poch_j;
      if (j >= 1 && j - 1 <= op.Q.degree()) term += Qtay[j - 1] * (-sign_j) * poch_jm1;
      if (j >= 2 && j - 2 <= int(op.R.size()) - 1) term += op.R[j - 2];
      acc += term * tm.series.coeffs[k];
    }
    r[m] = acc;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exact-rational mode. For operators with rational data and a rational
// characteristic root, the whole recurrence runs in exact arithmetic.

struct Level1OperatorExact {
  std::vector<Rational> P, Q, R;
};

/// Exact Poincare coefficients c_0..c_N for a rational root -alpha of P.
inline std::vector<Rational> poincare_solution_exact(
    const Level1OperatorExact& op, const Rational& alpha, int N,
    const Rational& c0) {
  Rational malpha = -alpha;
  std::vector<Rational> Ptay = detail::taylor_at(op.P, malpha);
  std::vector<Rational> Qtay = detail::taylor_at(op.Q, malpha);
  if (Ptay[0] != 0)
    throw DomainError("poincare_solution_exact: P(-alpha) != 0");
  if (Ptay.size() < 2 || Ptay[1] == 0)
    throw NonSimpleRoots("poincare_solution_exact: P'(-alpha) == 0");
  if (Qtay[0] == 0)
    throw DegenerateQ("poincare_solution_exact: Q(-alpha) == 0");
  Rational tau = Qtay[0] / Ptay[1];
  std::vector<Rational> R = op.R;
  return detail::poincare_coeffs<Rational>(Ptay, Qtay, R, tau, c0, N);
}

}  // namespace borelsum

#endif  // BORELSUM_ODE_HPP
