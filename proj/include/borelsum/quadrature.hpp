#ifndef BORELSUM_QUADRATURE_HPP
#define BORELSUM_QUADRATURE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "borelsum/gammafn.hpp"
#include "borelsum/types.hpp"

namespace borelsum {

/// Nodes and weights of a quadrature rule on [-1, 1].
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return int(x.size()); }
};

/// Gauss-Legendre rule, Newton iteration on the Legendre recurrence.
inline QuadRule gauss_legendre_rule(int n) {
  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1], computed by
/// Golub-Welsch from the Jacobi three-term recurrence. Valid for a, b > -1.
inline QuadRule gauss_jacobi_rule(int n, double a, double b) {
  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  double ab = a + b;
  for (int k = 0; k < n; ++k) {
    double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag[k] = (den == 0.0) ? (b - a) / (ab + 2.0)
                           : (b * b - a * a) / den;
  }
  for (int k = 1; k < n; ++k) {
    double num, den;
    if (k == 1) {
      num = 4.0 * (1.0 + a) * (1.0 + b);
      den = (2.0 + ab) * (2.0 + ab) * (3.0 + ab);
    } else {
      num = 4.0 * k * (k + a) * (k + b) * (k + ab);
      den = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
            (2.0 * k + ab - 1.0);
    }
    sub[k - 1] = std::sqrt(num / den);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  // mu0 = int (1-x)^a (1+x)^b dx = 2^(a+b+1) B(a+1, b+1)
  double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(a + 1.0) *
               gamma_fn(b + 1.0) / gamma_fn(ab + 2.0);
  for (int k = 0; k < n; ++k) {
    rule.x[k] = es.eigenvalues()[k];
    double v0 = es.eigenvectors()(0, k);
    rule.w[k] = mu0 * v0 * v0;
  }
  return rule;
}

namespace detail {

inline const QuadRule& cached_legendre(int n) {
  static std::mutex mtx;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre_rule(n)).first;
  return it->second;
}

inline const QuadRule& cached_jacobi(int n, double a, double b) {
  static std::mutex mtx;
  static std::map<std::tuple<int, double, double>, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(n, a, b);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, gauss_jacobi_rule(n, a, b)).first;
  return it->second;
}

}  // namespace detail

/// Integrate f over [t0, t1] with an n-point Gauss-Legendre rule.
template <typename F>
auto integrate_legendre(F&& f, double t0, double t1, int n)
    -> decltype(f(0.0)) {
  const QuadRule& rule = detail::cached_legendre(n);
  double mid = 0.5 * (t0 + t1), hl = 0.5 * (t1 - t0);
  decltype(f(0.0)) acc{};
  for (int i = 0; i < rule.size(); ++i)
    acc += rule.w[i] * f(mid + hl * rule.x[i]);
  return acc * hl;
}

/// Integrate w(s) g(s) over [0, 1] with weight w(s) = (1-s)^a s^b, given the
/// smooth factor g. Maps the [-1,1] Gauss-Jacobi rule onto [0, 1].
template <typename F>
auto integrate_jacobi01(F&& g, double a, double b, int n) -> decltype(g(0.5)) {
  const QuadRule& rule = detail::cached_jacobi(n, a, b);
  double scale = std::pow(0.5, a + b + 1.0);
  decltype(g(0.5)) acc{};
  for (int i = 0; i < rule.size(); ++i) {
    double s = 0.5 * (rule.x[i] + 1.0);
    acc += rule.w[i] * g(s);
  }
  return acc * scale;
}

}  // namespace borelsum

#endif  // BORELSUM_QUADRATURE_HPP
