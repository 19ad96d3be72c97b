#ifndef BORELSUM_POLY_HPP
#define BORELSUM_POLY_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "borelsum/types.hpp"

namespace borelsum {

/// Univariate polynomial with complex coefficients, ascending degree order.
class Poly {
 public:
  Poly() : c_(1, Complex(0.0, 0.0)) {}
  explicit Poly(CVector coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Complex(0.0, 0.0));
    trim();
  }
  static Poly constant(Complex v) { return Poly(CVector{v}); }

  const CVector& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return degree() == 0 && c_[0] == Complex(0.0, 0.0); }

  Complex operator()(Complex z) const {
    Complex acc = c_.back();
    for (int k = int(c_.size()) - 2; k >= 0; --k) acc = acc * z + c_[k];
    return acc;
  }

  Poly derivative() const {
    if (degree() == 0) return Poly();
    CVector d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
    return Poly(d);
  }

  /// Largest coefficient magnitude; crude scale for tolerance checks.
  double scale() const {
    double s = 0.0;
    for (const Complex& v : c_) s = std::max(s, std::abs(v));
    return s;
  }

  Poly operator+(const Poly& o) const {
    CVector r(std::max(c_.size(), o.c_.size()), Complex(0, 0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Poly(r);
  }
  Poly operator*(const Poly& o) const {
    CVector r(c_.size() + o.c_.size() - 1, Complex(0, 0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(r);
  }
  Poly operator*(Complex s) const {
    CVector r = c_;
    for (Complex& v : r) v *= s;
    return Poly(r);
  }

  /// p(u + shift): Taylor re-centering.
  Poly shifted(Complex shift) const {
    Poly result = constant(c_.back());
    Poly lin(CVector{shift, Complex(1.0, 0.0)});
    for (int k = degree() - 1; k >= 0; --k)
      result = result * lin + constant(c_[k]);
    return result;
  }

 private:
  void trim() {
    while (c_.size() > 1 && std::abs(c_.back()) == 0.0) c_.pop_back();
  }
  CVector c_;
};

/// All roots via companion-matrix eigenvalues plus two Newton polish steps.
inline CVector poly_roots(const Poly& p) {
  int d = p.degree();
  if (d < 1) return {};
  const CVector& c = p.coeffs();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  Complex lead = c[d];
  for (int i = 1; i < d; ++i) companion(i, i - 1) = Complex(1.0, 0.0);
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  CVector roots(d);
  Poly dp = p.derivative();
  for (int i = 0; i < d; ++i) {
    Complex r = es.eigenvalues()[i];
    for (int it = 0; it < 2; ++it) {
      Complex der = dp(r);
      if (std::abs(der) == 0.0) break;
      r -= p(r) / der;
    }
    roots[i] = r;
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace borelsum

#endif  // BORELSUM_POLY_HPP
