#ifndef OPUC_POLYNOMIAL_HPP
#define OPUC_POLYNOMIAL_HPP

#include <Eigen/Core>

#include "opuc/grid.hpp"

namespace opuc {

/// Complex polynomial c_0 + c_1 z + ... + c_n z^n with an explicit nominal
/// degree n. The coefficient vector always has length n+1 (trailing zeros
/// allowed), so the conjugate-reversal star() is well defined even when the
/// actual degree is smaller than the nominal one.
class ComplexPolynomial {
 public:
  /// Zero polynomial of nominal degree 0.
  ComplexPolynomial();
  /// Nominal degree = coeffs.size() - 1.
  explicit ComplexPolynomial(Eigen::VectorXcd coeffs);
  /// Pads (or rejects) to the requested nominal degree.
  ComplexPolynomial(Eigen::VectorXcd coeffs, Index nominal_degree);

  static ComplexPolynomial constant(Complex c);
  /// c * z^k with nominal degree k.
  static ComplexPolynomial monomial(Index k, Complex c = Complex(1.0));

  Index nominal_degree() const { return coeffs_.size() - 1; }
  /// Largest index with a (bit-exactly) nonzero coefficient; 0 for the zero
  /// polynomial.
  Index actual_degree() const;

  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Complex coeff(Index k) const {
    return (k >= 0 && k < coeffs_.size()) ? coeffs_[k] : Complex(0.0);
  }

  /// Horner evaluation.
  Complex operator()(Complex z) const;

  /// Values at all grid points e^{i theta_k}, computed with one FFT.
  /// Requires nominal degree < grid size.
  Eigen::VectorXcd eval_on_grid(const UnitGrid& grid) const;

  ComplexPolynomial with_nominal_degree(Index n) const;

  ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator*=(Complex s);

  friend ComplexPolynomial operator+(ComplexPolynomial a,
                                     const ComplexPolynomial& b) {
    a += b;
    return a;
  }
  friend ComplexPolynomial operator-(ComplexPolynomial a,
                                     const ComplexPolynomial& b) {
    a -= b;
    return a;
  }
  friend ComplexPolynomial operator*(Complex s, ComplexPolynomial p) {
    p *= s;
    return p;
  }
  /// Coefficient convolution; nominal degrees add.
  friend ComplexPolynomial operator*(const ComplexPolynomial& a,
                                     const ComplexPolynomial& b);

 private:
  Eigen::VectorXcd coeffs_;
};

/// The (*)-operation at nominal degree n: q(z) -> conj(q_n) + ... + conj(q_0) z^n.
/// Throws if the actual degree of q exceeds n.
ComplexPolynomial star(const ComplexPolynomial& q, Index n);

/// star() at the polynomial's own nominal degree.
ComplexPolynomial star(const ComplexPolynomial& q);

/// Largest |difference of coefficients|, aligning by index.
double coeff_distance(const ComplexPolynomial& a, const ComplexPolynomial& b);

/// sup |p(e^{i theta})| over the circle together with the maximizing angle.
/// Scans a uniform grid of at least max(8192, oversample * degree) points
/// (rounded up to a power of two) and refines every competitive local
/// maximum by golden section.
struct SupNorm {
  double value = 0.0;
  double argmax_theta = 0.0;
};
SupNorm sup_norm_on_circle(const ComplexPolynomial& p, Index oversample = 32);

}  // namespace opuc

#endif
