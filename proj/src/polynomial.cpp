#include "opuc/polynomial.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace opuc {

ComplexPolynomial::ComplexPolynomial() : coeffs_(Eigen::VectorXcd::Zero(1)) {}

ComplexPolynomial::ComplexPolynomial(Eigen::VectorXcd coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) coeffs_ = Eigen::VectorXcd::Zero(1);
}

ComplexPolynomial::ComplexPolynomial(Eigen::VectorXcd coeffs,
                                     Index nominal_degree)
    : ComplexPolynomial(std::move(coeffs)) {
  *this = with_nominal_degree(nominal_degree);
}

ComplexPolynomial ComplexPolynomial::constant(Complex c) {
  Eigen::VectorXcd v(1);
  v[0] = c;
  return ComplexPolynomial(std::move(v));
}

ComplexPolynomial ComplexPolynomial::monomial(Index k, Complex c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(k + 1);
  v[k] = c;
  return ComplexPolynomial(std::move(v));
}

Index ComplexPolynomial::actual_degree() const {
  for (Index k = coeffs_.size() - 1; k > 0; --k)
    if (coeffs_[k] != Complex(0.0)) return k;
  return 0;
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc(0.0);
  for (Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

Eigen::VectorXcd ComplexPolynomial::eval_on_grid(const UnitGrid& grid) const {
  const Index n = grid.size();
  if (coeffs_.size() > n)
    throw std::invalid_argument(
        "eval_on_grid: grid smaller than coefficient count");
  // Values at e^{2 pi i k/N} are N * ifft of the zero-padded coefficients.
  std::vector<Complex> padded(static_cast<size_t>(n), Complex(0.0));
  for (Index k = 0; k < coeffs_.size(); ++k)
    padded[static_cast<size_t>(k)] = coeffs_[k];
  std::vector<Complex> out(static_cast<size_t>(n));
  Eigen::FFT<double> fft;
  fft.inv(out, padded);
  Eigen::VectorXcd vals(n);
  for (Index k = 0; k < n; ++k)
    vals[k] = out[static_cast<size_t>(k)] * static_cast<double>(n);
  return vals;
}

ComplexPolynomial ComplexPolynomial::with_nominal_degree(Index n) const {
  if (n < 0) throw std::invalid_argument("with_nominal_degree: negative");
  if (n + 1 < coeffs_.size()) {
    for (Index k = n + 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != Complex(0.0))
        throw std::invalid_argument(
            "with_nominal_degree: would drop nonzero coefficients");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + 1);
  v.head(std::min(coeffs_.size(), n + 1)) =
      coeffs_.head(std::min(coeffs_.size(), n + 1));
  return ComplexPolynomial(std::move(v));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    *this = with_nominal_degree(rhs.nominal_degree());
  coeffs_.head(rhs.coeffs_.size()) += rhs.coeffs_;
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    *this = with_nominal_degree(rhs.nominal_degree());
  coeffs_.head(rhs.coeffs_.size()) -= rhs.coeffs_;
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex s) {
  coeffs_ *= s;
  return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a,
                            const ComplexPolynomial& b) {
  Eigen::VectorXcd c =
      Eigen::VectorXcd::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (Index i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == Complex(0.0)) continue;
    c.segment(i, b.coeffs_.size()) += a.coeffs_[i] * b.coeffs_;
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial star(const ComplexPolynomial& q, Index n) {
  if (q.actual_degree() > n)
    throw std::invalid_argument("star: actual degree exceeds nominal degree");
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(n + 1);
  for (Index k = 0; k <= n; ++k) r[n - k] = std::conj(q.coeff(k));
  return ComplexPolynomial(std::move(r));
}

ComplexPolynomial star(const ComplexPolynomial& q) {
  return star(q, q.nominal_degree());
}

double coeff_distance(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const Index top = std::max(a.nominal_degree(), b.nominal_degree());
  double d = 0.0;
  for (Index k = 0; k <= top; ++k)
    d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

namespace {

// Golden-section maximization of f on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double* arg) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-14; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  if (arg) *arg = mid;
  return f(mid);
}

}  // namespace

SupNorm sup_norm_on_circle(const ComplexPolynomial& p, Index oversample) {
  const Index deg = std::max<Index>(p.actual_degree(), 1);
  Index want = std::max<Index>(8192, oversample * deg);
  Index n = 1;
  while (n < want) n <<= 1;
  const UnitGrid grid(n);
  const Eigen::VectorXcd vals = p.eval_on_grid(grid);
  Eigen::VectorXd mag = vals.cwiseAbs();

  double grid_max = 0.0;
  for (Index k = 0; k < n; ++k) grid_max = std::max(grid_max, mag[k]);

  const auto f = [&p](double th) {
    return std::abs(p(Complex(std::cos(th), std::sin(th))));
  };

  // Refine every local maximum that could still compete with the winner.
  SupNorm best;
  const double h = grid.spacing();
  for (Index k = 0; k < n; ++k) {
    const Index prev = (k + n - 1) % n;
    const Index next = (k + 1) % n;
    if (mag[k] < mag[prev] || mag[k] < mag[next]) continue;
    if (mag[k] < 0.98 * grid_max) continue;
    double arg = grid.angle(k);
    const double v = golden_max(f, arg - h, arg + h, &arg);
    if (v > best.value) {
      best.value = v;
      const double tau = 2.0 * std::numbers::pi;
      best.argmax_theta = arg < 0 ? arg + tau : (arg >= tau ? arg - tau : arg);
    }
  }
  return best;
}

}  // namespace opuc
