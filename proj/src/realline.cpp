#include "opuc/realline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "opuc/detail/kahan.hpp"
#include "opuc/gram_schmidt.hpp"

namespace opuc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

double circle_density(const SegmentMeasure& rho, double theta) {
  double s = std::sin(theta);
  if (std::abs(s) < 1e-8) {
    // One-sided limit at the axis nodes.
    const double base = theta < 0.5 * kPi || theta > 1.5 * kPi ? 0.0 : kPi;
    const double probe = base == 0.0 ? 1e-8 : kPi - 1e-8;
    return rho.density(std::cos(probe)) * std::abs(std::sin(probe));
  }
  return rho.density(std::cos(theta)) * std::abs(s);
}

}  // namespace

CircleMeasure segment_to_circle(const SegmentMeasure& rho,
                                const UnitGrid& grid) {
  auto fn = [rho](double th) { return circle_density(rho, th); };
  return CircleMeasure(grid, fn);
}

bool is_real_symmetric(const CircleMeasure& mu, double rel_tol) {
  const auto& w = mu.weight_samples();
  const Index n = mu.grid().size();
  const double scale = w.maxCoeff();
  for (Index k = 1; k < n; ++k)
    if (std::abs(w[k] - w[n - k]) > rel_tol * (scale + 1e-300)) return false;
  for (const auto& a : mu.atoms()) {
    if (a.theta == 0.0 || std::abs(a.theta - kPi) < 1e-15) continue;
    bool paired = false;
    for (const auto& other : mu.atoms())
      if (std::abs(other.theta - (kTau - a.theta)) < 1e-12 &&
          std::abs(other.mass - a.mass) < rel_tol * (a.mass + 1e-300))
        paired = true;
    if (!paired) return false;
  }
  return true;
}

namespace {

// Chebyshev T_l in the monomial basis, l = 0..K.
std::vector<Eigen::VectorXd> chebyshev_table(Index K) {
  std::vector<Eigen::VectorXd> t;
  t.push_back(Eigen::VectorXd::Ones(1));
  if (K >= 1) {
    Eigen::VectorXd t1 = Eigen::VectorXd::Zero(2);
    t1[1] = 1.0;
    t.push_back(t1);
  }
  for (Index l = 2; l <= K; ++l) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(l + 1);
    next.tail(l) += 2.0 * t[static_cast<size_t>(l - 1)];
    next.head(l - 1) -= t[static_cast<size_t>(l - 2)];
    t.push_back(next);
  }
  return t;
}

}  // namespace

std::vector<Eigen::VectorXd> circle_to_segment_polys(const CircleMeasure& sigma,
                                                     Index K) {
  if (!is_real_symmetric(sigma))
    throw std::invalid_argument(
        "circle_to_segment_polys: measure not symmetric about the real axis");
  const MonicFamily fam = monic_family(sigma, 2 * K);
  const auto cheb = chebyshev_table(K);

  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<size_t>(K) + 1);
  for (Index k = 0; k <= K; ++k) {
    const OrthonormalPair pair = fam.orthonormal(2 * k);
    const Complex phi0 = pair.phi(Complex(0.0));
    const double monic_at_0 = std::real(phi0) / pair.kappa;
    if (std::abs(std::imag(phi0)) > 1e-8 * pair.kappa)
      throw std::runtime_error(
          "circle_to_segment_polys: phi_2k(0) not real (symmetry violated)");
    const double denom = std::sqrt(kTau * (1.0 + monic_at_0));

    // z^{-k} (phi_2k + phi_2k^*) = q_k + sum_l 2 q_{k+l} T_l(x) with the
    // palindromic coefficients q of the bracket.
    const ComplexPolynomial q = pair.phi + pair.phi_star;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(k + 1);
    acc[0] = std::real(q.coeff(k));
    for (Index l = 1; l <= k; ++l) {
      const Complex c = q.coeff(k + l);
      if (std::abs(std::imag(c)) > 1e-8 * (1.0 + pair.kappa))
        throw std::runtime_error(
            "circle_to_segment_polys: complex coefficient survived symmetry");
      acc.head(l + 1) += 2.0 * std::real(c) * cheb[static_cast<size_t>(l)];
    }
    out.push_back(acc / denom);
  }
  return out;
}

std::vector<Eigen::VectorXd> segment_gram_schmidt_oracle(
    const SegmentMeasure& rho, Index K, const UnitGrid& grid) {
  if (!grid.supports_degree(2 * K))
    throw std::invalid_argument("segment_gram_schmidt_oracle: grid too small");
  const Index N = grid.size();
  Eigen::VectorXd w(N), x(N);
  for (Index j = 0; j < N; ++j) {
    w[j] = circle_density(rho, grid.angle(j));
    x[j] = std::cos(grid.angle(j));
  }
  // <f, g> = (1/2) sum f(x_j) g(x_j) w_j d(theta): the circle substitution
  // covers the segment twice.
  const auto inner = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    detail::KahanSum<double> acc;
    for (Index j = 0; j < N; ++j) {
      double fa = 0.0, fb = 0.0;
      for (Index t = a.size() - 1; t >= 0; --t) fa = fa * x[j] + a[t];
      for (Index t = b.size() - 1; t >= 0; --t) fb = fb * x[j] + b[t];
      acc.add(fa * fb * w[j]);
    }
    return 0.5 * acc.value() * grid.spacing();
  };

  std::vector<Eigen::VectorXd> basis;
  for (Index k = 0; k <= K; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(k + 1);
    v[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& p : basis) {
        Eigen::VectorXd pp = Eigen::VectorXd::Zero(k + 1);
        pp.head(p.size()) = p;
        v -= inner(v, pp) * pp;
      }
    const double nrm = std::sqrt(inner(v, v));
    if (!(nrm > 0) || !std::isfinite(nrm))
      throw std::runtime_error("segment_gram_schmidt_oracle: breakdown at " +
                               std::to_string(k));
    v /= nrm;
    if (v[k] < 0) v = -v;
    basis.push_back(v);
  }
  return basis;
}

double eval_segment_poly(const Eigen::VectorXd& coeffs, double x) {
  double acc = 0.0;
  for (Index t = coeffs.size() - 1; t >= 0; --t) acc = acc * x + coeffs[t];
  return acc;
}

}  // namespace opuc
