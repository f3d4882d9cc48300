#include "opuc/szego.hpp"

#include <stdexcept>

namespace opuc {

std::vector<OrthonormalPair> szego_recursion(const SchurSequence& gamma,
                                             Index n) {
  if (n > gamma.size())
    throw std::invalid_argument("szego_recursion: not enough parameters");
  std::vector<OrthonormalPair> out;
  out.reserve(static_cast<size_t>(n) + 1);

  Eigen::VectorXcd phi(1), phis(1);
  phi[0] = Complex(1.0);
  phis[0] = Complex(1.0);
  double kappa = 1.0;
  out.push_back({ComplexPolynomial(phi), ComplexPolynomial(phis), kappa, 0});

  for (Index k = 0; k < n; ++k) {
    const Complex g = gamma.gamma(k);
    const double inv_rho = 1.0 / gamma.rho(k);
    Eigen::VectorXcd nphi = Eigen::VectorXcd::Zero(k + 2);
    Eigen::VectorXcd nphis = Eigen::VectorXcd::Zero(k + 2);
    nphi.tail(k + 1) = phi;                      // z * phi_k
    nphi.head(k + 1) -= std::conj(g) * phis;     // - conj(gamma) phi_k^*
    nphis.head(k + 1) = phis;                    // phi_k^*
    nphis.tail(k + 1) -= g * phi;                // - gamma z phi_k
    phi = inv_rho * nphi;
    phis = inv_rho * nphis;
    kappa *= inv_rho;
    out.push_back({ComplexPolynomial(phi), ComplexPolynomial(phis), kappa,
                   k + 1});
  }
  return out;
}

std::vector<OrthonormalPair> second_kind(const SchurSequence& gamma, Index n) {
  return szego_recursion(gamma.negated(), n);
}

Complex cd_kernel(const std::vector<OrthonormalPair>& phis, Complex xi,
                  Complex z, Index n) {
  if (n + 1 > static_cast<Index>(phis.size()))
    throw std::invalid_argument("cd_kernel: not enough polynomials");
  Complex acc(0.0);
  for (Index j = 0; j <= n; ++j)
    acc += std::conj(phis[static_cast<size_t>(j)].phi(xi)) *
           phis[static_cast<size_t>(j)].phi(z);
  return acc;
}

ComplexPolynomial cd_kernel_poly(const std::vector<OrthonormalPair>& phis,
                                 Complex xi, Index n) {
  if (n + 1 > static_cast<Index>(phis.size()))
    throw std::invalid_argument("cd_kernel_poly: not enough polynomials");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  for (Index j = 0; j <= n; ++j) {
    const auto& p = phis[static_cast<size_t>(j)].phi;
    const Complex w = std::conj(p(xi));
    c.head(p.coeffs().size()) += w * p.coeffs();
  }
  return ComplexPolynomial(std::move(c));
}

}  // namespace opuc
