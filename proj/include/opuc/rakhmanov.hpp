#ifndef OPUC_RAKHMANOV_HPP
#define OPUC_RAKHMANOV_HPP

#include <optional>
#include <vector>

#include "opuc/analysis.hpp"
#include "opuc/measure.hpp"
#include "opuc/report.hpp"

namespace opuc {

/// Point masses m_k at unit-modulus locations xi_k over a background measure.
/// Admissible for the mass-adding formula only when the pairwise kernel
/// condition K_{n-1}(xi_j, xi_l) = 0 (j != l) holds.
struct MassPlacement {
  std::vector<Complex> points;
  std::vector<double> masses;
  CircleMeasure background;

  MassPlacement(std::vector<Complex> pts, std::vector<double> ms,
                CircleMeasure bg);
};

/// Orthonormal polynomials phi_0..phi_{n-1} of the background. Lebesgue
/// backgrounds short-circuit to monomials; anything else goes through the
/// Gram-Schmidt oracle.
std::vector<OrthonormalPair> background_orthonormal(const CircleMeasure& mu,
                                                    Index n);

/// Max over j != l of |K_{n-1}(xi_j, xi_l)| for the placement.
double verify_kernel_condition(const MassPlacement& placement, Index n);

/// The n-1 roots on the circle of xi -> K_{n-1}(xi, zhat, mu), located by
/// scanning 64n grid points and refining by golden section. Throws unless
/// exactly n-1 roots are found at the requested relative tolerance.
std::vector<Complex> kernel_roots(Complex zhat, Index n,
                                  const CircleMeasure& mu,
                                  double rel_tol = 1e-8);

/// Monic polynomial of the mass-perturbed measure, with the d-coefficient
/// vector attached when the roots-of-unity closed form applies.
struct RakhmanovPolynomial {
  ComplexPolynomial Phi;
  ComplexPolynomial Phi_star;
  Eigen::VectorXcd d;  // empty unless produced by the closed form
};

/// Monic Phi_n of eta = mu + sum m_k delta_{theta_k} via the mass-adding
/// formula
///   Phi_n(z, eta) = Phi_n(z, mu)
///     - sum_k m_k Phi_n(xi_k, mu) K_{n-1}(xi_k, z, mu)
///                 / (1 + m_k K_{n-1}(xi_k, xi_k, mu)).
/// Requires m < n and the kernel condition.
RakhmanovPolynomial rakhmanov_update(const MassPlacement& placement, Index n);

/// d_l = sum_{j<m} xi_j^{-l} for l = 0..n over the first m = n/2 of the n-th
/// roots of unity (n even). Closed form for odd l: ((-1)^l - 1)/(e^{-2 pi i l/n} - 1);
/// even l in (0, n) vanish; d_0 = d_n = m. Satisfies conj(d_{n-l}) = d_l.
Eigen::VectorXcd d_coefficients(Index n);

/// The same vector by direct geometric summation (cross-check path).
Eigen::VectorXcd d_coefficients_direct(Index n);

/// The roots-of-unity construction over the Lebesgue background: mass eps/m
/// at each of xi_k = e^{2 pi i k/n}, k < m = n/2. Returns the closed-form
/// monic pair and the perturbed measure. Checks
/// Phi_n^* - Phi_n = (1+3 eps)/(1+2 eps) (1 - z^n) exactly in coefficients.
std::pair<RakhmanovPolynomial, CircleMeasure> lebesgue_construction(
    Index n, double eps, std::optional<UnitGrid> grid = std::nullopt);

/// Growth rows for the closed-form construction across the given (even) n:
/// sup |Phi_n| on the circle, maximizer, comparator 1 + eps*log(n), Steklov
/// level 1/(1+eps) of the normalized measure.
GrowthReport growth_table(double eps, const std::vector<Index>& ns);

}  // namespace opuc

#endif
