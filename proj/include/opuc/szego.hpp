#ifndef OPUC_SZEGO_HPP
#define OPUC_SZEGO_HPP

#include <vector>

#include "opuc/polynomial.hpp"
#include "opuc/schur.hpp"

namespace opuc {

/// Orthonormal polynomial phi_n together with its reversed companion
/// phi_n^* = star(phi_n, n) and the leading coefficient kappa_n > 0.
struct OrthonormalPair {
  ComplexPolynomial phi;
  ComplexPolynomial phi_star;
  double kappa = 1.0;
  Index degree = 0;
};

/// Runs the Szego recursion
///   phi_{k+1}   = rho_k^{-1} (z phi_k - conj(gamma_k) phi_k^*)
///   phi_{k+1}^* = rho_k^{-1} (phi_k^* - gamma_k z phi_k)
/// from phi_0 = phi_0^* = 1 and returns the pairs for degrees 0..n.
std::vector<OrthonormalPair> szego_recursion(const SchurSequence& gamma,
                                             Index n);

/// Second-kind polynomials psi_k: the same recursion with parameters -gamma.
std::vector<OrthonormalPair> second_kind(const SchurSequence& gamma, Index n);

/// Christoffel-Darboux kernel K_n(xi, z) = sum_{j<=n} conj(phi_j(xi)) phi_j(z).
Complex cd_kernel(const std::vector<OrthonormalPair>& phis, Complex xi,
                  Complex z, Index n);

/// K_n(xi, .) as a polynomial in z of nominal degree n.
ComplexPolynomial cd_kernel_poly(const std::vector<OrthonormalPair>& phis,
                                 Complex xi, Index n);

}  // namespace opuc

#endif
