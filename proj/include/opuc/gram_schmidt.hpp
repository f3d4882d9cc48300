#ifndef OPUC_GRAM_SCHMIDT_HPP
#define OPUC_GRAM_SCHMIDT_HPP

#include <vector>

#include "opuc/measure.hpp"
#include "opuc/schur.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Monic orthogonal polynomials Phi_0..Phi_n of the measure, built from the
/// moment Toeplitz form by modified Gram-Schmidt on the monomial basis with
/// one reorthogonalization pass. This is the oracle the recursion-based code
/// paths are tested against; it must stay independent of them.
///
/// Throws if the Gram matrix of moments fails to be numerically positive
/// definite (degenerate measure or n too large for the atom count).
std::vector<ComplexPolynomial> monic_gram_schmidt(const CircleMeasure& mu,
                                                  Index n);

/// Monic polynomials together with their squared L^2(mu) norms.
struct MonicFamily {
  std::vector<ComplexPolynomial> monic;
  Eigen::VectorXd norm_sq;

  /// kappa_k = 1/||Phi_k||.
  double kappa(Index k) const;
  /// Orthonormal pair phi_k = Phi_k/||Phi_k||, phi_k^* = star(phi_k, k).
  OrthonormalPair orthonormal(Index k) const;
};

MonicFamily monic_family(const CircleMeasure& mu, Index n);

/// Schur parameters recovered via conj(gamma_k) = -Phi_{k+1}(0).
SchurSequence verblunsky_from_measure(const CircleMeasure& mu, Index n);

}  // namespace opuc

#endif
