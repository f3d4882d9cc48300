#ifndef OPUC_REALLINE_HPP
#define OPUC_REALLINE_HPP

#include <functional>
#include <vector>

#include "opuc/measure.hpp"

namespace opuc {

/// Measure rho(x) dx on (-1, 1). Quadrature happens on the circle through
/// x = cos(theta), which tames arcsine-type endpoint singularities.
class SegmentMeasure {
 public:
  using DensityFn = std::function<double(double)>;
  explicit SegmentMeasure(DensityFn rho) : rho_(std::move(rho)) {}
  double density(double x) const { return rho_(x); }

 private:
  DensityFn rho_;
};

/// Pushes the segment measure to the circle: sigma'(theta) =
/// rho(cos theta) |sin theta|, symmetric about the real axis by construction.
/// Values at the axis nodes theta = 0, pi are taken as one-sided limits.
CircleMeasure segment_to_circle(const SegmentMeasure& rho,
                                const UnitGrid& grid);

/// Symmetry check sigma'(theta) = sigma'(2 pi - theta) on the grid samples.
bool is_real_symmetric(const CircleMeasure& mu, double rel_tol = 1e-9);

/// Real polynomials P_0..P_K in x obtained from the even-degree circle
/// polynomials by
///   P_k(x) = (phi_2k(z) + phi_2k^*(z)) z^{-k}
///            / sqrt(2 pi [1 + phi_2k(0)/lambda_2k]),  x = (z + 1/z)/2.
/// With sigma a symmetric probability measure these are orthonormal with
/// respect to 2 pi d(psi) on [-1, 1], psi the pulled-back distribution; the
/// convention is pinned by the Lebesgue -> Chebyshev case and confirmed by
/// the segment oracle. Coefficient vectors are in the monomial basis.
std::vector<Eigen::VectorXd> circle_to_segment_polys(const CircleMeasure& sigma,
                                                     Index K);

/// Independent orthonormalization of 1, x, x^2, ... against rho(x) dx with
/// positive leading coefficients (quadrature via the circle substitution).
std::vector<Eigen::VectorXd> segment_gram_schmidt_oracle(
    const SegmentMeasure& rho, Index K, const UnitGrid& grid);

/// Horner evaluation for the real coefficient vectors above.
double eval_segment_poly(const Eigen::VectorXd& coeffs, double x);

}  // namespace opuc

#endif
