#ifndef OPUC_ANALYSIS_HPP
#define OPUC_ANALYSIS_HPP

#include <vector>

#include "opuc/gram_schmidt.hpp"
#include "opuc/measure.hpp"
#include "opuc/polynomial.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Argument-principle data for a polynomial restricted to the unit circle.
struct WindingResult {
  /// Number of zeros inside the open disk (counting multiplicity), provided
  /// min_abs is well clear of zero.
  long winding = 0;
  double min_abs = 0.0;
  double max_abs = 0.0;
};

/// Winding number of p(e^{i theta}) around 0, computed on the grid with
/// adaptive bisection wherever the phase step is ambiguous. Throws if p
/// numerically vanishes on the circle.
WindingResult winding_number(const ComplexPolynomial& p, const UnitGrid& grid);

/// Roots via the companion matrix (trimmed to actual degree). Intended as
/// the small-degree arbiter for the winding test; degree capped at 512.
std::vector<Complex> polynomial_roots(const ComplexPolynomial& p);

/// True when p has no zeros in the closed unit disk.
bool zero_free_in_closed_disk(const ComplexPolynomial& p, const UnitGrid& grid);

/// Checks of the three orthonormal-candidate conditions: all n zeros inside
/// the open disk, unit 1/(2 pi |P|^2) mass, positive leading coefficient.
struct OrthonormalCandidateReport {
  bool roots_inside = false;
  bool unit_mass = false;
  bool leading_positive = false;
  long winding = 0;
  double min_abs_on_circle = 0.0;
  double mass = 0.0;
  Complex leading = Complex(0.0);
  bool pass() const { return roots_inside && unit_mass && leading_positive; }
};

OrthonormalCandidateReport validate_orthonormal_candidate(
    const ComplexPolynomial& p, double mass_tol = 1e-8);

/// Bernstein-Szego measure d(theta) / (2 pi |phi_n^*(e^{i theta})|^2).
/// Requires phi_n^* zero-free in the closed disk. The first n+1 moments
/// c_0..c_n of the result agree with those of any measure sharing the
/// generating parameters gamma_0..gamma_{n-1}; all later Verblunsky
/// parameters vanish.
CircleMeasure bernstein_szego_measure(const OrthonormalPair& pair,
                                      const UnitGrid& grid);

/// Grid sized so the quadrature resolves 1/|phi_n^*|^2: the Fourier tail of
/// that weight decays like r^N with r the largest zero modulus of phi_n, so
/// zeros close to the circle demand finer grids. Degree <= 512 only.
UnitGrid bernstein_szego_grid(const OrthonormalPair& pair);

/// F(z) = integral of (e^{i theta}+z)/(e^{i theta}-z) d(mu), |z| < 1.
Complex caratheodory_from_measure(const CircleMeasure& mu, Complex z);

/// Taylor coefficients 0..count-1 of the ratio num/den around z = 0
/// (power-series division; den(0) != 0 required).
Eigen::VectorXcd taylor_of_ratio(const ComplexPolynomial& num,
                                 const ComplexPolynomial& den, Index count);

/// Szego function of the weight: the outer function with boundary modulus
/// |Pi|^{-2} = 2 pi sigma' and Pi(0) > 0, evaluated inside the disk through
/// the Cauchy-kernel integral of -(1/2) log(2 pi sigma'). Atoms are ignored;
/// the weight must be strictly positive on the grid.
Complex szego_function(const CircleMeasure& mu, Complex z);

/// Boundary values of the Szego function on the grid, via the FFT analytic
/// completion of -(1/2) log(2 pi sigma'). The companion residual reports how
/// much negative-frequency energy the result carries (ideally ~0: that part
/// is the nontrivial check, the modulus identity holds by construction).
struct SzegoBoundary {
  Eigen::VectorXcd values;
  double analyticity_residual = 0.0;
};
SzegoBoundary szego_function_boundary(const CircleMeasure& mu);

/// The ratio |Phi_n / phi_n| = 1/kappa_n against the Steklov band
/// [sqrt(delta), 1].
struct SzegoRatioReport {
  double ratio = 0.0;
  double sqrt_delta = 0.0;
  bool ok = false;
};

SzegoRatioReport szego_ratio_check(const CircleMeasure& mu, Index n,
                                   double delta);
SzegoRatioReport szego_ratio_check(double kappa_n, double delta);

}  // namespace opuc

#endif
