#ifndef OPUC_GLUING_HPP
#define OPUC_GLUING_HPP

#include <Eigen/Core>

#include "opuc/analysis.hpp"
#include "opuc/measure.hpp"
#include "opuc/schur.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Input to the gluing construction: the degree-n orthonormal pair fixing the
/// head of the Schur sequence and a polynomial Caratheodory function F~
/// fixing the tail. Must satisfy
///   1. phi_n^* zero-free in the closed disk,
///   2. integral of |phi_n^*|^{-2} d(theta) = 2 pi and phi_n^*(0) > 0,
///   3. Re F~ > 0 on the circle with mean 1 (and F~(0) real, so F~ is the
///      Cauchy transform of Re F~ d(theta)/(2 pi)).
struct GlueInput {
  OrthonormalPair phi_n;
  ComplexPolynomial F_tilde;
  Index n = 0;
};

struct GlueValidation {
  bool zero_free = false;
  double norma_residual = 0.0;   // | integral |phi_n^*|^{-2} - 2 pi | / (2 pi)
  double phi_star_at_0 = 0.0;
  double min_re_F = 0.0;
  double f_mean_residual = 0.0;  // | mean Re F~ - 1 |
  double f_imag_at_0 = 0.0;
  bool pass() const {
    return zero_free && norma_residual < 1e-8 && phi_star_at_0 > 0 &&
           min_re_F > 0 && f_mean_residual < 1e-8 &&
           std::abs(f_imag_at_0) < 1e-10;
  }
};

GlueValidation validate_glue_input(const GlueInput& input,
                                   const UnitGrid& grid);

/// Density samples of the glued measure on the grid:
///   sigma' = 2 Re F~ / (pi |phi_n + phi_n^* + F~ (phi_n^* - phi_n)|^2).
/// Throws when the denominator collapses (violated preconditions).
Eigen::VectorXd glued_weight_density(const GlueInput& input,
                                     const UnitGrid& grid);

struct GluedMeasure {
  CircleMeasure sigma;
  /// gamma_0..gamma_{n-1} of the Bernstein-Szego measure of phi_n followed by
  /// the computed prefix of the tail parameters of Re F~ d(theta)/(2 pi).
  SchurSequence glued_gamma;
  double tail_l1 = 0.0;      // sum |gamma~_j| over the computed prefix
  double mass_residual = 0.0;
};

/// Full gluing: density, probability check, and the head ++ tail parameter
/// sequence (tail computed to tail_len by the Gram-Schmidt oracle).
GluedMeasure glued_weight(const GlueInput& input, const UnitGrid& grid,
                          Index tail_len = 64);

/// Concatenation head ++ tail.
SchurSequence glue_schur(const SchurSequence& head, const SchurSequence& tail);

/// Ordered transfer-matrix product
///   (A_m, B_m; C_m, D_m) = prod_{j=m-1..0} (z, -conj(g_j); -z g_j, 1)/rho_j
/// whose entries combine the tail polynomials:
///   A = (phi~ + psi~)/2, B = (phi~ - psi~)/2,
///   C = (phi~* - psi~*)/2, D = (phi~* + psi~*)/2.
/// Determinant is z^m exactly.
Eigen::Matrix2cd transfer_matrix(const SchurSequence& tail, Index m, Complex z);

/// phi_{n+m}^* of the glued sequence computed two ways - direct recursion on
/// head ++ tail and the product formula
///   2 phi_{n+m}^* = phi_n (phi~_m^* - psi~_m^*) + phi_n^* (phi~_m^* + psi~_m^*)
/// - asserted to agree, then returned.
ComplexPolynomial glued_phi_star(const GlueInput& input,
                                 const SchurSequence& head,
                                 const SchurSequence& tail, Index m);

/// sup over the grid of |2 phi_{n+m}^* / phi~_m^* - (phi_n + phi_n^* +
/// F~_m (phi_n^* - phi_n))| with F~_m = psi~_m^*/phi~_m^*; decreasing in m as
/// the infinite-product limit takes over.
double glued_phi_star_residual(const GlueInput& input,
                               const SchurSequence& head,
                               const SchurSequence& tail, Index m,
                               const UnitGrid& grid);

/// Cancelation diagnostics for the pair (phi_n, F~): the pointwise ratio
///   (|phi_n^*| + |F~ (phi_n^* - phi_n)|) / sqrt(Re F~)
/// (its grid sup and values near z = 1) and |phi_n(1)|/sqrt(n).
struct DecouplingReport {
  double ratio_sup = 0.0;
  double ratio_argmax_theta = 0.0;
  double ratio_at_1 = 0.0;
  double ratio_near_1 = 0.0;  // sup over |theta| <= 16/n
  double phi_at_1_over_sqrt_n = 0.0;
};

DecouplingReport decoupling_diagnostics(const GlueInput& input,
                                        const UnitGrid& grid);

}  // namespace opuc

#endif
