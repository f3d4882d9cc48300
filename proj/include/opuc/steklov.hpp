#ifndef OPUC_STEKLOV_HPP
#define OPUC_STEKLOV_HPP

#include <vector>

#include "opuc/gluing.hpp"
#include "opuc/measure.hpp"
#include "opuc/report.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Square-wave symbol: +1 on (0, pi), -1 on (pi, 2 pi), 0 at the jumps.
double step_symbol(double theta);

/// Cauchy transform L of the step symbol, analytic in the disk. Its Taylor
/// coefficients are 4/(i pi k) for odd k and 0 otherwise; boundary real part
/// reproduces the symbol away from the jumps.
Complex cauchy_transform_step(Complex z);

/// The same transform by direct quadrature of the defining integral
/// (cross-check path).
Complex cauchy_transform_step_quad(Complex z, const UnitGrid& grid);

/// Taylor coefficients of L for indices 0..count-1.
Eigen::VectorXcd cauchy_step_coefficients(Index count);

/// Analytic polynomial of degree n-1 with zero constant term whose real part
/// stays bounded while the imaginary part peaks like log n within O(1/n) of
/// theta = 0 and pi.
struct LogBlowup {
  ComplexPolynomial poly;
  Index n = 0;
  double re_sup = 0.0;   // measured sup |Re M_n| on the circle
  double im_sup = 0.0;   // measured sup |Im M_n|
  double re_mean = 0.0;  // measured mean of Re M_n (should vanish)
};

/// Fejer damping: coefficient k of the result is (1 - k/n) * coeffs[k] for
/// 1 <= k <= n-1, constant term 0. Verifies M(0) = 0, zero mean of the real
/// part, and sup |Re M| <= re_bound.
LogBlowup fejer_smooth(const Eigen::VectorXcd& coeffs, Index n,
                       double re_bound = 1.0 + 1e-10);

/// M_n = (Fejer kernel) * L built from the exact Taylor law of L.
LogBlowup log_blowup_polynomial(Index n);

/// max over the circle of |sum_{j<=N} sin(j theta)/j| (classically below
/// 1 + pi/2; measured value frozen as a regression constant).
double bounded_sine_sum_sup(Index N);

/// Everything the explicit construction produces for one (n, eps, b):
///   F~ = 1 - 2 eps M_n,  D_n = M_n + b,
///   phi_n^* = a (1 + eps (D_n + D_n^*)),  phi_n = a (z^n + eps (D_n + D_n^*)),
/// a fixed by the 2 pi normalization of |phi_n^*|^{-2}, and the glued
/// probability weight sigma whose orthonormal polynomial phi_n is.
struct SteklovConstruction {
  Index n;
  double eps;
  double b;
  double a;
  LogBlowup M;
  ComplexPolynomial D;
  ComplexPolynomial F_tilde;
  OrthonormalPair phi;  // kappa = a (1 + eps b)
  UnitGrid grid;
  CircleMeasure sigma;
  double ushi_residual;    // two evaluations of the weight bracket
  double glue_mismatch;    // closed form vs glued-formula density
  double weight_dev;       // sup |2 pi sigma' - 1|
  double weight_dev_a;     // sup |2 pi sigma' - 1/a^2|
  double mass_residual;    // | integral sigma' - 1 |
  double min_re_F;
  double int_inv;          // integral |1 + eps(D+D^*)|^{-2}
  double int_D2;           // integral |D|^2
};

/// Assembles and checks the construction. Requires n >= 2, eps in (0, 0.4]
/// (so Re F~ >= 1 - 2 eps > 0 under |Re M_n| <= 1), b > 1.
SteklovConstruction build_construction(Index n, double eps, double b = 2.0);

/// The weight through the closed-form bracket
///   2a (1 + eps b (1 + z^n) + 2 eps z^n Re M_n),
/// cross-checked pointwise against the direct bracket
///   phi_n + phi_n^* + F~ (phi_n^* - phi_n)
/// and against the glued-measure code path. Returns the probability measure
/// and the measured residuals.
struct ClosedFormWeight {
  CircleMeasure sigma;
  double ushi_residual;
  double glue_mismatch;
  double weight_dev;
  double weight_dev_a;
  double mass_residual;
};
ClosedFormWeight closed_form_weight(Index n, double eps, double b, double a,
                                    const LogBlowup& M,
                                    const OrthonormalPair& phi,
                                    const ComplexPolynomial& F_tilde,
                                    const UnitGrid& grid);

/// Growth measurement: grid sup of |phi_n|, the value at z~ = e^{i pi/n}
/// (where z~^n = -1 turns D_n + D_n^* into 2i Im M_n), and the comparator
/// eps * log n.
GrowthRow verify_growth(const SteklovConstruction& c);

/// One tried multiplier in the variant's F~ = 1 + C eps M_n search.
struct VariantCandidate {
  double C = 0.0;
  bool caratheodory_ok = false;
  double min_weight_2pi = 0.0;  // min of 2 pi sigma'
};

/// The mass-points polynomial rebuilt through the analytic machinery:
///   Phi_n^* = 1 + eps/(1+2 eps) - eps (b + b z^n + M_n + M_n^*),
///   b = 1/(1+2 eps), M_n from the d-coefficients,
/// normalized to phi_n^* = a Phi_n^*, glued with F~ = 1 + C eps M_n for
/// C in {1, 2, 4}; the best Steklov level wins.
struct RakhmanovVariant {
  Index n;
  double eps;
  double b;
  double a;
  LogBlowup M;
  ComplexPolynomial Phi_star;   // unnormalized
  double re_Phi_dev;            // sup |Re Phi_n^* - 1|
  double int_inv;               // integral |Phi_n^*|^{-2}
  OrthonormalPair phi;
  UnitGrid grid;
  std::vector<VariantCandidate> candidates;
  double chosen_C;
  CircleMeasure sigma;
  double mass_residual;
};

RakhmanovVariant rakhmanov_variant(Index n, double eps);

/// Cancelation diagnostics of the construction's (phi_n, F~) pair; the grid
/// sup of the pointwise bound ratio grows with n since phi_n^* - phi_n =
/// a(1 - z^n) cancels nothing away from z^n = 1.
DecouplingReport sec1_violation_demo(const SteklovConstruction& c);

}  // namespace opuc

#endif
