#include "opuc/steklov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "opuc/analysis.hpp"
#include "opuc/detail/kahan.hpp"
#include "opuc/rakhmanov.hpp"

namespace opuc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

}  // namespace

double step_symbol(double theta) {
  if (theta > 0.0 && theta < kPi) return 1.0;
  if (theta > kPi && theta < kTau) return -1.0;
  return 0.0;
}

Complex cauchy_transform_step(Complex z) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("cauchy_transform_step: |z| >= 1");
  // sum over odd k of 4/(i pi k) z^k = -(4 i / pi) atanh(z)
  return Complex(0.0, -4.0 / kPi) * std::atanh(z);
}

Complex cauchy_transform_step_quad(Complex z, const UnitGrid& grid) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("cauchy_transform_step_quad: |z| >= 1");
  detail::KahanSum<Complex> acc;
  const auto& pts = grid.points();
  for (Index k = 0; k < grid.size(); ++k)
    acc.add(step_symbol(grid.angle(k)) * (pts[k] + z) / (pts[k] - z));
  return acc.value() * grid.spacing() / kTau;
}

Eigen::VectorXcd cauchy_step_coefficients(Index count) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(count);
  for (Index k = 1; k < count; k += 2)
    c[k] = Complex(0.0, -4.0 / (kPi * static_cast<double>(k)));
  return c;
}

LogBlowup fejer_smooth(const Eigen::VectorXcd& coeffs, Index n,
                       double re_bound) {
  if (n < 2) throw std::invalid_argument("fejer_smooth: n < 2");
  if (coeffs.size() < n)
    throw std::invalid_argument("fejer_smooth: need coefficients up to n-1");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
  for (Index k = 1; k < n; ++k)
    c[k] = (1.0 - static_cast<double>(k) / static_cast<double>(n)) * coeffs[k];

  LogBlowup out;
  out.poly = ComplexPolynomial(std::move(c));
  out.n = n;

  const UnitGrid grid = UnitGrid::for_degree(n);
  const Eigen::VectorXcd vals = out.poly.eval_on_grid(grid);
  detail::KahanSum<double> mean;
  for (Index k = 0; k < grid.size(); ++k) {
    out.re_sup = std::max(out.re_sup, std::abs(std::real(vals[k])));
    out.im_sup = std::max(out.im_sup, std::abs(std::imag(vals[k])));
    mean.add(std::real(vals[k]));
  }
  out.re_mean = mean.value() / static_cast<double>(grid.size());
  if (std::abs(out.re_mean) > 1e-10)
    throw std::runtime_error("fejer_smooth: real part has nonzero mean");
  if (out.re_sup > re_bound)
    throw std::runtime_error("fejer_smooth: sup |Re M| = " +
                             std::to_string(out.re_sup) + " exceeds bound");
  return out;
}

LogBlowup log_blowup_polynomial(Index n) {
  return fejer_smooth(cauchy_step_coefficients(n), n);
}

double bounded_sine_sum_sup(Index N) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
  for (Index j = 1; j <= N; ++j) c[j] = 1.0 / static_cast<double>(j);
  const ComplexPolynomial p{Eigen::VectorXcd(c)};
  Index want = std::max<Index>(8192, 32 * N);
  Index sz = 1;
  while (sz < want) sz <<= 1;
  const UnitGrid grid(sz);
  return p.eval_on_grid(grid).imag().cwiseAbs().maxCoeff();
}

ClosedFormWeight closed_form_weight(Index n, double eps, double b, double a,
                                    const LogBlowup& M,
                                    const OrthonormalPair& phi,
                                    const ComplexPolynomial& F_tilde,
                                    const UnitGrid& grid) {
  const Index N = grid.size();
  const auto& pts = grid.points();
  const Eigen::VectorXcd m_vals = M.poly.eval_on_grid(grid);
  const Eigen::VectorXcd f_vals = F_tilde.eval_on_grid(grid);
  const Eigen::VectorXcd phi_vals = phi.phi.eval_on_grid(grid);
  const Eigen::VectorXcd phis_vals = phi.phi_star.eval_on_grid(grid);

  Eigen::VectorXd w(N);
  double ushi = 0.0;
  for (Index k = 0; k < N; ++k) {
    const Complex zn = pts[(n * k) % N];  // e^{i n theta_k}, exact
    const Complex closed =
        2.0 * a *
        (1.0 + eps * b * (1.0 + zn) + 2.0 * eps * zn * std::real(m_vals[k]));
    const Complex direct =
        phi_vals[k] + phis_vals[k] + f_vals[k] * (phis_vals[k] - phi_vals[k]);
    ushi = std::max(ushi, std::abs(direct - closed));
    w[k] = 2.0 * std::real(f_vals[k]) / (kPi * std::norm(closed));
  }
  if (ushi > 1e-10 * (1.0 + 2.0 * a))
    throw std::runtime_error(
        "closed_form_weight: bracket evaluations disagree by " +
        std::to_string(ushi));

  const GlueInput ginput{phi, F_tilde, n};
  const Eigen::VectorXd w_glue = glued_weight_density(ginput, grid);
  const double glue_mismatch = (w - w_glue).cwiseAbs().maxCoeff();
  if (glue_mismatch > 1e-10)
    throw std::runtime_error("closed_form_weight: glued-path density differs");

  double dev = 0.0, dev_a = 0.0;
  const double inv_a2 = 1.0 / (a * a);
  for (Index k = 0; k < N; ++k) {
    dev = std::max(dev, std::abs(kTau * w[k] - 1.0));
    dev_a = std::max(dev_a, std::abs(kTau * w[k] - inv_a2));
  }

  // Closed-form evaluator for off-grid queries.
  const ComplexPolynomial m_poly = M.poly;
  const ComplexPolynomial f_poly = F_tilde;
  auto fn = [n, eps, b, a, m_poly, f_poly](double th) {
    const Complex z(std::cos(th), std::sin(th));
    const Complex zn(std::cos(n * th), std::sin(n * th));
    const Complex closed =
        2.0 * a *
        (1.0 + eps * b * (1.0 + zn) + 2.0 * eps * zn * std::real(m_poly(z)));
    return 2.0 * std::real(f_poly(z)) / (kPi * std::norm(closed));
  };

  CircleMeasure sigma(grid, Eigen::VectorXd(w), fn, {}, true);
  const double mass_residual = std::abs(sigma.total_mass() - 1.0);
  return {std::move(sigma), ushi, glue_mismatch, dev, dev_a, mass_residual};
}

SteklovConstruction build_construction(Index n, double eps, double b) {
  if (n < 2) throw std::invalid_argument("build_construction: n < 2");
  if (!(eps > 0.0 && eps <= 0.4))
    throw std::invalid_argument("build_construction: eps outside (0, 0.4]");
  if (!(b > 1.0))
    throw std::invalid_argument("build_construction: b must exceed 1");

  LogBlowup M = log_blowup_polynomial(n);
  const UnitGrid grid = UnitGrid::for_degree(2 * n);

  ComplexPolynomial D = M.poly + ComplexPolynomial::constant(b);
  ComplexPolynomial F = ComplexPolynomial::constant(1.0) -
                        Complex(2.0 * eps) * M.poly;
  const ComplexPolynomial u = (D + star(D, n)).with_nominal_degree(n);
  const ComplexPolynomial phi_star_raw =
      ComplexPolynomial::constant(1.0) + Complex(eps) * u;

  const Eigen::VectorXcd raw_vals = phi_star_raw.eval_on_grid(grid);
  detail::KahanSum<double> inv_acc;
  for (Index k = 0; k < grid.size(); ++k)
    inv_acc.add(1.0 / std::norm(raw_vals[k]));
  const double int_inv = inv_acc.value() * grid.spacing();
  const double a = std::sqrt(int_inv / kTau);

  // Re F~ > 0 and Re D in [b-1, b+1] on the circle.
  const Eigen::VectorXcd f_vals = F.eval_on_grid(grid);
  const double min_re_F = f_vals.real().minCoeff();
  if (!(min_re_F > 0))
    throw std::runtime_error("build_construction: Re F~ not positive");
  const Eigen::VectorXcd d_vals = D.eval_on_grid(grid);
  for (Index k = 0; k < grid.size(); ++k) {
    const double rd = std::real(d_vals[k]);
    if (rd < b - 1.0 - 1e-9 || rd > b + 1.0 + 1e-9)
      throw std::runtime_error("build_construction: Re D outside [b-1, b+1]");
  }

  OrthonormalPair phi;
  phi.phi_star = Complex(a) * phi_star_raw;
  phi.phi = star(phi.phi_star, n);
  phi.kappa = a * (1.0 + eps * b);
  phi.degree = n;

  if (!zero_free_in_closed_disk(phi.phi_star, grid))
    throw std::runtime_error(
        "build_construction: phi_n^* has a zero in the closed disk");

  // Parseval for the L^2 norm of D; the inverse-square integral was found
  // above. Pointwise |1 + eps(D+D^*)| >= Re D/|D| makes the ratio bound
  // max(1, (b-1)^{-2}).
  const double int_D2 = kTau * D.coeffs().squaredNorm();
  const double ra_bound = std::max(1.0, 1.0 / ((b - 1.0) * (b - 1.0)));
  if (int_inv > ra_bound * int_D2 * (1.0 + 1e-9))
    throw std::runtime_error("build_construction: inverse-square bound failed");

  ClosedFormWeight cw = closed_form_weight(n, eps, b, a, M, phi, F, grid);

  return SteklovConstruction{
      .n = n,
      .eps = eps,
      .b = b,
      .a = a,
      .M = std::move(M),
      .D = std::move(D),
      .F_tilde = std::move(F),
      .phi = std::move(phi),
      .grid = grid,
      .sigma = std::move(cw.sigma),
      .ushi_residual = cw.ushi_residual,
      .glue_mismatch = cw.glue_mismatch,
      .weight_dev = cw.weight_dev,
      .weight_dev_a = cw.weight_dev_a,
      .mass_residual = cw.mass_residual,
      .min_re_F = min_re_F,
      .int_inv = int_inv,
      .int_D2 = int_D2};
}

GrowthRow verify_growth(const SteklovConstruction& c) {
  GrowthRow row;
  row.n = c.n;
  row.epsilon = c.eps;
  const SupNorm sup = sup_norm_on_circle(c.phi.phi);
  row.sup_norm = sup.value;
  row.argmax_theta = sup.argmax_theta;
  row.comparator = c.eps * std::log(static_cast<double>(c.n));
  row.comparator_formula = "eps*log(n)";
  row.steklov_delta = kTau * c.sigma.weight_samples().minCoeff();

  const double th = kPi / static_cast<double>(c.n);
  const Complex zt(std::cos(th), std::sin(th));
  const Complex mv = c.M.poly(zt);
  row.residuals["phi_at_ztilde"] = std::abs(c.phi.phi(zt));
  // z~^n = -1, so M_n + z^n conj(M_n) collapses to 2i Im M_n there.
  row.residuals["m_comb_at_ztilde"] = std::abs(mv - std::conj(mv));
  row.residuals["ratio_to_comparator"] = row.sup_norm / row.comparator;
  row.residuals["dist_to_0_or_pi"] =
      std::min({sup.argmax_theta, kTau - sup.argmax_theta,
                std::abs(sup.argmax_theta - kPi)});
  row.residuals["weight_dev"] = c.weight_dev;
  row.residuals["a"] = c.a;
  return row;
}

RakhmanovVariant rakhmanov_variant(Index n, double eps) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("rakhmanov_variant: n must be even and >= 4");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("rakhmanov_variant: eps outside (0, 1)");
  const Index m = n / 2;
  const double b = 1.0 / (1.0 + 2.0 * eps);
  const Eigen::VectorXcd d = d_coefficients(n);

  // M_n = m^{-1}/(2(1+2 eps)) * (d_1 z + ... + d_{n-1} z^{n-1}); no Fejer
  // damping here, the d-coefficients already carry the right structure.
  const double pref = (1.0 / static_cast<double>(m)) / (2.0 * (1.0 + 2.0 * eps));
  Eigen::VectorXcd mc = Eigen::VectorXcd::Zero(n);
  for (Index l = 1; l < n; ++l) mc[l] = pref * d[l];
  LogBlowup M;
  M.poly = ComplexPolynomial(std::move(mc));
  M.n = n;

  const UnitGrid grid = UnitGrid::for_degree(2 * n);
  const Eigen::VectorXcd m_vals = M.poly.eval_on_grid(grid);
  M.re_sup = m_vals.real().cwiseAbs().maxCoeff();
  M.im_sup = m_vals.imag().cwiseAbs().maxCoeff();
  M.re_mean = m_vals.real().mean();
  if (std::abs(M.re_mean) > 1e-10)
    throw std::runtime_error("rakhmanov_variant: Re M_n has nonzero mean");
  // Real part stays bounded by the sine-sum estimate; 2.0 leaves margin over
  // the measured values without letting regressions through silently.
  if (M.re_sup > 2.0)
    throw std::runtime_error("rakhmanov_variant: sup |Re M_n| = " +
                             std::to_string(M.re_sup));

  // Phi_n^* = 1 + eps/(1+2 eps) - eps (b + b z^n + M_n + M_n^*)
  ComplexPolynomial Phi_star =
      ComplexPolynomial::constant(1.0 + eps / (1.0 + 2.0 * eps)) -
      Complex(eps) *
          (ComplexPolynomial::constant(b) + ComplexPolynomial::monomial(n, b) +
           M.poly.with_nominal_degree(n) + star(M.poly, n));

  // Must coincide with the mass-points closed form coefficientwise.
  const double c_r = (eps / static_cast<double>(m)) / (1.0 + 2.0 * eps);
  Eigen::VectorXcd ls = Eigen::VectorXcd::Zero(n + 1);
  ls[0] = Complex(1.0);
  for (Index l = 1; l <= n; ++l) ls[l] = -c_r * d[l];
  if (coeff_distance(Phi_star, ComplexPolynomial(std::move(ls))) > 1e-12)
    throw std::runtime_error(
        "rakhmanov_variant: rewritten polynomial differs from the closed form");

  const Eigen::VectorXcd ps_vals = Phi_star.eval_on_grid(grid);
  const double re_Phi_dev = (ps_vals.real().array() - 1.0).abs().maxCoeff();
  detail::KahanSum<double> inv_acc;
  for (Index k = 0; k < grid.size(); ++k)
    inv_acc.add(1.0 / std::norm(ps_vals[k]));
  const double int_inv = inv_acc.value() * grid.spacing();
  const double a = std::sqrt(int_inv / kTau);

  OrthonormalPair phi;
  phi.phi_star = Complex(a) * Phi_star;
  phi.phi = star(phi.phi_star, n);
  phi.kappa = a;  // leading coefficient: a * conj(coeff_0(Phi_star)) = a
  phi.degree = n;
  if (!zero_free_in_closed_disk(phi.phi_star, grid))
    throw std::runtime_error(
        "rakhmanov_variant: phi_n^* has a zero in the closed disk");

  std::vector<VariantCandidate> candidates;
  double best_weight = -1.0;
  double chosen_C = 0.0;
  Eigen::VectorXd best_w;
  for (double C : {1.0, 2.0, 4.0}) {
    VariantCandidate cand;
    cand.C = C;
    const ComplexPolynomial F =
        ComplexPolynomial::constant(1.0) + Complex(C * eps) * M.poly;
    const double min_re = F.eval_on_grid(grid).real().minCoeff();
    cand.caratheodory_ok = min_re > 0;
    if (cand.caratheodory_ok) {
      const GlueInput input{phi, F, n};
      const GlueValidation v = validate_glue_input(input, grid);
      if (v.pass()) {
        Eigen::VectorXd w = glued_weight_density(input, grid);
        cand.min_weight_2pi = kTau * w.minCoeff();
        if (cand.min_weight_2pi > best_weight) {
          best_weight = cand.min_weight_2pi;
          chosen_C = C;
          best_w = std::move(w);
        }
      } else {
        cand.caratheodory_ok = false;
      }
    }
    candidates.push_back(cand);
  }
  if (!(best_weight > 0))
    throw std::runtime_error(
        "rakhmanov_variant: no multiplier C produced a valid glue");

  CircleMeasure sigma(grid, std::move(best_w), {}, true);
  const double mass_residual = std::abs(sigma.total_mass() - 1.0);

  return RakhmanovVariant{.n = n,
                          .eps = eps,
                          .b = b,
                          .a = a,
                          .M = std::move(M),
                          .Phi_star = std::move(Phi_star),
                          .re_Phi_dev = re_Phi_dev,
                          .int_inv = int_inv,
                          .phi = std::move(phi),
                          .grid = grid,
                          .candidates = std::move(candidates),
                          .chosen_C = chosen_C,
                          .sigma = std::move(sigma),
                          .mass_residual = mass_residual};
}

DecouplingReport sec1_violation_demo(const SteklovConstruction& c) {
  const GlueInput input{c.phi, c.F_tilde, c.n};
  return decoupling_diagnostics(input, c.grid);
}

}  // namespace opuc
