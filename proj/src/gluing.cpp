#include "opuc/gluing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "opuc/detail/kahan.hpp"
#include "opuc/gram_schmidt.hpp"

namespace opuc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

Eigen::VectorXd re_f_samples(const ComplexPolynomial& f, const UnitGrid& grid) {
  return f.eval_on_grid(grid).real();
}

}  // namespace

GlueValidation validate_glue_input(const GlueInput& input,
                                   const UnitGrid& grid) {
  GlueValidation v;
  const auto& ps = input.phi_n.phi_star;
  v.zero_free = zero_free_in_closed_disk(ps, grid);
  if (v.zero_free) {
    const Eigen::VectorXcd vals = ps.eval_on_grid(grid);
    detail::KahanSum<double> acc;
    for (Index k = 0; k < grid.size(); ++k) acc.add(1.0 / std::norm(vals[k]));
    v.norma_residual = std::abs(acc.value() * grid.spacing() - kTau) / kTau;
  }
  v.phi_star_at_0 = std::real(ps(Complex(0.0)));
  const Eigen::VectorXd re_f = re_f_samples(input.F_tilde, grid);
  v.min_re_F = re_f.minCoeff();
  detail::KahanSum<double> mean;
  for (Index k = 0; k < grid.size(); ++k) mean.add(re_f[k]);
  v.f_mean_residual = std::abs(mean.value() / static_cast<double>(grid.size()) - 1.0);
  v.f_imag_at_0 = std::imag(input.F_tilde.coeff(0));
  return v;
}

Eigen::VectorXd glued_weight_density(const GlueInput& input,
                                     const UnitGrid& grid) {
  const Eigen::VectorXcd phi = input.phi_n.phi.eval_on_grid(grid);
  const Eigen::VectorXcd phis = input.phi_n.phi_star.eval_on_grid(grid);
  const Eigen::VectorXcd f = input.F_tilde.eval_on_grid(grid);
  Eigen::VectorXd w(grid.size());
  for (Index k = 0; k < grid.size(); ++k) {
    const Complex bracket = phi[k] + phis[k] + f[k] * (phis[k] - phi[k]);
    const double den = std::numbers::pi * std::norm(bracket);
    const double re_f = std::real(f[k]);
    if (!(den > 1e-300))
      throw std::runtime_error(
          "glued_weight_density: denominator vanishes on the grid");
    w[k] = 2.0 * re_f / den;
  }
  return w;
}

GluedMeasure glued_weight(const GlueInput& input, const UnitGrid& grid,
                          Index tail_len) {
  const GlueValidation v = validate_glue_input(input, grid);
  if (!v.pass())
    throw std::invalid_argument("glued_weight: input fails the glue conditions");

  Eigen::VectorXd w = glued_weight_density(input, grid);
  CircleMeasure sigma(grid, std::move(w), {}, true);
  const double mass_residual = std::abs(sigma.total_mass() - 1.0);

  // Head parameters: those of the Bernstein-Szego measure of phi_n.
  const CircleMeasure mu_n = bernstein_szego_measure(input.phi_n, grid);
  const SchurSequence head = verblunsky_from_measure(mu_n, input.n);

  // Tail: parameters of d(sigma~) = Re F~ d(theta)/(2 pi).
  Eigen::VectorXd re_f = re_f_samples(input.F_tilde, grid);
  const CircleMeasure sigma_tilde(grid, Eigen::VectorXd(re_f / kTau), {}, true);
  const SchurSequence tail = verblunsky_from_measure(sigma_tilde, tail_len);

  return {std::move(sigma), concat(head, tail), tail.l1_norm(), mass_residual};
}

SchurSequence glue_schur(const SchurSequence& head, const SchurSequence& tail) {
  return concat(head, tail);
}

Eigen::Matrix2cd transfer_matrix(const SchurSequence& tail, Index m, Complex z) {
  if (m > tail.size())
    throw std::invalid_argument("transfer_matrix: m beyond tail length");
  Eigen::Matrix2cd acc = Eigen::Matrix2cd::Identity();
  for (Index j = 0; j < m; ++j) {
    const Complex g = tail.gamma(j);
    Eigen::Matrix2cd t;
    t << z, -std::conj(g), -z * g, Complex(1.0);
    acc = (t * acc) / tail.rho(j);
  }
  return acc;
}

ComplexPolynomial glued_phi_star(const GlueInput& input,
                                 const SchurSequence& head,
                                 const SchurSequence& tail, Index m) {
  if (head.size() != input.n)
    throw std::invalid_argument("glued_phi_star: head length != n");
  const auto glued = szego_recursion(glue_schur(head, tail), input.n + m);
  const ComplexPolynomial direct = glued.back().phi_star;

  const auto tphi = szego_recursion(tail, m);
  const auto tpsi = second_kind(tail, m);
  const ComplexPolynomial sum_star =
      tphi.back().phi_star + tpsi.back().phi_star;
  const ComplexPolynomial diff_star =
      tphi.back().phi_star - tpsi.back().phi_star;
  ComplexPolynomial product =
      input.phi_n.phi * diff_star + input.phi_n.phi_star * sum_star;
  product *= Complex(0.5);

  const double dist = coeff_distance(direct, product);
  if (dist > 1e-10 * (1.0 + input.phi_n.kappa))
    throw std::runtime_error(
        "glued_phi_star: recursion and product formula disagree by " +
        std::to_string(dist));
  return direct;
}

double glued_phi_star_residual(const GlueInput& input,
                               const SchurSequence& head,
                               const SchurSequence& tail, Index m,
                               const UnitGrid& grid) {
  const auto glued = szego_recursion(glue_schur(head, tail), input.n + m);
  const auto tphi = szego_recursion(tail, m);

  const Eigen::VectorXcd lhs = glued.back().phi_star.eval_on_grid(grid);
  const Eigen::VectorXcd tps = tphi.back().phi_star.eval_on_grid(grid);
  const Eigen::VectorXcd phi = input.phi_n.phi.eval_on_grid(grid);
  const Eigen::VectorXcd phis = input.phi_n.phi_star.eval_on_grid(grid);
  const Eigen::VectorXcd f = input.F_tilde.eval_on_grid(grid);

  double worst = 0.0;
  for (Index k = 0; k < grid.size(); ++k) {
    // Compare against the m -> infinity bracket, with F~ in place of F~_m.
    const Complex target = phi[k] + phis[k] + f[k] * (phis[k] - phi[k]);
    const Complex got = 2.0 * lhs[k] / tps[k];
    worst = std::max(worst, std::abs(got - target));
  }
  return worst;
}

DecouplingReport decoupling_diagnostics(const GlueInput& input,
                                        const UnitGrid& grid) {
  DecouplingReport rep;
  const Eigen::VectorXcd phi = input.phi_n.phi.eval_on_grid(grid);
  const Eigen::VectorXcd phis = input.phi_n.phi_star.eval_on_grid(grid);
  const Eigen::VectorXcd f = input.F_tilde.eval_on_grid(grid);

  const double window = 16.0 / static_cast<double>(std::max<Index>(input.n, 1));
  for (Index k = 0; k < grid.size(); ++k) {
    const double re_f = std::real(f[k]);
    if (!(re_f > 0)) continue;
    const double ratio =
        (std::abs(phis[k]) + std::abs(f[k] * (phis[k] - phi[k]))) /
        std::sqrt(re_f);
    if (ratio > rep.ratio_sup) {
      rep.ratio_sup = ratio;
      rep.ratio_argmax_theta = grid.angle(k);
    }
    const double th = grid.angle(k);
    const double dist = std::min(th, kTau - th);
    if (dist <= window) rep.ratio_near_1 = std::max(rep.ratio_near_1, ratio);
  }
  const Complex one(1.0);
  const Complex f1 = input.F_tilde(one);
  const Complex p1 = input.phi_n.phi(one);
  const Complex ps1 = input.phi_n.phi_star(one);
  if (std::real(f1) > 0)
    rep.ratio_at_1 = (std::abs(ps1) + std::abs(f1 * (ps1 - p1))) /
                     std::sqrt(std::real(f1));
  rep.phi_at_1_over_sqrt_n =
      std::abs(p1) / std::sqrt(static_cast<double>(std::max<Index>(input.n, 1)));
  return rep;
}

}  // namespace opuc
