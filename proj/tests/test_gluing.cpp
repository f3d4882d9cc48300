#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "opuc/gluing.hpp"
#include "opuc/gram_schmidt.hpp"

using namespace opuc;
using opuc::testing::random_caratheodory_poly;
using opuc::testing::random_schur;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

GlueInput make_input(const SchurSequence& head,
                     const ComplexPolynomial& f_tilde) {
  const Index n = head.size();
  const auto pairs = szego_recursion(head, n);
  return GlueInput{pairs[n], f_tilde, n};
}

UnitGrid glue_grid(const GlueInput& input, Index extra_degree) {
  const UnitGrid a = bernstein_szego_grid(input.phi_n);
  const UnitGrid b = UnitGrid::for_degree(2 * (input.n + extra_degree));
  return a.size() >= b.size() ? a : b;
}

}  // namespace

TEST_CASE("glue input validation") {
  // phi_n = z^n with F~ = 1 passes everything.
  const GlueInput free =
      make_input(SchurSequence::zeros(4), ComplexPolynomial::constant(1.0));
  const UnitGrid g(1024);
  const GlueValidation ok = validate_glue_input(free, g);
  CHECK(ok.pass());
  CHECK(ok.norma_residual < 1e-12);
  CHECK(ok.min_re_F == doctest::Approx(1.0));

  // phi_1^* = 1 - 2z has its root inside the closed disk: condition 1 fails.
  OrthonormalPair bad;
  Eigen::VectorXcd c(2);
  c << Complex(-2.0), Complex(1.0);
  bad.phi = ComplexPolynomial(std::move(c));
  bad.phi_star = star(bad.phi, 1);
  bad.degree = 1;
  const GlueValidation fail =
      validate_glue_input(GlueInput{bad, ComplexPolynomial::constant(1.0), 1}, g);
  CHECK_FALSE(fail.zero_free);
  CHECK_FALSE(fail.pass());

  // Re F~ <= 0 somewhere fails condition 3.
  Eigen::VectorXcd fc(2);
  fc << Complex(1.0), Complex(2.0);
  const GlueValidation neg = validate_glue_input(
      make_input(SchurSequence::zeros(2), ComplexPolynomial(std::move(fc))), g);
  CHECK(neg.min_re_F < 0);
  CHECK_FALSE(neg.pass());
}

TEST_CASE("free gluing reduces to known weights") {
  const UnitGrid g(2048);

  // phi_n = z^n, F~ = 1: bracket is identically 2, weight Lebesgue.
  const GlueInput free =
      make_input(SchurSequence::zeros(5), ComplexPolynomial::constant(1.0));
  const Eigen::VectorXd w = glued_weight_density(free, g);
  CHECK((w.array() - 1.0 / kTau).abs().maxCoeff() < 1e-14);

  // gamma_0 = 1/2 head with F~ = 1: the Bernstein-Szego weight of phi_1.
  Eigen::VectorXcd gm(1);
  gm << Complex(0.5);
  const SchurSequence head{Eigen::VectorXcd(gm)};
  const GlueInput bs = make_input(head, ComplexPolynomial::constant(1.0));
  const Eigen::VectorXd wbs = glued_weight_density(bs, g);
  for (Index k = 0; k < g.size(); ++k) {
    const Complex z = g.points()[k];
    const double want = 0.75 / (kTau * std::norm(1.0 - 0.5 * z));
    CHECK(std::abs(wbs[k] - want) < 1e-13);
  }
}

TEST_CASE("glued measure round trip") {
  std::mt19937_64 rng(67);
  int checked = 0;
  while (checked < 6) {
    const Index n = 2 + static_cast<Index>(rng() % 7);  // 2..8
    const Index tail_len = 8;
    const SchurSequence head = random_schur(rng, n, 0.5);
    const ComplexPolynomial f = random_caratheodory_poly(rng, 5, 0.35);
    const GlueInput input = make_input(head, f);
    const UnitGrid grid = glue_grid(input, tail_len);

    const GluedMeasure glued = glued_weight(input, grid, tail_len);
    CHECK(glued.mass_residual < 1e-8);

    // Head comes back, then the tail of Re F~ d(theta)/(2 pi).
    const SchurSequence got =
        verblunsky_from_measure(glued.sigma, n + tail_len);
    for (Index k = 0; k < n + tail_len; ++k)
      CHECK(std::abs(got.gamma(k) - glued.glued_gamma.gamma(k)) < 1e-6);
    ++checked;
  }

  // Explicit small case: head (1/2), tail from F~ = 1 + 0.3 z.
  Eigen::VectorXcd gm(1);
  gm << Complex(0.5);
  Eigen::VectorXcd fc(2);
  fc << Complex(1.0), Complex(0.3);
  const GlueInput input =
      make_input(SchurSequence{Eigen::VectorXcd(gm)}, ComplexPolynomial(std::move(fc)));
  const UnitGrid grid = glue_grid(input, 8);
  const GluedMeasure glued = glued_weight(input, grid, 8);
  const SchurSequence got = verblunsky_from_measure(glued.sigma, 4);
  CHECK(std::abs(got.gamma(0) - 0.5) < 1e-8);
  // Tail parameters are those of the weight (1 + 0.3 cos)/..., matching the
  // oracle on sigma~ directly.
  const CircleMeasure sigma_tilde(
      grid,
      [](double th) { return (1.0 + 0.3 * std::cos(th)) / kTau; }, {}, true);
  const SchurSequence tail = verblunsky_from_measure(sigma_tilde, 3);
  for (Index k = 0; k < 3; ++k)
    CHECK(std::abs(got.gamma(k + 1) - tail.gamma(k)) < 1e-7);
}

TEST_CASE("glue_schur concatenation") {
  std::mt19937_64 rng(71);
  const SchurSequence head = random_schur(rng, 5, 0.5);
  const SchurSequence tail = random_schur(rng, 7, 0.4);
  const SchurSequence glued = glue_schur(head, tail);
  REQUIRE(glued.size() == 12);
  for (Index j = 0; j < 5; ++j) CHECK(glued.gamma(j) == head.gamma(j));
  for (Index j = 0; j < 7; ++j) CHECK(glued.gamma(5 + j) == tail.gamma(j));

  // Recursion on the glued sequence reproduces phi_n at index n.
  const auto a = szego_recursion(head, 5);
  const auto b = szego_recursion(glued, 5);
  CHECK(coeff_distance(a[5].phi, b[5].phi) == 0.0);
}

TEST_CASE("transfer matrices") {
  // m = 0 is the identity.
  const SchurSequence empty = SchurSequence::zeros(0);
  CHECK(transfer_matrix(empty, 0, Complex(0.3, 0.4)).isApprox(
      Eigen::Matrix2cd::Identity()));

  // Zero parameters: diag(z^m, 1).
  const SchurSequence zeros = SchurSequence::zeros(5);
  const Complex z = std::polar(1.0, 1.234);
  const Eigen::Matrix2cd tz = transfer_matrix(zeros, 5, z);
  CHECK(std::abs(tz(0, 0) - std::pow(z, 5)) < 1e-14);
  CHECK(std::abs(tz(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(tz(0, 1)) < 1e-14);
  CHECK(std::abs(tz(1, 0)) < 1e-14);

  // Entries recombine the first/second-kind polynomials; det = z^m exactly.
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.0, kTau);
  for (int rep = 0; rep < 25; ++rep) {
    const Index m = 1 + static_cast<Index>(rng() % 6);
    const SchurSequence tail = random_schur(rng, m, 0.8);
    const Complex zz = std::polar(1.0, u(rng));
    const Eigen::Matrix2cd t = transfer_matrix(tail, m, zz);
    const auto phis = szego_recursion(tail, m);
    const auto psis = second_kind(tail, m);
    const Complex phi = phis[m].phi(zz), psi = psis[m].phi(zz);
    const Complex phs = phis[m].phi_star(zz), pss = psis[m].phi_star(zz);
    const double scale = phis[m].kappa;
    CHECK(std::abs(t(0, 0) - 0.5 * (phi + psi)) < 1e-12 * scale);
    CHECK(std::abs(t(0, 1) - 0.5 * (phi - psi)) < 1e-12 * scale);
    CHECK(std::abs(t(1, 0) - 0.5 * (phs - pss)) < 1e-12 * scale);
    CHECK(std::abs(t(1, 1) - 0.5 * (phs + pss)) < 1e-12 * scale);
    CHECK(std::abs(t.determinant() - std::pow(zz, m)) < 1e-12 * scale * scale);
  }
}

TEST_CASE("glued phi star two ways") {
  std::mt19937_64 rng(79);

  // F~ = 1 means the zero tail; then phi_{n+m}^* stays phi_n^* = 1. The
  // product formula is asserted inside glued_phi_star for any tail.
  const SchurSequence zero_head = SchurSequence::zeros(3);
  const GlueInput free =
      make_input(zero_head, ComplexPolynomial::constant(1.0));
  const ComplexPolynomial got =
      glued_phi_star(free, zero_head, SchurSequence::zeros(6), 6);
  CHECK(coeff_distance(
            got, ComplexPolynomial::constant(1.0).with_nominal_degree(9)) <
        1e-12);
  // Random tails exercise the two-route assertion as well.
  const SchurSequence tail = random_schur(rng, 6, 0.5);
  CHECK_NOTHROW(glued_phi_star(free, zero_head, tail, 6));

  // m = 0: the identity 2 phi_n^* = phi_n + phi_n^* + 1 (phi_n^* - phi_n).
  const SchurSequence head = random_schur(rng, 4, 0.5);
  const GlueInput input = make_input(head, ComplexPolynomial::constant(1.0));
  const ComplexPolynomial same =
      glued_phi_star(input, head, SchurSequence::zeros(0), 0);
  CHECK(coeff_distance(same, input.phi_n.phi_star) < 1e-13);

  // Residual against the m -> infinity bracket decreases along m.
  const ComplexPolynomial f = random_caratheodory_poly(rng, 4, 0.3);
  const SchurSequence conv_head = random_schur(rng, 4, 0.5);
  const GlueInput conv = make_input(conv_head, f);
  const UnitGrid grid = glue_grid(conv, 64);
  const Eigen::VectorXd re_f = conv.F_tilde.eval_on_grid(grid).real();
  const CircleMeasure sigma_tilde(grid, Eigen::VectorXd(re_f / kTau), {}, true);
  const SchurSequence big_tail = verblunsky_from_measure(sigma_tilde, 64);
  double prev = 1e100;
  for (Index m : {4, 16, 64}) {
    const double res = glued_phi_star_residual(conv, conv_head, big_tail, m, grid);
    CHECK(res < prev);
    prev = res;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("decoupling diagnostics") {
  // phi_n = z^n, F~ = 1: the ratio is 1 + |1 - z^n|, bounded between 1 at
  // z = 1 and 3 where z^n = -1 (n even keeps it within [1, 3] uniformly).
  const GlueInput free =
      make_input(SchurSequence::zeros(8), ComplexPolynomial::constant(1.0));
  const UnitGrid g(2048);
  const DecouplingReport rep = decoupling_diagnostics(free, g);
  CHECK(rep.ratio_sup == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(rep.ratio_at_1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.phi_at_1_over_sqrt_n ==
        doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
}
