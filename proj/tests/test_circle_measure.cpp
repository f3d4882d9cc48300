#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opuc/measure.hpp"

using namespace opuc;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

TEST_CASE("grid basics") {
  const UnitGrid g(8);
  CHECK(g.size() == 8);
  CHECK(g.angle(0) == 0.0);
  CHECK(g.angle(2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(g.node_at(std::numbers::pi) == 4);
  CHECK(g.node_at(0.1) == -1);
  CHECK_THROWS_AS(UnitGrid(3), std::invalid_argument);

  const UnitGrid big = UnitGrid::for_degree(1000);
  CHECK(big.size() == 8192);  // next power of two above 8*1001
  CHECK(big.supports_degree(1000));
}

TEST_CASE("quadrature of band-limited functions matches Fourier coefficient") {
  const UnitGrid g(256);
  const CircleMeasure leb = CircleMeasure::lebesgue(g);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  // Random trigonometric polynomial of degree < N/2 against Lebesgue.
  for (int rep = 0; rep < 5; ++rep) {
    const int deg = 100;
    Eigen::VectorXcd vals = Eigen::VectorXcd::Zero(g.size());
    Complex c0(coef(rng), coef(rng));
    for (Index k = 0; k < g.size(); ++k) vals[k] = c0;
    for (int m = 1; m <= deg; ++m) {
      const Complex cm(coef(rng), coef(rng));
      const Complex cmm(coef(rng), coef(rng));
      for (Index k = 0; k < g.size(); ++k) {
        const double th = g.angle(k);
        vals[k] += cm * Complex(std::cos(m * th), std::sin(m * th));
        vals[k] += cmm * Complex(std::cos(m * th), -std::sin(m * th));
      }
    }
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(g.size());
    const Complex got = quad_inner(vals, ones, leb);
    CHECK(std::abs(got - c0) <=
          10.0 * std::numeric_limits<double>::epsilon() * g.size());
  }
}

TEST_CASE("quad_inner examples") {
  const UnitGrid g(512);
  const CircleMeasure leb = CircleMeasure::lebesgue(g);
  const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(g.size());

  CHECK(std::abs(quad_inner(one, one, leb) - 1.0) < 1e-14);

  Eigen::VectorXcd z(g.size());
  for (Index k = 0; k < g.size(); ++k) z[k] = g.points()[k];
  CHECK(std::abs(quad_inner(z, one, leb)) < 1e-14);

  // Half Lebesgue plus a half-mass atom at 0 still integrates 1*1 to 1.
  Eigen::VectorXd w = Eigen::VectorXd::Constant(g.size(), 0.5 / kTau);
  const CircleMeasure mixed(g, w, {{0.0, 0.5}}, true);
  CHECK(std::abs(quad_inner(one, one, mixed) - 1.0) < 1e-14);

  // Atom off the sampled grid only works for the polynomial overload.
  const CircleMeasure off(g, w, {{0.1234, 0.5}});
  CHECK_THROWS_AS(quad_inner(one, one, off), std::invalid_argument);
  const ComplexPolynomial pone = ComplexPolynomial::constant(1.0);
  CHECK(std::abs(quad_inner(pone, pone, off) - 1.0) < 1e-14);

  // Atom-only contribution is exactly the finite weighted sum.
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(g.size());
  const CircleMeasure atoms(g, zero, {{0.0, 0.25}, {std::numbers::pi, 0.5}});
  const ComplexPolynomial zp = ComplexPolynomial::monomial(1);
  const Complex expect = 0.25 * zp(Complex(std::cos(0.0), std::sin(0.0))) +
                         0.5 * zp(Complex(std::cos(std::numbers::pi),
                                          std::sin(std::numbers::pi)));
  CHECK(std::abs(quad_inner(zp, pone, atoms) - expect) == 0.0);
}

TEST_CASE("moments") {
  const UnitGrid g(1024);
  const CircleMeasure leb = CircleMeasure::lebesgue(g);
  CHECK(std::abs(moment(leb, 0) - 1.0) < 1e-15);
  CHECK(std::abs(moment(leb, 1)) < 1e-15);
  CHECK_THROWS_AS(moment(leb, 512), std::invalid_argument);

  // Pure atom at angle 0: every moment is its mass.
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(g.size());
  const CircleMeasure atom(g, zero, {{0.0, 1.0}});
  for (Index k : {-5, -1, 0, 1, 2, 17})
    CHECK(std::abs(moment(atom, k) - 1.0) < 1e-15);

  // Mass-points setup with n = 4, m = 1, eps = 0.3: single atom of mass 0.3
  // at angle 0 on top of Lebesgue, so c_1 = 0.3.
  const CircleMeasure eta(
      g, [](double) { return 1.0 / kTau; }, {{0.0, 0.3}});
  CHECK(std::abs(moment(eta, 1) - 0.3) < 1e-14);

  // Conjugation symmetry with computed values.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd w(g.size());
  for (Index k = 0; k < g.size(); ++k) w[k] = 0.5 + u(rng);
  const CircleMeasure rough(g, w, {{0.5, 0.2}, {2.5, 0.1}});
  for (Index k = 1; k <= 8; ++k) {
    const Complex a = moment(rough, k);
    const Complex b = moment(rough, -k);
    CHECK(std::abs(std::conj(a) - b) < 1e-13 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("normalize") {
  const UnitGrid g(512);

  // Mass 1 + eps measure: Lebesgue plus atoms of total mass eps.
  const double eps = 0.25;
  const CircleMeasure eta(
      g, [](double) { return 1.0 / kTau; },
      {{0.0, eps / 2}, {std::numbers::pi, eps / 2}});
  auto [prob, alpha] = normalize(eta);
  CHECK(alpha == doctest::Approx(1.0 + eps).epsilon(1e-12));
  CHECK(prob.weight_at(1.0) == doctest::Approx(1.0 / (kTau * (1 + eps))));
  CHECK(std::abs(prob.total_mass() - 1.0) < 1e-12);

  // Probability in, unchanged out.
  auto [same, one] = normalize(CircleMeasure::lebesgue(g));
  CHECK(one == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(same.total_mass() - 1.0) < 1e-12);

  // Double Lebesgue scales back by 2.
  auto [half, two] = normalize(CircleMeasure(
      g, [](double) { return 2.0 / kTau; }));
  CHECK(two == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(half.weight_at(0.3) == doctest::Approx(1.0 / kTau));

  Eigen::VectorXd zero = Eigen::VectorXd::Zero(g.size());
  CHECK_THROWS_AS(normalize(CircleMeasure(g, zero)), std::invalid_argument);
}

TEST_CASE("steklov_check") {
  const UnitGrid g(512);
  const auto leb = steklov_check(CircleMeasure::lebesgue(g), 0.9);
  CHECK(leb.valid);
  CHECK(leb.min_weight == doctest::Approx(1.0 / kTau).epsilon(1e-14));
  CHECK(leb.max_deviation < 1e-15);

  // (1 + cos)/2pi vanishes at pi: fails any positive level.
  const CircleMeasure dip(
      g, [](double th) { return (1.0 + std::cos(th)) / kTau; });
  CHECK_FALSE(steklov_check(dip, 0.1).valid);
}

TEST_CASE("serialization round trips") {
  const UnitGrid g(64);
  Eigen::VectorXd w(g.size());
  for (Index k = 0; k < g.size(); ++k) w[k] = 0.1 + 0.01 * k;
  const CircleMeasure mu(g, w, {{1.0, 0.5}});
  const auto j = mu.to_json();
  const CircleMeasure back = CircleMeasure::from_json(j);
  CHECK(back.grid().size() == 64);
  CHECK((back.weight_samples() - w).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(back.atoms().size() == 1);
  CHECK(back.atoms()[0].mass == 0.5);

  std::ostringstream csv;
  mu.write_weight_csv(csv);
  CHECK(csv.str().substr(0, 13) == "theta,weight\n");
}

TEST_CASE("measure validation") {
  const UnitGrid g(64);
  Eigen::VectorXd w = Eigen::VectorXd::Constant(g.size(), -0.1);
  CHECK_THROWS_AS(CircleMeasure(g, w), std::invalid_argument);
  Eigen::VectorXd ok = Eigen::VectorXd::Constant(g.size(), 0.1);
  CHECK_THROWS_AS(CircleMeasure(g, ok, {{0.0, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(CircleMeasure(g, ok, {{0.5, 0.1}, {0.5, 0.2}}),
                  std::invalid_argument);
}
