#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "opuc/gram_schmidt.hpp"
#include "opuc/rakhmanov.hpp"
#include "opuc/realline.hpp"

using namespace opuc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

// Orthonormality pinned to 2 pi d(psi): the segment weight matching a circle
// probability measure sigma is 2 pi sigma'(arccos x)/sqrt(1 - x^2).
SegmentMeasure induced_segment_weight(const CircleMeasure& sigma) {
  return SegmentMeasure([sigma](double x) {
    const double xt = std::min(1.0 - 1e-300, std::max(-1.0 + 1e-300, x));
    return kTau * sigma.weight_at(std::acos(xt)) / std::sqrt(1.0 - xt * xt);
  });
}

}  // namespace

TEST_CASE("segment to circle") {
  const UnitGrid g(4096);

  // Probability arcsine: rho = 1/(pi sqrt(1-x^2)) maps to the constant 1/pi
  // (mass 2: both arcs), i.e. twice the probability Lebesgue weight.
  const SegmentMeasure arcsine(
      [](double x) { return 1.0 / (kPi * std::sqrt(1.0 - x * x)); });
  const CircleMeasure c1 = segment_to_circle(arcsine, g);
  CHECK(c1.weight_at(1.3) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  CHECK(c1.weight_at(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-6));
  CHECK(std::abs(c1.total_mass() - 2.0) < 1e-10);
  CHECK(is_real_symmetric(c1));

  // Chebyshev-U weight (2/pi) sqrt(1-x^2) maps to (1 - cos 2 theta)/pi...
  // i.e. (2/pi) sin^2(theta).
  const SegmentMeasure chebU(
      [](double x) { return (2.0 / kPi) * std::sqrt(1.0 - x * x); });
  const CircleMeasure c2 = segment_to_circle(chebU, g);
  for (double th : {0.3, 1.0, 2.2, 4.0}) {
    const double want = (1.0 - std::cos(2.0 * th)) / kPi;
    CHECK(c2.weight_at(th) == doctest::Approx(want).epsilon(1e-10));
  }
  CHECK(is_real_symmetric(c2));

  // Moment comparison for the arcsine map: the circle measure normalized by
  // 1/2 is the probability Lebesgue measure.
  auto [prob, alpha] = normalize(c1);
  CHECK(alpha == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::abs(moment(prob, 1)) < 1e-10);
  CHECK(std::abs(moment(prob, 0) - 1.0) < 1e-12);
}

TEST_CASE("segment oracle recovers classical families") {
  const UnitGrid g(4096);

  // Chebyshev weight 1/sqrt(1-x^2): orthonormal family 1/sqrt(pi),
  // sqrt(2/pi) T_k.
  const SegmentMeasure cheb(
      [](double x) { return 1.0 / std::sqrt(1.0 - x * x); });
  const auto fam = segment_gram_schmidt_oracle(cheb, 4, g);
  CHECK(fam[0][0] == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-10));
  const double s = std::sqrt(2.0 / kPi);
  // T_1 = x, T_2 = 2x^2 - 1, T_3 = 4x^3 - 3x.
  CHECK(fam[1][1] == doctest::Approx(s).epsilon(1e-9));
  CHECK(fam[2][2] == doctest::Approx(2.0 * s).epsilon(1e-9));
  CHECK(fam[2][0] == doctest::Approx(-s).epsilon(1e-9));
  CHECK(fam[3][3] == doctest::Approx(4.0 * s).epsilon(1e-9));
  CHECK(fam[3][1] == doctest::Approx(-3.0 * s).epsilon(1e-9));

  // Uniform weight 1/2: normalized Legendre, leading values sqrt(2k+1) *
  // (classical leading coefficients).
  const SegmentMeasure unif([](double) { return 0.5; });
  const auto leg = segment_gram_schmidt_oracle(unif, 3, g);
  CHECK(leg[0][0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(leg[1][1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  // P_2 normalized: sqrt(5) (3x^2 - 1)/2.
  CHECK(leg[2][2] == doctest::Approx(1.5 * std::sqrt(5.0)).epsilon(1e-9));
  CHECK(leg[2][0] == doctest::Approx(-0.5 * std::sqrt(5.0)).epsilon(1e-9));

  // P_0 = 1/sqrt(total mass).
  const SegmentMeasure heavy([](double) { return 2.0; });
  const auto h = segment_gram_schmidt_oracle(heavy, 0, g);
  CHECK(h[0][0] == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-10));
}

TEST_CASE("lebesgue circle measure yields orthonormal chebyshev") {
  const UnitGrid g = UnitGrid::for_degree(40);
  const CircleMeasure leb = CircleMeasure::lebesgue(g);
  const auto polys = circle_to_segment_polys(leb, 16);

  REQUIRE(polys.size() == 17);
  CHECK(polys[0][0] == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-12));

  // Against the segment oracle for the Chebyshev weight dx/sqrt(1-x^2).
  const auto oracle = segment_gram_schmidt_oracle(
      induced_segment_weight(leb), 16, g);
  for (size_t k = 0; k < polys.size(); ++k) {
    REQUIRE(polys[k].size() == oracle[k].size());
    CHECK((polys[k] - oracle[k]).cwiseAbs().maxCoeff() < 1e-7);
  }

  // Degrees are exact and leading coefficients positive.
  for (size_t k = 1; k < polys.size(); ++k) {
    CHECK(polys[k][k] > 0);
    CHECK(std::abs(polys[k][k] -
                   std::sqrt(2.0 / kPi) * std::pow(2.0, double(k) - 1.0)) <
          1e-7 * std::pow(2.0, double(k)));
  }
}

TEST_CASE("round trip through a nontrivial symmetric measure") {
  const UnitGrid g = UnitGrid::for_degree(64);

  // Symmetric smooth weight: probability with a cos-squared modulation.
  const CircleMeasure sigma(
      g, [](double th) { return (1.0 + 0.4 * std::cos(th)) / kTau; }, {},
      true);
  REQUIRE(is_real_symmetric(sigma));
  const Index K = 8;
  const auto via_circle = circle_to_segment_polys(sigma, K);
  const auto via_oracle =
      segment_gram_schmidt_oracle(induced_segment_weight(sigma), K, g);
  for (Index k = 0; k <= K; ++k)
    CHECK((via_circle[k] - via_oracle[k]).cwiseAbs().maxCoeff() < 1e-7);

  // Verblunsky parameters of symmetric measures are real.
  const SchurSequence gs = verblunsky_from_measure(sigma, 8);
  for (Index j = 0; j < 8; ++j)
    CHECK(std::abs(std::imag(gs.gamma(j))) < 1e-10);

  // Non-symmetric input is rejected.
  const CircleMeasure skew(
      g, [](double th) { return (1.0 + 0.4 * std::sin(th)) / kTau; }, {},
      true);
  CHECK_THROWS_AS(circle_to_segment_polys(skew, 4), std::invalid_argument);
}

TEST_CASE("boundedness transfer from the mass-points measure") {
  // Normalized mass-points measure, symmetrized by construction (atoms at
  // the n-th roots of unity are conjugate-paired for even n... the first
  // m = n/2 sit on the upper arc only, so symmetrize explicitly).
  const Index n = 8;
  const double eps = 0.4;
  const UnitGrid g = UnitGrid::for_degree(64);
  std::vector<Atom> atoms;
  // Pair each root of unity with its conjugate at half mass.
  for (Index k = 0; k < n / 2; ++k) {
    const double th = kTau * k / double(n);
    const double mass = eps / double(n / 2);
    if (k == 0) {
      atoms.push_back({0.0, mass});
    } else {
      atoms.push_back({th, mass / 2});
      atoms.push_back({kTau - th, mass / 2});
    }
  }
  const CircleMeasure eta(
      g, [](double) { return 1.0 / kTau; }, atoms);
  auto [sigma, alpha] = normalize(eta);
  REQUIRE(is_real_symmetric(sigma));

  const Index K = 6;
  const auto polys = circle_to_segment_polys(sigma, K);
  const MonicFamily fam = monic_family(sigma, 2 * K);
  for (Index k = 0; k <= K; ++k) {
    const OrthonormalPair pair = fam.orthonormal(2 * k);
    const double monic_at_0 =
        std::real(pair.phi(Complex(0.0))) / pair.kappa;
    const double denom = std::sqrt(kTau * (1.0 + monic_at_0));
    // sup over an interior x-window stays within the circle sup scaled by
    // the reduction denominator.
    double seg_sup = 0.0;
    for (double x = -0.95; x <= 0.95; x += 0.01)
      seg_sup = std::max(seg_sup, std::abs(eval_segment_poly(polys[k], x)));
    const SupNorm circ = sup_norm_on_circle(pair.phi);
    CHECK(seg_sup <= 2.0 * circ.value / denom + 1e-9);
  }
}
