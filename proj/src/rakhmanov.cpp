#include "opuc/rakhmanov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "opuc/gram_schmidt.hpp"

namespace opuc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

bool is_lebesgue(const CircleMeasure& mu) {
  if (!mu.atoms().empty()) return false;
  const double w = 1.0 / kTau;
  return ((mu.weight_samples().array() - w).abs() < 1e-15).all();
}

}  // namespace

MassPlacement::MassPlacement(std::vector<Complex> pts, std::vector<double> ms,
                             CircleMeasure bg)
    : points(std::move(pts)), masses(std::move(ms)), background(std::move(bg)) {
  if (points.size() != masses.size())
    throw std::invalid_argument("MassPlacement: points/masses size mismatch");
  for (const auto& p : points)
    if (std::abs(std::abs(p) - 1.0) > 1e-12)
      throw std::invalid_argument("MassPlacement: point off the unit circle");
  for (double m : masses)
    if (!(m >= 0))
      throw std::invalid_argument("MassPlacement: negative mass");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i] - points[j]) < 1e-12)
        throw std::invalid_argument("MassPlacement: duplicate points");
}

std::vector<OrthonormalPair> background_orthonormal(const CircleMeasure& mu,
                                                    Index n) {
  std::vector<OrthonormalPair> out;
  out.reserve(static_cast<size_t>(n));
  if (is_lebesgue(mu)) {
    for (Index j = 0; j < n; ++j)
      out.push_back({ComplexPolynomial::monomial(j),
                     ComplexPolynomial::constant(Complex(1.0)).with_nominal_degree(j),
                     1.0, j});
    return out;
  }
  const MonicFamily fam = monic_family(mu, n - 1);
  for (Index j = 0; j < n; ++j) out.push_back(fam.orthonormal(j));
  return out;
}

double verify_kernel_condition(const MassPlacement& placement, Index n) {
  const Index m = static_cast<Index>(placement.points.size());
  if (m < 2) return 0.0;
  const auto phis = background_orthonormal(placement.background, n);
  // V(j, k) = phi_k(xi_j); K(xi_j, xi_l) = (conj(V) V^T)(j, l).
  Eigen::MatrixXcd v(m, n);
  for (Index j = 0; j < m; ++j)
    for (Index k = 0; k < n; ++k)
      v(j, k) = phis[static_cast<size_t>(k)].phi(placement.points[j]);
  const Eigen::MatrixXcd kernel = v.conjugate() * v.transpose();
  double worst = 0.0;
  for (Index j = 0; j < m; ++j)
    for (Index l = 0; l < m; ++l)
      if (j != l) worst = std::max(worst, std::abs(kernel(j, l)));
  return worst;
}

std::vector<Complex> kernel_roots(Complex zhat, Index n,
                                  const CircleMeasure& mu, double rel_tol) {
  if (std::abs(std::abs(zhat) - 1.0) > 1e-12)
    throw std::invalid_argument("kernel_roots: zhat off the unit circle");
  const auto phis = background_orthonormal(mu, n);
  // Zeros of xi -> K_{n-1}(xi, zhat) coincide with the zeros of the analytic
  // polynomial g(xi) = sum_j phi_j(xi) conj(phi_j(zhat)) = conj(K).
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
  for (Index j = 0; j < n; ++j) {
    const auto& p = phis[static_cast<size_t>(j)].phi;
    c.head(p.coeffs().size()) += std::conj(p(zhat)) * p.coeffs();
  }
  const ComplexPolynomial g{Eigen::VectorXcd(c)};

  const Index scan = 64 * n;
  Eigen::VectorXd mag(scan);
  double scale = 0.0;
  for (Index k = 0; k < scan; ++k) {
    const double th = kTau * static_cast<double>(k) / static_cast<double>(scan);
    mag[k] = std::abs(g(Complex(std::cos(th), std::sin(th))));
    scale = std::max(scale, mag[k]);
  }

  const auto eval2 = [&g](double th) {
    return std::norm(g(Complex(std::cos(th), std::sin(th))));
  };
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<double> roots;
  const double h = kTau / static_cast<double>(scan);
  for (Index k = 0; k < scan; ++k) {
    const Index prev = (k + scan - 1) % scan;
    const Index next = (k + 1) % scan;
    if (mag[k] > mag[prev] || mag[k] > mag[next]) continue;
    if (mag[k] > 0.25 * scale) continue;  // not a near-zero bracket
    double a = h * static_cast<double>(k) - h, b = h * static_cast<double>(k) + h;
    double c1 = b - gr * (b - a), d1 = a + gr * (b - a);
    double f1 = eval2(c1), f2 = eval2(d1);
    for (int it = 0; it < 100 && (b - a) > 1e-13; ++it) {
      if (f1 < f2) {
        b = d1; d1 = c1; f2 = f1; c1 = b - gr * (b - a); f1 = eval2(c1);
      } else {
        a = c1; c1 = d1; f1 = f2; d1 = a + gr * (b - a); f2 = eval2(d1);
      }
    }
    const double th = 0.5 * (a + b);
    if (std::sqrt(eval2(th)) <= rel_tol * scale) {
      double t = std::fmod(th, kTau);
      if (t < 0) t += kTau;
      roots.push_back(t);
    }
  }
  std::sort(roots.begin(), roots.end());
  const double sep = 0.5 * h;
  std::vector<double> uniq;
  for (double t : roots) {
    if (!uniq.empty() && t - uniq.back() < sep) continue;
    uniq.push_back(t);
  }
  if (uniq.size() >= 2 && kTau - uniq.back() + uniq.front() < sep)
    uniq.pop_back();
  std::vector<Complex> out;
  out.reserve(uniq.size());
  for (double t : uniq) out.push_back(Complex(std::cos(t), std::sin(t)));
  if (static_cast<Index>(out.size()) != n - 1)
    throw std::runtime_error("kernel_roots: located " +
                             std::to_string(out.size()) + " roots, expected " +
                             std::to_string(n - 1));
  return out;
}

RakhmanovPolynomial rakhmanov_update(const MassPlacement& placement, Index n) {
  const Index m = static_cast<Index>(placement.points.size());
  if (m >= n)
    throw std::invalid_argument("rakhmanov_update: requires m < n");
  const double cond = verify_kernel_condition(placement, n);
  // Kernel diagonal sets the scale for "zero" off-diagonals.
  if (cond > 1e-6 * static_cast<double>(n))
    throw std::invalid_argument(
        "rakhmanov_update: kernel condition violated, max off-diagonal = " +
        std::to_string(cond));

  const auto phis = background_orthonormal(placement.background, n + 1);
  ComplexPolynomial monic_bg;
  if (is_lebesgue(placement.background)) {
    monic_bg = ComplexPolynomial::monomial(n);
  } else {
    monic_bg = monic_gram_schmidt(placement.background, n).back();
  }

  ComplexPolynomial result = monic_bg;
  for (Index k = 0; k < m; ++k) {
    const Complex xi = placement.points[k];
    const double mass = placement.masses[k];
    if (mass == 0.0) continue;
    const Complex phi_at = monic_bg(xi);
    const double diag = std::real(cd_kernel(phis, xi, xi, n - 1));
    const ComplexPolynomial kpoly = cd_kernel_poly(phis, xi, n - 1);
    const Complex coef = mass * phi_at / (1.0 + mass * diag);
    result -= coef * kpoly.with_nominal_degree(n);
  }
  RakhmanovPolynomial out;
  out.Phi = result;
  out.Phi_star = star(result, n);
  return out;
}

Eigen::VectorXcd d_coefficients(Index n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("d_coefficients: n must be even and >= 2");
  const Index m = n / 2;
  Eigen::VectorXcd d(n + 1);
  d[0] = Complex(static_cast<double>(m));
  d[n] = Complex(static_cast<double>(m));
  for (Index l = 1; l < n; ++l) {
    if (l % 2 == 0) {
      d[l] = Complex(0.0);
      continue;
    }
    const double ang = -kTau * static_cast<double>(l) / static_cast<double>(n);
    const Complex den = Complex(std::cos(ang), std::sin(ang)) - 1.0;
    d[l] = Complex(-2.0) / den;
  }
  return d;
}

Eigen::VectorXcd d_coefficients_direct(Index n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("d_coefficients_direct: n must be even");
  const Index m = n / 2;
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n + 1);
  for (Index l = 0; l <= n; ++l) {
    Complex s(0.0);
    for (Index j = 0; j < m; ++j) {
      const double ang =
          -kTau * static_cast<double>(l) * static_cast<double>(j) /
          static_cast<double>(n);
      s += Complex(std::cos(ang), std::sin(ang));
    }
    d[l] = s;
  }
  return d;
}

std::pair<RakhmanovPolynomial, CircleMeasure> lebesgue_construction(
    Index n, double eps, std::optional<UnitGrid> grid) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("lebesgue_construction: n must be even");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("lebesgue_construction: eps outside (0,1)");
  const Index m = n / 2;
  const double c = (eps / static_cast<double>(m)) / (1.0 + 2.0 * eps);

  const Eigen::VectorXcd d = d_coefficients(n);
  // Phi_n^* = 1 - c (d_1 z + ... + d_n z^n); Phi_n = z^n - c (d_0 + d_1 z + ... + d_{n-1} z^{n-1}).
  Eigen::VectorXcd star_c = Eigen::VectorXcd::Zero(n + 1);
  star_c[0] = Complex(1.0);
  for (Index l = 1; l <= n; ++l) star_c[l] = -c * d[l];
  Eigen::VectorXcd mon_c = Eigen::VectorXcd::Zero(n + 1);
  mon_c[n] = Complex(1.0);
  for (Index l = 0; l < n; ++l) mon_c[l] = -c * d[l];

  RakhmanovPolynomial poly;
  poly.Phi = ComplexPolynomial(std::move(mon_c));
  poly.Phi_star = ComplexPolynomial(std::move(star_c));
  poly.d = d;

  // Difference identity: Phi* - Phi = (1+3eps)/(1+2eps) (1 - z^n), exact.
  const double k_eps = (1.0 + 3.0 * eps) / (1.0 + 2.0 * eps);
  const ComplexPolynomial diff = poly.Phi_star - poly.Phi;
  for (Index l = 0; l <= n; ++l) {
    const Complex want = l == 0 ? Complex(k_eps)
                                : (l == n ? Complex(-k_eps) : Complex(0.0));
    if (std::abs(diff.coeff(l) - want) > 1e-12 * (1.0 + k_eps))
      throw std::runtime_error(
          "lebesgue_construction: difference identity violated");
  }

  UnitGrid g = grid ? *grid : UnitGrid::for_degree(n);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<size_t>(m));
  for (Index k = 0; k < m; ++k)
    atoms.push_back({kTau * static_cast<double>(k) / static_cast<double>(n),
                     eps / static_cast<double>(m)});
  const double w = 1.0 / kTau;
  CircleMeasure eta(
      g, [w](double) { return w; }, std::move(atoms));
  return {std::move(poly), std::move(eta)};
}

GrowthReport growth_table(double eps, const std::vector<Index>& ns) {
  GrowthReport rep;
  for (Index n : ns) {
    auto [poly, eta] = lebesgue_construction(n, eps);
    GrowthRow row;
    row.n = n;
    row.epsilon = eps;
    const SupNorm sup = sup_norm_on_circle(poly.Phi);
    row.sup_norm = sup.value;
    row.argmax_theta = sup.argmax_theta;
    row.comparator = 1.0 + eps * std::log(static_cast<double>(n));
    row.comparator_formula = "1 + eps*log(n)";
    row.steklov_delta = 1.0 / (1.0 + eps);
    row.residuals["ratio_to_comparator"] = row.sup_norm / row.comparator;
    const double th = sup.argmax_theta;
    row.residuals["dist_to_0_or_pi"] =
        std::min({th, kTau - th, std::abs(th - std::numbers::pi)});
    rep.add(std::move(row));
  }
  return rep;
}

}  // namespace opuc
