#include "opuc/analysis.hpp"

#include <unsupported/Eigen/FFT>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuc/detail/kahan.hpp"

namespace opuc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Phase increment of p over [th0, th1], splitting until each step is
// unambiguous (< pi/2). Tracks the smallest magnitude seen.
double arg_increment(const ComplexPolynomial& p, double th0, double th1,
                     Complex v0, Complex v1, double* min_abs, int depth) {
  const double d = std::arg(v1 / v0);
  if (std::abs(d) < 1.5707963267948966) return d;
  if (depth > 48)
    throw std::runtime_error(
        "winding_number: phase refinement failed (zero on the circle?)");
  const double tm = 0.5 * (th0 + th1);
  const Complex vm = p(Complex(std::cos(tm), std::sin(tm)));
  const double am = std::abs(vm);
  if (min_abs) *min_abs = std::min(*min_abs, am);
  if (!(am > 0))
    throw std::runtime_error("winding_number: polynomial vanishes on circle");
  return arg_increment(p, th0, tm, v0, vm, min_abs, depth + 1) +
         arg_increment(p, tm, th1, vm, v1, min_abs, depth + 1);
}

}  // namespace

WindingResult winding_number(const ComplexPolynomial& p, const UnitGrid& grid) {
  const Eigen::VectorXcd vals = p.eval_on_grid(grid);
  WindingResult res;
  res.min_abs = vals.cwiseAbs().minCoeff();
  res.max_abs = vals.cwiseAbs().maxCoeff();
  if (!(res.min_abs > 0) || res.min_abs < 1e-14 * res.max_abs)
    throw std::runtime_error(
        "winding_number: polynomial numerically vanishes on the circle");
  const Index n = grid.size();
  double total = 0.0;
  for (Index k = 0; k < n; ++k) {
    const Index j = (k + 1) % n;
    total += arg_increment(p, grid.angle(k),
                           k + 1 == n ? kTau : grid.angle(j), vals[k], vals[j],
                           &res.min_abs, 0);
  }
  const double w = total / kTau;
  const double rounded = std::round(w);
  if (std::abs(w - rounded) > 0.01)
    throw std::runtime_error("winding_number: non-integral winding");
  res.winding = static_cast<long>(rounded);
  return res;
}

std::vector<Complex> polynomial_roots(const ComplexPolynomial& p) {
  const Index d = p.actual_degree();
  if (d == 0) return {};
  if (d > 512)
    throw std::invalid_argument("polynomial_roots: degree too large");
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  const Complex lead = p.coeff(d);
  for (Index k = 0; k < d; ++k) comp(k, d - 1) = -p.coeff(k) / lead;
  for (Index k = 1; k < d; ++k) comp(k, k - 1) = Complex(1.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigensolver failed");
  const auto& ev = es.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

bool zero_free_in_closed_disk(const ComplexPolynomial& p,
                              const UnitGrid& grid) {
  try {
    const WindingResult w = winding_number(p, grid);
    return w.winding == 0;
  } catch (const std::runtime_error&) {
    return false;  // vanishes on the circle: not zero free in the closed disk
  }
}

OrthonormalCandidateReport validate_orthonormal_candidate(
    const ComplexPolynomial& p, double mass_tol) {
  const Index n = p.actual_degree();
  if (n < 1)
    throw std::invalid_argument("validate_orthonormal_candidate: degree 0");
  OrthonormalCandidateReport rep;
  const UnitGrid grid = UnitGrid::for_degree(n);

  bool winding_ok = false;
  try {
    const WindingResult w = winding_number(p, grid);
    rep.winding = w.winding;
    rep.min_abs_on_circle = w.min_abs;
    winding_ok = true;
  } catch (const std::runtime_error&) {
    rep.winding = -1;
  }
  if (winding_ok) {
    rep.roots_inside = rep.winding == static_cast<long>(n);
    if (n <= 64) {
      // Companion eigenvalues arbitrate at small degree.
      bool all_in = true;
      for (const Complex& r : polynomial_roots(p))
        all_in = all_in && std::abs(r) < 1.0;
      rep.roots_inside = all_in;
    }
  }

  const Eigen::VectorXcd vals = p.eval_on_grid(grid);
  detail::KahanSum<double> acc;
  for (Index k = 0; k < grid.size(); ++k)
    acc.add(1.0 / std::norm(vals[k]));
  rep.mass = acc.value() * grid.spacing() / kTau;
  rep.unit_mass = std::abs(rep.mass - 1.0) <= mass_tol;

  rep.leading = p.coeff(n);
  rep.leading_positive =
      std::real(rep.leading) > 0 &&
      std::abs(std::imag(rep.leading)) <= 1e-12 * std::abs(rep.leading);
  return rep;
}

CircleMeasure bernstein_szego_measure(const OrthonormalPair& pair,
                                      const UnitGrid& grid) {
  const ComplexPolynomial ps = pair.phi_star;
  if (!zero_free_in_closed_disk(ps, grid))
    throw std::invalid_argument(
        "bernstein_szego_measure: phi_n^* has a zero in the closed disk");
  auto fn = [ps](double th) {
    const Complex v = ps(Complex(std::cos(th), std::sin(th)));
    return 1.0 / (kTau * std::norm(v));
  };
  return CircleMeasure(grid, fn, {}, true);
}

UnitGrid bernstein_szego_grid(const OrthonormalPair& pair) {
  const UnitGrid base = UnitGrid::for_degree(2 * pair.degree);
  double r = 0.0;
  for (const Complex& root : polynomial_roots(pair.phi))
    r = std::max(r, std::abs(root));
  if (!(r < 1.0))
    throw std::invalid_argument(
        "bernstein_szego_grid: phi_n has a zero outside the open disk");
  Index need = base.size();
  if (r > 0.5)
    need = std::max<Index>(
        need, static_cast<Index>(std::ceil(std::log(1e-13) / std::log(r))));
  Index n = 1;
  while (n < need) n <<= 1;
  if (n > (Index(1) << 22))
    throw std::runtime_error(
        "bernstein_szego_grid: a zero sits too close to the circle for "
        "uniform-grid quadrature (would need " +
        std::to_string(need) + " nodes)");
  return UnitGrid(n);
}

Complex caratheodory_from_measure(const CircleMeasure& mu, Complex z) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("caratheodory_from_measure: |z| >= 1");
  const auto& pts = mu.grid().points();
  const auto& w = mu.weight_samples();
  detail::KahanSum<Complex> acc;
  for (Index k = 0; k < mu.grid().size(); ++k)
    acc.add(w[k] * (pts[k] + z) / (pts[k] - z));
  Complex total = acc.value() * mu.grid().spacing();
  for (const auto& a : mu.atoms()) {
    const Complex xi(std::cos(a.theta), std::sin(a.theta));
    total += a.mass * (xi + z) / (xi - z);
  }
  return total;
}

Eigen::VectorXcd taylor_of_ratio(const ComplexPolynomial& num,
                                 const ComplexPolynomial& den, Index count) {
  const Complex d0 = den.coeff(0);
  if (std::abs(d0) == 0.0)
    throw std::invalid_argument("taylor_of_ratio: denominator vanishes at 0");
  Eigen::VectorXcd t(count);
  for (Index k = 0; k < count; ++k) {
    Complex s = num.coeff(k);
    for (Index j = 1; j <= k; ++j) s -= den.coeff(j) * t[k - j];
    t[k] = s / d0;
  }
  return t;
}

namespace {

Eigen::VectorXd log_weight_half(const CircleMeasure& mu) {
  const auto& w = mu.weight_samples();
  Eigen::VectorXd u(w.size());
  for (Index k = 0; k < w.size(); ++k) {
    if (!(w[k] > 0))
      throw std::invalid_argument("szego_function: weight touches zero");
    u[k] = -0.5 * std::log(kTau * w[k]);
  }
  return u;
}

}  // namespace

Complex szego_function(const CircleMeasure& mu, Complex z) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("szego_function: |z| >= 1");
  const Eigen::VectorXd u = log_weight_half(mu);
  const auto& pts = mu.grid().points();
  detail::KahanSum<Complex> acc;
  for (Index k = 0; k < mu.grid().size(); ++k)
    acc.add(u[k] * (pts[k] + z) / (pts[k] - z));
  return std::exp(acc.value() * mu.grid().spacing() / kTau);
}

SzegoBoundary szego_function_boundary(const CircleMeasure& mu) {
  const Eigen::VectorXd u = log_weight_half(mu);
  const Index n = mu.grid().size();
  Eigen::FFT<double> fft;
  std::vector<Complex> in(static_cast<size_t>(n)), spec(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) in[static_cast<size_t>(k)] = u[k];
  fft.fwd(spec, in);
  // Analytic completion: keep frequency 0 and the Nyquist bin, double the
  // positive frequencies, drop the negative ones.
  for (Index k = 1; k < n / 2; ++k) spec[static_cast<size_t>(k)] *= 2.0;
  for (Index k = n / 2 + 1; k < n; ++k) spec[static_cast<size_t>(k)] = 0.0;
  std::vector<Complex> logpi(static_cast<size_t>(n));
  fft.inv(logpi, spec);

  SzegoBoundary out;
  out.values.resize(n);
  for (Index k = 0; k < n; ++k)
    out.values[k] = std::exp(logpi[static_cast<size_t>(k)]);

  // Negative-frequency energy of Pi itself (relative).
  std::vector<Complex> pi_spec(static_cast<size_t>(n));
  std::vector<Complex> pv(out.values.data(), out.values.data() + n);
  fft.fwd(pi_spec, pv);
  double neg = 0.0, all = 0.0;
  for (Index k = 0; k < n; ++k) {
    const double e = std::norm(pi_spec[static_cast<size_t>(k)]);
    all += e;
    if (k > n / 2) neg += e;
  }
  out.analyticity_residual = all > 0 ? std::sqrt(neg / all) : 0.0;
  return out;
}

SzegoRatioReport szego_ratio_check(double kappa_n, double delta) {
  SzegoRatioReport rep;
  rep.ratio = 1.0 / kappa_n;
  rep.sqrt_delta = std::sqrt(delta);
  rep.ok = rep.sqrt_delta <= rep.ratio + 1e-12 && rep.ratio <= 1.0 + 1e-12;
  return rep;
}

SzegoRatioReport szego_ratio_check(const CircleMeasure& mu, Index n,
                                   double delta) {
  const auto fam = monic_family(mu, n);
  return szego_ratio_check(fam.kappa(n), delta);
}

}  // namespace opuc
