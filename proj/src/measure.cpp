#include "opuc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opuc/detail/kahan.hpp"

namespace opuc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTau);
  if (t < 0) t += kTau;
  return t;
}

}  // namespace

CircleMeasure::CircleMeasure(UnitGrid grid, Eigen::VectorXd weight_samples,
                             std::vector<Atom> atoms, bool probability)
    : grid_(std::move(grid)),
      weight_(std::move(weight_samples)),
      atoms_(std::move(atoms)),
      probability_(probability) {
  validate_and_cache();
}

CircleMeasure::CircleMeasure(UnitGrid grid, WeightFn weight,
                             std::vector<Atom> atoms, bool probability)
    : grid_(std::move(grid)),
      weight_fn_(std::move(weight)),
      atoms_(std::move(atoms)),
      probability_(probability) {
  weight_.resize(grid_.size());
  for (Index k = 0; k < grid_.size(); ++k) weight_[k] = weight_fn_(grid_.angle(k));
  validate_and_cache();
}

CircleMeasure::CircleMeasure(UnitGrid grid, Eigen::VectorXd weight_samples,
                             WeightFn weight, std::vector<Atom> atoms,
                             bool probability)
    : grid_(std::move(grid)),
      weight_(std::move(weight_samples)),
      weight_fn_(std::move(weight)),
      atoms_(std::move(atoms)),
      probability_(probability) {
  for (Index k : {Index(0), grid_.size() / 3, grid_.size() - 1}) {
    const double a = weight_[k], b = weight_fn_(grid_.angle(k));
    if (std::abs(a - b) > 1e-6 * (1.0 + std::abs(a)))
      throw std::invalid_argument(
          "CircleMeasure: samples disagree with the closed form");
  }
  validate_and_cache();
}

void CircleMeasure::validate_and_cache() {
  if (weight_.size() != grid_.size())
    throw std::invalid_argument("CircleMeasure: sample count != grid size");
  for (Index k = 0; k < weight_.size(); ++k) {
    if (!(weight_[k] >= 0.0))
      throw std::invalid_argument("CircleMeasure: negative weight sample");
  }
  for (auto& a : atoms_) {
    a.theta = wrap_angle(a.theta);
    if (!(a.mass >= 0.0))
      throw std::invalid_argument("CircleMeasure: negative atom mass");
  }
  for (size_t i = 0; i < atoms_.size(); ++i)
    for (size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i].theta == atoms_[j].theta)
        throw std::invalid_argument("CircleMeasure: duplicate atom angle");

  detail::KahanSum<double> acc;
  for (Index k = 0; k < weight_.size(); ++k) acc.add(weight_[k]);
  ac_mass_ = acc.value() * grid_.spacing();
  detail::KahanSum<double> am;
  for (const auto& a : atoms_) am.add(a.mass);
  atom_mass_ = am.value();

  if (probability_ && std::abs(total_mass() - 1.0) > 1e-6)
    throw std::invalid_argument(
        "CircleMeasure: probability flag set but total mass deviates from 1");
}

CircleMeasure CircleMeasure::lebesgue(const UnitGrid& grid) {
  const double w = 1.0 / kTau;
  return CircleMeasure(
      grid, [w](double) { return w; }, {}, true);
}

double CircleMeasure::weight_at(double theta) const {
  if (weight_fn_) return weight_fn_(theta);
  const Index k = grid_.node_at(theta);
  if (k < 0)
    throw std::invalid_argument(
        "CircleMeasure: point query off the grid and no closed form stored");
  return weight_[k];
}

Complex quad_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g,
                   const CircleMeasure& mu) {
  const Index n = mu.grid().size();
  if (f.size() != n || g.size() != n)
    throw std::invalid_argument("quad_inner: sample vectors off-grid");
  detail::KahanSum<Complex> acc;
  const auto& w = mu.weight_samples();
  for (Index k = 0; k < n; ++k) acc.add(f[k] * std::conj(g[k]) * w[k]);
  Complex total = acc.value() * mu.grid().spacing();
  for (const auto& a : mu.atoms()) {
    const Index k = mu.grid().node_at(a.theta);
    if (k < 0)
      throw std::invalid_argument(
          "quad_inner: atom off the grid; use the polynomial overload");
    total += a.mass * f[k] * std::conj(g[k]);
  }
  return total;
}

Complex quad_inner(const ComplexPolynomial& f, const ComplexPolynomial& g,
                   const CircleMeasure& mu) {
  const Index n = mu.grid().size();
  if (f.actual_degree() + g.actual_degree() >= n)
    throw std::invalid_argument("quad_inner: grid too small for degrees");
  const Eigen::VectorXcd fv = f.eval_on_grid(mu.grid());
  const Eigen::VectorXcd gv = g.eval_on_grid(mu.grid());
  detail::KahanSum<Complex> acc;
  const auto& w = mu.weight_samples();
  for (Index k = 0; k < n; ++k) acc.add(fv[k] * std::conj(gv[k]) * w[k]);
  Complex total = acc.value() * mu.grid().spacing();
  for (const auto& a : mu.atoms()) {
    const Complex z(std::cos(a.theta), std::sin(a.theta));
    total += a.mass * f(z) * std::conj(g(z));
  }
  return total;
}

Complex moment(const CircleMeasure& mu, Index k) {
  const Index n = mu.grid().size();
  if (2 * std::abs(k) >= n)
    throw std::invalid_argument("moment: |k| too large for grid");
  detail::KahanSum<Complex> acc;
  const auto& w = mu.weight_samples();
  const auto& pts = mu.grid().points();
  // e^{-ik theta_j} walks the grid points backwards; index arithmetic keeps
  // the values exact.
  for (Index j = 0; j < n; ++j) {
    const Index idx = ((-k * j) % n + n) % n;
    acc.add(w[j] * pts[idx]);
  }
  Complex total = acc.value() * mu.grid().spacing();
  for (const auto& a : mu.atoms()) {
    const double ang = -static_cast<double>(k) * a.theta;
    total += a.mass * Complex(std::cos(ang), std::sin(ang));
  }
  return total;
}

std::pair<CircleMeasure, double> normalize(const CircleMeasure& mu) {
  const double alpha = mu.total_mass();
  if (!(alpha > 0)) throw std::invalid_argument("normalize: zero total mass");
  Eigen::VectorXd w = mu.weight_samples() / alpha;
  std::vector<Atom> atoms = mu.atoms();
  for (auto& a : atoms) a.mass /= alpha;
  if (mu.has_closed_form()) {
    auto fn = [inner = mu, alpha](double th) {
      return inner.weight_at(th) / alpha;
    };
    return {CircleMeasure(mu.grid(), fn, std::move(atoms), true), alpha};
  }
  return {CircleMeasure(mu.grid(), std::move(w), std::move(atoms), true),
          alpha};
}

SteklovCertificate steklov_check(const CircleMeasure& mu, double delta) {
  SteklovCertificate cert;
  cert.delta = delta;
  cert.min_weight = mu.weight_samples().minCoeff();
  cert.max_deviation =
      (mu.weight_samples().array() - 1.0 / kTau).abs().maxCoeff();
  cert.valid = cert.min_weight >= delta / kTau;
  return cert;
}

nlohmann::json CircleMeasure::to_json() const {
  nlohmann::json j;
  j["grid_size"] = grid_.size();
  j["weight_samples"] = std::vector<double>(weight_.data(),
                                            weight_.data() + weight_.size());
  auto arr = nlohmann::json::array();
  for (const auto& a : atoms_) arr.push_back({{"theta", a.theta}, {"mass", a.mass}});
  j["atoms"] = std::move(arr);
  j["probability"] = probability_;
  return j;
}

CircleMeasure CircleMeasure::from_json(const nlohmann::json& j) {
  const Index n = j.at("grid_size").get<Index>();
  const auto samples = j.at("weight_samples").get<std::vector<double>>();
  Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(samples.data(), samples.size());
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms"))
    atoms.push_back({a.at("theta").get<double>(), a.at("mass").get<double>()});
  return CircleMeasure(UnitGrid(n), std::move(w), std::move(atoms),
                       j.value("probability", false));
}

void CircleMeasure::write_weight_csv(std::ostream& os) const {
  os << "theta,weight\n";
  os.precision(17);
  for (Index k = 0; k < grid_.size(); ++k)
    os << grid_.angle(k) << "," << weight_[k] << "\n";
}

}  // namespace opuc
