#ifndef OPUC_MEASURE_HPP
#define OPUC_MEASURE_HPP

#include <Eigen/Core>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opuc/grid.hpp"
#include "opuc/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

namespace opuc {

/// Point mass m * delta_theta. Angle normalized into [0, 2*pi).
struct Atom {
  double theta = 0.0;
  double mass = 0.0;
};

/// Measure on the unit circle: an absolutely continuous part given by a
/// nonnegative density sigma'(theta) against d(theta) (grid samples plus an
/// optional closed-form evaluator) and a finite list of atoms. Atoms are kept
/// symbolic; they are never rasterized onto the grid.
class CircleMeasure {
 public:
  using WeightFn = std::function<double(double)>;

  CircleMeasure(UnitGrid grid, Eigen::VectorXd weight_samples,
                std::vector<Atom> atoms = {}, bool probability = false);
  /// Samples the closed form on the grid and keeps the evaluator for exact
  /// point queries.
  CircleMeasure(UnitGrid grid, WeightFn weight, std::vector<Atom> atoms = {},
                bool probability = false);
  /// Precomputed samples plus the matching evaluator (spot-checked at a few
  /// nodes). Use when sampling through the evaluator would be too slow.
  CircleMeasure(UnitGrid grid, Eigen::VectorXd weight_samples, WeightFn weight,
                std::vector<Atom> atoms = {}, bool probability = false);

  /// Normalized Lebesgue measure d(theta)/(2*pi).
  static CircleMeasure lebesgue(const UnitGrid& grid);

  const UnitGrid& grid() const { return grid_; }
  const Eigen::VectorXd& weight_samples() const { return weight_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool has_closed_form() const { return static_cast<bool>(weight_fn_); }
  bool probability_flag() const { return probability_; }

  /// Density value at an arbitrary angle; the closed form wins when present,
  /// otherwise the angle must coincide with a grid node.
  double weight_at(double theta) const;

  double ac_mass() const { return ac_mass_; }
  double atom_mass() const { return atom_mass_; }
  double total_mass() const { return ac_mass_ + atom_mass_; }

  nlohmann::json to_json() const;
  static CircleMeasure from_json(const nlohmann::json& j);
  /// CSV with header "theta,weight".
  void write_weight_csv(std::ostream& os) const;

 private:
  void validate_and_cache();

  UnitGrid grid_;
  Eigen::VectorXd weight_;
  WeightFn weight_fn_;
  std::vector<Atom> atoms_;
  bool probability_ = false;
  double ac_mass_ = 0.0;
  double atom_mass_ = 0.0;
};

/// Integral of f * conj(g) against the measure, with f and g sampled on the
/// measure's grid. Atom contributions are evaluated exactly at the atom
/// angles, which therefore must land on grid nodes for this overload.
Complex quad_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g,
                   const CircleMeasure& mu);

/// Same integral for polynomial f and g: the grid part is rectangle-rule
/// quadrature (exact up to roundoff once deg f + deg g < N) and atoms are
/// Horner-evaluated wherever they sit.
Complex quad_inner(const ComplexPolynomial& f, const ComplexPolynomial& g,
                   const CircleMeasure& mu);

/// Moment c_k = integral of e^{-ik theta} d(mu). Requires |k| < N/2.
Complex moment(const CircleMeasure& mu, Index k);

/// Rescales to a probability measure; returns the measure and the original
/// total mass alpha, so that phi_n(z, sigma) = alpha^{1/2} phi_n(z, alpha*sigma)
/// can be applied by callers.
std::pair<CircleMeasure, double> normalize(const CircleMeasure& mu);

/// Outcome of the Steklov lower-bound test sigma' >= delta/(2*pi).
struct SteklovCertificate {
  double delta = 0.0;
  double min_weight = 0.0;
  /// sup |sigma' - 1/(2*pi)| over the grid.
  double max_deviation = 0.0;
  bool valid = false;
};

SteklovCertificate steklov_check(const CircleMeasure& mu, double delta);

}  // namespace opuc

#endif
