#ifndef OPUC_SCHUR_HPP
#define OPUC_SCHUR_HPP

#include <Eigen/Core>

#include "opuc/grid.hpp"

namespace opuc {

/// Finite sequence of Schur (Verblunsky) parameters gamma_j with |gamma_j| < 1
/// and the derived rho_j = sqrt(1 - |gamma_j|^2).
class SchurSequence {
 public:
  SchurSequence() = default;
  explicit SchurSequence(Eigen::VectorXcd gamma);

  static SchurSequence zeros(Index n);

  Index size() const { return gamma_.size(); }
  Complex gamma(Index j) const { return gamma_[j]; }
  double rho(Index j) const { return rho_[j]; }
  const Eigen::VectorXcd& gammas() const { return gamma_; }
  const Eigen::VectorXd& rhos() const { return rho_; }

  /// kappa_n = prod_{j<n} 1/rho_j, the leading coefficient of phi_n.
  double kappa(Index n) const;

  SchurSequence head(Index n) const;
  SchurSequence negated() const;
  /// Sum of |gamma_j| (the l^1 size, reported for Baxter-type diagnostics).
  double l1_norm() const;

  friend SchurSequence concat(const SchurSequence& a, const SchurSequence& b);

 private:
  Eigen::VectorXcd gamma_;
  Eigen::VectorXd rho_;
};

}  // namespace opuc

#endif
