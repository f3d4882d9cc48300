#include "opuc/schur.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opuc {

SchurSequence::SchurSequence(Eigen::VectorXcd gamma) : gamma_(std::move(gamma)) {
  rho_.resize(gamma_.size());
  for (Index j = 0; j < gamma_.size(); ++j) {
    const double a = std::abs(gamma_[j]);
    if (!(a < 1.0))
      throw std::invalid_argument("SchurSequence: |gamma_" + std::to_string(j) +
                                  "| >= 1");
    rho_[j] = std::sqrt(1.0 - a * a);
  }
}

SchurSequence SchurSequence::zeros(Index n) {
  return SchurSequence(Eigen::VectorXcd::Zero(n));
}

double SchurSequence::kappa(Index n) const {
  if (n > size()) throw std::invalid_argument("kappa: index beyond sequence");
  double k = 1.0;
  for (Index j = 0; j < n; ++j) k /= rho_[j];
  return k;
}

SchurSequence SchurSequence::head(Index n) const {
  if (n > size()) throw std::invalid_argument("head: index beyond sequence");
  return SchurSequence(gamma_.head(n));
}

SchurSequence SchurSequence::negated() const { return SchurSequence(-gamma_); }

double SchurSequence::l1_norm() const { return gamma_.cwiseAbs().sum(); }

SchurSequence concat(const SchurSequence& a, const SchurSequence& b) {
  Eigen::VectorXcd g(a.size() + b.size());
  g.head(a.size()) = a.gammas();
  g.tail(b.size()) = b.gammas();
  return SchurSequence(std::move(g));
}

}  // namespace opuc
