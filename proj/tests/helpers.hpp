#ifndef OPUC_TESTS_HELPERS_HPP
#define OPUC_TESTS_HELPERS_HPP

#include <complex>
#include <random>

#include <Eigen/Core>

#include "opuc/analysis.hpp"
#include "opuc/polynomial.hpp"
#include "opuc/schur.hpp"
#include "opuc/szego.hpp"

namespace opuc::testing {

inline SchurSequence random_schur(std::mt19937_64& rng, Index len,
                                  double max_abs) {
  std::uniform_real_distribution<double> mag(0.0, max_abs);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.141592653589793);
  Eigen::VectorXcd g(len);
  for (Index j = 0; j < len; ++j) {
    const double r = mag(rng), a = ang(rng);
    g[j] = Complex(r * std::cos(a), r * std::sin(a));
  }
  return SchurSequence(std::move(g));
}

/// Random parameters whose Bernstein-Szego weight the uniform grid can
/// actually resolve. Aggressive draws occasionally push a zero of phi_n
/// within ~1e-6 of the circle, where no feasible uniform grid sees the
/// weight spike; those draws are rejected and redrawn (counted).
inline SchurSequence random_schur_resolvable(std::mt19937_64& rng, Index len,
                                             double max_abs,
                                             int* redraws = nullptr) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    SchurSequence g = random_schur(rng, len, max_abs);
    try {
      bernstein_szego_grid(szego_recursion(g, len).back());
      return g;
    } catch (const std::runtime_error&) {
      if (redraws) ++*redraws;
    }
  }
  throw std::runtime_error("random_schur_resolvable: too many rejections");
}

/// Polynomial F = 1 + t_1 z + ... + t_d z^d with sum |t_k| <= budget < 1,
/// so Re F > 0 on the closed disk and the mean of Re F over the circle is 1.
inline ComplexPolynomial random_caratheodory_poly(std::mt19937_64& rng,
                                                  Index degree, double budget) {
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.141592653589793);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(degree + 1);
  c[0] = Complex(1.0);
  double weight = 0.0;
  Eigen::VectorXd raw(degree);
  for (Index k = 0; k < degree; ++k) {
    raw[k] = mag(rng);
    weight += raw[k];
  }
  if (weight > 0) {
    for (Index k = 1; k <= degree; ++k) {
      const double r = budget * raw[k - 1] / weight;
      const double a = ang(rng);
      c[k] = Complex(r * std::cos(a), r * std::sin(a));
    }
  }
  return ComplexPolynomial(std::move(c));
}

}  // namespace opuc::testing

#endif
