#include "opuc/gram_schmidt.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace opuc {

namespace {

// Gram matrix of the monomial basis: G(j, k) = <z^k, z^j> = c_{j-k} with
// c_m = moment(mu, m). Hermitian Toeplitz.
Eigen::MatrixXcd moment_gram(const CircleMeasure& mu, Index n) {
  Eigen::VectorXcd c(2 * n + 1);  // c[m + n] = moment m, m = -n..n
  for (Index m = -n; m <= n; ++m) c[m + n] = moment(mu, m);
  Eigen::MatrixXcd g(n + 1, n + 1);
  for (Index j = 0; j <= n; ++j)
    for (Index k = 0; k <= n; ++k) g(j, k) = c[(j - k) + n];
  return g;
}

}  // namespace

MonicFamily monic_family(const CircleMeasure& mu, Index n) {
  if (!mu.grid().supports_degree(n))
    throw std::invalid_argument("monic_family: grid too small for degree");
  const Eigen::MatrixXcd g = moment_gram(mu, n);

  Eigen::LLT<Eigen::MatrixXcd> llt(g);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error(
        "monic_family: moment Gram matrix not positive definite");

  const auto inner = [&g](const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) {
    return (q.adjoint() * (g * p))(0, 0);  // <p, q> in L^2(mu)
  };

  MonicFamily fam;
  fam.monic.reserve(static_cast<size_t>(n) + 1);
  fam.norm_sq.resize(n + 1);
  std::vector<Eigen::VectorXcd> basis;

  for (Index k = 0; k <= n; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + 1);
    v[k] = Complex(1.0);
    for (int pass = 0; pass < 2; ++pass) {
      for (Index j = 0; j < k; ++j) {
        const Complex coef = inner(v, basis[static_cast<size_t>(j)]) /
                             fam.norm_sq[j];
        v -= coef * basis[static_cast<size_t>(j)];
      }
    }
    const double nrm2 = std::real(inner(v, v));
    if (!(nrm2 > 0) || !std::isfinite(nrm2))
      throw std::runtime_error("monic_family: breakdown at degree " +
                               std::to_string(k));
    fam.norm_sq[k] = nrm2;
    basis.push_back(v);
    fam.monic.emplace_back(Eigen::VectorXcd(v.head(k + 1)));
  }
  return fam;
}

double MonicFamily::kappa(Index k) const { return 1.0 / std::sqrt(norm_sq[k]); }

OrthonormalPair MonicFamily::orthonormal(Index k) const {
  const double kap = kappa(k);
  ComplexPolynomial phi = Complex(kap) * monic[static_cast<size_t>(k)];
  return {phi, star(phi, k), kap, k};
}

std::vector<ComplexPolynomial> monic_gram_schmidt(const CircleMeasure& mu,
                                                  Index n) {
  return monic_family(mu, n).monic;
}

SchurSequence verblunsky_from_measure(const CircleMeasure& mu, Index n) {
  const auto fam = monic_family(mu, n);
  Eigen::VectorXcd gamma(n);
  for (Index k = 0; k < n; ++k)
    gamma[k] = -std::conj(fam.monic[static_cast<size_t>(k) + 1](Complex(0.0)));
  try {
    return SchurSequence(std::move(gamma));
  } catch (const std::invalid_argument&) {
    throw std::runtime_error(
        "verblunsky_from_measure: extracted |gamma| >= 1 (numerical "
        "breakdown or invalid measure)");
  }
}

}  // namespace opuc
