#ifndef OPUC_GRID_HPP
#define OPUC_GRID_HPP

#include <Eigen/Core>

#include <complex>
#include <memory>

namespace opuc {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Uniform angular grid theta_k = 2*pi*k/N on the unit circle.
///
/// The grid is the quadrature backbone of the whole library: the rectangle
/// rule on it integrates any trigonometric polynomial of degree < N exactly,
/// so every inner product of polynomials with deg f + deg g < N is exact up
/// to roundoff. Copies are cheap (shared immutable storage).
class UnitGrid {
 public:
  explicit UnitGrid(Index size);

  /// Grid sized for work up to the given polynomial degree: the smallest
  /// power of two >= max(4096, 8*(degree+1)). The power-of-two rounding
  /// keeps the FFT-based polynomial evaluation on the fast path.
  static UnitGrid for_degree(Index max_degree);

  Index size() const { return static_cast<Index>(data_->angles.size()); }
  double angle(Index k) const { return data_->angles[k]; }
  const Eigen::VectorXd& angles() const { return data_->angles; }
  /// Points e^{i theta_k}.
  const Eigen::VectorXcd& points() const { return data_->points; }
  double spacing() const { return data_->spacing; }

  /// Quadrature exactness condition for a single polynomial degree:
  /// products of two such polynomials stay below the Nyquist limit.
  bool supports_degree(Index degree) const { return 2 * degree < size(); }

  /// Index of the grid node at the given angle, or -1 if the angle does not
  /// coincide with a node (within an absolute tolerance of one part in 1e9
  /// of the spacing).
  Index node_at(double theta) const;

  friend bool operator==(const UnitGrid& a, const UnitGrid& b) {
    return a.size() == b.size();
  }

 private:
  struct Data {
    Eigen::VectorXd angles;
    Eigen::VectorXcd points;
    double spacing = 0.0;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace opuc

#endif
