#include "opuc/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opuc {

UnitGrid::UnitGrid(Index size) {
  if (size < 4) throw std::invalid_argument("UnitGrid: size must be >= 4");
  auto data = std::make_shared<Data>();
  data->angles.resize(size);
  data->points.resize(size);
  data->spacing = 2.0 * std::numbers::pi / static_cast<double>(size);
  for (Index k = 0; k < size; ++k) {
    const double th = data->spacing * static_cast<double>(k);
    data->angles[k] = th;
    data->points[k] = Complex(std::cos(th), std::sin(th));
  }
  data_ = std::move(data);
}

UnitGrid UnitGrid::for_degree(Index max_degree) {
  if (max_degree < 0) throw std::invalid_argument("UnitGrid: negative degree");
  Index want = 8 * (max_degree + 1);
  if (want < 4096) want = 4096;
  Index n = 1;
  while (n < want) n <<= 1;
  return UnitGrid(n);
}

Index UnitGrid::node_at(double theta) const {
  const double tau = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, tau);
  if (t < 0) t += tau;
  const double pos = t / spacing();
  const double rounded = std::round(pos);
  if (std::abs(pos - rounded) > 1e-9) return -1;
  Index k = static_cast<Index>(rounded);
  if (k == size()) k = 0;
  return k;
}

}  // namespace opuc
