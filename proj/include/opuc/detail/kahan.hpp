#ifndef OPUC_DETAIL_KAHAN_HPP
#define OPUC_DETAIL_KAHAN_HPP

#include <complex>

namespace opuc::detail {

/// Kahan compensated accumulator. Quadrature loops run it in fixed ascending
/// index order so results are deterministic and schedule-independent.
template <typename T>
class KahanSum {
 public:
  void add(const T& x) {
    const T y = x - comp_;
    const T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace opuc::detail

#endif
