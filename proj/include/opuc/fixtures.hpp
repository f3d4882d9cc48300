#ifndef OPUC_FIXTURES_HPP
#define OPUC_FIXTURES_HPP

#include <string>

namespace opuc {

/// Regression constants measured once on a reference run and frozen. The
/// growth laws only come with asymptotic comparisons, so concrete bands are
/// pinned here and re-checked on every run; regenerate deliberately with the
/// CLI's --refreeze.
struct FrozenConstants {
  // Mass-points construction, eps = 0.5: band for sup|Phi_n|/(1 + eps log n).
  double rakh_c1 = 0.0;
  double rakh_c2 = 0.0;

  // Explicit construction, eps = 0.05, b = 2.
  double stek_weight_dev_C = 0.0;  // sup|2 pi sigma' - 1| <= C eps
  double stek_growth_c1 = 0.0;     // band for sup|phi_n|/(eps log n)
  double stek_growth_c2 = 0.0;
  double stek_slope = 0.0;         // LSQ slope of sup|phi_n| against log n
  double stek_a_dev_C = 0.0;       // |a - 1| <= C eps

  // Variant construction.
  double variant_delta_C = 0.0;  // Steklov level >= 1 - C' eps
  double sine_sum_bound = 0.0;   // sup of the partial sine sums

  // Cancelation-ratio sups for the violation demo.
  double sec1_sup_n64 = 0.0;
  double sec1_sup_n4096 = 0.0;

  /// OPUC_FIXTURES env var, else the compiled-in repository default.
  static std::string default_path();
  static FrozenConstants load(const std::string& path = default_path());
  void save(const std::string& path = default_path()) const;
};

}  // namespace opuc

#endif
