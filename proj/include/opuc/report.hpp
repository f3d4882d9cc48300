#ifndef OPUC_REPORT_HPP
#define OPUC_REPORT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "opuc/grid.hpp"

namespace opuc {

/// One growth-law measurement: the sup norm of the degree-n polynomial, where
/// it is attained, and the theoretical comparator it is tracked against.
struct GrowthRow {
  Index n = 0;
  double epsilon = 0.0;
  double sup_norm = 0.0;
  double argmax_theta = 0.0;
  double comparator = 0.0;
  std::string comparator_formula;
  double steklov_delta = 0.0;
  std::map<std::string, double> residuals;
};

class GrowthReport {
 public:
  void add(GrowthRow row);
  const std::vector<GrowthRow>& rows() const { return rows_; }

  nlohmann::json to_json() const;
  static GrowthReport from_json(const nlohmann::json& j);

  /// Fixed header n,epsilon,sup_norm,argmax_theta,comparator,steklov_delta.
  void write_csv(std::ostream& os) const;

 private:
  std::vector<GrowthRow> rows_;  // kept sorted by n
};

}  // namespace opuc

#endif
