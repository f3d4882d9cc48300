#include "opuc/report.hpp"

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

namespace opuc {

void GrowthReport::add(GrowthRow row) {
  rows_.push_back(std::move(row));
  std::stable_sort(rows_.begin(), rows_.end(),
                   [](const GrowthRow& a, const GrowthRow& b) { return a.n < b.n; });
}

nlohmann::json GrowthReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json j;
    j["n"] = r.n;
    j["epsilon"] = r.epsilon;
    j["sup_norm"] = r.sup_norm;
    j["argmax_theta"] = r.argmax_theta;
    j["comparator"] = r.comparator;
    j["comparator_formula"] = r.comparator_formula;
    j["steklov_delta"] = r.steklov_delta;
    j["residuals"] = r.residuals;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"rows", std::move(arr)}};
}

GrowthReport GrowthReport::from_json(const nlohmann::json& j) {
  GrowthReport rep;
  for (const auto& r : j.at("rows")) {
    GrowthRow row;
    row.n = r.at("n").get<Index>();
    row.epsilon = r.at("epsilon").get<double>();
    row.sup_norm = r.at("sup_norm").get<double>();
    row.argmax_theta = r.at("argmax_theta").get<double>();
    row.comparator = r.at("comparator").get<double>();
    row.comparator_formula = r.value("comparator_formula", "");
    row.steklov_delta = r.at("steklov_delta").get<double>();
    if (r.contains("residuals"))
      row.residuals = r.at("residuals").get<std::map<std::string, double>>();
    rep.add(std::move(row));
  }
  return rep;
}

void GrowthReport::write_csv(std::ostream& os) const {
  os << "n,epsilon,sup_norm,argmax_theta,comparator,steklov_delta\n";
  os.precision(17);
  for (const auto& r : rows_)
    os << r.n << "," << r.epsilon << "," << r.sup_norm << ","
       << r.argmax_theta << "," << r.comparator << "," << r.steklov_delta
       << "\n";
}

}  // namespace opuc
