#include "opuc/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifndef OPUC_FIXTURES_DEFAULT
#define OPUC_FIXTURES_DEFAULT "fixtures/frozen_constants.json"
#endif

namespace opuc {

std::string FrozenConstants::default_path() {
  if (const char* env = std::getenv("OPUC_FIXTURES")) return env;
  return OPUC_FIXTURES_DEFAULT;
}

FrozenConstants FrozenConstants::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("FrozenConstants: cannot open " + path);
  nlohmann::json j;
  in >> j;
  FrozenConstants f;
  const auto& r = j.at("rakhmanov_growth");
  f.rakh_c1 = r.at("c1").get<double>();
  f.rakh_c2 = r.at("c2").get<double>();
  const auto& s = j.at("steklov");
  f.stek_weight_dev_C = s.at("weight_dev_C").get<double>();
  f.stek_growth_c1 = s.at("growth_c1").get<double>();
  f.stek_growth_c2 = s.at("growth_c2").get<double>();
  f.stek_slope = s.at("slope").get<double>();
  f.stek_a_dev_C = s.at("a_dev_C").get<double>();
  const auto& v = j.at("variant");
  f.variant_delta_C = v.at("delta_C").get<double>();
  f.sine_sum_bound = v.at("sine_sum_bound").get<double>();
  const auto& c = j.at("sec1");
  f.sec1_sup_n64 = c.at("sup_n64").get<double>();
  f.sec1_sup_n4096 = c.at("sup_n4096").get<double>();
  return f;
}

void FrozenConstants::save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["rakhmanov_growth"] = {{"epsilon", 0.5}, {"c1", rakh_c1}, {"c2", rakh_c2}};
  j["steklov"] = {{"epsilon", 0.05},
                  {"b", 2.0},
                  {"weight_dev_C", stek_weight_dev_C},
                  {"growth_c1", stek_growth_c1},
                  {"growth_c2", stek_growth_c2},
                  {"slope", stek_slope},
                  {"a_dev_C", stek_a_dev_C}};
  j["variant"] = {{"delta_C", variant_delta_C},
                  {"sine_sum_bound", sine_sum_bound}};
  j["sec1"] = {{"sup_n64", sec1_sup_n64}, {"sup_n4096", sec1_sup_n4096}};
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("FrozenConstants: cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace opuc
