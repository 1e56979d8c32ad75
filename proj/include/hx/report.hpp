#pragma once

// Scenario reports: a header, data records carrying certification flags and
// one record per check; rendered as JSON lines or as a plain table.

#include "hx/duality.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hx-report/1";

class Report {
 public:
  Report(std::string scenario, Json params, std::uint64_t seed);

  void data(const std::string& name, Json value, bool certified = true);
  void check(const std::string& id, const std::string& expect, Verdict v, Json witnesses = Json::array());
  void check(const std::string& id, const std::string& expect, bool pass, Json witnesses = Json::array()) {
    check(id, expect, pass ? Verdict::Pass : Verdict::Fail, std::move(witnesses));
  }

  void set_params(Json params) { params_ = std::move(params); }
  const std::string& scenario() const { return scenario_; }
  const std::vector<Json>& records() const { return records_; }
  // Fail beats Discrepancy beats Pass; a report without checks fails
  Verdict verdict() const;

  std::string records_text() const;
  std::string table_text() const;

 private:
  std::string scenario_;
  Json params_;
  std::uint64_t seed_;
  std::vector<Json> records_;
};

int exit_code(Verdict v);  // 0 / 1 / 2

}  // namespace hx
