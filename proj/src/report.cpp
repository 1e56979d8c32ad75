#include "hx/report.hpp"

#include <algorithm>
#include <sstream>

namespace hx {

Report::Report(std::string scenario, Json params, std::uint64_t seed)
    : scenario_(std::move(scenario)), params_(std::move(params)), seed_(seed) {}

void Report::data(const std::string& name, Json value, bool certified) {
  Json r;
  r["type"] = "data";
  r["scenario"] = scenario_;
  r["name"] = name;
  r["certified"] = certified;
  r["value"] = std::move(value);
  records_.push_back(std::move(r));
}

void Report::check(const std::string& id, const std::string& expect, Verdict v, Json witnesses) {
  Json r;
  r["type"] = "check";
  r["scenario"] = scenario_;
  r["check"] = id;
  r["expect"] = expect;
  r["verdict"] = to_string(v);
  r["witnesses"] = std::move(witnesses);
  records_.push_back(std::move(r));
}

Verdict Report::verdict() const {
  bool any = false, disc = false;
  for (const auto& r : records_) {
    if (r["type"] != "check") continue;
    any = true;
    const auto& v = r["verdict"];
    if (v == to_string(Verdict::Fail)) return Verdict::Fail;
    if (v == to_string(Verdict::Discrepancy)) disc = true;
  }
  if (!any) return Verdict::Fail;
  return disc ? Verdict::Discrepancy : Verdict::Pass;
}

std::string Report::records_text() const {
  std::ostringstream os;
  Json h;
  h["type"] = "header";
  h["schema"] = kReportSchema;
  h["scenario"] = scenario_;
  h["seed"] = seed_;
  h["params"] = params_;
  os << h.dump() << "\n";
  for (const auto& r : records_) os << r.dump() << "\n";
  Json s;
  s["type"] = "summary";
  s["scenario"] = scenario_;
  s["verdict"] = to_string(verdict());
  os << s.dump() << "\n";
  return os.str();
}

namespace {

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string plain(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string Report::table_text() const {
  std::ostringstream os;
  os << "scenario  " << scenario_ << "\n";
  os << "seed      " << seed_ << "\n";
  os << "params    " << params_.dump() << "\n";
  std::size_t w = 5;
  for (const auto& r : records_)
    if (r["type"] == "check") w = std::max(w, r["check"].get<std::string>().size());
  bool data_header = false;
  for (const auto& r : records_) {
    if (r["type"] != "data") continue;
    if (!data_header) os << "\ndata\n";
    data_header = true;
    os << "  " << r["name"].get<std::string>() << (r["certified"].get<bool>() ? "" : " [uncertified]") << ": "
       << plain(r["value"]) << "\n";
  }
  os << "\n" << pad("check", w) << "  " << pad("verdict", 11) << "  expect\n";
  for (const auto& r : records_) {
    if (r["type"] != "check") continue;
    os << pad(r["check"].get<std::string>(), w) << "  " << pad(r["verdict"].get<std::string>(), 11) << "  "
       << r["expect"].get<std::string>() << "\n";
    for (const auto& wit : r["witnesses"]) os << pad("", w) << "  " << pad("", 11) << "  - " << plain(wit) << "\n";
  }
  os << "\nverdict: " << to_string(verdict()) << "\n";
  return os.str();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Discrepancy: return 2;
  }
  return 1;
}

}  // namespace hx
