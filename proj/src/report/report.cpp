#include "skewlab/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace skewlab {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::out_of_scope: return "out-of-scope";
    case Status::open_in_paper: return "open-in-paper";
  }
  return "fail";
}

bool all_pass(const std::vector<CheckRecord>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::fail; });
}

bool Report::failed() const { return !all_pass(checks); }

std::string emit(const Report& r, Format f) {
  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["version"] = kToolVersion;
    j["schema"] = kSchemaVersion;
    if (!r.command.empty()) j["command"] = r.command;
    if (!r.case_desc.empty()) j["case"] = r.case_desc;
    for (const auto& [k, v] : r.extras) j[k] = nlohmann::ordered_json::parse(v);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json cj;
      cj["check"] = c.name;
      cj["paper_ref"] = c.paper_ref;
      cj["case"] = c.case_desc;
      cj["status"] = status_name(c.status);
      cj["witness"] = c.witness;
      j["checks"].push_back(std::move(cj));
    }
    j["failures"] = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return c.status == Status::fail; });
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (!r.command.empty()) os << "# " << r.command << (r.case_desc.empty() ? "" : " [" + r.case_desc + "]") << "\n";
  for (const auto& [k, v] : r.extras) os << k << ": " << v << "\n";
  for (const auto& c : r.checks) {
    os << status_name(c.status) << "  " << c.name << "  (" << c.paper_ref << ")";
    if (!c.case_desc.empty()) os << "  {" << c.case_desc << "}";
    if (!c.witness.empty()) os << "  " << c.witness;
    os << "\n";
  }
  const auto fails = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return c.status == Status::fail; });
  os << r.checks.size() << " checks, " << fails << " failed\n";
  return os.str();
}

}  // namespace skewlab
