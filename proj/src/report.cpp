#include "contactlie/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace contactlie {

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Finding: return "finding";
  default: return "info";
  }
}

Record pass_if(bool ok, std::string subject, std::string check) {
  Record r;
  r.subject = std::move(subject);
  r.check = std::move(check);
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

void Report::append(std::vector<Record> rs) {
  for (auto& r : rs) records.push_back(std::move(r));
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const Record& r) { return r.status == s; }));
}

int Report::exit_code() const {
  if (!error.empty()) return 2;
  return count(Status::Fail) ? 1 : 0;
}

std::string Report::to_text() const {
  std::size_t wsub = 7, wcheck = 5;
  for (const auto& r : records) {
    wsub = std::max(wsub, r.subject.size());
    wcheck = std::max(wcheck, r.check.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  std::ostringstream out;
  out << "# " << command << "\n";
  for (const auto& r : records) {
    out << pad(to_string(r.status), 8) << "  " << pad(r.subject, wsub) << "  " << pad(r.check, wcheck);
    for (std::size_t i = 0; i < r.fields.size(); ++i)
      out << (i ? "; " : "  ") << r.fields[i].first << ": " << r.fields[i].second;
    out << "\n";
  }
  if (!error.empty()) out << "error: " << error << "\n";
  out << "# " << records.size() << " records, " << count(Status::Pass) << " pass, " << count(Status::Fail)
      << " fail, " << count(Status::Finding) << " findings; exit " << exit_code() << "\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["exit_code"] = exit_code();
  j["error"] = error;
  j["summary"] = {{"records", records.size()},
                  {"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"finding", count(Status::Finding)},
                  {"info", count(Status::Info)}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["subject"] = r.subject;
    rec["check"] = r.check;
    rec["status"] = to_string(r.status);
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields) fields[k] = v;
    rec["fields"] = fields;
    arr.push_back(rec);
  }
  j["records"] = arr;
  return j.dump(2) + "\n";
}

} // namespace contactlie
