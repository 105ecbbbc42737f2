#pragma once

#include <string>
#include <utility>
#include <vector>

namespace contactlie {

/// pass/fail are asserted checks; finding and info are reported only.
enum class Status { Pass, Fail, Finding, Info };
std::string to_string(Status s);

struct Record {
  std::string subject;
  std::string check;
  Status status = Status::Info;
  std::vector<std::pair<std::string, std::string>> fields;

  Record& with(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Record& with(std::string key, bool value) { return with(std::move(key), std::string(value ? "yes" : "no")); }
  Record& with(std::string key, const char* value) { return with(std::move(key), std::string(value)); }
};

Record pass_if(bool ok, std::string subject, std::string check);

struct Report {
  std::string command;
  std::vector<Record> records;
  /// Set for input errors (parse failures, bad flags, unmet preconditions).
  std::string error;

  void add(Record r) { records.push_back(std::move(r)); }
  void append(std::vector<Record> rs);
  std::size_t count(Status s) const;
  /// 0 when every asserted check passed, 1 on a failed check, 2 on an input error.
  int exit_code() const;

  std::string to_text() const;
  /// Machine-readable form; field order is fixed so output is byte-stable.
  std::string to_json() const;
};

} // namespace contactlie
