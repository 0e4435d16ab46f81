#include "nk6/report.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace nk6 {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Info:
      return "INFO";
  }
  return "INFO";
}

void Report::add(std::string id, Status status, Details details) {
  entries_.push_back({std::move(id), status, std::move(details)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    entries_.push_back({prefix.empty() ? e.id : prefix + "." + e.id, e.status, e.details});
  }
}

const ReportEntry* Report::find(const std::string& id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const ReportEntry& e) { return e.id == id; });
  return it == entries_.end() ? nullptr : &*it;
}

int Report::fail_count() const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.status == Status::Fail; }));
}

int Report::exit_code() const { return std::min(fail_count(), 125); }

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& e : entries_) {
    out << to_string(e.status) << ' ' << e.id;
    for (const auto& [k, v] : e.details) out << ' ' << k << '=' << v;
    out << '\n';
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.details) details[k] = v;
    checks.push_back({{"id", e.id}, {"status", to_string(e.status)}, {"details", details}});
  }
  nlohmann::ordered_json doc = {{"checks", checks}, {"failures", fail_count()}};
  return doc.dump(2) + "\n";
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace nk6
