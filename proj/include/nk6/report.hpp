#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nk6 {

enum class Status { Pass, Fail, Info };

const char* to_string(Status s);

using Details = std::vector<std::pair<std::string, std::string>>;

struct ReportEntry {
  std::string id;
  Status status = Status::Info;
  Details details;
};

// Ordered check results.
class Report {
 public:
  void add(std::string id, Status status, Details details = {});
  void check(std::string id, bool ok, Details details = {}) {
    add(std::move(id), ok ? Status::Pass : Status::Fail, std::move(details));
  }
  void info(std::string id, Details details = {}) { add(std::move(id), Status::Info, std::move(details)); }
  // Appends other, prefixing its ids with "prefix.".
  void append(const Report& other, const std::string& prefix = "");

  const std::vector<ReportEntry>& entries() const { return entries_; }
  const ReportEntry* find(const std::string& id) const;
  int fail_count() const;
  bool passed() const { return fail_count() == 0; }
  int exit_code() const;

  // One "STATUS id key=value ..." line per entry.
  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<ReportEntry> entries_;
};

std::string format_bool(bool b);
std::string format_double(double v);

}  // namespace nk6
