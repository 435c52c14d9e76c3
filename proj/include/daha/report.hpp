#pragma once

#include <string>
#include <utility>
#include <vector>

namespace daha {

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);
Status parse_status(const std::string& s);

struct ReportEntry {
  std::string label;
  Status status = Status::Pass;
  std::string witness;
  bool operator==(const ReportEntry&) const = default;
};

struct Report {
  std::string suite;
  std::vector<ReportEntry> entries;
  double wall_time_ms = 0;
  bool record_timing = false;
  std::vector<std::pair<std::string, std::string>> config;

  void add(const std::string& label, bool ok, const std::string& witness = {});
  void skip(const std::string& label, const std::string& witness);
  void append(const Report& other, const std::string& prefix = {});
  bool all_pass() const;
  std::size_t count(Status s) const;
  const ReportEntry* first_failure() const;

  bool operator==(const Report& o) const {
    return suite == o.suite && entries == o.entries && config == o.config &&
           record_timing == o.record_timing && (!record_timing || wall_time_ms == o.wall_time_ms);
  }
};

std::string serialize(const Report& r);
Report parse_report(const std::string& text);

}  // namespace daha
