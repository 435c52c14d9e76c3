#include "daha/report.hpp"

#include <json.hpp>

#include "daha/algebra.hpp"

namespace daha {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw Error(ErrorCode::Syntax, "unknown status '" + s + "'");
}

void Report::add(const std::string& label, bool ok, const std::string& witness) {
  ReportEntry e{label, ok ? Status::Pass : Status::Fail, ok ? std::string() : witness};
  if (!ok && e.witness.empty()) e.witness = "0";
  entries.push_back(std::move(e));
}

void Report::skip(const std::string& label, const std::string& witness) {
  entries.push_back({label, Status::Skipped, witness});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries) entries.push_back({prefix + e.label, e.status, e.witness});
}

bool Report::all_pass() const { return count(Status::Pass) == entries.size(); }

std::size_t Report::count(Status s) const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.status == s;
  return k;
}

const ReportEntry* Report::first_failure() const {
  for (const auto& e : entries)
    if (e.status == Status::Fail) return &e;
  return nullptr;
}

std::string serialize(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json item;
    item["label"] = e.label;
    item["status"] = status_name(e.status);
    if (!e.witness.empty()) item["witness"] = e.witness;
    list.push_back(item);
  }
  j["identities"] = list;
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"skipped", r.count(Status::Skipped)}};
  if (r.record_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Syntax, std::string("report is not valid JSON: ") + ex.what());
  }
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& [k, v] : j.at("config").items()) r.config.emplace_back(k, v.get<std::string>());
  for (const auto& item : j.at("identities")) {
    ReportEntry e;
    e.label = item.at("label").get<std::string>();
    e.status = parse_status(item.at("status").get<std::string>());
    if (item.contains("witness")) e.witness = item["witness"].get<std::string>();
    r.entries.push_back(std::move(e));
  }
  if (j.contains("wall_time_ms")) {
    r.record_timing = true;
    r.wall_time_ms = j["wall_time_ms"].get<double>();
  }
  return r;
}

}  // namespace daha
