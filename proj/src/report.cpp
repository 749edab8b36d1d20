#include "grcat/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace grcat {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void Report::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
}

void Report::merge(const Report& other) {
  if (!other.header.empty()) {
    header += header.empty() ? other.header : "\n" + other.header;
  }
  for (Check c : other.checks) {
    c.id = other.suite + "/" + c.id;
    checks.push_back(std::move(c));
  }
}

void CheckBuilder::violation(std::string witness) {
  ++check_.evaluated;
  if (check_.violations++ == 0) check_.witness = std::move(witness);
}

void CheckBuilder::skip(std::string reason) {
  skipped_ = true;
  check_.witness = std::move(reason);
}

Check CheckBuilder::done() && {
  if (check_.violations > 0) {
    check_.status = CheckStatus::fail;
  } else if (skipped_) {
    check_.status = CheckStatus::skipped;
  } else {
    check_.status = CheckStatus::pass;
  }
  return std::move(check_);
}

std::string report_to_json(const Report& report, int indent) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  if (!report.header.empty()) doc["header"] = report.header;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = std::string(to_string(c.status));
    e["evaluated"] = c.evaluated;
    e["violations"] = c.violations;
    e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  doc["checks"] = checks;
  doc["summary"] = {{"pass", report.count(CheckStatus::pass)},
                    {"fail", report.count(CheckStatus::fail)},
                    {"skipped", report.count(CheckStatus::skipped)}};
  return doc.dump(indent);
}

std::string report_to_table(const Report& report) {
  std::size_t id_width = 5;
  for (const auto& c : report.checks) id_width = std::max(id_width, c.id.size());

  std::ostringstream os;
  os << "suite: " << report.suite << "\n";
  if (!report.header.empty()) os << "note: " << report.header << "\n";
  os << std::left;
  os.width(static_cast<std::streamsize>(id_width + 2));
  os << "check";
  os << "status   evaluated  witness\n";
  for (const auto& c : report.checks) {
    os.width(static_cast<std::streamsize>(id_width + 2));
    os << c.id;
    os.width(9);
    os << to_string(c.status);
    os.width(11);
    os << c.evaluated;
    os << c.witness << "\n";
  }
  os << "summary: " << report.count(CheckStatus::pass) << " pass, "
     << report.count(CheckStatus::fail) << " fail, " << report.count(CheckStatus::skipped)
     << " skipped\n";
  return os.str();
}

}  // namespace grcat
