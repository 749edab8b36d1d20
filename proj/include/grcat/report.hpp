#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace grcat {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

/// One named property evaluated over all of its instances. A failing check
/// carries the first counterexample found as its witness.
struct Check {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
};

struct Report {
  std::string suite;
  std::string header;
  std::vector<Check> checks;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::fail) == 0; }
  const Check* find(std::string_view id) const;

  /// Sorts checks by id. Suites call this before returning.
  void finalize();
  /// Appends another report's checks (used for --suite all).
  void merge(const Report& other);
};

/// Accumulates instances of a single check.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string id) { check_.id = std::move(id); }

  void ok() { ++check_.evaluated; }
  void violation(std::string witness);
  /// Marks the check as not applicable; `reason` becomes the witness.
  void skip(std::string reason);
  /// Records an expectation: `holds` or else `witness` (built lazily).
  template <typename F>
  void expect(bool holds, F&& witness) {
    if (holds) {
      ok();
    } else {
      violation(witness());
    }
  }

  Check done() &&;

 private:
  Check check_;
  bool skipped_ = false;
};

std::string report_to_json(const Report& report, int indent = 2);
std::string report_to_table(const Report& report);

}  // namespace grcat
