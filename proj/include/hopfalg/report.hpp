#ifndef HOPFALG_REPORT_HPP
#define HOPFALG_REPORT_HPP

#include <string>
#include <vector>

namespace hopfalg {

enum class Status { pass, fail, skip };

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string witness;
};

// Ordered list of named checks. Failures are data, never exceptions.
struct Report {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  Report() = default;
  explicit Report(std::string s) : suite(std::move(s)) {}

  void add(const std::string& name, bool ok, const std::string& witness = "") {
    checks.push_back({name, ok ? Status::pass : Status::fail, ok ? std::string() : witness});
  }
  void skip(const std::string& name, const std::string& why) {
    checks.push_back({name, Status::skip, why});
  }
  void note(const std::string& name, const std::string& value) {
    checks.push_back({name, Status::pass, value});
  }
  // Appends the checks of another report, prefixing their names.
  void absorb(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks)
      checks.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.status, c.witness});
  }

  int failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == Status::fail;
    return n;
  }
  bool ok() const { return failures() == 0; }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return &c;
    return nullptr;
  }
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
  }
}

}  // namespace hopfalg

#endif  // HOPFALG_REPORT_HPP
