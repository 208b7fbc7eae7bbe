#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gw {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string expected;
  std::string got;
};

/// Outcome of a validator suite. Checks accumulate; nothing aborts early.
class CheckReport {
 public:
  explicit CheckReport(std::string suite) : suite_(std::move(suite)) {}

  void record(std::string id, bool passed, std::string expected, std::string got) {
    checks_.push_back({std::move(id), passed, std::move(expected), std::move(got)});
  }

  /// Records equality of two printable values.
  template <typename T>
  void expect_equal(std::string id, const T& expected, const T& got) {
    record(std::move(id), expected == got, stringify(expected), stringify(got));
  }

  void absorb(const CheckReport& other) {
    for (const auto& c : other.checks_) checks_.push_back({other.suite_ + "/" + c.id, c.passed, c.expected, c.got});
  }

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::size_t passed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.passed ? 1 : 0;
    return n;
  }
  std::size_t failed_count() const { return checks_.size() - passed_count(); }
  bool ok() const { return failed_count() == 0; }

  /// One line per failure plus a summary line; `verbose` also lists passes.
  void print(std::ostream& os, bool verbose = false) const {
    for (const auto& c : checks_) {
      if (!c.passed || verbose) {
        os << (c.passed ? "PASS " : "FAIL ") << suite_ << "/" << c.id;
        if (!c.passed) os << "  expected=" << c.expected << " got=" << c.got;
        os << '\n';
      }
    }
    os << suite_ << ": " << passed_count() << "/" << checks_.size() << " checks passed\n";
  }

 private:
  template <typename T>
  static std::string stringify(const T& v) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      return std::string(v);
    } else if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else {
      return v.str();
    }
  }

  std::string suite_;
  std::vector<CheckResult> checks_;
};

}  // namespace gw
