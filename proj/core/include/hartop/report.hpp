#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hartop {

/// Concrete witness of a failed check.
struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one verification run. A failing report always carries the
/// first counterexample encountered.
class CheckReport {
 public:
  explicit CheckReport(std::string check) : check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }
  const std::vector<std::pair<std::string, std::string>>& params() const noexcept { return params_; }
  bool passed() const noexcept { return !counterexample_.has_value(); }
  std::size_t cases() const noexcept { return cases_; }
  const std::optional<Counterexample>& counterexample() const noexcept { return counterexample_; }

  /// Sets or overwrites a parameter; insertion order is preserved.
  CheckReport& param(const std::string& key, std::string value);
  void add_cases(std::size_t count = 1) { cases_ += count; }

  /// Records a failure; only the first counterexample is kept.
  void fail(Counterexample witness);

  /// Folds another report's cases and first failure into this one.
  void merge(const CheckReport& other);

  friend bool operator==(const CheckReport&, const CheckReport&) = default;

 private:
  std::string check_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::size_t cases_ = 0;
  std::optional<Counterexample> counterexample_;
};

/// {"check":..., "params":{...}, "status":"pass"|"fail", "cases":N,
///  "counterexample":{...}} with an optional trailing "timestamp".
std::string to_json(const CheckReport& report, const std::optional<std::string>& timestamp = {});

/// One line: "PASS check (N cases) k=v ..." plus an indented witness on failure.
std::string to_text(const CheckReport& report);

}  // namespace hartop
