#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace migsched {

/// Raised when a proven invariant fails at runtime. In exact arithmetic this
/// means an implementation bug, never a property of the input.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Collects invariant failures. A strict log throws on the first one; a
/// recording log keeps going so batch runs can report every failure.
class InvariantLog {
 public:
  explicit InvariantLog(bool strict = true) : strict_(strict) {}

  void fail(std::string_view name, const std::string& detail) {
    if (strict_) throw InvariantViolation(std::string(name), detail);
    violations_.push_back(std::string(name) + ": " + detail);
  }

  void warn(std::string_view name, const std::string& detail) {
    warnings_.push_back(std::string(name) + ": " + detail);
  }

  bool strict() const noexcept { return strict_; }
  const std::vector<std::string>& violations() const noexcept { return violations_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  bool strict_;
  std::vector<std::string> violations_;
  std::vector<std::string> warnings_;
};

}  // namespace migsched
