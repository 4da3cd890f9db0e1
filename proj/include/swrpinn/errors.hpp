#pragma once

#include <stdexcept>
#include <string>

namespace swrpinn {

/// Caller passed a value outside the documented domain of an operation.
class input_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An API was used out of contract (wrong call order, mismatched sizes).
class usage_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A run configuration is structurally or numerically inadmissible.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what, std::string field = {})
        : std::runtime_error(field.empty() ? what : field + ": " + what),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// Floating-point failure (division by zero, overflow, non-finite loss).
/// Carries the name of the operation or the parameter index that failed.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what, std::string op = {})
        : std::runtime_error(op.empty() ? what : what + " [" + op + "]"),
          op_(std::move(op)) {}
    const std::string& op() const { return op_; }

  private:
    std::string op_;
};

} // namespace swrpinn
