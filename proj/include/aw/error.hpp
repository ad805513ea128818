#ifndef AW_ERROR_HPP
#define AW_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace aw {

// Hard precondition violations (capacity, mismatched spaces, non-closed
// inputs). Validation of untrusted data goes through Result instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Minimal success-or-report carrier for constructors that validate input.
template <typename T>
class Result {
 public:
  static Result success(T value) {
    Result r;
    r.value_.emplace(std::move(value));
    return r;
  }
  static Result failure(std::string message) {
    Result r;
    r.error_ = std::move(message);
    return r;
  }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw Error("Result::value on failure: " + error_);
    return *value_;
  }
  T& value() {
    if (!ok()) throw Error("Result::value on failure: " + error_);
    return *value_;
  }
  const std::string& error() const { return error_; }

 private:
  Result() = default;
  std::optional<T> value_;
  std::string error_;
};

}  // namespace aw

#endif
