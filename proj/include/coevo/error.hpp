#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coevo {

// Failure categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
  Internal = 1,
  MissingInput = 2,
  Output = 3,
  Validation = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& what) {
  return Error(ErrorKind::Validation, what);
}

inline Error line_error(std::size_t line, const std::string& what) {
  return Error(ErrorKind::Validation, "line " + std::to_string(line) + ": " + what);
}

inline Error missing_input(const std::string& what) {
  return Error(ErrorKind::MissingInput, what);
}

inline Error output_error(const std::string& what) {
  return Error(ErrorKind::Output, what);
}

}  // namespace coevo
