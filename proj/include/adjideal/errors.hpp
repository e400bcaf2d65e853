#pragma once

#include <stdexcept>
#include <string>

namespace adjideal {

// Exit-code classes used by the command line front-end.
enum class ErrorKind { input = 1, hypothesis = 2, assertion = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error input_error(const std::string& code, const std::string& message) {
  return Error(ErrorKind::input, code, message);
}
inline Error hypothesis_error(const std::string& code, const std::string& message) {
  return Error(ErrorKind::hypothesis, code, message);
}
inline Error assertion_failure(const std::string& code, const std::string& message) {
  return Error(ErrorKind::assertion, code, message);
}

}  // namespace adjideal
