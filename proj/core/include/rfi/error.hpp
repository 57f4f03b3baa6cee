#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rfi {

/// Configuration problems map to exit status 2, domain problems to 3.
enum class ErrorKind { config, domain };

/// Base error carrying a stable machine-readable code such as
/// "alpha_out_of_range". what() is "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string code, const std::string& detail)
      : Error(ErrorKind::config, std::move(code), detail) {}
};

class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& detail)
      : Error(ErrorKind::domain, std::move(code), detail) {}
};

}  // namespace rfi
