#pragma once

#include <stdexcept>
#include <string>

namespace afhsim {

// Raised for malformed or out-of-range configuration values. The message
// always names the offending key or parameter.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace afhsim
