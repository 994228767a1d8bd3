#pragma once

#include <stdexcept>
#include <string>

namespace epu {

// Error taxonomy, aligned with the CLI exit codes:
//   config_error  -> 2 (bad configuration / validation failure)
//   data_error    -> 3 (malformed or inconsistent input data)
//   numeric_error -> 4 (numerical failure inside an estimator)
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace epu
