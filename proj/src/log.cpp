#include "epu/log.hpp"

#include "epu/errors.hpp"

namespace epu::log {

level& threshold() {
  static level lv = level::warn;
  return lv;
}

std::mutex& mutex() {
  static std::mutex m;
  return m;
}

level parse_level(const std::string& name) {
  if (name == "debug") return level::debug;
  if (name == "info") return level::info;
  if (name == "warn") return level::warn;
  if (name == "error") return level::error;
  if (name == "off") return level::off;
  throw config_error("unknown log level '" + name +
                     "' (expected debug|info|warn|error|off)");
}

}  // namespace epu::log
