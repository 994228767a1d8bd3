#pragma once

#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace epu::log {

enum class level : int { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

level& threshold();
std::mutex& mutex();

level parse_level(const std::string& name);  // throws config_error

template <typename... Args>
void emit(level lv, const char* tag, Args&&... args) {
  if (lv < threshold()) return;
  std::ostringstream os;
  os << "[" << tag << "] ";
  (os << ... << args);
  std::lock_guard<std::mutex> lock(mutex());
  std::cerr << os.str() << "\n";
}

template <typename... Args>
void debug(Args&&... args) {
  emit(level::debug, "debug", std::forward<Args>(args)...);
}
template <typename... Args>
void info(Args&&... args) {
  emit(level::info, "info", std::forward<Args>(args)...);
}
template <typename... Args>
void warn(Args&&... args) {
  emit(level::warn, "warn", std::forward<Args>(args)...);
}
template <typename... Args>
void error(Args&&... args) {
  emit(level::error, "error", std::forward<Args>(args)...);
}

}  // namespace epu::log
