#pragma once

#include <stdexcept>
#include <string>

namespace tgv {

/// Runtime error carrying a stable machine-readable name next to the human
/// message. The CLI surfaces the name so callers can match on it.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& message) {
  throw Error(name, message);
}

inline void require(bool condition, const char* name, const std::string& message) {
  if (!condition) fail(name, message);
}

}  // namespace tgv
