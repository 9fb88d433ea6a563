#pragma once

#include <stdexcept>
#include <string>

namespace netdual {

/// Bad user input: malformed files, violated preconditions, unknown names.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Computation refused because it exceeds a documented size cap.
class size_cap_error : public std::runtime_error {
 public:
  explicit size_cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree by theorem disagreed; indicates a bug.
class internal_check_error : public std::logic_error {
 public:
  explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw internal_check_error(what);
}

}  // namespace netdual
