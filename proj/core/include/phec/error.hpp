#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace phec {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void check(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// Assemble a message from streamable pieces.
template <class... Ts>
std::string msg(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace phec
