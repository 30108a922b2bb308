#ifndef WREATH_ERROR_HPP_
#define WREATH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wreath {

// All library errors derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace wreath

#endif  // WREATH_ERROR_HPP_
