#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

// Error categories map 1:1 onto CLI exit codes.
enum class errc { parse = 1, precondition = 2, cap = 3 };

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

inline void require(bool cond, errc kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace subshift
