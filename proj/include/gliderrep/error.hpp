#pragma once

#include <stdexcept>
#include <string>

namespace glrep {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
// Domain/Unsupported exit 1, Usage exit 2.
enum class ErrorKind { Domain, Usage, Unsupported };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_domain(const std::string& msg) {
  throw Error(ErrorKind::Domain, msg);
}
[[noreturn]] inline void fail_usage(const std::string& msg) {
  throw Error(ErrorKind::Usage, msg);
}
[[noreturn]] inline void fail_unsupported(const std::string& msg) {
  throw Error(ErrorKind::Unsupported, msg);
}

}  // namespace glrep
