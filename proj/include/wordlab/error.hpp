#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

// Library errors carry a kind so callers (notably the CLI) can map them to
// exit codes without string matching.
enum class ErrorKind {
    InvalidArgument,  // bad value passed to a library call
    Parse,            // malformed textual input (morphism files, literals)
    ResourceLimit,    // request exceeds a configured budget
    Internal,         // broken invariant; always a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& message) {
    throw Error(ErrorKind::InvalidArgument, message);
}

[[noreturn]] inline void fail_parse(const std::string& message) {
    throw Error(ErrorKind::Parse, message);
}

[[noreturn]] inline void fail_resource(const std::string& message) {
    throw Error(ErrorKind::ResourceLimit, message);
}

[[noreturn]] inline void fail_internal(const std::string& message) {
    throw Error(ErrorKind::Internal, message);
}

}  // namespace wordlab
