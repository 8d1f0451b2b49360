#pragma once

#include <stdexcept>
#include <string>

namespace chromapos {

enum class ErrorKind {
  DegreeMismatch,
  EmptyShape,
  DegreeCapExceeded,
  BadParameter,
  NoSuchVertex,
  TooLarge,
  NotATriangle,
  PreconditionViolated,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace chromapos
