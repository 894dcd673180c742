#pragma once

#include <stdexcept>
#include <string>

namespace evenfix {

enum class ErrorKind {
  parameter,   // caller supplied an invalid argument
  tolerance,   // a numerical tolerance audit failed
  not_closed,  // closure bound exceeded
  structural,  // an object violates an invariant it was promised to satisfy
  internal,    // consistency check inside the library failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(ErrorKind::parameter, what) {}
};

class ToleranceFault : public Error {
 public:
  explicit ToleranceFault(const std::string& what) : Error(ErrorKind::tolerance, what) {}
};

class ClosureFault : public Error {
 public:
  explicit ClosureFault(const std::string& what) : Error(ErrorKind::not_closed, what) {}
};

class StructuralFault : public Error {
 public:
  explicit StructuralFault(const std::string& what) : Error(ErrorKind::structural, what) {}
};

class InternalFault : public Error {
 public:
  explicit InternalFault(const std::string& what) : Error(ErrorKind::internal, what) {}
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace evenfix
