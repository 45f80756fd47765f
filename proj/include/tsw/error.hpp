#pragma once

#include <stdexcept>
#include <string>

namespace tsw {

enum class ErrorKind {
  DivisionByZero,
  InfiniteKernel,
  HalfIntegerExponent,
  NonRationalReassembly,
  NotDivisible,
  NotInDomain,
  DirectionNotPrimitive,
  BadParity,
  ParityMismatch,
  NotSplit,
  IncompleteTable,
  TrivialCharacter,
  NotPositiveB1,
  NotSymmetric,
  NeedsDirection,
  InfiniteEnumeration,
  MalformedPD,
  DegenerateDiagram,
  TorresInconsistent,
  ResourceLimit,
  InvalidInput,
  Overflow,
  Assertion,
};

const char* to_string(ErrorKind kind);

// Input problems map to exit code 2, broken invariants to exit code 3.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }
  // what() without the kind prefix
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void ensure(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace tsw
