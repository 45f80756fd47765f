#include "tsw/error.hpp"

namespace tsw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InfiniteKernel: return "InfiniteKernel";
    case ErrorKind::HalfIntegerExponent: return "HalfIntegerExponent";
    case ErrorKind::NonRationalReassembly: return "NonRationalReassembly";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::DirectionNotPrimitive: return "DirectionNotPrimitive";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::NotPositiveB1: return "NotPositiveB1";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NeedsDirection: return "NeedsDirection";
    case ErrorKind::InfiniteEnumeration: return "InfiniteEnumeration";
    case ErrorKind::MalformedPD: return "MalformedPD";
    case ErrorKind::DegenerateDiagram: return "DegenerateDiagram";
    case ErrorKind::TorresInconsistent: return "TorresInconsistent";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Assertion: return "Assertion";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible:
    case ErrorKind::NonRationalReassembly:
    case ErrorKind::NotInDomain:
    case ErrorKind::Overflow:
    case ErrorKind::Assertion:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tsw
