#include "cayley/errors.hpp"

#include <sstream>

namespace cayley {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotAbelianInput: return "NotAbelianInput";
    case ErrorKind::NonDivisorOrder: return "NonDivisorOrder";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::InternalExhaustion: return "InternalExhaustion";
    case ErrorKind::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::OutOfMemoryBudget: return "OutOfMemoryBudget";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
  }
  return "Unknown";
}

std::string Defect::message() const {
  std::ostringstream out;
  out << to_string(kind);
  if (!witness.empty()) {
    out << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out << ", ";
      out << witness[i];
    }
    out << ')';
  }
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

GroupError::GroupError(Defect defect)
    : std::runtime_error(defect.message()), defect_(std::move(defect)) {}

GroupError::GroupError(ErrorKind kind, std::string detail,
                       std::vector<ElementId> witness)
    : GroupError(Defect{kind, std::move(witness), std::move(detail)}) {}

}  // namespace cayley
