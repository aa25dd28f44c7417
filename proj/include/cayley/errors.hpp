#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

using ElementId = std::uint32_t;

enum class ErrorKind {
  MalformedInput,
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NotAbelianInput,
  NonDivisorOrder,
  NotASubgroup,
  InternalExhaustion,
  TooLargeForOracle,
  ParameterOutOfRange,
  OutOfMemoryBudget,
  WrongOrder,
  NotClosed,
  MissingIdentity,
  MissingInverse,
};

std::string_view to_string(ErrorKind kind);

/// A failed check together with the elements that witness the failure
/// (e.g. the triple (a, b, c) for NotAssociative, the pair (a, b) for
/// NotClosed).
struct Defect {
  ErrorKind kind;
  std::vector<ElementId> witness;
  std::string detail;

  std::string message() const;
};

class GroupError : public std::runtime_error {
 public:
  explicit GroupError(Defect defect);
  GroupError(ErrorKind kind, std::string detail,
             std::vector<ElementId> witness = {});

  ErrorKind kind() const noexcept { return defect_.kind; }
  const std::vector<ElementId>& witness() const noexcept {
    return defect_.witness;
  }
  const Defect& defect() const noexcept { return defect_; }

 private:
  Defect defect_;
};

}  // namespace cayley
