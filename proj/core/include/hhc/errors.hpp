#pragma once

#include <stdexcept>
#include <string>

namespace hhc {

enum class ErrorKind {
  NonAssociative,
  BadUnit,
  GradingViolation,
  NonPrimeCharacteristic,
  MissingTruncation,
  DegreeMismatch,
  ShapeMismatch,
  NotACoboundary,
  NotACocycle,
  WindowExhausted,
  WindowTooDeep,
  NotExact,
  NotAugmented,
  InternalInconsistency,
  RelationNotQuadratic,
  RestrictionFailure,
  NotHomogeneous,
  ParseError,
};

const char* kind_name(ErrorKind k);

// Every module error carries a kind so the CLI can report it uniformly.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hhc
