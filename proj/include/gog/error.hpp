#pragma once

#include <stdexcept>
#include <string>

namespace gog {

enum class ErrorKind {
  CompositionNonzero,
  DimensionMismatch,
  NotAssociative,
  NoIdentity,
  NoInverse,
  BadTable,
  BadStabilizer,
  Unsupported,
  Disconnected,
  NonInjectiveEdgeMap,
  BadOrientation,
  UnsupportedOpaqueVertex,
  PositiveEulerNontrivial,
  NotFiniteOrder,
  UnresolvedSubtree,
  TrivialElement,
  UnsupportedGroup,
  InvalidDimension,
  BadInput,
};

const char* to_string(ErrorKind kind);

/// Every library failure carries a kind and a message naming the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gog
