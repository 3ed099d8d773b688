#pragma once

#include <stdexcept>
#include <string>

namespace relcat {

struct RelcatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompositionError : RelcatError {
  using RelcatError::RelcatError;
};
struct AmbientError : RelcatError {
  using RelcatError::RelcatError;
};
struct ShapeError : RelcatError {
  using RelcatError::RelcatError;
};
struct NotInvertibleError : RelcatError {
  using RelcatError::RelcatError;
};
struct MissingComponentError : RelcatError {
  using RelcatError::RelcatError;
};
struct UniverseNotClosedError : RelcatError {
  using RelcatError::RelcatError;
};
struct BoundsExceededError : RelcatError {
  using RelcatError::RelcatError;
};
struct NotAGroupError : RelcatError {
  using RelcatError::RelcatError;
};
struct NotProjectorsError : RelcatError {
  using RelcatError::RelcatError;
};
struct NotCommutingError : RelcatError {
  using RelcatError::RelcatError;
};
struct InvalidRelationError : RelcatError {
  using RelcatError::RelcatError;
};
struct InvalidBicomoduleError : RelcatError {
  using RelcatError::RelcatError;
};
struct BaseMismatchError : RelcatError {
  using RelcatError::RelcatError;
};
struct InducedConstraintFailure : RelcatError {
  using RelcatError::RelcatError;
};
struct FactorizationFailure : RelcatError {
  using RelcatError::RelcatError;
};
struct NotReflexiveError : RelcatError {
  using RelcatError::RelcatError;
};
struct NotTransitiveError : RelcatError {
  using RelcatError::RelcatError;
};
struct InvalidUnitMapError : RelcatError {
  using RelcatError::RelcatError;
};
struct SourceNotMonoidError : RelcatError {
  using RelcatError::RelcatError;
};
struct UniverseMismatchError : RelcatError {
  using RelcatError::RelcatError;
};
struct TheoremViolation : RelcatError {
  using RelcatError::RelcatError;
};
struct SchemaError : RelcatError {
  using RelcatError::RelcatError;
};

}  // namespace relcat
