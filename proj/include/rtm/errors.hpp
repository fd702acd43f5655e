#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rtm {

enum class Errc {
  // model kernel
  DuplicateUid,
  AbstractTypeInstantiation,
  AttributeKindMismatch,
  UnknownAttribute,
  UnknownUid,
  UnknownReference,
  ReferenceBoundsExceeded,
  DuplicateReferenceEntry,
  ForeignMetamodel,
  MetamodelViolation,
  InvalidState,
  // synchronization engine
  RuleConflict,
  UnsynchronizableChange,
  MalformedRule,
  // platform simulator
  UnknownEntity,
  IllegalTransition,
  UnwiredStart,
  NotStarted,
  NonEmptyContainer,
  NoEffectorMapping,
  StillDeployed,
  StillWired,
  TypeInUse,
  // adaptation layer
  OperatorViolation,
  UnknownComponentType,
  FactoryFailure,
  RoleMismatch,
  TypeMismatch,
  AlreadyWired,
  UnknownProperty,
  UnknownConnector,
  GuardViolation,
  // manager
  NoAlternativeType,
};

const char* errc_name(Errc code);

/// Base exception for all domain errors; carries a stable error code so
/// callers can branch on the failure kind without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// A manager-facing change that falls outside the allowed operator set or
/// violates an operator precondition. The target model is untouched when
/// this is thrown.
class OperatorViolation : public Error {
 public:
  OperatorViolation(Errc code, std::string attempted, const std::string& reason)
      : Error(code, attempted + ": " + reason), attempted_(std::move(attempted)) {}

  const std::string& attempted_operator() const { return attempted_; }

 private:
  std::string attempted_;
};

}  // namespace rtm
