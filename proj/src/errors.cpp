#include "rtm/errors.hpp"

namespace rtm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateUid: return "DuplicateUid";
    case Errc::AbstractTypeInstantiation: return "AbstractTypeInstantiation";
    case Errc::AttributeKindMismatch: return "AttributeKindMismatch";
    case Errc::UnknownAttribute: return "UnknownAttribute";
    case Errc::UnknownUid: return "UnknownUid";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::ReferenceBoundsExceeded: return "ReferenceBoundsExceeded";
    case Errc::DuplicateReferenceEntry: return "DuplicateReferenceEntry";
    case Errc::ForeignMetamodel: return "ForeignMetamodel";
    case Errc::MetamodelViolation: return "MetamodelViolation";
    case Errc::InvalidState: return "InvalidState";
    case Errc::RuleConflict: return "RuleConflict";
    case Errc::UnsynchronizableChange: return "UnsynchronizableChange";
    case Errc::MalformedRule: return "MalformedRule";
    case Errc::UnknownEntity: return "UnknownEntity";
    case Errc::IllegalTransition: return "IllegalTransition";
    case Errc::UnwiredStart: return "UnwiredStart";
    case Errc::NotStarted: return "NotStarted";
    case Errc::NonEmptyContainer: return "NonEmptyContainer";
    case Errc::NoEffectorMapping: return "NoEffectorMapping";
    case Errc::StillDeployed: return "StillDeployed";
    case Errc::StillWired: return "StillWired";
    case Errc::TypeInUse: return "TypeInUse";
    case Errc::OperatorViolation: return "OperatorViolation";
    case Errc::UnknownComponentType: return "UnknownComponentType";
    case Errc::FactoryFailure: return "FactoryFailure";
    case Errc::RoleMismatch: return "RoleMismatch";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::AlreadyWired: return "AlreadyWired";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::UnknownConnector: return "UnknownConnector";
    case Errc::GuardViolation: return "GuardViolation";
    case Errc::NoAlternativeType: return "NoAlternativeType";
  }
  return "UnknownError";
}

}  // namespace rtm
