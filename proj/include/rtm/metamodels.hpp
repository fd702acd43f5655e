#pragma once

#include <string>
#include <vector>

#include "rtm/model.hpp"

namespace rtm::mm {

/// Component lifecycle. Legal transitions: UNDEPLOYED<->DEPLOYED and
/// DEPLOYED<->STARTED.
enum class LifecycleState { Undeployed, Deployed, Started };

const char* lifecycle_name(LifecycleState s);
LifecycleState lifecycle_from(const std::string& name);
bool transition_legal(LifecycleState from, LifecycleState to);

inline const char* kStateUndeployed = "UNDEPLOYED";
inline const char* kStateDeployed = "DEPLOYED";
inline const char* kStateStarted = "STARTED";

/// Platform-specific metamodel for EJB-like systems: a container with a
/// type layer (module/bean/interface/reference/entry types), a
/// configuration layer (deployed modules, beans, wiring) and an instance
/// layer (bean instances, calls, thrown exceptions).
model::Metamodel build_source_metamodel();

/// Platform-independent component metamodel: platform, component types with
/// provided/required interface types and property types, components with
/// interfaces, properties, connectors, and failures on provided interfaces.
model::Metamodel build_target_metamodel();

struct Violation {
  std::string code;
  std::string subject_uid;
  std::string message;
};

/// Semantic constraints beyond kernel typing: module contains >=1 bean,
/// connector endpoints have the proper roles, failures sit on provided
/// interfaces, components provide >=1 interface. Never mutates.
std::vector<Violation> check_wellformedness(const model::Model& m);

}  // namespace rtm::mm
