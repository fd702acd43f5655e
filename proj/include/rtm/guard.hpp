#pragma once

namespace rtm::guard {

// Managers must interface with the system exclusively through the target
// model and the adaptation operators. Guarded objects (source model,
// container) refuse access while a ManagerScope is active unless the call
// arrives through a SystemScope (session operator, sync engine, adapter).

class ManagerScope {
 public:
  ManagerScope();
  ~ManagerScope();
  ManagerScope(const ManagerScope&) = delete;
  ManagerScope& operator=(const ManagerScope&) = delete;
};

class SystemScope {
 public:
  SystemScope();
  ~SystemScope();
  SystemScope(const SystemScope&) = delete;
  SystemScope& operator=(const SystemScope&) = delete;
};

/// Throws Error(GuardViolation) when called from manager code that is not
/// going through an authorized system component.
void check_access(const char* what);

bool manager_scope_active();

}  // namespace rtm::guard
