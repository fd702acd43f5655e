#include "rtm/guard.hpp"

#include "rtm/errors.hpp"

namespace rtm::guard {

namespace {
thread_local int manager_depth = 0;
thread_local int system_depth = 0;
}  // namespace

ManagerScope::ManagerScope() { ++manager_depth; }
ManagerScope::~ManagerScope() { --manager_depth; }

SystemScope::SystemScope() { ++system_depth; }
SystemScope::~SystemScope() { --system_depth; }

void check_access(const char* what) {
  if (manager_depth > 0 && system_depth == 0) {
    throw Error(Errc::GuardViolation,
                std::string("manager code accessed ") + what +
                    " directly; use the target model and session operators");
  }
}

bool manager_scope_active() { return manager_depth > 0 && system_depth == 0; }

}  // namespace rtm::guard
