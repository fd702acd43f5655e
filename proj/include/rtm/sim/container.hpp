#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtm/errors.hpp"
#include "rtm/metamodels.hpp"

namespace rtm::sim {

using json = nlohmann::json;

enum class BeanKind { Session, MessageDriven };

struct EntryTemplate {
  std::string uid, name;
};
struct ReferenceTemplate {
  std::string uid, name;  // the name of the interface type it requires
};
struct InterfaceTemplate {
  std::string uid, name;
};
struct BeanTemplate {
  std::string uid, name;
  BeanKind kind = BeanKind::Session;
  std::vector<EntryTemplate> entries;
  std::vector<ReferenceTemplate> references;
  std::vector<InterfaceTemplate> interfaces;
};
struct ModuleTypeTemplate {
  std::string uid, name;
  std::vector<BeanTemplate> beans;

  json to_json() const;
  static ModuleTypeTemplate from_json(const json& j);
};

enum class EventKind {
  ModuleTypeInstalled,
  ModuleInstantiated,
  ModuleStateChanged,
  EntryValueChanged,
  Wired,
  Unwired,
  CallCompleted,
  ModuleRemoved,
  ModuleTypeRemoved,
};

const char* event_kind_name(EventKind k);

/// Sensor event. Effector-driven changes carry the batch id that caused
/// them so the causal-connection adapter can drop its own echoes.
struct SystemEvent {
  EventKind kind = EventKind::ModuleTypeInstalled;
  std::string uid;       // module type / module / entry / wiring / call
  std::string aux_uid;   // module type on instantiation, interface on calls
  std::string name;
  std::string value;     // entry value
  std::string old_state, new_state;
  std::vector<std::string> instance_uids;  // spawned or destroyed instances
  std::string instance_uid;                // callee of a call
  std::optional<std::string> exception;
  std::uint64_t timestamp = 0;
  std::optional<std::uint64_t> echo_batch;

  json to_json() const;
  static SystemEvent from_json(const json& j);
};

enum class CommandKind {
  InstantiateModule,
  Deploy,
  Start,
  Stop,
  Undeploy,
  SetEntry,
  Wire,
  Unwire,
  RemoveModule,
  RemoveModuleType,
};

const char* command_kind_name(CommandKind k);

struct EffectorCommand {
  CommandKind kind = CommandKind::Deploy;
  std::string uid;       // module / module type / entry / connector
  std::string aux_uid;   // module type (instantiate), reference (wire)
  std::string aux2_uid;  // interface (wire)
  std::string name;      // module or connector name
  std::string value;     // entry value

  json to_json() const;
};

/// Canonical execution order: stops first, then unwiring, undeploys and
/// removals, then new modules, deploys, wiring, parameter values, and
/// finally starts. Stable by uid within a class.
int command_rank(CommandKind k);
void canonical_sort(std::vector<EffectorCommand>& commands);

struct CommandBatch {
  std::uint64_t batch_id = 0;
  std::vector<EffectorCommand> commands;
  std::uint64_t derived_from_lo = 0, derived_from_hi = 0;

  json to_json() const;
};

/// Simulated managed system: a component container with installed module
/// types, deployed modules, scripted calls, and sensor/effector surfaces.
class Container {
 public:
  explicit Container(std::string uid = "container", std::string name = "webshop");

  const std::string& uid() const { return uid_; }
  const std::string& name() const { return name_; }
  bool empty() const { return types_.empty() && modules_.empty(); }

  // effectors ---------------------------------------------------------
  void install_module_type(const ModuleTypeTemplate& t);
  void instantiate_module(const std::string& module_uid, const std::string& type_uid,
                          const std::string& name);
  void deploy(const std::string& module_uid);
  void start(const std::string& module_uid);
  void stop(const std::string& module_uid);
  void undeploy(const std::string& module_uid);
  void set_entry(const std::string& entry_uid, const std::string& value);
  void wire(const std::string& connector_uid, const std::string& name,
            const std::string& reference_uid, const std::string& interface_uid);
  void unwire(const std::string& connector_uid);
  void remove_module(const std::string& module_uid);
  void remove_module_type(const std::string& type_uid);

  void execute(const EffectorCommand& cmd);

  // sensors -----------------------------------------------------------
  /// Scripted call stimulus on a provided interface of a started module.
  SystemEvent inject_call(const std::string& module_uid, const std::string& interface_name,
                          const std::optional<std::string>& exception);

  std::vector<SystemEvent> drain_events();
  std::size_t queued_event_count() const;

  /// Effector-driven changes within this scope are tagged as echoes.
  class EchoScope {
   public:
    EchoScope(Container& c, std::uint64_t batch_id) : c_(c) { c_.echo_batch_ = batch_id; }
    ~EchoScope() { c_.echo_batch_.reset(); }

   private:
    Container& c_;
  };
  std::uint64_t next_batch_id() { return ++batch_seq_; }

  json snapshot() const;
  void restore(const json& snap);

 private:
  struct EntryState {
    std::string uid, name, value, template_uid;
  };
  struct PartState {
    std::string uid, name, template_uid;
  };
  struct BeanState {
    std::string uid, name, template_uid;
    BeanKind kind = BeanKind::Session;
    std::vector<EntryState> entries;
    std::vector<PartState> references;
    std::vector<PartState> interfaces;
    std::vector<std::string> instances;
  };
  struct ModuleState {
    std::string uid, name, type_uid;
    mm::LifecycleState state = mm::LifecycleState::Undeployed;
    std::vector<BeanState> beans;
  };
  struct WiringState {
    std::string uid, name, reference_uid, interface_uid;
  };
  struct CallState {
    std::string uid, interface_uid, instance_uid;
    std::optional<std::string> exception;
  };

  void emit(SystemEvent e);
  ModuleState& module_checked(const std::string& uid);
  bool reference_wired(const std::string& reference_uid) const;
  void check_guard() const;

  std::string uid_, name_;
  std::map<std::string, ModuleTypeTemplate> types_;
  std::map<std::string, ModuleState> modules_;
  std::map<std::string, WiringState> wirings_;
  std::map<std::string, CallState> calls_;
  std::vector<SystemEvent> events_;
  mutable std::mutex events_mutex_;
  std::uint64_t event_ts_ = 0;
  std::uint64_t call_seq_ = 0;
  std::uint64_t instance_seq_ = 0;
  std::uint64_t batch_seq_ = 0;
  std::optional<std::uint64_t> echo_batch_;
};

/// Part uids of an instantiated module are derived from the template part
/// names: "<module uid>/<part name>". Shared by the container and the
/// source-model factory so both sides of the causal connection agree.
std::string part_uid(const std::string& module_uid, const std::string& part_name);

}  // namespace rtm::sim
