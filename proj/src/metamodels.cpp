#include "rtm/metamodels.hpp"

#include <algorithm>

namespace rtm::mm {

using model::AttrKind;
using model::kUnbounded;
using model::Metamodel;
using model::Model;
using model::ModelElement;

const char* lifecycle_name(LifecycleState s) {
  switch (s) {
    case LifecycleState::Undeployed: return kStateUndeployed;
    case LifecycleState::Deployed: return kStateDeployed;
    case LifecycleState::Started: return kStateStarted;
  }
  return "?";
}

LifecycleState lifecycle_from(const std::string& name) {
  if (name == kStateUndeployed) return LifecycleState::Undeployed;
  if (name == kStateDeployed) return LifecycleState::Deployed;
  if (name == kStateStarted) return LifecycleState::Started;
  throw Error(Errc::AttributeKindMismatch, "not a lifecycle state: " + name);
}

bool transition_legal(LifecycleState from, LifecycleState to) {
  switch (from) {
    case LifecycleState::Undeployed: return to == LifecycleState::Deployed;
    case LifecycleState::Deployed:
      return to == LifecycleState::Started || to == LifecycleState::Undeployed;
    case LifecycleState::Started: return to == LifecycleState::Deployed;
  }
  return false;
}

namespace {
const std::vector<std::string> kLifecycleLiterals{kStateUndeployed, kStateDeployed,
                                                  kStateStarted};
}

Metamodel build_source_metamodel() {
  Metamodel mm("ejb");

  auto& container = mm.add_type("EjbContainer");
  container.attribute("name", AttrKind::Text)
      .reference("moduleTypes", "EjbModuleType", true)
      .reference("modules", "EjbModule", true)
      .reference("connectors", "EjbConnector", true);

  // type layer
  auto& module_type = mm.add_type("EjbModuleType");
  module_type.attribute("name", AttrKind::Text)
      .reference("beanTypes", "EnterpriseBeanType", true, 1);
  auto& bean_type = mm.add_type("EnterpriseBeanType", /*abstract=*/true);
  bean_type.attribute("name", AttrKind::Text)
      .reference("entryTypes", "SimpleEnvironmentEntryType", true)
      .reference("referenceTypes", "EjbReferenceType", true);
  mm.add_type("SessionBeanType", false, "EnterpriseBeanType")
      .reference("interfaceTypes", "EjbInterfaceType", true);
  mm.add_type("MessageDrivenBeanType", false, "EnterpriseBeanType");
  mm.add_type("EjbInterfaceType").attribute("name", AttrKind::Text);
  // A reference type names the interface type it requires via its name
  // attribute; no cross-association is needed.
  mm.add_type("EjbReferenceType").attribute("name", AttrKind::Text);
  mm.add_type("SimpleEnvironmentEntryType").attribute("name", AttrKind::Text);

  // configuration layer
  auto& module = mm.add_type("EjbModule");
  module.attribute("name", AttrKind::Text)
      .attribute("state", AttrKind::Enumeration, kLifecycleLiterals)
      .reference("beans", "EnterpriseBean", true, 1)
      .reference("type", "EjbModuleType", false, 1, 1);
  auto& bean = mm.add_type("EnterpriseBean", /*abstract=*/true);
  bean.attribute("name", AttrKind::Text)
      .reference("entries", "SimpleEnvironmentEntry", true)
      .reference("references", "EjbReference", true)
      .reference("instances", "BeanInstance", true)
      .reference("type", "EnterpriseBeanType", false, 1, 1);
  mm.add_type("SessionBean", false, "EnterpriseBean")
      .reference("interfaces", "EjbInterface", true);
  mm.add_type("MessageDrivenBean", false, "EnterpriseBean");
  mm.add_type("EjbInterface")
      .attribute("name", AttrKind::Text)
      .reference("type", "EjbInterfaceType", false, 1, 1);
  mm.add_type("EjbReference")
      .attribute("name", AttrKind::Text)
      .reference("type", "EjbReferenceType", false, 1, 1);
  mm.add_type("SimpleEnvironmentEntry")
      .attribute("name", AttrKind::Text)
      .attribute("value", AttrKind::Text)
      .reference("type", "SimpleEnvironmentEntryType", false, 1, 1);
  mm.add_type("EjbConnector")
      .attribute("name", AttrKind::Text)
      .reference("reference", "EjbReference", false, 1, 1)
      .reference("interface", "EjbInterface", false, 1, 1);

  // instance layer
  mm.add_type("BeanInstance")
      .attribute("name", AttrKind::Text)
      .reference("receivedCalls", "Call", true);
  mm.add_type("Call")
      .attribute("name", AttrKind::Text)
      .reference("via", "EjbInterface", false, 1, 1)
      .reference("exceptions", "ThrownException", true);
  mm.add_type("ThrownException").attribute("name", AttrKind::Text);

  mm.validate();
  return mm;
}

Metamodel build_target_metamodel() {
  Metamodel mm("component");

  mm.add_type("ComponentPlatform")
      .attribute("name", AttrKind::Text)
      .reference("componentTypes", "ComponentType", true)
      .reference("components", "Component", true)
      .reference("connectors", "Connector", true);

  mm.add_type("ComponentType")
      .attribute("name", AttrKind::Text)
      .reference("providedInterfaceTypes", "InterfaceType", true)
      .reference("requiredInterfaceTypes", "InterfaceType", true)
      .reference("propertyTypes", "PropertyType", true);
  mm.add_type("InterfaceType").attribute("name", AttrKind::Text);
  mm.add_type("PropertyType").attribute("name", AttrKind::Text);

  mm.add_type("Component")
      .attribute("name", AttrKind::Text)
      .attribute("state", AttrKind::Enumeration, kLifecycleLiterals)
      .reference("providedInterfaces", "Interface", true, 1)
      .reference("requiredInterfaces", "Interface", true)
      .reference("properties", "Property", true)
      .reference("type", "ComponentType", false, 1, 1);
  mm.add_type("Interface")
      .attribute("name", AttrKind::Text)
      .reference("type", "InterfaceType", false, 1, 1)
      .reference("failures", "Failure", true);
  mm.add_type("Property")
      .attribute("name", AttrKind::Text)
      .attribute("value", AttrKind::Text)
      .reference("type", "PropertyType", false, 1, 1);
  mm.add_type("Connector")
      .attribute("name", AttrKind::Text)
      .reference("required", "Interface", false, 1, 1)
      .reference("provided", "Interface", false, 1, 1);
  mm.add_type("Failure")
      .attribute("name", AttrKind::Text)
      .attribute("exception_type", AttrKind::Text)
      .attribute("count", AttrKind::Integer);

  mm.validate();
  return mm;
}

namespace {

bool in_slot_of_parent(const Model& m, const ModelElement& e, const std::string& slot) {
  if (e.parent_uid().empty()) return false;
  return e.parent_slot() == slot;
}

void check_source(const Model& m, std::vector<Violation>& out) {
  for (const auto* mt : m.elements_of_type("EjbModuleType"))
    if (mt->refs("beanTypes").empty())
      out.push_back({"ModuleTypeWithoutBeanType", mt->uid(),
                     "module type " + mt->uid() + " declares no bean type"});
  for (const auto* mod : m.elements_of_type("EjbModule"))
    if (mod->refs("beans").empty())
      out.push_back({"ModuleWithoutBean", mod->uid(),
                     "module " + mod->uid() + " must contain at least one bean"});
  for (const auto* c : m.elements_of_type("EjbConnector")) {
    const auto& ref = c->refs("reference");
    const auto& ifc = c->refs("interface");
    if (ref.size() != 1 || ifc.size() != 1)
      out.push_back({"BadConnectorEndpoints", c->uid(),
                     "connector " + c->uid() + " must link exactly one reference and one interface"});
  }
  for (const auto* call : m.elements_of_type("Call"))
    if (call->refs("via").size() != 1)
      out.push_back({"CallWithoutInterface", call->uid(),
                     "call " + call->uid() + " must target exactly one interface"});
}

void check_target(const Model& m, std::vector<Violation>& out) {
  for (const auto* c : m.elements_of_type("Component"))
    if (c->refs("providedInterfaces").empty())
      out.push_back({"ComponentWithoutInterface", c->uid(),
                     "component " + c->uid() + " must provide at least one interface"});
  for (const auto* con : m.elements_of_type("Connector")) {
    const auto& req = con->refs("required");
    const auto& prov = con->refs("provided");
    if (req.size() != 1 || prov.size() != 1) {
      out.push_back({"BadConnectorEndpoints", con->uid(),
                     "connector " + con->uid() + " must link exactly one required and one provided interface"});
      continue;
    }
    const ModelElement* r = m.find(req.front());
    const ModelElement* p = m.find(prov.front());
    if (!r || !in_slot_of_parent(m, *r, "requiredInterfaces"))
      out.push_back({"BadConnectorEndpoints", con->uid(),
                     "connector " + con->uid() + " required end is not a required interface"});
    if (!p || !in_slot_of_parent(m, *p, "providedInterfaces"))
      out.push_back({"BadConnectorEndpoints", con->uid(),
                     "connector " + con->uid() + " provided end is not a provided interface"});
  }
  for (const auto* f : m.elements_of_type("Failure")) {
    const ModelElement* owner = f->parent_uid().empty() ? nullptr : m.find(f->parent_uid());
    if (!owner || !in_slot_of_parent(m, *owner, "providedInterfaces"))
      out.push_back({"FailureNotOnProvidedInterface", f->uid(),
                     "failure " + f->uid() + " must sit on a provided interface"});
  }
}

}  // namespace

std::vector<Violation> check_wellformedness(const Model& m) {
  std::vector<Violation> out;
  if (m.metamodel().name() == "ejb")
    check_source(m, out);
  else if (m.metamodel().name() == "component")
    check_target(m, out);
  else
    throw Error(Errc::ForeignMetamodel, "cannot check models of metamodel " + m.metamodel().name());
  return out;
}

}  // namespace rtm::mm
