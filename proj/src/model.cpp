#include "rtm/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rtm/guard.hpp"

namespace rtm::model {

json value_to_json(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return nullptr;
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<bool>(v);
}

Value value_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw Error(Errc::AttributeKindMismatch, "unsupported json value " + j.dump());
}

bool value_equal(const Value& a, const Value& b) { return a == b; }

const char* change_kind_name(ChangeKind k) {
  switch (k) {
    case ChangeKind::ElementCreated: return "ElementCreated";
    case ChangeKind::ElementDeleted: return "ElementDeleted";
    case ChangeKind::AttributeSet: return "AttributeSet";
    case ChangeKind::ReferenceAdded: return "ReferenceAdded";
    case ChangeKind::ReferenceRemoved: return "ReferenceRemoved";
  }
  return "?";
}

json ChangeNotification::to_json() const {
  json j{{"kind", change_kind_name(kind)}, {"subject", subject_uid}, {"seq", sequence_no}};
  if (!feature.empty()) j["feature"] = feature;
  if (!old_value.is_null()) j["old"] = old_value;
  if (!new_value.is_null()) j["new"] = new_value;
  return j;
}

// ---------------------------------------------------------------- NodeType

NodeType& NodeType::attribute(const std::string& name, AttrKind kind,
                              std::vector<std::string> literals) {
  attributes_.push_back({name, kind, std::move(literals)});
  return *this;
}

NodeType& NodeType::reference(const std::string& name, const std::string& target,
                              bool containment, std::uint32_t lower, std::uint32_t upper) {
  references_.push_back({name, target, containment, lower, upper});
  return *this;
}

const AttributeSpec* NodeType::find_attribute(const std::string& name) const {
  for (const NodeType* t = this; t; t = t->supertype_)
    for (const auto& a : t->attributes_)
      if (a.name == name) return &a;
  return nullptr;
}

const ReferenceSpec* NodeType::find_reference(const std::string& name) const {
  for (const NodeType* t = this; t; t = t->supertype_)
    for (const auto& r : t->references_)
      if (r.name == name) return &r;
  return nullptr;
}

std::vector<const AttributeSpec*> NodeType::all_attributes() const {
  std::vector<const AttributeSpec*> out;
  for (const NodeType* t = this; t; t = t->supertype_)
    for (const auto& a : t->attributes_) out.push_back(&a);
  return out;
}

std::vector<const ReferenceSpec*> NodeType::all_references() const {
  std::vector<const ReferenceSpec*> out;
  for (const NodeType* t = this; t; t = t->supertype_)
    for (const auto& r : t->references_) out.push_back(&r);
  return out;
}

bool NodeType::is_a(const NodeType& other) const {
  for (const NodeType* t = this; t; t = t->supertype_)
    if (t == &other) return true;
  return false;
}

bool NodeType::is_a(const std::string& type_name) const {
  for (const NodeType* t = this; t; t = t->supertype_)
    if (t->name_ == type_name) return true;
  return false;
}

// ---------------------------------------------------------------- Metamodel

NodeType& Metamodel::add_type(const std::string& name, bool abstract,
                              const std::string& supertype) {
  if (by_name_.count(name))
    throw Error(Errc::MetamodelViolation, "duplicate node type " + name);
  auto t = std::make_unique<NodeType>();
  t->name_ = name;
  t->abstract_ = abstract;
  if (!supertype.empty()) {
    auto it = by_name_.find(supertype);
    if (it == by_name_.end())
      throw Error(Errc::MetamodelViolation, "unknown supertype " + supertype);
    t->supertype_ = it->second;
  }
  NodeType* raw = t.get();
  types_.push_back(std::move(t));
  by_name_[name] = raw;
  return *raw;
}

const NodeType* Metamodel::find_type(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : it->second;
}

const NodeType& Metamodel::type(const std::string& name) const {
  const NodeType* t = find_type(name);
  if (!t) throw Error(Errc::MetamodelViolation, "unknown node type " + name + " in " + name_);
  return *t;
}

std::vector<const NodeType*> Metamodel::types() const {
  std::vector<const NodeType*> out;
  for (const auto& [n, t] : by_name_) out.push_back(t);
  return out;
}

void Metamodel::validate() const {
  for (const auto& [name, t] : by_name_) {
    // acyclic supertype chain
    std::set<const NodeType*> seen;
    for (const NodeType* s = t; s; s = s->supertype_)
      if (!seen.insert(s).second)
        throw Error(Errc::MetamodelViolation, "supertype cycle at " + name);
    // attribute/reference uniqueness along the chain
    std::set<std::string> attr_names, ref_names;
    for (const auto* a : t->all_attributes()) {
      if (!attr_names.insert(a->name).second)
        throw Error(Errc::MetamodelViolation, name + ": duplicate attribute " + a->name);
      if (a->kind == AttrKind::Enumeration && a->literals.empty())
        throw Error(Errc::MetamodelViolation, name + "." + a->name + ": enumeration without literals");
    }
    for (const auto* r : t->all_references()) {
      if (!ref_names.insert(r->name).second)
        throw Error(Errc::MetamodelViolation, name + ": duplicate reference " + r->name);
      if (!find_type(r->target_type))
        throw Error(Errc::MetamodelViolation, name + "." + r->name + ": unknown target " + r->target_type);
      if (r->upper == 0 || r->lower > r->upper)
        throw Error(Errc::MetamodelViolation, name + "." + r->name + ": bad bounds");
    }
  }
}

json Metamodel::to_json() const {
  json types = json::object();
  for (const auto& [name, t] : by_name_) {
    json jt;
    jt["abstract"] = t->is_abstract();
    if (t->supertype()) jt["supertype"] = t->supertype()->name();
    json attrs = json::object();
    for (const auto& a : t->own_attributes()) {
      json ja;
      switch (a.kind) {
        case AttrKind::Text: ja["kind"] = "text"; break;
        case AttrKind::Integer: ja["kind"] = "integer"; break;
        case AttrKind::Boolean: ja["kind"] = "boolean"; break;
        case AttrKind::Enumeration: ja["kind"] = "enumeration"; ja["literals"] = a.literals; break;
      }
      attrs[a.name] = ja;
    }
    jt["attributes"] = attrs;
    json refs = json::object();
    for (const auto& r : t->own_references()) {
      json jr{{"target", r.target_type}, {"containment", r.containment}, {"lower", r.lower}};
      jr["upper"] = r.upper == kUnbounded ? json("*") : json(r.upper);
      refs[r.name] = jr;
    }
    jt["references"] = refs;
    types[name] = jt;
  }
  return json{{"metamodel", name_}, {"types", types}};
}

bool Metamodel::structurally_equal(const Metamodel& other) const {
  return to_json() == other.to_json();
}

// ---------------------------------------------------------------- ModelElement

bool ModelElement::has_attribute(const std::string& name) const {
  auto it = attrs_.find(name);
  return it != attrs_.end() && !std::holds_alternative<std::monostate>(it->second);
}

Value ModelElement::attribute(const std::string& name) const {
  auto it = attrs_.find(name);
  return it == attrs_.end() ? Value{} : it->second;
}

std::string ModelElement::text(const std::string& name) const {
  auto v = attribute(name);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return {};
}

const std::vector<std::string>& ModelElement::refs(const std::string& slot) const {
  static const std::vector<std::string> empty;
  auto it = slots_.find(slot);
  return it == slots_.end() ? empty : it->second;
}

std::string ModelElement::single_ref(const std::string& slot) const {
  const auto& v = refs(slot);
  return v.empty() ? std::string{} : v.front();
}

// ---------------------------------------------------------------- Model

Model::Model(const Metamodel& metamodel, bool guarded)
    : metamodel_(&metamodel), guarded_(guarded) {}

void Model::check_guard(const char* what) const {
  if (guarded_) guard::check_access(what);
}

void Model::emit(ChangeKind kind, const std::string& subject, const std::string& feature,
                 json old_value, json new_value) {
  ChangeNotification n{kind, subject, feature, std::move(old_value), std::move(new_value),
                       next_seq_++};
  queue_.push_back(n);
  for (auto* s : sinks_) s->on_change(n);
}

Value Model::coerce_checked(const NodeType& type, const std::string& attr,
                            const Value& v) const {
  const AttributeSpec* spec = type.find_attribute(attr);
  if (!spec)
    throw Error(Errc::UnknownAttribute, type.name() + " has no attribute " + attr);
  if (std::holds_alternative<std::monostate>(v)) return v;
  switch (spec->kind) {
    case AttrKind::Text:
      if (!std::holds_alternative<std::string>(v))
        throw Error(Errc::AttributeKindMismatch, attr + " expects text");
      break;
    case AttrKind::Integer:
      if (!std::holds_alternative<std::int64_t>(v))
        throw Error(Errc::AttributeKindMismatch, attr + " expects integer");
      break;
    case AttrKind::Boolean:
      if (!std::holds_alternative<bool>(v))
        throw Error(Errc::AttributeKindMismatch, attr + " expects boolean");
      break;
    case AttrKind::Enumeration: {
      const auto* s = std::get_if<std::string>(&v);
      if (!s || std::find(spec->literals.begin(), spec->literals.end(), *s) == spec->literals.end())
        throw Error(Errc::AttributeKindMismatch,
                    attr + " expects one of its enumeration literals");
      break;
    }
  }
  return v;
}

json Model::element_descriptor(const ModelElement& e) const {
  json attrs = json::object();
  for (const auto& [k, v] : e.attributes())
    if (!std::holds_alternative<std::monostate>(v)) attrs[k] = value_to_json(v);
  json d{{"type", e.type().name()}, {"attrs", attrs}};
  d["parent"] = e.parent_uid().empty() ? json(nullptr) : json(e.parent_uid());
  d["slot"] = e.parent_slot().empty() ? json(nullptr) : json(e.parent_slot());
  return d;
}

ModelElement& Model::create_element(const std::string& type_name, const std::string& uid,
                                    const std::map<std::string, Value>& attrs,
                                    const std::string& parent_uid,
                                    const std::string& parent_slot) {
  check_guard("model mutation");
  const NodeType& type = metamodel_->type(type_name);
  if (type.is_abstract())
    throw Error(Errc::AbstractTypeInstantiation, type_name + " is abstract");
  if (uid.empty()) throw Error(Errc::DuplicateUid, "empty uid");
  if (elements_.count(uid)) throw Error(Errc::DuplicateUid, uid);

  ModelElement* parent = nullptr;
  const ReferenceSpec* slot_spec = nullptr;
  if (!parent_uid.empty()) {
    auto it = elements_.find(parent_uid);
    if (it == elements_.end()) throw Error(Errc::UnknownUid, "parent " + parent_uid);
    parent = it->second.get();
    slot_spec = parent->type().find_reference(parent_slot);
    if (!slot_spec || !slot_spec->containment)
      throw Error(Errc::UnknownReference,
                  parent->type().name() + " has no containment reference " + parent_slot);
    if (!type.is_a(slot_spec->target_type))
      throw Error(Errc::AttributeKindMismatch,
                  parent_slot + " cannot hold a " + type_name);
    if (parent->refs(parent_slot).size() >= slot_spec->upper)
      throw Error(Errc::ReferenceBoundsExceeded, parent_uid + "." + parent_slot);
  }

  auto elem = std::make_unique<ModelElement>();
  elem->uid_ = uid;
  elem->type_ = &type;
  for (const auto& [k, v] : attrs) elem->attrs_[k] = coerce_checked(type, k, v);
  elem->parent_uid_ = parent_uid;
  elem->parent_slot_ = parent ? parent_slot : std::string{};
  ModelElement& ref = *elem;
  elements_[uid] = std::move(elem);
  if (parent)
    parent->slots_[parent_slot].push_back(uid);
  else
    roots_.push_back(uid);
  emit(ChangeKind::ElementCreated, uid, {}, nullptr, element_descriptor(ref));
  return ref;
}

std::string Model::auto_uid(const std::string& type_name) const {
  std::string prefix(1, static_cast<char>(std::tolower(type_name.front())));
  for (std::uint64_t n = 1;; ++n) {
    std::string candidate = prefix + std::to_string(n);
    if (!elements_.count(candidate)) return candidate;
  }
}

void Model::set_attribute(const std::string& uid, const std::string& name, const Value& value) {
  check_guard("model mutation");
  auto it = elements_.find(uid);
  if (it == elements_.end()) throw Error(Errc::UnknownUid, uid);
  ModelElement& e = *it->second;
  Value checked = coerce_checked(e.type(), name, value);
  Value old = e.attribute(name);
  e.attrs_[name] = checked;
  // Identity writes still notify; coalescing belongs to consumers.
  emit(ChangeKind::AttributeSet, uid, name, value_to_json(old), value_to_json(checked));
}

void Model::add_reference(const std::string& owner_uid, const std::string& slot,
                          const std::string& child_uid) {
  check_guard("model mutation");
  auto it = elements_.find(owner_uid);
  if (it == elements_.end()) throw Error(Errc::UnknownUid, owner_uid);
  ModelElement& owner = *it->second;
  const ReferenceSpec* spec = owner.type().find_reference(slot);
  if (!spec) throw Error(Errc::UnknownReference, owner.type().name() + "." + slot);
  if (spec->containment)
    throw Error(Errc::UnknownReference,
                slot + " is a containment slot; attach at creation time");
  auto cit = elements_.find(child_uid);
  if (cit == elements_.end()) throw Error(Errc::UnknownUid, child_uid);
  if (!cit->second->type().is_a(spec->target_type))
    throw Error(Errc::AttributeKindMismatch, slot + " cannot hold a " + cit->second->type().name());
  auto& list = owner.slots_[slot];
  if (std::find(list.begin(), list.end(), child_uid) != list.end())
    throw Error(Errc::DuplicateReferenceEntry, owner_uid + "." + slot + " -> " + child_uid);
  if (list.size() >= spec->upper)
    throw Error(Errc::ReferenceBoundsExceeded, owner_uid + "." + slot);
  list.push_back(child_uid);
  emit(ChangeKind::ReferenceAdded, owner_uid, slot, nullptr, child_uid);
}

void Model::remove_reference(const std::string& owner_uid, const std::string& slot,
                             const std::string& child_uid) {
  check_guard("model mutation");
  auto it = elements_.find(owner_uid);
  if (it == elements_.end()) throw Error(Errc::UnknownUid, owner_uid);
  auto& list = it->second->slots_[slot];
  auto pos = std::find(list.begin(), list.end(), child_uid);
  if (pos == list.end())
    throw Error(Errc::UnknownReference, owner_uid + "." + slot + " has no entry " + child_uid);
  list.erase(pos);
  emit(ChangeKind::ReferenceRemoved, owner_uid, slot, child_uid, nullptr);
}

std::vector<std::string> Model::children(const std::string& uid) const {
  std::vector<std::string> out;
  const ModelElement& e = get(uid);
  for (const auto* spec : e.type().all_references()) {
    if (!spec->containment) continue;
    for (const auto& c : e.refs(spec->name)) out.push_back(c);
  }
  return out;
}

std::vector<std::string> Model::subtree_postorder(const std::string& uid) const {
  std::vector<std::string> out;
  for (const auto& c : children(uid)) {
    auto sub = subtree_postorder(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  out.push_back(uid);
  return out;
}

std::vector<std::string> Model::ancestry(const std::string& uid) const {
  std::vector<std::string> out;
  const ModelElement* e = find(uid);
  while (e) {
    out.push_back(e->uid());
    e = e->parent_uid().empty() ? nullptr : find(e->parent_uid());
  }
  return out;
}

void Model::delete_single(const std::string& uid) {
  ModelElement& e = *elements_.at(uid);
  // incoming references from everything else, deterministic order
  for (const auto& [other_uid, other] : elements_) {
    if (other_uid == uid) continue;
    for (const auto* spec : other->type().all_references()) {
      if (spec->containment) continue;
      auto sit = other->slots_.find(spec->name);
      if (sit == other->slots_.end()) continue;
      while (true) {
        auto pos = std::find(sit->second.begin(), sit->second.end(), uid);
        if (pos == sit->second.end()) break;
        sit->second.erase(pos);
        emit(ChangeKind::ReferenceRemoved, other_uid, spec->name, uid, nullptr);
      }
    }
  }
  // own outgoing cross references
  for (const auto* spec : e.type().all_references()) {
    if (spec->containment) continue;
    auto sit = e.slots_.find(spec->name);
    if (sit == e.slots_.end()) continue;
    for (const auto& child : sit->second)
      emit(ChangeKind::ReferenceRemoved, uid, spec->name, child, nullptr);
    sit->second.clear();
  }
  json descriptor = element_descriptor(e);
  if (e.parent_uid_.empty()) {
    roots_.erase(std::remove(roots_.begin(), roots_.end(), uid), roots_.end());
  } else {
    auto pit = elements_.find(e.parent_uid_);
    if (pit != elements_.end()) {
      auto& slot = pit->second->slots_[e.parent_slot_];
      slot.erase(std::remove(slot.begin(), slot.end(), uid), slot.end());
    }
  }
  elements_.erase(uid);
  emit(ChangeKind::ElementDeleted, uid, {}, descriptor, nullptr);
}

void Model::delete_element(const std::string& uid) {
  check_guard("model mutation");
  if (!elements_.count(uid)) throw Error(Errc::UnknownUid, uid);
  for (const auto& victim : subtree_postorder(uid)) delete_single(victim);
}

std::vector<ChangeNotification> Model::drain_notifications() {
  std::vector<ChangeNotification> out;
  out.swap(queue_);
  return out;
}

bool Model::contains(const std::string& uid) const { return elements_.count(uid) != 0; }

const ModelElement* Model::find(const std::string& uid) const {
  check_guard("model read");
  auto it = elements_.find(uid);
  return it == elements_.end() ? nullptr : it->second.get();
}

const ModelElement& Model::get(const std::string& uid) const {
  const ModelElement* e = find(uid);
  if (!e) throw Error(Errc::UnknownUid, uid);
  return *e;
}

std::vector<const ModelElement*> Model::elements_of_type(const std::string& type_name) const {
  check_guard("model read");
  std::vector<const ModelElement*> out;
  for (const auto& [uid, e] : elements_)
    if (e->type().is_a(type_name)) out.push_back(e.get());
  return out;
}

std::vector<const ModelElement*> Model::all_elements() const {
  check_guard("model read");
  std::vector<const ModelElement*> out;
  for (const auto& [uid, e] : elements_) out.push_back(e.get());
  return out;
}

std::vector<std::pair<const ModelElement*, std::string>> Model::referrers(
    const std::string& uid) const {
  check_guard("model read");
  std::vector<std::pair<const ModelElement*, std::string>> out;
  for (const auto& [other_uid, e] : elements_) {
    for (const auto* spec : e->type().all_references()) {
      if (spec->containment) continue;
      const auto& list = e->refs(spec->name);
      if (std::find(list.begin(), list.end(), uid) != list.end())
        out.emplace_back(e.get(), spec->name);
    }
  }
  return out;
}

std::vector<std::string> Model::audit() const {
  std::vector<std::string> issues;
  // reachability from roots == index
  std::set<std::string> reached;
  std::vector<std::string> stack(roots_.begin(), roots_.end());
  while (!stack.empty()) {
    std::string uid = stack.back();
    stack.pop_back();
    if (!reached.insert(uid).second) {
      issues.push_back("containment cycle or double containment at " + uid);
      continue;
    }
    auto it = elements_.find(uid);
    if (it == elements_.end()) {
      issues.push_back("dangling containment entry " + uid);
      continue;
    }
    for (const auto& c : children(uid)) stack.push_back(c);
  }
  for (const auto& [uid, e] : elements_)
    if (!reached.count(uid)) issues.push_back("unreachable element " + uid);

  for (const auto& [uid, e] : elements_) {
    // parent/slot backlink consistency
    if (!e->parent_uid_.empty()) {
      auto pit = elements_.find(e->parent_uid_);
      if (pit == elements_.end()) {
        issues.push_back(uid + ": missing parent " + e->parent_uid_);
      } else {
        const auto& slot = pit->second->refs(e->parent_slot_);
        if (std::count(slot.begin(), slot.end(), uid) != 1)
          issues.push_back(uid + ": parent slot does not list it exactly once");
      }
    }
    for (const auto* spec : e->type().all_references()) {
      const auto& list = e->refs(spec->name);
      if (list.size() < spec->lower || list.size() > spec->upper)
        issues.push_back(uid + "." + spec->name + ": cardinality " +
                         std::to_string(list.size()) + " outside bounds");
      for (const auto& c : list) {
        auto cit = elements_.find(c);
        if (cit == elements_.end())
          issues.push_back(uid + "." + spec->name + ": dangling entry " + c);
        else if (!cit->second->type().is_a(spec->target_type))
          issues.push_back(uid + "." + spec->name + ": entry " + c + " has wrong type");
      }
    }
    for (const auto& [slot, list] : e->slots()) {
      if (!e->type().find_reference(slot))
        issues.push_back(uid + ": unknown slot " + slot);
    }
  }
  return issues;
}

json Model::element_to_json(const ModelElement& e) const {
  json j{{"uid", e.uid()}, {"type", e.type().name()}};
  json attrs = json::object();
  for (const auto& [k, v] : e.attributes())
    if (!std::holds_alternative<std::monostate>(v)) attrs[k] = value_to_json(v);
  if (!attrs.empty()) j["attrs"] = attrs;
  json refs = json::object();
  json kids = json::object();
  for (const auto* spec : e.type().all_references()) {
    auto list = e.refs(spec->name);
    if (list.empty()) continue;
    if (spec->containment) {
      std::sort(list.begin(), list.end());
      json arr = json::array();
      for (const auto& c : list) arr.push_back(element_to_json(get(c)));
      kids[spec->name] = arr;
    } else {
      std::sort(list.begin(), list.end());
      refs[spec->name] = list;
    }
  }
  if (!refs.empty()) j["refs"] = refs;
  if (!kids.empty()) j["children"] = kids;
  return j;
}

json Model::to_json() const {
  check_guard("model read");
  json elems = json::array();
  auto sorted_roots = roots_;
  std::sort(sorted_roots.begin(), sorted_roots.end());
  for (const auto& r : sorted_roots) elems.push_back(element_to_json(get(r)));
  return json{{"metamodel", metamodel_->name()}, {"elements", elems}};
}

void Model::element_from_json(const json& j, const std::string& parent_uid,
                              const std::string& parent_slot) {
  std::map<std::string, Value> attrs;
  if (j.contains("attrs"))
    for (const auto& [k, v] : j.at("attrs").items()) attrs[k] = value_from_json(v);
  create_element(j.at("type").get<std::string>(), j.at("uid").get<std::string>(), attrs,
                 parent_uid, parent_slot);
  if (j.contains("children"))
    for (const auto& [slot, arr] : j.at("children").items())
      for (const auto& c : arr) element_from_json(c, j.at("uid").get<std::string>(), slot);
}

Model Model::from_json(const Metamodel& metamodel, const json& doc) {
  if (doc.at("metamodel").get<std::string>() != metamodel.name())
    throw Error(Errc::ForeignMetamodel, "document is for metamodel " +
                                            doc.at("metamodel").get<std::string>());
  Model m(metamodel);
  for (const auto& e : doc.at("elements")) m.element_from_json(e, {}, {});
  // second pass: cross references, once every uid exists
  std::vector<const json*> stack;
  for (const auto& e : doc.at("elements")) stack.push_back(&e);
  while (!stack.empty()) {
    const json& e = *stack.back();
    stack.pop_back();
    if (e.contains("refs"))
      for (const auto& [slot, arr] : e.at("refs").items())
        for (const auto& c : arr)
          m.add_reference(e.at("uid").get<std::string>(), slot, c.get<std::string>());
    if (e.contains("children"))
      for (const auto& [slot, arr] : e.at("children").items())
        for (const auto& c : arr) stack.push_back(&c);
  }
  m.queue_.clear();
  return m;
}

Model Model::clone() const {
  Model m = from_json(*metamodel_, to_json());
  m.next_seq_ = next_seq_;
  return m;
}

void Model::attach_sink(NotificationSink* sink) { sinks_.push_back(sink); }

void Model::detach_sink(NotificationSink* sink) {
  sinks_.erase(std::remove(sinks_.begin(), sinks_.end(), sink), sinks_.end());
}

}  // namespace rtm::model
