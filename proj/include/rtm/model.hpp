#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rtm/errors.hpp"

namespace rtm::model {

using json = nlohmann::json;

/// Attribute value. monostate means "unset".
using Value = std::variant<std::monostate, std::string, std::int64_t, bool>;

json value_to_json(const Value& v);
Value value_from_json(const json& j);
bool value_equal(const Value& a, const Value& b);

enum class AttrKind { Text, Integer, Boolean, Enumeration };

struct AttributeSpec {
  std::string name;
  AttrKind kind = AttrKind::Text;
  std::vector<std::string> literals;  // Enumeration only
};

inline constexpr std::uint32_t kUnbounded = 0xffffffffu;

struct ReferenceSpec {
  std::string name;
  std::string target_type;
  bool containment = false;
  std::uint32_t lower = 0;
  std::uint32_t upper = kUnbounded;
};

class Metamodel;

/// A node type of a metamodel: named, optionally abstract, with single
/// inheritance and attribute/reference declarations.
class NodeType {
 public:
  const std::string& name() const { return name_; }
  bool is_abstract() const { return abstract_; }
  const NodeType* supertype() const { return supertype_; }

  NodeType& attribute(const std::string& name, AttrKind kind,
                      std::vector<std::string> literals = {});
  NodeType& reference(const std::string& name, const std::string& target, bool containment,
                      std::uint32_t lower = 0, std::uint32_t upper = kUnbounded);

  /// Walks the supertype chain.
  const AttributeSpec* find_attribute(const std::string& name) const;
  const ReferenceSpec* find_reference(const std::string& name) const;
  std::vector<const AttributeSpec*> all_attributes() const;
  std::vector<const ReferenceSpec*> all_references() const;

  bool is_a(const NodeType& other) const;
  bool is_a(const std::string& type_name) const;

  const std::vector<AttributeSpec>& own_attributes() const { return attributes_; }
  const std::vector<ReferenceSpec>& own_references() const { return references_; }

 private:
  friend class Metamodel;
  std::string name_;
  bool abstract_ = false;
  const NodeType* supertype_ = nullptr;
  std::vector<AttributeSpec> attributes_;
  std::vector<ReferenceSpec> references_;
};

/// Immutable-after-construction set of node types. validate() must pass
/// before models are instantiated against it.
class Metamodel {
 public:
  explicit Metamodel(std::string name) : name_(std::move(name)) {}
  Metamodel(const Metamodel&) = delete;
  Metamodel& operator=(const Metamodel&) = delete;
  Metamodel(Metamodel&&) = default;
  Metamodel& operator=(Metamodel&&) = default;

  const std::string& name() const { return name_; }

  NodeType& add_type(const std::string& name, bool abstract = false,
                     const std::string& supertype = {});

  const NodeType* find_type(const std::string& name) const;
  const NodeType& type(const std::string& name) const;
  std::vector<const NodeType*> types() const;

  /// Checks name uniqueness, acyclic supertype chains, attribute/reference
  /// uniqueness along inheritance chains, enum literal presence and
  /// reference target resolution. Throws Error(MetamodelViolation).
  void validate() const;

  json to_json() const;
  bool structurally_equal(const Metamodel& other) const;

 private:
  std::string name_;
  std::vector<std::unique_ptr<NodeType>> types_;
  std::map<std::string, NodeType*> by_name_;
};

enum class ChangeKind { ElementCreated, ElementDeleted, AttributeSet, ReferenceAdded, ReferenceRemoved };

const char* change_kind_name(ChangeKind k);

struct ChangeNotification {
  ChangeKind kind;
  std::string subject_uid;
  std::string feature;  // attribute or reference name; empty for element events
  json old_value;       // null when absent
  json new_value;
  std::uint64_t sequence_no = 0;

  json to_json() const;
};

class NotificationSink {
 public:
  virtual ~NotificationSink() = default;
  virtual void on_change(const ChangeNotification& n) = 0;
};

class Model;

class ModelElement {
 public:
  const std::string& uid() const { return uid_; }
  const NodeType& type() const { return *type_; }
  const std::string& parent_uid() const { return parent_uid_; }    // empty for roots
  const std::string& parent_slot() const { return parent_slot_; }

  bool has_attribute(const std::string& name) const;
  Value attribute(const std::string& name) const;  // unset -> monostate
  std::string text(const std::string& name) const; // convenience, "" when unset
  const std::vector<std::string>& refs(const std::string& slot) const;
  std::string single_ref(const std::string& slot) const;  // "" when empty

  const std::map<std::string, Value>& attributes() const { return attrs_; }
  const std::map<std::string, std::vector<std::string>>& slots() const { return slots_; }

 private:
  friend class Model;
  std::string uid_;
  const NodeType* type_ = nullptr;
  std::string parent_uid_;
  std::string parent_slot_;
  std::map<std::string, Value> attrs_;
  std::map<std::string, std::vector<std::string>> slots_;
};

/// Typed attributed graph instance with uid identity, containment forest,
/// cross references and a queueable change-notification mechanism.
///
/// Single-writer: all mutations happen on one control thread. Drained
/// notification lists are value snapshots, safe to hand elsewhere.
class Model {
 public:
  explicit Model(const Metamodel& metamodel, bool guarded = false);

  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  Model(Model&&) = default;

  const Metamodel& metamodel() const { return *metamodel_; }

  ModelElement& create_element(const std::string& type_name, const std::string& uid,
                               const std::map<std::string, Value>& attrs = {},
                               const std::string& parent_uid = {},
                               const std::string& parent_slot = {});

  /// Deterministic uid: lowercase initial of the type name + smallest free
  /// positive counter.
  std::string auto_uid(const std::string& type_name) const;

  void set_attribute(const std::string& uid, const std::string& name, const Value& value);
  void add_reference(const std::string& owner_uid, const std::string& slot,
                     const std::string& child_uid);
  void remove_reference(const std::string& owner_uid, const std::string& slot,
                        const std::string& child_uid);

  /// Removes the containment subtree, children before parents. Emits one
  /// ElementDeleted per removed element plus ReferenceRemoved for every
  /// reference entry that disappears (incoming and outgoing).
  void delete_element(const std::string& uid);

  std::vector<ChangeNotification> drain_notifications();

  bool contains(const std::string& uid) const;
  const ModelElement* find(const std::string& uid) const;
  const ModelElement& get(const std::string& uid) const;
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& roots() const { return roots_; }

  /// All elements whose type is or inherits from type_name, uid order.
  std::vector<const ModelElement*> elements_of_type(const std::string& type_name) const;
  std::vector<const ModelElement*> all_elements() const;  // uid order

  /// Elements holding a reference to uid, with the slot names (uid order).
  std::vector<std::pair<const ModelElement*, std::string>> referrers(const std::string& uid) const;

  std::vector<std::string> children(const std::string& uid) const;
  std::vector<std::string> subtree_postorder(const std::string& uid) const;
  /// ancestor chain including uid itself, upward order
  std::vector<std::string> ancestry(const std::string& uid) const;

  /// Structural invariants: index = containment-reachable set, containment
  /// forest, attribute conformance, reference cardinality bounds (checked
  /// here, at quiescent points only). Returns human-readable violations.
  std::vector<std::string> audit() const;

  json to_json() const;  // canonical: nesting by containment, uid-sorted
  static Model from_json(const Metamodel& metamodel, const json& doc);
  Model clone() const;

  void attach_sink(NotificationSink* sink);
  void detach_sink(NotificationSink* sink);

  std::uint64_t sequence_no() const { return next_seq_; }

 private:
  void emit(ChangeKind kind, const std::string& subject, const std::string& feature,
            json old_value, json new_value);
  void check_guard(const char* what) const;
  Value coerce_checked(const NodeType& type, const std::string& attr, const Value& v) const;
  json element_descriptor(const ModelElement& e) const;
  void delete_single(const std::string& uid);
  json element_to_json(const ModelElement& e) const;
  void element_from_json(const json& j, const std::string& parent_uid,
                         const std::string& parent_slot);

  const Metamodel* metamodel_;
  bool guarded_ = false;
  std::map<std::string, std::unique_ptr<ModelElement>> elements_;  // uid order
  std::vector<std::string> roots_;
  std::uint64_t next_seq_ = 1;
  std::vector<ChangeNotification> queue_;
  std::vector<NotificationSink*> sinks_;
};

}  // namespace rtm::model
