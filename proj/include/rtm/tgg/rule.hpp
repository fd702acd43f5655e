#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rtm/model.hpp"

namespace rtm::tgg {

enum class Domain { Source, Target };

struct PatternNode {
  std::string var;
  std::string type_name;
  bool create = false;
  int line = 0, column = 0;
};

struct PatternEdge {
  std::string owner_var;
  std::string ref_name;
  std::string child_var;
  int line = 0, column = 0;
};

struct DomainPattern {
  std::vector<PatternNode> nodes;
  std::vector<PatternEdge> edges;

  const PatternNode* find(const std::string& var) const {
    for (const auto& n : nodes)
      if (n.var == var) return &n;
    return nullptr;
  }
  std::vector<const PatternNode*> create_nodes() const {
    std::vector<const PatternNode*> out;
    for (const auto& n : nodes)
      if (n.create) out.push_back(&n);
    return out;
  }
};

/// Correspondence pattern entry: `new` entries instantiate a link between
/// the rule's created source and target elements; `ctx` entries anchor the
/// rule in existing links.
struct CorrNode {
  std::string var;
  std::string corr_type;
  bool create = false;
  std::vector<std::string> src_vars;
  std::vector<std::string> tgt_vars;
  int line = 0, column = 0;
};

/// Term of an attribute expression: either a literal or var.attr where attr
/// may be the pseudo attribute "uid".
struct ExprTerm {
  std::variant<model::Value, std::pair<std::string, std::string>> payload;

  bool is_literal() const { return payload.index() == 0; }
  const model::Value& literal() const { return std::get<0>(payload); }
  const std::pair<std::string, std::string>& var_attr() const { return std::get<1>(payload); }
};

struct Expr {
  std::vector<ExprTerm> terms;  // concatenated with '+'
};

enum class DerivationDir { Forward, Backward };

struct AttrDerivation {
  DerivationDir dir = DerivationDir::Forward;
  std::string var;
  std::string attr;  // "uid" allowed on create nodes
  Expr expr;
  int line = 0, column = 0;
};

/// `where` clause: lhs.attr == literal | rhs.attr
struct Constraint {
  std::string lhs_var;
  std::string lhs_attr;
  std::variant<model::Value, std::pair<std::string, std::string>> rhs;
  int line = 0, column = 0;
};

struct TripleRule {
  std::string name;
  DomainPattern source;
  DomainPattern target;
  std::vector<CorrNode> corr;
  std::vector<AttrDerivation> derivations;
  std::vector<Constraint> constraints;
  /// Structural creation restricted to source->target; attribute
  /// derivations tagged bwd still flow back on existing links.
  bool forward_only = false;
  /// Engine folds all matches per anchor into counted elements instead of
  /// creating one image per match.
  bool aggregate = false;
  int line = 0, column = 0;

  const CorrNode* corr_create() const {
    for (const auto& c : corr)
      if (c.create) return &c;
    return nullptr;
  }
  const DomainPattern& pattern(Domain d) const { return d == Domain::Source ? source : target; }
};

}  // namespace rtm::tgg
