#include "rtm/tgg/engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rtm/guard.hpp"

namespace rtm::tgg {

using model::ChangeKind;
using model::ChangeNotification;
using model::Model;
using model::ModelElement;
using model::Value;

const char* direction_name(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

nlohmann::json SyncReport::to_json() const {
  nlohmann::json fired = nlohmann::json::array();
  for (const auto& f : rules_fired) fired.push_back({{"rule", f.rule}, {"subjects", f.subject_uids}});
  return {{"direction", direction_name(direction)},
          {"rules_fired", fired},
          {"created", created},
          {"deleted", deleted},
          {"updated", updated}};
}

SyncEngine::SyncEngine(Model& source, Model& target) : source_(source), target_(target) {
  source_.attach_sink(&src_queue_);
  target_.attach_sink(&tgt_queue_);
}

SyncEngine::~SyncEngine() {
  source_.detach_sink(&src_queue_);
  target_.detach_sink(&tgt_queue_);
}

// ------------------------------------------------------------ registration

namespace {

bool pattern_connected(const DomainPattern& p) {
  if (p.nodes.size() <= 1) return true;
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& e : p.edges) {
    adj[e.owner_var].insert(e.child_var);
    adj[e.child_var].insert(e.owner_var);
  }
  std::set<std::string> seen;
  std::vector<std::string> stack{p.nodes.front().var};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (const auto& n : adj[v]) stack.push_back(n);
  }
  return seen.size() >= p.nodes.size();
}

}  // namespace

void SyncEngine::register_rules(std::vector<TripleRule> rules) {
  if (!src_queue_.items.empty() || !tgt_queue_.items.empty())
    throw Error(Errc::InvalidState, "cannot replace rules while changes are pending");
  std::set<std::string> names;
  for (const auto& r : rules) {
    if (!names.insert(r.name).second)
      throw Error(Errc::MalformedRule, "duplicate rule name " + r.name);
    std::size_t creates = 0;
    for (const auto& c : r.corr)
      if (c.create) ++creates;
    if (creates != 1)
      throw Error(Errc::MalformedRule,
                  r.name + ": a rule needs exactly one created correspondence node");
    const CorrNode* cc = r.corr_create();
    if (cc->src_vars.empty())
      throw Error(Errc::MalformedRule, r.name + ": correspondence lists no source elements");
    if (cc->tgt_vars.empty() && !r.target.create_nodes().empty())
      throw Error(Errc::MalformedRule, r.name + ": correspondence lists no target elements");
    auto check_side = [&](const std::vector<std::string>& vars, const DomainPattern& p,
                          bool want_create) {
      for (const auto& v : vars) {
        const PatternNode* n = p.find(v);
        if (!n) throw Error(Errc::MalformedRule, r.name + ": corr references unknown variable " + v);
        if (n->create != want_create)
          throw Error(Errc::MalformedRule, r.name + ": corr variable " + v +
                                               (want_create ? " must be created" : " must be context"));
      }
    };
    for (const auto& c : r.corr) {
      check_side(c.src_vars, r.source, c.create);
      check_side(c.tgt_vars, r.target, c.create);
    }
    if (!pattern_connected(r.source) || !pattern_connected(r.target))
      throw Error(Errc::MalformedRule, r.name + ": pattern is not connected");
    for (const auto& d : r.derivations) {
      Domain dom = domain_of_var(r, d.var);
      const DomainPattern& p = r.pattern(dom);
      const PatternNode* n = p.find(d.var);
      if (!n) throw Error(Errc::MalformedRule, r.name + ": derivation assigns unknown variable " + d.var);
      if (!n->create)
        throw Error(Errc::MalformedRule, r.name + ": derivations may only assign created elements");
      Domain expected = d.dir == DerivationDir::Forward ? Domain::Target : Domain::Source;
      if (dom != expected)
        throw Error(Errc::MalformedRule, r.name + ": derivation direction does not match side of " + d.var);
    }
    if (r.aggregate) {
      if (r.target.create_nodes().size() != 1 || r.source.create_nodes().size() != 1)
        throw Error(Errc::MalformedRule,
                    r.name + ": aggregate rules fold one created source element into one "
                             "counted target element");
      if (r.forward_only == false)
        throw Error(Errc::MalformedRule, r.name + ": aggregate rules are forward-only");
    }
  }
  rules_ = std::move(rules);
}

// ------------------------------------------------------------ small helpers

Domain SyncEngine::domain_of_var(const TripleRule& rule, const std::string& var) const {
  if (rule.source.find(var)) return Domain::Source;
  if (rule.target.find(var)) return Domain::Target;
  throw Error(Errc::MalformedRule, rule.name + ": unknown variable " + var);
}

bool SyncEngine::origin_claimed(Direction dir, const std::string& uid) const {
  return dir == Direction::Forward ? corr_.source_claimed(uid) : corr_.target_claimed(uid);
}

std::string SyncEngine::origin_claiming_rule(Direction dir, const std::string& uid) const {
  return dir == Direction::Forward ? corr_.claiming_rule_of_source(uid)
                                   : corr_.claiming_rule_of_target(uid);
}

const TripleRule* SyncEngine::rule_named(const std::string& name) const {
  for (const auto& r : rules_)
    if (r.name == name) return &r;
  return nullptr;
}

SyncEngine::Bindings SyncEngine::link_bindings(const TripleRule& rule,
                                               const CorrespondenceLink& l) const {
  Bindings b;
  const CorrNode* cc = rule.corr_create();
  for (std::size_t i = 0; i < cc->src_vars.size() && i < l.source_uids.size(); ++i)
    b[cc->src_vars[i]] = l.source_uids[i];
  for (std::size_t i = 0; i < cc->tgt_vars.size() && i < l.target_uids.size(); ++i)
    b[cc->tgt_vars[i]] = l.target_uids[i];
  return b;
}

model::Value SyncEngine::eval_term(const ExprTerm& t, const TripleRule& rule,
                                   const Bindings& b) const {
  if (t.is_literal()) return t.literal();
  const auto& [var, attr] = t.var_attr();
  auto it = b.find(var);
  if (it == b.end())
    throw Error(Errc::MalformedRule, rule.name + ": expression variable " + var + " is unbound");
  const Model& m = model_of(domain_of_var(rule, var));
  const ModelElement& e = m.get(it->second);
  if (attr == "uid") return Value(e.uid());
  return e.attribute(attr);
}

namespace {
std::string stringify(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* bl = std::get_if<bool>(&v)) return *bl ? "true" : "false";
  return {};
}
}  // namespace

model::Value SyncEngine::eval_expr(const Expr& e, const TripleRule& rule,
                                   const Bindings& b) const {
  if (e.terms.size() == 1) return eval_term(e.terms.front(), rule, b);
  std::string out;
  for (const auto& t : e.terms) out += stringify(eval_term(t, rule, b));
  return Value(out);
}

// ------------------------------------------------------------ matching

bool SyncEngine::corr_context_holds(const TripleRule& rule, const Bindings& b) const {
  for (const auto& c : rule.corr) {
    if (c.create) continue;
    std::vector<std::string> src, tgt;
    for (const auto& v : c.src_vars) {
      auto it = b.find(v);
      if (it == b.end()) return false;
      src.push_back(it->second);
    }
    for (const auto& v : c.tgt_vars) {
      auto it = b.find(v);
      if (it == b.end()) return false;
      tgt.push_back(it->second);
    }
    bool found = false;
    for (const auto* l : corr_.by_source(src.empty() ? std::string{} : src.front())) {
      if (l->corr_type == c.corr_type && l->source_uids == src && l->target_uids == tgt) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool SyncEngine::constraints_hold(const TripleRule& rule, const Bindings& b) const {
  for (const auto& c : rule.constraints) {
    auto it = b.find(c.lhs_var);
    if (it == b.end())
      throw Error(Errc::MalformedRule,
                  rule.name + ": constraint variable " + c.lhs_var + " not matchable");
    const Model& m = model_of(domain_of_var(rule, c.lhs_var));
    Value lhs = c.lhs_attr == "uid" ? Value(it->second) : m.get(it->second).attribute(c.lhs_attr);
    Value rhs;
    if (c.rhs.index() == 0) {
      rhs = std::get<0>(c.rhs);
    } else {
      const auto& [rv, ra] = std::get<1>(c.rhs);
      auto rit = b.find(rv);
      if (rit == b.end())
        throw Error(Errc::MalformedRule, rule.name + ": constraint variable " + rv + " not matchable");
      const Model& rm = model_of(domain_of_var(rule, rv));
      rhs = ra == "uid" ? Value(rit->second) : rm.get(rit->second).attribute(ra);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<SyncEngine::Bindings> SyncEngine::find_matches(const TripleRule& rule, Direction dir,
                                                           const MatchOptions& opt) const {
  // Nodes to bind: origin side completely; destination context nodes; in
  // validation mode also destination create nodes.
  struct Slot {
    const PatternNode* node;
    Domain domain;
    bool is_origin_create;
  };
  Domain odom = origin_domain(dir);
  Domain ddom = odom == Domain::Source ? Domain::Target : Domain::Source;
  std::vector<Slot> slots;
  for (const auto& n : origin_pattern(rule, dir).nodes) slots.push_back({&n, odom, n.create});
  for (const auto& n : dest_pattern(rule, dir).nodes) {
    if (n.create && !opt.bind_dest_creates) continue;
    slots.push_back({&n, ddom, false});
  }

  // Every edge whose endpoints are both bound must hold.
  auto edges_of = [&](Domain d) -> const std::vector<PatternEdge>& {
    return d == Domain::Source ? rule.source.edges : rule.target.edges;
  };

  std::vector<Bindings> results;
  Bindings current;
  if (opt.pre_bound) current = *opt.pre_bound;

  std::function<void(std::size_t)> descend = [&](std::size_t idx) {
    if (idx == slots.size()) {
      if (!corr_context_holds(rule, current)) return;
      if (!constraints_hold(rule, current)) return;
      if (opt.create_seed) {
        bool seeded = false;
        for (const auto& n : origin_pattern(rule, dir).nodes)
          if (n.create && opt.create_seed->count(current.at(n.var))) seeded = true;
        if (!seeded) return;
      }
      results.push_back(current);
      return;
    }
    const Slot& slot = slots[idx];
    const Model& m = model_of(slot.domain);

    auto try_bind = [&](const std::string& uid) {
      const ModelElement* e = m.find(uid);
      if (!e || !e->type().is_a(slot.node->type_name)) return;
      // injective within a domain
      for (const auto& n : rule.pattern(slot.domain).nodes) {
        auto it = current.find(n.var);
        if (it != current.end() && n.var != slot.node->var && it->second == uid) return;
      }
      if (slot.is_origin_create && opt.claim_filter &&
          origin_claiming_rule(dir, uid) == rule.name)
        return;  // already exploited by this rule
      // check edges against already-bound endpoints
      for (const auto& e2 : edges_of(slot.domain)) {
        const bool owner_is_me = e2.owner_var == slot.node->var;
        const bool child_is_me = e2.child_var == slot.node->var;
        if (!owner_is_me && !child_is_me) continue;
        auto oit = owner_is_me ? current.end() : current.find(e2.owner_var);
        auto cit = child_is_me ? current.end() : current.find(e2.child_var);
        if (owner_is_me && cit != current.end()) {
          const auto& list = m.get(uid).refs(e2.ref_name);
          if (std::find(list.begin(), list.end(), cit->second) == list.end()) return;
        } else if (child_is_me && oit != current.end()) {
          const auto& list = m.get(oit->second).refs(e2.ref_name);
          if (std::find(list.begin(), list.end(), uid) == list.end()) return;
        }
      }
      current[slot.node->var] = uid;
      descend(idx + 1);
      current.erase(slot.node->var);
    };

    auto pre = current.find(slot.node->var);
    if (pre != current.end()) {
      // pre-bound: verify in place without rebinding
      std::string uid = pre->second;
      const ModelElement* e = m.find(uid);
      if (!e || !e->type().is_a(slot.node->type_name)) return;
      for (const auto& e2 : edges_of(slot.domain)) {
        auto oit = current.find(e2.owner_var);
        auto cit = current.find(e2.child_var);
        if (oit == current.end() || cit == current.end()) continue;
        if (e2.owner_var != slot.node->var && e2.child_var != slot.node->var) continue;
        const auto& list = m.get(oit->second).refs(e2.ref_name);
        if (std::find(list.begin(), list.end(), cit->second) == list.end()) return;
      }
      descend(idx + 1);
      return;
    }
    for (const auto* e : m.elements_of_type(slot.node->type_name)) try_bind(e->uid());
  };
  descend(0);

  // deterministic application order: sort by the origin create uid tuple
  auto key = [&](const Bindings& b) {
    std::vector<std::string> k;
    for (const auto& n : origin_pattern(rule, dir).nodes)
      if (n.create) k.push_back(b.at(n.var));
    for (const auto& [v, u] : b) k.push_back(u);
    return k;
  };
  std::stable_sort(results.begin(), results.end(),
                   [&](const Bindings& a, const Bindings& b) { return key(a) < key(b); });
  return results;
}

// ------------------------------------------------------------ application

bool SyncEngine::apply_match(const TripleRule& rule, Direction dir, const Bindings& match,
                             SyncReport& report) {
  // claim checks on the origin side
  std::vector<std::string> origin_creates;
  for (const auto& n : origin_pattern(rule, dir).nodes) {
    if (!n.create) continue;
    const std::string& uid = match.at(n.var);
    std::string claimer = origin_claiming_rule(dir, uid);
    if (claimer == rule.name) return false;  // already exploited
    if (!claimer.empty())
      throw Error(Errc::RuleConflict, "rules " + claimer + " and " + rule.name +
                                          " both claim element " + uid);
    origin_creates.push_back(uid);
  }

  Model& dest = dest_model(dir);
  const DomainPattern& dpat = dest_pattern(rule, dir);
  const model::Metamodel& dmm = dest.metamodel();
  DerivationDir want = dir == Direction::Forward ? DerivationDir::Forward : DerivationDir::Backward;

  Bindings b = match;
  // create destination elements, containment parents first
  std::vector<const PatternNode*> todo = dpat.create_nodes();
  std::vector<const PatternNode*> done;
  while (!todo.empty()) {
    bool progressed = false;
    for (auto it = todo.begin(); it != todo.end();) {
      const PatternNode* n = *it;
      // containment edge making n a child
      const PatternEdge* parent_edge = nullptr;
      bool parent_ready = true;
      for (const auto& e : dpat.edges) {
        if (e.child_var != n->var) continue;
        const PatternNode* owner = dpat.find(e.owner_var);
        const model::NodeType* ot = dmm.find_type(owner->type_name);
        const model::ReferenceSpec* spec = ot ? ot->find_reference(e.ref_name) : nullptr;
        if (spec && spec->containment) {
          parent_edge = &e;
          parent_ready = b.count(e.owner_var) != 0;
        }
      }
      if (!parent_ready) {
        ++it;
        continue;
      }
      // uid and initial attributes from derivations
      std::string uid;
      std::map<std::string, Value> attrs;
      for (const auto& d : rule.derivations) {
        if (d.dir != want || d.var != n->var) continue;
        if (d.attr == "uid")
          uid = stringify(eval_expr(d.expr, rule, b));
        else
          attrs[d.attr] = eval_expr(d.expr, rule, b);
      }
      if (uid.empty()) uid = dest.auto_uid(n->type_name);
      std::string parent_uid, parent_slot;
      if (parent_edge) {
        parent_uid = b.at(parent_edge->owner_var);
        parent_slot = parent_edge->ref_name;
      }
      dest.create_element(n->type_name, uid, attrs, parent_uid, parent_slot);
      report.created.push_back(uid);
      b[n->var] = uid;
      done.push_back(n);
      it = todo.erase(it);
      progressed = true;
    }
    if (!progressed)
      throw Error(Errc::MalformedRule, rule.name + ": cyclic containment among created elements");
  }

  // cross references touching created elements
  for (const auto& e : dpat.edges) {
    const PatternNode* owner = dpat.find(e.owner_var);
    const PatternNode* child = dpat.find(e.child_var);
    if (!owner->create && !child->create) continue;
    const model::NodeType* ot = dmm.find_type(owner->type_name);
    const model::ReferenceSpec* spec = ot ? ot->find_reference(e.ref_name) : nullptr;
    if (spec && spec->containment) continue;  // handled at creation
    dest.add_reference(b.at(e.owner_var), e.ref_name, b.at(e.child_var));
  }

  // correspondence link
  const CorrNode* cc = rule.corr_create();
  CorrespondenceLink link;
  link.corr_type = cc->corr_type;
  link.rule = rule.name;
  for (const auto& v : cc->src_vars) link.source_uids.push_back(b.at(v));
  for (const auto& v : cc->tgt_vars) link.target_uids.push_back(b.at(v));
  corr_.add(std::move(link));

  report.rules_fired.push_back({rule.name, origin_creates});
  return true;
}

bool SyncEngine::validate_application(const TripleRule& rule, Direction dir,
                                      const CorrespondenceLink& l) const {
  Bindings pre = link_bindings(rule, l);
  for (const auto& [var, uid] : pre) {
    const Model& m = model_of(domain_of_var(rule, var));
    if (!m.contains(uid)) return false;
  }
  MatchOptions opt;
  opt.claim_filter = false;
  opt.bind_dest_creates = true;
  opt.pre_bound = &pre;
  return !find_matches(rule, dir, opt).empty();
}

// ------------------------------------------------------------ phases

void SyncEngine::repair_deletions(Direction dir, SyncReport& report) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto* l : corr_.links()) {
      const TripleRule* rule = rule_named(l->rule);
      if (rule && rule->aggregate) continue;  // reconciled separately
      bool origin_gone = false;
      for (const auto& uid : link_origin_uids(*l, dir))
        if (!origin_model(dir).contains(uid)) origin_gone = true;
      bool dest_gone = false;
      for (const auto& uid : link_dest_uids(*l, dir))
        if (!dest_model(dir).contains(uid)) dest_gone = true;
      if (!origin_gone && !dest_gone) continue;
      for (const auto& uid : link_dest_uids(*l, dir)) {
        if (dest_model(dir).contains(uid)) {
          dest_model(dir).delete_element(uid);
          report.deleted.push_back(uid);
        }
      }
      corr_.retire(l->id);
      changed = true;
      break;  // link list invalidated; rescan
    }
  }
}

void SyncEngine::revalidate_links(Direction dir, const std::set<std::string>& touched,
                                  SyncReport& report) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto* l : corr_.links()) {
      const TripleRule* rule = rule_named(l->rule);
      if (!rule || rule->aggregate) continue;
      bool is_touched = false;
      for (const auto& uid : link_origin_uids(*l, dir))
        if (touched.count(uid)) is_touched = true;
      if (!is_touched) continue;
      if (validate_application(*rule, dir, *l)) continue;
      for (const auto& uid : link_dest_uids(*l, dir)) {
        if (dest_model(dir).contains(uid)) {
          dest_model(dir).delete_element(uid);
          report.deleted.push_back(uid);
        }
      }
      corr_.retire(l->id);
      changed = true;
      break;
    }
    if (changed) repair_deletions(dir, report);  // cascades may strand other links
  }
}

void SyncEngine::update_attributes(Direction dir, const std::set<std::string>& touched,
                                   SyncReport& report) {
  DerivationDir want = dir == Direction::Forward ? DerivationDir::Forward : DerivationDir::Backward;
  std::set<std::string> updated;
  for (const auto* l : corr_.links()) {
    const TripleRule* rule = rule_named(l->rule);
    if (!rule || rule->aggregate) continue;
    bool is_touched = false;
    for (const auto& uid : link_origin_uids(*l, dir))
      if (touched.count(uid)) is_touched = true;
    if (!is_touched) continue;
    Bindings b = link_bindings(*rule, *l);
    for (const auto& d : rule->derivations) {
      if (d.dir != want || d.attr == "uid") continue;
      auto vit = b.find(d.var);
      if (vit == b.end()) continue;
      Model& m = const_cast<Model&>(model_of(domain_of_var(*rule, d.var)));
      if (!m.contains(vit->second)) continue;
      Value next;
      try {
        next = eval_expr(d.expr, *rule, b);
      } catch (const Error&) {
        continue;  // context no longer resolvable; revalidation handles it
      }
      if (!(m.get(vit->second).attribute(d.attr) == next)) {
        m.set_attribute(vit->second, d.attr, next);
        updated.insert(vit->second);
      }
    }
  }
  report.updated.insert(report.updated.end(), updated.begin(), updated.end());
}

void SyncEngine::run_new_matches(Direction dir, const std::set<std::string>* seed,
                                 SyncReport& report) {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const auto& rule : rules_) {
      if (rule.aggregate) continue;
      if (dir == Direction::Backward && rule.forward_only) continue;
      MatchOptions opt;
      opt.create_seed = seed;
      auto matches = find_matches(rule, dir, opt);
      for (const auto& m : matches)
        if (apply_match(rule, dir, m, report)) progressed = true;
    }
  }
}

void SyncEngine::reconcile_aggregates(SyncReport& report) {
  for (const auto& rule : rules_) {
    if (!rule.aggregate) continue;
    const PatternNode* src_create = rule.source.create_nodes().front();
    const PatternNode* tgt_create = rule.target.create_nodes().front();

    // uid derivation of the counted element defines the aggregation key
    const AttrDerivation* uid_deriv = nullptr;
    for (const auto& d : rule.derivations)
      if (d.dir == DerivationDir::Forward && d.var == tgt_create->var && d.attr == "uid")
        uid_deriv = &d;

    MatchOptions opt;
    opt.claim_filter = false;
    auto matches = find_matches(rule, Direction::Forward, opt);

    struct Group {
      std::vector<std::string> contributors;
      Bindings representative;
    };
    std::map<std::string, Group> groups;
    for (const auto& m : matches) {
      std::string key = uid_deriv ? stringify(eval_expr(uid_deriv->expr, rule, m))
                                  : target_.auto_uid(tgt_create->type_name);
      auto& g = groups[key];
      g.contributors.push_back(m.at(src_create->var));
      if (g.representative.empty()) g.representative = m;
    }
    for (auto& [key, g] : groups) std::sort(g.contributors.begin(), g.contributors.end());

    std::map<std::string, const CorrespondenceLink*> existing;
    for (const auto* l : corr_.links())
      if (l->rule == rule.name && !l->target_uids.empty()) existing[l->target_uids.front()] = l;

    // create or update counted elements
    for (const auto& [key, g] : groups) {
      auto it = existing.find(key);
      if (it != existing.end()) {
        const CorrespondenceLink* l = it->second;
        if (target_.contains(key)) {
          Value count = Value(static_cast<std::int64_t>(g.contributors.size()));
          if (!(target_.get(key).attribute("count") == count)) {
            target_.set_attribute(key, "count", count);
            report.updated.push_back(key);
          }
          if (l->source_uids != g.contributors) corr_.replace_sources(l->id, g.contributors);
          continue;
        }
        corr_.retire(l->id);
        existing.erase(it);
      }
      // containment parent from the representative match
      std::string parent_uid, parent_slot;
      for (const auto& e : rule.target.edges) {
        if (e.child_var != tgt_create->var) continue;
        const PatternNode* owner = rule.target.find(e.owner_var);
        const model::NodeType* ot = target_.metamodel().find_type(owner->type_name);
        const model::ReferenceSpec* spec = ot ? ot->find_reference(e.ref_name) : nullptr;
        if (spec && spec->containment) {
          parent_uid = g.representative.at(e.owner_var);
          parent_slot = e.ref_name;
        }
      }
      std::map<std::string, Value> attrs;
      for (const auto& d : rule.derivations) {
        if (d.dir != DerivationDir::Forward || d.var != tgt_create->var || d.attr == "uid")
          continue;
        attrs[d.attr] = eval_expr(d.expr, rule, g.representative);
      }
      attrs["count"] = Value(static_cast<std::int64_t>(g.contributors.size()));
      target_.create_element(tgt_create->type_name, key, attrs, parent_uid, parent_slot);
      report.created.push_back(key);
      CorrespondenceLink link;
      link.corr_type = rule.corr_create()->corr_type;
      link.rule = rule.name;
      link.source_uids = g.contributors;
      link.target_uids = {key};
      corr_.add(std::move(link));
      report.rules_fired.push_back({rule.name, g.contributors});
    }

    // drop counted elements whose contributors vanished
    for (const auto& [key, l] : existing) {
      if (groups.count(key)) continue;
      if (target_.contains(key)) {
        target_.delete_element(key);
        report.deleted.push_back(key);
      }
      corr_.retire(l->id);
    }
  }
}

// ------------------------------------------------------------ prescan

void SyncEngine::prescan_backward(const std::vector<ChangeNotification>& pending) const {
  std::set<std::string> created, deleted;
  for (const auto& n : pending) {
    if (n.kind == ChangeKind::ElementCreated) created.insert(n.subject_uid);
    if (n.kind == ChangeKind::ElementDeleted) {
      if (!created.erase(n.subject_uid)) deleted.insert(n.subject_uid);
    }
  }
  std::vector<const PatternNode*> creatable;
  for (const auto& r : rules_) {
    if (r.forward_only || r.aggregate) continue;
    for (const auto* n : r.target.create_nodes()) creatable.push_back(n);
  }
  auto covered = [&](const ModelElement& e) {
    for (const auto* n : creatable)
      if (e.type().is_a(n->type_name)) return true;
    return false;
  };
  for (const auto& n : pending) {
    switch (n.kind) {
      case ChangeKind::ElementCreated: {
        const ModelElement* e = target_.find(n.subject_uid);
        if (!e) break;  // net zero
        if (corr_.target_claimed(n.subject_uid)) break;
        if (!covered(*e))
          throw Error(Errc::UnsynchronizableChange,
                      "created " + e->type().name() + " " + n.subject_uid +
                          " has no applicable backward rule");
        break;
      }
      case ChangeKind::AttributeSet: {
        if (created.count(n.subject_uid) || !target_.contains(n.subject_uid)) break;
        auto links = corr_.by_target(n.subject_uid);
        bool ok = false;
        for (const auto* l : links) {
          const TripleRule* rule = rule_named(l->rule);
          if (!rule) continue;
          const CorrNode* cc = rule->corr_create();
          for (const auto& d : rule->derivations) {
            if (d.dir != DerivationDir::Backward) continue;
            for (const auto& term : d.expr.terms) {
              if (term.is_literal()) continue;
              const auto& [var, attr] = term.var_attr();
              if (attr != n.feature) continue;
              for (std::size_t i = 0; i < cc->tgt_vars.size() && i < l->target_uids.size(); ++i)
                if (cc->tgt_vars[i] == var && l->target_uids[i] == n.subject_uid) ok = true;
            }
          }
        }
        if (!ok)
          throw Error(Errc::UnsynchronizableChange,
                      "attribute " + n.feature + " of " + n.subject_uid +
                          " cannot be synchronized backward");
        break;
      }
      case ChangeKind::ReferenceAdded:
        if (!created.count(n.subject_uid))
          throw Error(Errc::UnsynchronizableChange,
                      "reference change on existing element " + n.subject_uid +
                          " is not a synchronizable adaptation");
        break;
      case ChangeKind::ReferenceRemoved: {
        std::string child = n.old_value.is_string() ? n.old_value.get<std::string>() : "";
        if (deleted.count(n.subject_uid) || deleted.count(child) ||
            !target_.contains(n.subject_uid))
          break;
        throw Error(Errc::UnsynchronizableChange,
                    "reference removal on surviving element " + n.subject_uid +
                        " is not a synchronizable adaptation");
      }
      case ChangeKind::ElementDeleted:
        break;
    }
  }
}

void SyncEngine::postscan_backward(const std::vector<ChangeNotification>& pending) const {
  for (const auto& n : pending) {
    if (n.kind != ChangeKind::ElementCreated) continue;
    if (!target_.contains(n.subject_uid)) continue;
    if (!corr_.target_claimed(n.subject_uid))
      throw Error(Errc::UnsynchronizableChange,
                  "created element " + n.subject_uid +
                      " found no backward rule match; models may be out of sync");
  }
}

// ------------------------------------------------------------ entry points

void SyncEngine::transform_batch(Direction dir) {
  guard::SystemScope scope;
  if (dest_model(dir).size() != 0 || !corr_.empty())
    throw Error(Errc::InvalidState,
                "batch transformation needs an empty destination model and correspondence model");
  Queue& oq = dir == Direction::Forward ? src_queue_ : tgt_queue_;
  Queue& dq = dir == Direction::Forward ? tgt_queue_ : src_queue_;
  oq.items.clear();
  MuteScope mute(dq);
  SyncReport report;
  report.direction = dir;
  run_new_matches(dir, nullptr, report);
  if (dir == Direction::Forward) reconcile_aggregates(report);
}

SyncReport SyncEngine::synchronize(Direction dir) {
  guard::SystemScope scope;
  SyncReport report;
  report.direction = dir;
  Queue& oq = dir == Direction::Forward ? src_queue_ : tgt_queue_;
  Queue& dq = dir == Direction::Forward ? tgt_queue_ : src_queue_;
  if (oq.items.empty()) return report;
  if (dir == Direction::Backward) prescan_backward(oq.items);

  std::vector<ChangeNotification> pending;
  pending.swap(oq.items);
  MuteScope mute(dq);

  std::set<std::string> touched;
  for (const auto& n : pending) {
    touched.insert(n.subject_uid);
    if (n.new_value.is_string()) touched.insert(n.new_value.get<std::string>());
    if (n.old_value.is_string()) touched.insert(n.old_value.get<std::string>());
  }

  repair_deletions(dir, report);
  revalidate_links(dir, touched, report);
  update_attributes(dir, touched, report);
  run_new_matches(dir, &touched, report);
  if (dir == Direction::Forward) reconcile_aggregates(report);
  if (dir == Direction::Backward) postscan_backward(pending);
  return report;
}

std::size_t SyncEngine::pending_count(Direction dir) const {
  return (dir == Direction::Forward ? src_queue_ : tgt_queue_).items.size();
}

void SyncEngine::clear_pending(Direction dir) {
  (dir == Direction::Forward ? src_queue_ : tgt_queue_).items.clear();
}

std::vector<std::string> SyncEngine::audit() const {
  std::vector<std::string> issues = corr_.audit();
  for (const auto* l : corr_.links()) {
    for (const auto& uid : l->source_uids)
      if (!source_.contains(uid))
        issues.push_back("link " + std::to_string(l->id) + " references missing source " + uid);
    for (const auto& uid : l->target_uids)
      if (!target_.contains(uid))
        issues.push_back("link " + std::to_string(l->id) + " references missing target " + uid);
  }
  return issues;
}

}  // namespace rtm::tgg
