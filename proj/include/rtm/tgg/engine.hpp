#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rtm/model.hpp"
#include "rtm/tgg/corr.hpp"
#include "rtm/tgg/rule.hpp"

namespace rtm::tgg {

enum class Direction { Forward, Backward };

const char* direction_name(Direction d);

struct SyncReport {
  Direction direction = Direction::Forward;
  struct Firing {
    std::string rule;
    std::vector<std::string> subject_uids;  // origin-side created elements
  };
  std::vector<Firing> rules_fired;
  std::vector<std::string> created;  // destination-side uids
  std::vector<std::string> deleted;
  std::vector<std::string> updated;

  bool empty() const {
    return rules_fired.empty() && created.empty() && deleted.empty() && updated.empty();
  }
  nlohmann::json to_json() const;
};

/// Incremental, correspondence-based bidirectional synchronization engine.
///
/// The engine listens to both models. synchronize() consumes the queued
/// changes of the given direction and re-establishes consistency: images of
/// vanished origin elements are deleted, attribute derivations re-run
/// against the final model state, and unexploited rule matches applied.
/// Single-threaded; callers must not mutate models while a sync runs.
class SyncEngine {
 public:
  SyncEngine(model::Model& source, model::Model& target);
  ~SyncEngine();
  SyncEngine(const SyncEngine&) = delete;
  SyncEngine& operator=(const SyncEngine&) = delete;

  /// Replaces the rule set. Application order is list order, ties broken by
  /// subject uid. Throws Error(MalformedRule).
  void register_rules(std::vector<TripleRule> rules);
  const std::vector<TripleRule>& rules() const { return rules_; }

  model::Model& source() { return source_; }
  model::Model& target() { return target_; }
  CorrModel& corr() { return corr_; }
  const CorrModel& corr() const { return corr_; }

  /// Full transformation; destination and correspondence model must be
  /// empty. Throws Error(RuleConflict) when two rules claim one element.
  void transform_batch(Direction dir);

  /// Incremental consistency repair for the pending changes of one
  /// direction. Backward syncs refuse destination-side changes no backward
  /// rule covers (Error(UnsynchronizableChange)) before touching anything.
  SyncReport synchronize(Direction dir);

  std::size_t pending_count(Direction dir) const;
  void clear_pending(Direction dir);

  std::vector<std::string> audit() const;

 private:
  using Bindings = std::map<std::string, std::string>;

  struct Queue : model::NotificationSink {
    std::vector<model::ChangeNotification> items;
    bool muted = false;
    void on_change(const model::ChangeNotification& n) override {
      if (!muted) items.push_back(n);
    }
  };

  struct MuteScope {
    explicit MuteScope(Queue& q) : q_(q) { q_.muted = true; }
    ~MuteScope() { q_.muted = false; }
    Queue& q_;
  };

  struct MatchOptions {
    const std::set<std::string>* create_seed = nullptr;
    bool claim_filter = true;
    bool bind_dest_creates = false;  // validation mode: all nodes pre-exist
    const Bindings* pre_bound = nullptr;
  };

  model::Model& origin_model(Direction dir) { return dir == Direction::Forward ? source_ : target_; }
  model::Model& dest_model(Direction dir) { return dir == Direction::Forward ? target_ : source_; }
  const DomainPattern& origin_pattern(const TripleRule& r, Direction dir) const {
    return dir == Direction::Forward ? r.source : r.target;
  }
  const DomainPattern& dest_pattern(const TripleRule& r, Direction dir) const {
    return dir == Direction::Forward ? r.target : r.source;
  }
  Domain origin_domain(Direction dir) const {
    return dir == Direction::Forward ? Domain::Source : Domain::Target;
  }

  const model::Model& model_of(Domain d) const { return d == Domain::Source ? source_ : target_; }
  Domain domain_of_var(const TripleRule& rule, const std::string& var) const;

  bool origin_claimed(Direction dir, const std::string& uid) const;
  std::string origin_claiming_rule(Direction dir, const std::string& uid) const;
  std::vector<std::string> link_origin_uids(const CorrespondenceLink& l, Direction dir) const {
    return dir == Direction::Forward ? l.source_uids : l.target_uids;
  }
  std::vector<std::string> link_dest_uids(const CorrespondenceLink& l, Direction dir) const {
    return dir == Direction::Forward ? l.target_uids : l.source_uids;
  }

  std::vector<Bindings> find_matches(const TripleRule& rule, Direction dir,
                                     const MatchOptions& opt) const;
  bool corr_context_holds(const TripleRule& rule, const Bindings& b) const;
  bool constraints_hold(const TripleRule& rule, const Bindings& b) const;
  model::Value eval_expr(const Expr& e, const TripleRule& rule, const Bindings& b) const;
  model::Value eval_term(const ExprTerm& t, const TripleRule& rule, const Bindings& b) const;

  /// Create-bindings of an existing link, recovered positionally from the
  /// rule's corr declaration.
  Bindings link_bindings(const TripleRule& rule, const CorrespondenceLink& l) const;
  const TripleRule* rule_named(const std::string& name) const;

  bool apply_match(const TripleRule& rule, Direction dir, const Bindings& match,
                   SyncReport& report);
  bool validate_application(const TripleRule& rule, Direction dir,
                            const CorrespondenceLink& l) const;

  void repair_deletions(Direction dir, SyncReport& report);
  void revalidate_links(Direction dir, const std::set<std::string>& touched, SyncReport& report);
  void update_attributes(Direction dir, const std::set<std::string>& touched, SyncReport& report);
  void run_new_matches(Direction dir, const std::set<std::string>* seed, SyncReport& report);
  void reconcile_aggregates(SyncReport& report);
  void prescan_backward(const std::vector<model::ChangeNotification>& pending) const;
  void postscan_backward(const std::vector<model::ChangeNotification>& pending) const;

  model::Model& source_;
  model::Model& target_;
  CorrModel corr_;
  std::vector<TripleRule> rules_;
  Queue src_queue_;
  Queue tgt_queue_;
};

}  // namespace rtm::tgg
