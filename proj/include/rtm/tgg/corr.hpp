#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace rtm::tgg {

/// Explicit trace link between corresponding source and target elements.
/// source_uids/target_uids are ordered by the owning rule's corr
/// declaration (aggregate links accumulate contributing source uids).
struct CorrespondenceLink {
  std::uint64_t id = 0;
  std::string corr_type;
  std::string rule;
  std::vector<std::string> source_uids;
  std::vector<std::string> target_uids;
};

class CorrModel {
 public:
  std::uint64_t add(CorrespondenceLink link);
  void retire(std::uint64_t id);
  void replace_sources(std::uint64_t id, std::vector<std::string> uids);

  const CorrespondenceLink* find(std::uint64_t id) const;
  std::vector<const CorrespondenceLink*> links() const;  // id order
  std::vector<const CorrespondenceLink*> by_source(const std::string& uid) const;
  std::vector<const CorrespondenceLink*> by_target(const std::string& uid) const;

  bool source_claimed(const std::string& uid) const { return src_index_.count(uid) != 0; }
  bool target_claimed(const std::string& uid) const { return tgt_index_.count(uid) != 0; }
  /// Rule that claimed a source/target element, empty if unclaimed.
  std::string claiming_rule_of_source(const std::string& uid) const;
  std::string claiming_rule_of_target(const std::string& uid) const;

  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }
  void clear();

  /// index consistency; returns human-readable problems
  std::vector<std::string> audit() const;

  nlohmann::json to_json() const;

 private:
  std::map<std::uint64_t, CorrespondenceLink> links_;
  std::map<std::string, std::set<std::uint64_t>> src_index_;
  std::map<std::string, std::set<std::uint64_t>> tgt_index_;
  std::uint64_t next_id_ = 1;
};

}  // namespace rtm::tgg
