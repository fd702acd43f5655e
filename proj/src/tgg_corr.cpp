#include "rtm/tgg/corr.hpp"

#include <algorithm>

#include "rtm/errors.hpp"

namespace rtm::tgg {

std::uint64_t CorrModel::add(CorrespondenceLink link) {
  link.id = next_id_++;
  for (const auto& u : link.source_uids) src_index_[u].insert(link.id);
  for (const auto& u : link.target_uids) tgt_index_[u].insert(link.id);
  std::uint64_t id = link.id;
  links_[id] = std::move(link);
  return id;
}

void CorrModel::retire(std::uint64_t id) {
  auto it = links_.find(id);
  if (it == links_.end()) return;
  for (const auto& u : it->second.source_uids) {
    auto s = src_index_.find(u);
    if (s != src_index_.end()) {
      s->second.erase(id);
      if (s->second.empty()) src_index_.erase(s);
    }
  }
  for (const auto& u : it->second.target_uids) {
    auto t = tgt_index_.find(u);
    if (t != tgt_index_.end()) {
      t->second.erase(id);
      if (t->second.empty()) tgt_index_.erase(t);
    }
  }
  links_.erase(it);
}

void CorrModel::replace_sources(std::uint64_t id, std::vector<std::string> uids) {
  auto it = links_.find(id);
  if (it == links_.end()) throw Error(Errc::UnknownUid, "corr link " + std::to_string(id));
  for (const auto& u : it->second.source_uids) {
    auto s = src_index_.find(u);
    if (s != src_index_.end()) {
      s->second.erase(id);
      if (s->second.empty()) src_index_.erase(s);
    }
  }
  it->second.source_uids = std::move(uids);
  for (const auto& u : it->second.source_uids) src_index_[u].insert(id);
}

const CorrespondenceLink* CorrModel::find(std::uint64_t id) const {
  auto it = links_.find(id);
  return it == links_.end() ? nullptr : &it->second;
}

std::vector<const CorrespondenceLink*> CorrModel::links() const {
  std::vector<const CorrespondenceLink*> out;
  for (const auto& [id, l] : links_) out.push_back(&l);
  return out;
}

std::vector<const CorrespondenceLink*> CorrModel::by_source(const std::string& uid) const {
  std::vector<const CorrespondenceLink*> out;
  auto it = src_index_.find(uid);
  if (it != src_index_.end())
    for (auto id : it->second) out.push_back(&links_.at(id));
  return out;
}

std::vector<const CorrespondenceLink*> CorrModel::by_target(const std::string& uid) const {
  std::vector<const CorrespondenceLink*> out;
  auto it = tgt_index_.find(uid);
  if (it != tgt_index_.end())
    for (auto id : it->second) out.push_back(&links_.at(id));
  return out;
}

std::string CorrModel::claiming_rule_of_source(const std::string& uid) const {
  auto ls = by_source(uid);
  return ls.empty() ? std::string{} : ls.front()->rule;
}

std::string CorrModel::claiming_rule_of_target(const std::string& uid) const {
  auto ls = by_target(uid);
  return ls.empty() ? std::string{} : ls.front()->rule;
}

void CorrModel::clear() {
  links_.clear();
  src_index_.clear();
  tgt_index_.clear();
}

std::vector<std::string> CorrModel::audit() const {
  std::vector<std::string> issues;
  for (const auto& [id, l] : links_) {
    for (const auto& u : l.source_uids)
      if (!src_index_.count(u) || !src_index_.at(u).count(id))
        issues.push_back("link " + std::to_string(id) + " missing from source index at " + u);
    for (const auto& u : l.target_uids)
      if (!tgt_index_.count(u) || !tgt_index_.at(u).count(id))
        issues.push_back("link " + std::to_string(id) + " missing from target index at " + u);
  }
  std::size_t entries = 0;
  for (const auto& [u, ids] : src_index_) entries += ids.size();
  for (const auto& [u, ids] : tgt_index_) entries += ids.size();
  std::size_t expected = 0;
  for (const auto& [id, l] : links_) expected += l.source_uids.size() + l.target_uids.size();
  if (entries != expected) issues.push_back("index entry count mismatch");
  // no two links of the same corr type over the same source set
  std::set<std::pair<std::string, std::vector<std::string>>> seen;
  for (const auto& [id, l] : links_) {
    auto key = std::make_pair(l.corr_type, l.source_uids);
    if (!seen.insert(key).second)
      issues.push_back("duplicate " + l.corr_type + " link over identical source set");
  }
  return issues;
}

nlohmann::json CorrModel::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [id, l] : links_) {
    auto src = l.source_uids;
    auto tgt = l.target_uids;
    std::sort(src.begin(), src.end());
    std::sort(tgt.begin(), tgt.end());
    arr.push_back({{"corr_type", l.corr_type}, {"rule", l.rule}, {"source", src}, {"target", tgt}});
  }
  // canonical: order by (corr_type, source set)
  std::sort(arr.begin(), arr.end(), [](const nlohmann::json& a, const nlohmann::json& b) {
    if (a.at("corr_type") != b.at("corr_type"))
      return a.at("corr_type") < b.at("corr_type");
    return a.at("source") < b.at("source");
  });
  return nlohmann::json{{"links", arr}};
}

}  // namespace rtm::tgg
