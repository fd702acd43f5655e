#pragma once

#include <string>
#include <vector>

#include "rtm/model.hpp"
#include "rtm/tgg/rule.hpp"

namespace rtm::tgg {

/// The shipped rule set (rules/ejb2comp.tgg), embedded at build time.
const std::string& builtin_rules_text();

/// Parses the shipped rules against the given metamodels.
std::vector<TripleRule> builtin_rules(const model::Metamodel& source_mm,
                                      const model::Metamodel& target_mm);

}  // namespace rtm::tgg
