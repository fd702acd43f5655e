#include <sstream>

#include "rtm/dsl/parser.hpp"
#include "rtm/errors.hpp"
#include "rtm/tgg/builtin.hpp"

namespace rtm::tgg {

std::vector<TripleRule> builtin_rules(const model::Metamodel& source_mm,
                                      const model::Metamodel& target_mm) {
  auto doc = dsl::parse_rules(builtin_rules_text(), source_mm, target_mm);
  if (!doc.ok()) {
    std::ostringstream os;
    os << "shipped rule set does not parse:";
    for (const auto& d : doc.diagnostics)
      os << " [" << d.line << ":" << d.column << " " << d.message << "]";
    throw Error(Errc::MalformedRule, os.str());
  }
  return doc.rules;
}

}  // namespace rtm::tgg
