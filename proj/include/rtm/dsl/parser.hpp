#pragma once

#include <string>
#include <vector>

#include "rtm/model.hpp"
#include "rtm/tgg/rule.hpp"

namespace rtm::dsl {

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
  int line = 1;
  int column = 1;
};

/// Parsed rule file. Rules are canonicalized on parse: nodes, edges,
/// derivations and constraints are sorted, so structurally equivalent
/// inputs yield identical documents and print() is stable.
struct RuleDocument {
  std::vector<tgg::TripleRule> rules;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const {
    for (const auto& d : diagnostics)
      if (d.severity == ParseDiagnostic::Severity::Error) return false;
    return true;
  }
};

// Grammar (line-oriented, '//' comments, semicolon-terminated clauses):
//
//   rule <Name> [fwd|bidir] [aggregate] {
//     source { [ctx|new] <var>:<Type> ;  edge <var>.<ref> -> <var> ; ... }
//     corr   { [ctx|new] <var>:<CorrType> (src: v,... ; tgt: v,...) ; ... }
//     target { ... }
//     attr   { [fwd|bwd] <var>.<attr> := <expr> ; ... }
//     where  { <var>.<attr> == <literal|var.attr> ; ... }
//   }
//
// Expressions are literals, var.attr (uid allowed) and '+' concatenation.
RuleDocument parse_rules(const std::string& text, const model::Metamodel& source_mm,
                         const model::Metamodel& target_mm);

std::string print_rules(const RuleDocument& doc);

}  // namespace rtm::dsl
