#include "rtm/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace rtm::dsl {

using tgg::AttrDerivation;
using tgg::Constraint;
using tgg::CorrNode;
using tgg::DerivationDir;
using tgg::Domain;
using tgg::DomainPattern;
using tgg::Expr;
using tgg::ExprTerm;
using tgg::PatternEdge;
using tgg::PatternNode;
using tgg::TripleRule;

namespace {

struct Token {
  enum class Kind {
    End,
    Ident,
    String,
    Integer,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Dot,
    Comma,
    Plus,
    Assign,   // :=
    EqEq,     // ==
    Arrow,    // ->
    Bad,
  };
  Kind kind = Kind::End;
  std::string text;
  std::int64_t number = 0;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ident += advance();
      t.kind = Token::Kind::Ident;
      t.text = ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += advance();
      t.kind = Token::Kind::Integer;
      t.number = std::stoll(num);
      t.text = num;
      return t;
    }
    if (c == '"') {
      advance();
      std::string s;
      bool closed = false;
      while (pos_ < text_.size()) {
        char d = advance();
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\\' && pos_ < text_.size()) {
          char e = advance();
          switch (e) {
            case 'n': s += '\n'; break;
            case 't': s += '\t'; break;
            case '"': s += '"'; break;
            case '\\': s += '\\'; break;
            default: s += e; break;
          }
        } else {
          s += d;
        }
      }
      t.kind = closed ? Token::Kind::String : Token::Kind::Bad;
      t.text = s;
      if (!closed) t.text = "unterminated string";
      return t;
    }
    advance();
    switch (c) {
      case '{': t.kind = Token::Kind::LBrace; return t;
      case '}': t.kind = Token::Kind::RBrace; return t;
      case '(': t.kind = Token::Kind::LParen; return t;
      case ')': t.kind = Token::Kind::RParen; return t;
      case ';': t.kind = Token::Kind::Semi; return t;
      case '.': t.kind = Token::Kind::Dot; return t;
      case ',': t.kind = Token::Kind::Comma; return t;
      case '+': t.kind = Token::Kind::Plus; return t;
      case ':':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          t.kind = Token::Kind::Assign;
        } else {
          t.kind = Token::Kind::Colon;
        }
        return t;
      case '=':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          advance();
          t.kind = Token::Kind::EqEq;
          return t;
        }
        break;
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          t.kind = Token::Kind::Arrow;
          return t;
        }
        break;
      default:
        break;
    }
    t.kind = Token::Kind::Bad;
    t.text = std::string(1, c);
    return t;
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, const model::Metamodel& source_mm,
         const model::Metamodel& target_mm)
      : lexer_(text), source_mm_(source_mm), target_mm_(target_mm) {
    cur_ = lexer_.next();
  }

  RuleDocument run() {
    std::set<std::string> names;
    while (cur_.kind != Token::Kind::End) {
      if (!is_ident("rule")) {
        error("expected 'rule'");
        bump();
        continue;
      }
      auto rule = parse_rule();
      if (!rule) continue;
      if (!names.insert(rule->name).second)
        error_at(rule->line, rule->column, "duplicate rule name " + rule->name);
      if (validate(*rule)) {
        canonicalize(*rule);
        doc_.rules.push_back(std::move(*rule));
      }
    }
    return std::move(doc_);
  }

 private:
  // --- token helpers -------------------------------------------------
  void bump() { cur_ = lexer_.next(); }
  bool is_ident(const char* kw) const {
    return cur_.kind == Token::Kind::Ident && cur_.text == kw;
  }
  bool accept(Token::Kind k) {
    if (cur_.kind != k) return false;
    bump();
    return true;
  }
  bool expect(Token::Kind k, const char* what) {
    if (accept(k)) return true;
    error(std::string("expected ") + what);
    return false;
  }
  std::optional<std::string> expect_ident(const char* what) {
    if (cur_.kind != Token::Kind::Ident) {
      error(std::string("expected ") + what);
      return std::nullopt;
    }
    std::string s = cur_.text;
    bump();
    return s;
  }

  void error(const std::string& msg) { error_at(cur_.line, cur_.column, msg); }
  void error_at(int line, int column, const std::string& msg) {
    doc_.diagnostics.push_back({ParseDiagnostic::Severity::Error, msg, line, column});
  }

  /// Skip to the next ';' (consumed) or stop before '}' / end.
  void recover_clause() {
    while (cur_.kind != Token::Kind::End && cur_.kind != Token::Kind::RBrace) {
      if (cur_.kind == Token::Kind::Semi) {
        bump();
        return;
      }
      bump();
    }
  }

  // --- grammar -------------------------------------------------------
  std::optional<TripleRule> parse_rule() {
    int line = cur_.line, column = cur_.column;
    bump();  // 'rule'
    auto name = expect_ident("rule name");
    if (!name) {
      recover_clause();
      return std::nullopt;
    }
    TripleRule rule;
    rule.name = *name;
    rule.line = line;
    rule.column = column;
    while (cur_.kind == Token::Kind::Ident &&
           (cur_.text == "fwd" || cur_.text == "bidir" || cur_.text == "aggregate")) {
      if (cur_.text == "fwd") rule.forward_only = true;
      if (cur_.text == "aggregate") rule.aggregate = true;
      bump();
    }
    if (!expect(Token::Kind::LBrace, "'{' after rule header")) return std::nullopt;
    while (cur_.kind != Token::Kind::RBrace && cur_.kind != Token::Kind::End) {
      if (is_ident("source")) {
        bump();
        parse_domain_section(rule.source);
      } else if (is_ident("target")) {
        bump();
        parse_domain_section(rule.target);
      } else if (is_ident("corr")) {
        bump();
        parse_corr_section(rule);
      } else if (is_ident("attr")) {
        bump();
        parse_attr_section(rule);
      } else if (is_ident("where")) {
        bump();
        parse_where_section(rule);
      } else {
        error("expected a section (source, corr, target, attr, where)");
        bump();
      }
    }
    expect(Token::Kind::RBrace, "'}' closing rule");
    return rule;
  }

  void parse_domain_section(DomainPattern& pattern) {
    if (!expect(Token::Kind::LBrace, "'{'")) return;
    while (cur_.kind != Token::Kind::RBrace && cur_.kind != Token::Kind::End) {
      if (is_ident("ctx") || is_ident("new")) {
        PatternNode node;
        node.create = cur_.text == "new";
        node.line = cur_.line;
        node.column = cur_.column;
        bump();
        auto var = expect_ident("node variable");
        if (!var || !expect(Token::Kind::Colon, "':'")) {
          recover_clause();
          continue;
        }
        auto type = expect_ident("node type");
        if (!type) {
          recover_clause();
          continue;
        }
        node.var = *var;
        node.type_name = *type;
        if (!expect(Token::Kind::Semi, "';'")) recover_clause();
        pattern.nodes.push_back(std::move(node));
      } else if (is_ident("edge")) {
        PatternEdge edge;
        edge.line = cur_.line;
        edge.column = cur_.column;
        bump();
        auto owner = expect_ident("edge owner variable");
        if (!owner || !expect(Token::Kind::Dot, "'.'")) {
          recover_clause();
          continue;
        }
        auto ref = expect_ident("reference name");
        if (!ref || !expect(Token::Kind::Arrow, "'->'")) {
          recover_clause();
          continue;
        }
        auto child = expect_ident("edge child variable");
        if (!child) {
          recover_clause();
          continue;
        }
        edge.owner_var = *owner;
        edge.ref_name = *ref;
        edge.child_var = *child;
        if (!expect(Token::Kind::Semi, "';'")) recover_clause();
        pattern.edges.push_back(std::move(edge));
      } else {
        error("expected 'ctx', 'new' or 'edge'");
        recover_clause();
      }
    }
    expect(Token::Kind::RBrace, "'}'");
  }

  void parse_corr_section(TripleRule& rule) {
    if (!expect(Token::Kind::LBrace, "'{'")) return;
    while (cur_.kind != Token::Kind::RBrace && cur_.kind != Token::Kind::End) {
      if (!is_ident("ctx") && !is_ident("new")) {
        error("expected 'ctx' or 'new' correspondence entry");
        recover_clause();
        continue;
      }
      CorrNode node;
      node.create = cur_.text == "new";
      node.line = cur_.line;
      node.column = cur_.column;
      bump();
      auto var = expect_ident("correspondence variable");
      if (!var || !expect(Token::Kind::Colon, "':'")) {
        recover_clause();
        continue;
      }
      auto type = expect_ident("correspondence type");
      if (!type || !expect(Token::Kind::LParen, "'('")) {
        recover_clause();
        continue;
      }
      node.var = *var;
      node.corr_type = *type;
      bool ok = parse_var_list("src", node.src_vars) && expect(Token::Kind::Semi, "';'") &&
                parse_var_list("tgt", node.tgt_vars) && expect(Token::Kind::RParen, "')'");
      if (!ok) {
        recover_clause();
        continue;
      }
      if (!expect(Token::Kind::Semi, "';'")) recover_clause();
      rule.corr.push_back(std::move(node));
    }
    expect(Token::Kind::RBrace, "'}'");
  }

  bool parse_var_list(const char* kw, std::vector<std::string>& out) {
    if (!is_ident(kw)) {
      error(std::string("expected '") + kw + "'");
      return false;
    }
    bump();
    if (!expect(Token::Kind::Colon, "':'")) return false;
    while (true) {
      auto var = expect_ident("variable");
      if (!var) return false;
      out.push_back(*var);
      if (!accept(Token::Kind::Comma)) break;
    }
    return true;
  }

  void parse_attr_section(TripleRule& rule) {
    if (!expect(Token::Kind::LBrace, "'{'")) return;
    while (cur_.kind != Token::Kind::RBrace && cur_.kind != Token::Kind::End) {
      if (!is_ident("fwd") && !is_ident("bwd")) {
        error("expected 'fwd' or 'bwd' derivation");
        recover_clause();
        continue;
      }
      AttrDerivation d;
      d.dir = cur_.text == "fwd" ? DerivationDir::Forward : DerivationDir::Backward;
      d.line = cur_.line;
      d.column = cur_.column;
      bump();
      auto var = expect_ident("variable");
      if (!var || !expect(Token::Kind::Dot, "'.'")) {
        recover_clause();
        continue;
      }
      auto attr = expect_ident("attribute");
      if (!attr || !expect(Token::Kind::Assign, "':='")) {
        recover_clause();
        continue;
      }
      d.var = *var;
      d.attr = *attr;
      if (!parse_expr(d.expr)) {
        recover_clause();
        continue;
      }
      if (!expect(Token::Kind::Semi, "';'")) recover_clause();
      rule.derivations.push_back(std::move(d));
    }
    expect(Token::Kind::RBrace, "'}'");
  }

  bool parse_expr(Expr& expr) {
    while (true) {
      ExprTerm term;
      if (cur_.kind == Token::Kind::String) {
        term.payload = model::Value(cur_.text);
        bump();
      } else if (cur_.kind == Token::Kind::Integer) {
        term.payload = model::Value(cur_.number);
        bump();
      } else if (cur_.kind == Token::Kind::Ident) {
        std::string var = cur_.text;
        bump();
        if (!expect(Token::Kind::Dot, "'.' after variable")) return false;
        auto attr = expect_ident("attribute");
        if (!attr) return false;
        term.payload = std::make_pair(var, *attr);
      } else {
        error("expected literal or var.attr");
        return false;
      }
      expr.terms.push_back(std::move(term));
      if (!accept(Token::Kind::Plus)) break;
    }
    return true;
  }

  void parse_where_section(TripleRule& rule) {
    if (!expect(Token::Kind::LBrace, "'{'")) return;
    while (cur_.kind != Token::Kind::RBrace && cur_.kind != Token::Kind::End) {
      Constraint c;
      c.line = cur_.line;
      c.column = cur_.column;
      auto var = expect_ident("variable");
      if (!var || !expect(Token::Kind::Dot, "'.'")) {
        recover_clause();
        continue;
      }
      auto attr = expect_ident("attribute");
      if (!attr || !expect(Token::Kind::EqEq, "'=='")) {
        recover_clause();
        continue;
      }
      c.lhs_var = *var;
      c.lhs_attr = *attr;
      if (cur_.kind == Token::Kind::String) {
        c.rhs = model::Value(cur_.text);
        bump();
      } else if (cur_.kind == Token::Kind::Integer) {
        c.rhs = model::Value(cur_.number);
        bump();
      } else if (cur_.kind == Token::Kind::Ident) {
        std::string rvar = cur_.text;
        bump();
        if (!expect(Token::Kind::Dot, "'.'")) {
          recover_clause();
          continue;
        }
        auto rattr = expect_ident("attribute");
        if (!rattr) {
          recover_clause();
          continue;
        }
        c.rhs = std::make_pair(rvar, *rattr);
      } else {
        error("expected literal or var.attr");
        recover_clause();
        continue;
      }
      if (!expect(Token::Kind::Semi, "';'")) recover_clause();
      rule.constraints.push_back(std::move(c));
    }
    expect(Token::Kind::RBrace, "'}'");
  }

  // --- semantic validation --------------------------------------------
  bool validate(TripleRule& rule) {
    std::size_t before = count_errors();
    validate_domain(rule, rule.source, Domain::Source);
    validate_domain(rule, rule.target, Domain::Target);
    validate_corr(rule);
    validate_derivations(rule);
    validate_constraints(rule);
    return count_errors() == before;
  }

  std::size_t count_errors() const {
    std::size_t n = 0;
    for (const auto& d : doc_.diagnostics)
      if (d.severity == ParseDiagnostic::Severity::Error) ++n;
    return n;
  }

  const model::Metamodel& mm_of(Domain d) const {
    return d == Domain::Source ? source_mm_ : target_mm_;
  }

  void validate_domain(TripleRule& rule, DomainPattern& pattern, Domain domain) {
    std::set<std::string> vars;
    for (const auto& n : pattern.nodes) {
      if (!vars.insert(n.var).second)
        error_at(n.line, n.column, rule.name + ": duplicate variable " + n.var);
      if (!mm_of(domain).find_type(n.type_name)) {
        const auto& other = domain == Domain::Source ? target_mm_ : source_mm_;
        if (other.find_type(n.type_name))
          error_at(n.line, n.column,
                   rule.name + ": " + n.type_name + " belongs to metamodel " + other.name() +
                       ", not " + mm_of(domain).name() + " (domain mixup)");
        else
          error_at(n.line, n.column, rule.name + ": unknown node type " + n.type_name);
      }
    }
    for (const auto& e : pattern.edges) {
      const PatternNode* owner = pattern.find(e.owner_var);
      const PatternNode* child = pattern.find(e.child_var);
      if (!owner || !child) {
        error_at(e.line, e.column, rule.name + ": edge references unknown variable");
        continue;
      }
      const model::NodeType* ot = mm_of(domain).find_type(owner->type_name);
      if (ot && !ot->find_reference(e.ref_name))
        error_at(e.line, e.column,
                 rule.name + ": " + owner->type_name + " has no reference " + e.ref_name);
    }
  }

  void validate_corr(TripleRule& rule) {
    const CorrNode* create = rule.corr_create();
    if (!create) {
      error_at(rule.line, rule.column,
               rule.name + ": rule declares no correspondence (dangling corr reference)");
      return;
    }
    for (const auto& c : rule.corr) {
      auto check = [&](const std::vector<std::string>& vars, const DomainPattern& pattern,
                       const char* side) {
        if (vars.empty())
          error_at(c.line, c.column, rule.name + ": corr " + c.var + " lists no " + side + " variables");
        for (const auto& v : vars) {
          const PatternNode* n = pattern.find(v);
          if (!n) {
            error_at(c.line, c.column,
                     rule.name + ": corr " + c.var + " references unknown variable " + v);
            continue;
          }
          if (c.create && !n->create)
            error_at(c.line, c.column,
                     rule.name + ": new corr " + c.var + " must reference created elements, " +
                         v + " is context");
          if (!c.create && n->create)
            error_at(c.line, c.column,
                     rule.name + ": ctx corr " + c.var + " must reference context elements, " +
                         v + " is created");
        }
      };
      check(c.src_vars, rule.source, "source");
      check(c.tgt_vars, rule.target, "target");
    }
  }

  const PatternNode* find_var(const TripleRule& rule, const std::string& var,
                              Domain* where = nullptr) const {
    if (const PatternNode* n = rule.source.find(var)) {
      if (where) *where = Domain::Source;
      return n;
    }
    if (const PatternNode* n = rule.target.find(var)) {
      if (where) *where = Domain::Target;
      return n;
    }
    return nullptr;
  }

  void check_attr_exists(const TripleRule& rule, const std::string& var, const std::string& attr,
                         int line, int column) {
    if (attr == "uid") return;
    Domain d;
    const PatternNode* n = find_var(rule, var, &d);
    if (!n) {
      error_at(line, column, rule.name + ": unknown variable " + var);
      return;
    }
    const model::NodeType* t = mm_of(d).find_type(n->type_name);
    if (t && !t->find_attribute(attr))
      error_at(line, column, rule.name + ": " + n->type_name + " has no attribute " + attr);
  }

  void validate_derivations(TripleRule& rule) {
    for (const auto& d : rule.derivations) {
      Domain where;
      const PatternNode* n = find_var(rule, d.var, &where);
      if (!n) {
        error_at(d.line, d.column, rule.name + ": unknown variable " + d.var);
        continue;
      }
      Domain expected = d.dir == DerivationDir::Forward ? Domain::Target : Domain::Source;
      if (where != expected)
        error_at(d.line, d.column,
                 rule.name + ": " + (d.dir == DerivationDir::Forward ? "fwd" : "bwd") +
                     " derivation must assign a " +
                     (expected == Domain::Target ? "target" : "source") + " variable");
      if (d.attr == "uid" && !n->create)
        error_at(d.line, d.column, rule.name + ": uid can only be derived for created elements");
      check_attr_exists(rule, d.var, d.attr, d.line, d.column);
      for (const auto& term : d.expr.terms)
        if (!term.is_literal())
          check_attr_exists(rule, term.var_attr().first, term.var_attr().second, d.line, d.column);
    }
  }

  void validate_constraints(TripleRule& rule) {
    for (const auto& c : rule.constraints) {
      check_attr_exists(rule, c.lhs_var, c.lhs_attr, c.line, c.column);
      if (c.rhs.index() == 1) {
        const auto& [v, a] = std::get<1>(c.rhs);
        check_attr_exists(rule, v, a, c.line, c.column);
      }
    }
  }

  void canonicalize(TripleRule& rule) {
    auto node_less = [](const PatternNode& a, const PatternNode& b) { return a.var < b.var; };
    auto edge_less = [](const PatternEdge& a, const PatternEdge& b) {
      return std::tie(a.owner_var, a.ref_name, a.child_var) <
             std::tie(b.owner_var, b.ref_name, b.child_var);
    };
    std::sort(rule.source.nodes.begin(), rule.source.nodes.end(), node_less);
    std::sort(rule.source.edges.begin(), rule.source.edges.end(), edge_less);
    std::sort(rule.target.nodes.begin(), rule.target.nodes.end(), node_less);
    std::sort(rule.target.edges.begin(), rule.target.edges.end(), edge_less);
    std::sort(rule.corr.begin(), rule.corr.end(),
              [](const CorrNode& a, const CorrNode& b) { return a.var < b.var; });
    std::sort(rule.derivations.begin(), rule.derivations.end(),
              [](const AttrDerivation& a, const AttrDerivation& b) {
                return std::tie(a.dir, a.var, a.attr) < std::tie(b.dir, b.var, b.attr);
              });
    std::sort(rule.constraints.begin(), rule.constraints.end(),
              [](const Constraint& a, const Constraint& b) {
                return std::tie(a.lhs_var, a.lhs_attr) < std::tie(b.lhs_var, b.lhs_attr);
              });
  }

  Lexer lexer_;
  Token cur_;
  const model::Metamodel& source_mm_;
  const model::Metamodel& target_mm_;
  RuleDocument doc_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c; break;
    }
  }
  out += '"';
  return out;
}

std::string print_value(const model::Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return quote(*s);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return "\"\"";
}

std::string print_expr(const Expr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += " + ";
    const auto& t = e.terms[i];
    if (t.is_literal())
      out += print_value(t.literal());
    else
      out += t.var_attr().first + "." + t.var_attr().second;
  }
  return out;
}

void print_domain(std::ostringstream& os, const char* name, const DomainPattern& p) {
  if (p.nodes.empty() && p.edges.empty()) return;
  os << "  " << name << " {\n";
  for (const auto& n : p.nodes)
    os << "    " << (n.create ? "new" : "ctx") << " " << n.var << ":" << n.type_name << " ;\n";
  for (const auto& e : p.edges)
    os << "    edge " << e.owner_var << "." << e.ref_name << " -> " << e.child_var << " ;\n";
  os << "  }\n";
}

}  // namespace

RuleDocument parse_rules(const std::string& text, const model::Metamodel& source_mm,
                         const model::Metamodel& target_mm) {
  Parser parser(text, source_mm, target_mm);
  return parser.run();
}

std::string print_rules(const RuleDocument& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& rule : doc.rules) {
    if (!first) os << "\n";
    first = false;
    os << "rule " << rule.name;
    if (rule.forward_only) os << " fwd";
    if (rule.aggregate) os << " aggregate";
    os << " {\n";
    print_domain(os, "source", rule.source);
    if (!rule.corr.empty()) {
      os << "  corr {\n";
      for (const auto& c : rule.corr) {
        os << "    " << (c.create ? "new" : "ctx") << " " << c.var << ":" << c.corr_type
           << " (src: ";
        for (std::size_t i = 0; i < c.src_vars.size(); ++i)
          os << (i ? ", " : "") << c.src_vars[i];
        os << " ; tgt: ";
        for (std::size_t i = 0; i < c.tgt_vars.size(); ++i)
          os << (i ? ", " : "") << c.tgt_vars[i];
        os << ") ;\n";
      }
      os << "  }\n";
    }
    print_domain(os, "target", rule.target);
    if (!rule.derivations.empty()) {
      os << "  attr {\n";
      for (const auto& d : rule.derivations)
        os << "    " << (d.dir == DerivationDir::Forward ? "fwd" : "bwd") << " " << d.var << "."
           << d.attr << " := " << print_expr(d.expr) << " ;\n";
      os << "  }\n";
    }
    if (!rule.constraints.empty()) {
      os << "  where {\n";
      for (const auto& c : rule.constraints) {
        os << "    " << c.lhs_var << "." << c.lhs_attr << " == ";
        if (c.rhs.index() == 0)
          os << print_value(std::get<0>(c.rhs));
        else
          os << std::get<1>(c.rhs).first << "." << std::get<1>(c.rhs).second;
        os << " ;\n";
      }
      os << "  }\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace rtm::dsl
