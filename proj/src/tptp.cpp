#include "ueq/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ueq/errors.hpp"

namespace ueq {

bool SaturationDump::all_oriented() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const DumpEquation& e) { return e.oriented; });
}

std::vector<Equation> SaturationDump::equations_only() const {
  std::vector<Equation> out;
  out.reserve(equations.size());
  for (const DumpEquation& e : equations) out.push_back(e.eq);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Word,    // lower_case_word
  UWord,   // Uppercase_variable
  Quoted,  // 'single quoted'
  Number,
  LParen,
  RParen,
  Comma,
  Dot,
  Eq,
  Neq,
  Arrow,
  Pipe,
  Tilde,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  const Token& peek() {
    if (!cached_) cached_ = scan();
    return *cached_;
  }

  Token next() {
    Token t = peek();
    cached_.reset();
    return t;
  }

  bool at_end() { return peek().kind == Tok::End; }

  /// Drops the cached token and skips raw input up to and including the
  /// next newline. Used to resynchronize after a malformed dump line.
  void abandon_line() {
    cached_.reset();
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    if (pos_ < text_.size()) {
      ++pos_;
      ++line_;
      col_ = 1;
    }
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.col);
  }

 private:
  char cur() const { return text_[pos_]; }

  void advance() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(cur()))) {
        advance();
      } else if (cur() == '%') {
        while (pos_ < text_.size() && cur() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token scan() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;

    char c = cur();
    auto single = [&](Tok kind) {
      t.kind = kind;
      t.text = c;
      advance();
      return t;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '.': return single(Tok::Dot);
      case '=': return single(Tok::Eq);
      case '|': return single(Tok::Pipe);
      case '~': return single(Tok::Tilde);
      default: break;
    }
    if (c == '!') {
      advance();
      if (pos_ < text_.size() && cur() == '=') {
        advance();
        t.kind = Tok::Neq;
        t.text = "!=";
        return t;
      }
      throw ParseError("expected '=' after '!'", t.line, t.col);
    }
    if (c == '-') {
      advance();
      if (pos_ < text_.size() && cur() == '>') {
        advance();
        t.kind = Tok::Arrow;
        t.text = "->";
        return t;
      }
      throw ParseError("expected '>' after '-'", t.line, t.col);
    }
    if (c == '\'') {
      advance();
      std::string name;
      while (pos_ < text_.size() && cur() != '\'') {
        if (cur() == '\n')
          throw ParseError("unterminated quoted symbol", t.line, t.col);
        if (cur() == '\\') {
          advance();
          if (pos_ >= text_.size() || (cur() != '\\' && cur() != '\''))
            throw ParseError("bad escape in quoted symbol", t.line, t.col);
        }
        name += cur();
        advance();
      }
      if (pos_ >= text_.size())
        throw ParseError("unterminated quoted symbol", t.line, t.col);
      advance();  // closing quote
      if (name.empty())
        throw ParseError("empty quoted symbol", t.line, t.col);
      t.kind = Tok::Quoted;
      t.text = std::move(name);
      return t;
    }
    if (std::islower(static_cast<unsigned char>(c)) ||
        std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      bool upper = !std::islower(static_cast<unsigned char>(c));
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
        word += cur();
        advance();
      }
      t.kind = upper ? Tok::UWord : Tok::Word;
      t.text = std::move(word);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(cur()))) {
        digits += cur();
        advance();
      }
      t.kind = Tok::Number;
      t.text = std::move(digits);
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line,
                     t.col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::optional<Token> cached_;
};

// ---------------------------------------------------------------------------
// Clause parser

struct RawClause {
  std::string name;
  std::string role;
  // Placeholders; parse_literal always overwrites both sides.
  Term lhs = Term::var("x");
  Term rhs = Term::var("x");
  Tok op = Tok::Eq;  // Eq, Neq or Arrow
};

Token expect(Lexer& lex, Tok kind, const char* what) {
  Token t = lex.next();
  if (t.kind != kind) lex.fail(std::string("expected ") + what, t);
  return t;
}

Term parse_term(Lexer& lex, Signature& sig) {
  Token t = lex.next();
  if (t.kind == Tok::UWord) return Term::var(t.text);
  if (t.kind != Tok::Word && t.kind != Tok::Quoted)
    lex.fail("expected a term", t);
  if (t.text == "include")
    lex.fail("include directives are not supported", t);

  std::vector<Term> args;
  if (lex.peek().kind == Tok::LParen) {
    lex.next();
    args.push_back(parse_term(lex, sig));
    while (lex.peek().kind == Tok::Comma) {
      lex.next();
      args.push_back(parse_term(lex, sig));
    }
    expect(lex, Tok::RParen, "')'");
  }
  try {
    sig.add(t.text, args.size());
  } catch (const ConfigError& e) {
    lex.fail(e.what(), t);
  }
  return Term::app(t.text, std::move(args));
}

// literal := term ((= | != | ->) term)?, possibly wrapped in parentheses.
// A bare term or a negated atom is a predicate literal, which is outside
// the fragment. `allow_arrow` is true only for saturation dumps.
void parse_literal(Lexer& lex, Signature& sig, RawClause& out,
                   bool allow_arrow) {
  if (lex.peek().kind == Tok::Tilde)
    throw FragmentError("negated non-equality literal is outside the fragment");

  out.lhs = parse_term(lex, sig);
  Token op = lex.peek();
  if (op.kind != Tok::Eq && op.kind != Tok::Neq && op.kind != Tok::Arrow)
    throw FragmentError("clause '" + out.name +
                        "' has a predicate literal; only = and != are part of "
                        "the fragment");
  if (op.kind == Tok::Arrow && !allow_arrow)
    lex.fail("oriented rules (->) are only allowed in saturation dumps", op);
  lex.next();
  out.op = op.kind;
  out.rhs = parse_term(lex, sig);
}

RawClause parse_cnf_clause(Lexer& lex, Signature& sig, bool allow_arrow) {
  Token kw = lex.next();
  if (kw.kind != Tok::Word || kw.text != "cnf") {
    if (kw.kind == Tok::Word && (kw.text == "fof" || kw.text == "tff"))
      lex.fail("only cnf clauses are supported", kw);
    if (kw.kind == Tok::Word && kw.text == "include")
      lex.fail("include directives are not supported", kw);
    lex.fail("expected 'cnf'", kw);
  }
  expect(lex, Tok::LParen, "'('");

  RawClause out;
  Token name = lex.next();
  if (name.kind != Tok::Word && name.kind != Tok::UWord &&
      name.kind != Tok::Quoted && name.kind != Tok::Number)
    lex.fail("expected a clause name", name);
  out.name = name.text;
  expect(lex, Tok::Comma, "','");
  Token role = lex.next();
  if (role.kind != Tok::Word) lex.fail("expected a clause role", role);
  out.role = role.text;
  expect(lex, Tok::Comma, "','");

  bool wrapped = false;
  if (lex.peek().kind == Tok::LParen) {
    // Could be a parenthesized literal or a term starting the literal; a
    // literal can only start with a term token, so '(' here is a wrapper.
    wrapped = true;
    lex.next();
  }
  parse_literal(lex, sig, out, allow_arrow);
  if (lex.peek().kind == Tok::Pipe)
    throw FragmentError("clause '" + out.name +
                        "' is not a unit clause; the fragment admits single "
                        "equations and disequations only");
  if (wrapped) expect(lex, Tok::RParen, "')'");
  expect(lex, Tok::RParen, "')'");
  expect(lex, Tok::Dot, "'.'");
  return out;
}

/// Renames the variables of a parsed literal to canonical names, first
/// occurrence left to right, lhs before rhs. Orientation is preserved.
std::pair<Term, Term> canonical_pair(const Term& lhs, const Term& rhs) {
  Equation e = rename_equation_canonical(Equation{lhs, rhs});
  return {e.lhs, e.rhs};
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry points

Problem parse_problem(std::string_view text) {
  Lexer lex(text);
  Problem p;
  while (!lex.at_end()) {
    RawClause c = parse_cnf_clause(lex, p.signature, /*allow_arrow=*/false);
    auto [lhs, rhs] = canonical_pair(c.lhs, c.rhs);
    if (c.op == Tok::Eq) {
      p.axioms.push_back(Equation{lhs, rhs});
      p.axiom_names.push_back(c.name);
    } else {
      if (!lhs.ground() || !rhs.ground())
        throw FragmentError("disequation '" + c.name +
                            "' has variables; only ground disequations are in "
                            "the fragment");
      p.disequations.push_back(Equation{lhs, rhs});
      p.disequation_names.push_back(c.name);
    }
  }
  return p;
}

SaturationDump parse_saturation(std::string_view text) {
  Lexer lex(text);
  SaturationDump d;
  while (!lex.at_end()) {
    Signature staged = d.signature;
    try {
      RawClause c = parse_cnf_clause(lex, staged, /*allow_arrow=*/true);
      auto [lhs, rhs] = canonical_pair(c.lhs, c.rhs);
      if (c.op == Tok::Neq) {
        d.ignored_disequations.push_back(Equation{lhs, rhs});
      } else {
        d.equations.push_back(
            DumpEquation{Equation{lhs, rhs}, c.op == Tok::Arrow});
        d.equation_names.push_back(c.name);
      }
      d.signature = std::move(staged);
    } catch (const ParseError&) {
      lex.abandon_line();
      ++d.skipped_lines;
    }
    // FragmentError propagates: a well-formed clause outside the fragment is
    // a real problem, not chatter.
  }
  return d;
}

Term parse_term_text(std::string_view text, Signature* sig) {
  Lexer lex(text);
  Signature local;
  Signature& target = sig ? *sig : local;
  Term t = parse_term(lex, target);
  Token end = lex.next();
  if (end.kind != Tok::End) lex.fail("trailing input after term", end);
  return rename_canonical(t);
}

Equation parse_equation_text(std::string_view text, Signature* sig) {
  Lexer lex(text);
  Signature local;
  Signature& target = sig ? *sig : local;
  Term lhs = parse_term(lex, target);
  expect(lex, Tok::Eq, "'='");
  Term rhs = parse_term(lex, target);
  Token end = lex.next();
  if (end.kind != Tok::End) lex.fail("trailing input after equation", end);
  return rename_equation_canonical(Equation{lhs, rhs});
}

// ---------------------------------------------------------------------------
// Writers

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string quote_symbol(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\\' || c == '\'') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string upper_var(const std::string& name) {
  std::string out = name;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

void render_tptp(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += upper_var(t.head());
    return;
  }
  out += is_lower_word(t.head()) ? t.head() : quote_symbol(t.head());
  if (t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    render_tptp(t.args()[i], out);
  }
  out += ')';
}

std::string clause_line(const std::string& name, const std::string& role,
                        const Term& lhs, const std::string& op,
                        const Term& rhs) {
  std::string out = "cnf(" + name + ", " + role + ", ";
  render_tptp(lhs, out);
  out += " " + op + " ";
  render_tptp(rhs, out);
  return out + ").\n";
}

}  // namespace

std::string tptp_term(const Term& t) {
  std::string out;
  render_tptp(t, out);
  return out;
}

std::string write_problem(const Problem& p) {
  std::string out;
  for (std::size_t i = 0; i < p.axioms.size(); ++i) {
    std::string name =
        i < p.axiom_names.size() && !p.axiom_names[i].empty()
            ? p.axiom_names[i]
            : "a" + std::to_string(i);
    out += clause_line(name, "axiom", p.axioms[i].lhs, "=", p.axioms[i].rhs);
  }
  for (std::size_t i = 0; i < p.disequations.size(); ++i) {
    std::string name =
        i < p.disequation_names.size() && !p.disequation_names[i].empty()
            ? p.disequation_names[i]
            : "g" + std::to_string(i);
    out += clause_line(name, "negated_conjecture", p.disequations[i].lhs, "!=",
                       p.disequations[i].rhs);
  }
  return out;
}

std::string write_saturation(const SaturationDump& d) {
  std::string out;
  for (std::size_t i = 0; i < d.equations.size(); ++i) {
    std::string name =
        i < d.equation_names.size() && !d.equation_names[i].empty()
            ? d.equation_names[i]
            : "e" + std::to_string(i);
    const DumpEquation& e = d.equations[i];
    out += clause_line(name, "axiom", e.eq.lhs, e.oriented ? "->" : "=",
                       e.eq.rhs);
  }
  for (std::size_t i = 0; i < d.ignored_disequations.size(); ++i) {
    const Equation& e = d.ignored_disequations[i];
    out += clause_line("g" + std::to_string(i), "negated_conjecture", e.lhs,
                       "!=", e.rhs);
  }
  return out;
}

namespace {

bool is_trs_id(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

void render_trs(const Term& t, const std::map<std::string, std::string>& alias,
                std::string& out) {
  if (t.is_var()) {
    out += t.head();
    return;
  }
  auto it = alias.find(t.head());
  out += it == alias.end() ? t.head() : it->second;
  if (t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    render_trs(t.args()[i], alias, out);
  }
  out += ')';
}

}  // namespace

std::string write_trs(const std::vector<Equation>& rules) {
  // Variables in first-occurrence order across all rules.
  std::vector<std::string> vars;
  std::vector<std::string> symbols;
  for (const Equation& r : rules) {
    for (const Term& side : {r.lhs, r.rhs}) {
      for (const auto& [pos, sub] : subterm_positions(side)) {
        (void)pos;
        auto& list = sub.is_var() ? vars : symbols;
        if (std::find(list.begin(), list.end(), sub.head()) == list.end())
          list.push_back(sub.head());
      }
    }
  }

  auto taken = [&](const std::string& name,
                   const std::map<std::string, std::string>& alias) {
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) return true;
    for (const std::string& s : symbols)
      if (s == name && alias.find(s) == alias.end()) return true;
    for (const auto& [orig, a] : alias)
      if (a == name) return true;
    return false;
  };

  std::map<std::string, std::string> alias;
  for (const std::string& s : symbols) {
    if (is_trs_id(s) &&
        std::find(vars.begin(), vars.end(), s) == vars.end())
      continue;
    std::string base = s == "*" ? "m" : "";
    if (base.empty()) {
      for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
          base += c;
      if (base.empty()) base = "op";
    }
    std::string candidate = base;
    for (std::size_t n = 1; taken(candidate, alias); ++n)
      candidate = base + std::to_string(n);
    alias.emplace(s, candidate);
  }

  std::string out;
  if (!alias.empty()) {
    out += "(COMMENT\n";
    for (const auto& [orig, a] : alias)
      out += "  aliased " + a + " = " + orig + "\n";
    out += ")\n";
  }
  out += "(VAR";
  for (const std::string& v : vars) out += " " + v;
  out += ")\n(RULES\n";
  for (const Equation& r : rules) {
    out += "  ";
    render_trs(r.lhs, alias, out);
    out += " -> ";
    render_trs(r.rhs, alias, out);
    out += "\n";
  }
  out += ")\n";
  return out;
}

}  // namespace ueq
