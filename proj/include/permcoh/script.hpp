#ifndef PERMCOH_SCRIPT_HPP
#define PERMCOH_SCRIPT_HPP

#include <cctype>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "permcoh/coherence.hpp"
#include "permcoh/macros.hpp"
#include "permcoh/semantics.hpp"
#include "permcoh/term.hpp"

namespace permcoh {

class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

/// A parsed batch script: one generator declaration, then object and
/// morphism bindings and check statements, in source order.
struct Script {
  struct GensStmt { std::vector<Registry::Entry> entries; };
  struct ObjDef { std::string name; Word value; };
  struct MorDef { std::string name; Term value; };
  struct CheckEq { std::string lhs, rhs; };
  struct AssertParity { std::string gen, mor; Parity expected; };
  struct AssertPerm { std::string gen, mor; Permutation expected; };
  using Statement =
      std::variant<GensStmt, ObjDef, MorDef, CheckEq, AssertParity, AssertPerm>;

  RegistryPtr registry;
  std::vector<Statement> statements;
  std::map<std::string, Word> objects;
  std::map<std::string, Term> morphisms;
};

namespace detail {

struct Token {
  enum class Kind { Name, Int, Prime, Bang, Eq, EqEq, Plus, Semi, LParen, RParen,
                    Pipe, LBracket, RBracket, Comma, End };
  Kind kind;
  std::string text;
  int line = 1, col = 1;
};

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string s) {
    out.push_back({k, std::move(s), line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
    if (c == '#') { while (i < text.size() && text[i] != '\n') ++i; continue; }
    int start_col = col;
    if (is_name_start(c)) {
      size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      out.push_back({Token::Kind::Name, text.substr(i, j - i), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Int, text.substr(i, j - i), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '\'': push(Token::Kind::Prime, "'"); break;
      case '!': push(Token::Kind::Bang, "!"); break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(Token::Kind::EqEq, "==");
          ++i; ++col;
        } else {
          push(Token::Kind::Eq, "=");
        }
        break;
      case '+': push(Token::Kind::Plus, "+"); break;
      case ';': push(Token::Kind::Semi, ";"); break;
      case '(': push(Token::Kind::LParen, "("); break;
      case ')': push(Token::Kind::RParen, ")"); break;
      case '|': push(Token::Kind::Pipe, "|"); break;
      case '[': push(Token::Kind::LBracket, "["); break;
      case ']': push(Token::Kind::RBracket, "]"); break;
      case ',': push(Token::Kind::Comma, ","); break;
      default:
        throw ParseError(line, start_col, std::string("unexpected character '") + c + "'");
    }
    ++i; ++col;
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

inline const char* const kKeywords[] = {"gens", "obj", "mor", "check", "assert",
                                        "parity", "perm", "even", "odd", "id",
                                        "beta", "eta", "eps", "inv", "eight",
                                        "figC", "figH"};

inline bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Script parse() {
    Script script;
    while (!at(Token::Kind::End)) {
      const Token& t = peek();
      if (t.kind != Token::Kind::Name)
        throw ParseError(t.line, t.col, "expected a statement");
      if (t.text == "gens") parse_gens(script);
      else if (t.text == "obj") parse_obj(script);
      else if (t.text == "mor") parse_mor(script);
      else if (t.text == "check") parse_check(script);
      else if (t.text == "assert") parse_assert(script);
      else throw ParseError(t.line, t.col, "expected gens, obj, mor, check, or assert");
    }
    return script;
  }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Token::Kind k) const { return peek().kind == k; }
  Token next() { return toks_[pos_++]; }
  Token expect(Token::Kind k, const std::string& what) {
    const Token& t = peek();
    if (t.kind != k) throw ParseError(t.line, t.col, "expected " + what);
    return next();
  }

  std::string expect_plain_name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Name || is_keyword(t.text))
      throw ParseError(t.line, t.col, "expected " + what);
    return next().text;
  }

  void parse_gens(Script& script) {
    Token kw = next();
    if (script.registry)
      throw ParseError(kw.line, kw.col, "a script declares its generators once");
    Script::GensStmt stmt;
    auto reg = std::make_shared<Registry>();
    while (peek().kind == Token::Kind::Name && !is_keyword(peek().text)) {
      Token name = next();
      bool invertible = false;
      if (at(Token::Kind::Bang)) {
        next();
        invertible = true;
      }
      if (reg->contains(name.text))
        throw ParseError(name.line, name.col, "duplicate generator " + name.text);
      reg->add(name.text, invertible);
      stmt.entries.push_back({name.text, invertible});
    }
    if (stmt.entries.empty()) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, "gens needs at least one generator");
    }
    script.registry = reg;
    script.statements.push_back(std::move(stmt));
  }

  const RegistryPtr& registry(const Script& script, const Token& where) const {
    if (!script.registry)
      throw ParseError(where.line, where.col, "generators must be declared before use");
    return script.registry;
  }

  // word := "0" | LETTER+ ; LETTER := NAME "'"? . A name resolves to a
  // generator, or failing that to a bound object, which is spliced in.
  Word parse_word(Script& script, Token::Kind stop1, Token::Kind stop2) {
    const Token& first = peek();
    const RegistryPtr& reg = registry(script, first);
    if (first.kind == Token::Kind::Int && first.text == "0") {
      next();
      return Word::empty(reg);
    }
    Word out = Word::empty(reg);
    bool any = false;
    while (peek().kind == Token::Kind::Name && !is_keyword(peek().text)) {
      Token name = next();
      bool primed = false;
      if (at(Token::Kind::Prime)) {
        next();
        primed = true;
      }
      if (reg->contains(name.text)) {
        int gen = reg->index_of(name.text);
        if (primed && !reg->invertible(gen))
          throw ParseError(name.line, name.col,
                           "generator " + name.text + " is not invertible");
        out = out + Word(reg, {{gen, primed}});
      } else if (auto it = script.objects.find(name.text); it != script.objects.end()) {
        if (primed)
          throw ParseError(name.line, name.col, "object names cannot be primed");
        out = out + it->second;
      } else {
        throw ParseError(name.line, name.col, "unknown generator " + name.text);
      }
      any = true;
    }
    if (!any) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, "expected a word");
    }
    (void)stop1;
    (void)stop2;
    return out;
  }

  void parse_obj(Script& script) {
    next();
    std::string name = expect_plain_name("an object name");
    check_unbound(script, name);
    expect(Token::Kind::Eq, "=");
    Word value = parse_word(script, Token::Kind::End, Token::Kind::End);
    script.objects.emplace(name, value);
    script.statements.push_back(Script::ObjDef{name, std::move(value)});
  }

  void parse_mor(Script& script) {
    next();
    std::string name = expect_plain_name("a morphism name");
    check_unbound(script, name);
    expect(Token::Kind::Eq, "=");
    Term value = parse_expr(script);
    script.morphisms.emplace(name, value);
    script.statements.push_back(Script::MorDef{name, std::move(value)});
  }

  void check_unbound(const Script& script, const std::string& name) {
    if (script.objects.count(name) || script.morphisms.count(name)) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, "name " + name + " is already bound");
    }
  }

  Term parse_expr(Script& script) {
    std::vector<Term> parts{parse_comp(script)};
    while (at(Token::Kind::Plus)) {
      next();
      parts.push_back(parse_comp(script));
    }
    return parts.size() == 1 ? parts.front() : Term::sum(std::move(parts));
  }

  Term parse_comp(Script& script) {
    std::vector<Term> stages{parse_atom(script)};
    while (at(Token::Kind::Semi)) {
      next();
      stages.push_back(parse_atom(script));
    }
    return stages.size() == 1 ? stages.front() : Term::comp(std::move(stages));
  }

  int parse_gen_name(Script& script) {
    const Token& t = peek();
    std::string name = expect_plain_name("a generator name");
    const RegistryPtr& reg = registry(script, t);
    if (!reg->contains(name))
      throw ParseError(t.line, t.col, "unknown generator " + name);
    return reg->index_of(name);
  }

  Term parse_atom(Script& script) {
    const Token& t = peek();
    if (t.kind == Token::Kind::LParen) {
      next();
      Term inner = parse_expr(script);
      expect(Token::Kind::RParen, ")");
      return inner;
    }
    if (t.kind != Token::Kind::Name)
      throw ParseError(t.line, t.col, "expected a morphism expression");
    const std::string& head = t.text;
    try {
      if (head == "id") {
        next();
        expect(Token::Kind::LParen, "(");
        Word w = at(Token::Kind::Int) && peek().text == "0"
                     ? (next(), Word::empty(registry(script, t)))
                     : parse_word(script, Token::Kind::RParen, Token::Kind::RParen);
        expect(Token::Kind::RParen, ")");
        return Term::id(std::move(w));
      }
      if (head == "beta") {
        next();
        expect(Token::Kind::LParen, "(");
        Word x = parse_beta_side(script);
        expect(Token::Kind::Pipe, "|");
        Word y = parse_beta_side(script);
        expect(Token::Kind::RParen, ")");
        return Term::beta(std::move(x), std::move(y));
      }
      if (head == "eta" || head == "eps") {
        next();
        expect(Token::Kind::LParen, "(");
        int gen = parse_gen_name(script);
        expect(Token::Kind::RParen, ")");
        return head == "eta" ? Term::eta(script.registry, gen)
                             : Term::eps(script.registry, gen);
      }
      if (head == "inv") {
        next();
        expect(Token::Kind::LParen, "(");
        Term inner = parse_atom(script);
        expect(Token::Kind::RParen, ")");
        return Term::inv(std::move(inner));
      }
      if (head == "eight" || head == "figC" || head == "figH") {
        next();
        expect(Token::Kind::LParen, "(");
        int gen = parse_gen_name(script);
        expect(Token::Kind::RParen, ")");
        if (head == "eight") return figure_eight(script.registry, gen);
        if (head == "figC") return figure_c(script.registry, gen);
        return figure_h(script.registry, gen);
      }
    } catch (const TypeCheckError& e) {
      throw ParseError(t.line, t.col, e.what());
    } catch (const NotInvertibleError& e) {
      throw ParseError(t.line, t.col, e.what());
    }
    if (is_keyword(head))
      throw ParseError(t.line, t.col, head + " is a reserved word");
    next();
    auto it = script.morphisms.find(head);
    if (it == script.morphisms.end())
      throw ParseError(t.line, t.col, "unknown morphism " + head);
    return it->second;
  }

  Word parse_beta_side(Script& script) {
    if (at(Token::Kind::Int) && peek().text == "0") {
      Token z = next();
      return Word::empty(registry(script, z));
    }
    return parse_word(script, Token::Kind::Pipe, Token::Kind::RParen);
  }

  void parse_check(Script& script) {
    next();
    Token where = peek();
    std::string lhs = expect_plain_name("a morphism name");
    expect(Token::Kind::EqEq, "==");
    std::string rhs = expect_plain_name("a morphism name");
    if (!script.morphisms.count(lhs))
      throw ParseError(where.line, where.col, "unknown morphism " + lhs);
    if (!script.morphisms.count(rhs))
      throw ParseError(where.line, where.col, "unknown morphism " + rhs);
    script.statements.push_back(Script::CheckEq{lhs, rhs});
  }

  void parse_assert(Script& script) {
    next();
    const Token& what = peek();
    if (what.kind != Token::Kind::Name || (what.text != "parity" && what.text != "perm"))
      throw ParseError(what.line, what.col, "expected parity or perm after assert");
    bool is_parity = what.text == "parity";
    next();
    Token where = peek();
    std::string gen = expect_plain_name("a generator name");
    std::string mor = expect_plain_name("a morphism name");
    if (!script.registry || !script.registry->contains(gen))
      throw ParseError(where.line, where.col, "unknown generator " + gen);
    if (!script.morphisms.count(mor))
      throw ParseError(where.line, where.col, "unknown morphism " + mor);
    expect(Token::Kind::Eq, "=");
    if (is_parity) {
      const Token& v = peek();
      if (v.kind != Token::Kind::Name || (v.text != "even" && v.text != "odd"))
        throw ParseError(v.line, v.col, "expected even or odd");
      next();
      script.statements.push_back(
          Script::AssertParity{gen, mor, v.text == "odd" ? Parity::Odd : Parity::Even});
    } else {
      expect(Token::Kind::LBracket, "[");
      std::vector<int> images;
      if (!at(Token::Kind::RBracket)) {
        images.push_back(std::stoi(expect(Token::Kind::Int, "an integer").text));
        while (at(Token::Kind::Comma)) {
          next();
          images.push_back(std::stoi(expect(Token::Kind::Int, "an integer").text));
        }
      }
      Token close = expect(Token::Kind::RBracket, "]");
      Permutation expected;
      try {
        expected = Permutation::one_line(images);
      } catch (const Error& e) {
        throw ParseError(close.line, close.col, e.what());
      }
      script.statements.push_back(Script::AssertPerm{gen, mor, std::move(expected)});
    }
  }
};

} // namespace detail

inline Script parse_script(const std::string& text) {
  return detail::Parser(text).parse();
}

/// Canonical rendering; parse(render(parse(s))) equals parse(s).
inline std::string render_script(const Script& script) {
  std::string out;
  for (const auto& stmt : script.statements) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Script::GensStmt>) {
            out += "gens";
            for (const auto& e : s.entries) {
              out += " " + e.name;
              if (e.invertible) out += "!";
            }
          } else if constexpr (std::is_same_v<T, Script::ObjDef>) {
            out += "obj " + s.name + " = " + s.value.str();
          } else if constexpr (std::is_same_v<T, Script::MorDef>) {
            out += "mor " + s.name + " = " + s.value.str();
          } else if constexpr (std::is_same_v<T, Script::CheckEq>) {
            out += "check " + s.lhs + " == " + s.rhs;
          } else if constexpr (std::is_same_v<T, Script::AssertParity>) {
            out += "assert parity " + s.gen + " " + s.mor + " = " + to_string(s.expected);
          } else {
            out += "assert perm " + s.gen + " " + s.mor + " = " + s.expected.str();
          }
          out += "\n";
        },
        stmt);
  }
  return out;
}

/// Execution results for one script. Exit status contract: 0 when every
/// check holds, 1 when any check fails, 2 on parse or type errors (the
/// latter surface as exceptions before a Report exists).
struct Report {
  struct Witness {
    std::string generator;
    std::string kind; // "parity", "permutation", or "boundary"
    std::string lhs;
    std::string rhs;
  };
  struct Result {
    std::string check;
    std::string status; // equal | not-parallel | differs | holds | fails
    std::vector<Witness> witnesses;
  };
  std::vector<Result> results;
  int passed = 0;
  int failed = 0;
  int exit_status = 0;
};

inline Report run_script(const Script& script) {
  for (const auto& stmt : script.statements) {
    if (const auto* def = std::get_if<Script::MorDef>(&stmt)) require_well_typed(def->value);
  }

  Report report;
  auto record = [&report](Report::Result r, bool ok) {
    (ok ? report.passed : report.failed)++;
    report.results.push_back(std::move(r));
  };

  for (const auto& stmt : script.statements) {
    if (const auto* c = std::get_if<Script::CheckEq>(&stmt)) {
      Verdict v = check_equal(script.morphisms.at(c->lhs), script.morphisms.at(c->rhs));
      Report::Result r;
      r.check = c->lhs + " == " + c->rhs;
      r.status = v.status_str();
      for (const auto& w : v.witnesses)
        r.witnesses.push_back({w.generator, to_string(w.kind), w.lhs, w.rhs});
      if (v.boundary) {
        const auto& b = *v.boundary;
        r.witnesses.push_back({"", "boundary", b.lhs_src.str() + " -> " + b.lhs_tgt.str(),
                               b.rhs_src.str() + " -> " + b.rhs_tgt.str()});
      }
      record(std::move(r), v.equal());
    } else if (const auto* p = std::get_if<Script::AssertParity>(&stmt)) {
      Parity actual = a_parity(script.morphisms.at(p->mor), p->gen);
      Report::Result r;
      r.check = "parity " + p->gen + " " + p->mor + " = " + to_string(p->expected);
      bool ok = actual == p->expected;
      r.status = ok ? "holds" : "fails";
      if (!ok)
        r.witnesses.push_back({p->gen, "parity", to_string(actual), to_string(p->expected)});
      record(std::move(r), ok);
    } else if (const auto* q = std::get_if<Script::AssertPerm>(&stmt)) {
      const RegistryPtr& reg = script.registry;
      if (reg->invertible(reg->index_of(q->gen)))
        throw Error("perm assertions need a plain generator; " + q->gen + " is invertible");
      Permutation actual = a_permutation(script.morphisms.at(q->mor), q->gen);
      Report::Result r;
      r.check = "perm " + q->gen + " " + q->mor + " = " + q->expected.str();
      bool ok = actual == q->expected;
      r.status = ok ? "holds" : "fails";
      if (!ok)
        r.witnesses.push_back({q->gen, "permutation", actual.str(), q->expected.str()});
      record(std::move(r), ok);
    }
  }
  report.exit_status = report.failed == 0 ? 0 : 1;
  return report;
}

enum class ReportFormat { Text, Json };

/// Serializes a report. The JSON field order is fixed and the output is
/// byte-stable for a fixed script: results in statement order, witnesses in
/// registry order.
inline std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
      nlohmann::ordered_json jr;
      jr["check"] = r.check;
      jr["status"] = r.status;
      jr["witnesses"] = nlohmann::ordered_json::array();
      for (const auto& w : r.witnesses) {
        nlohmann::ordered_json jw;
        jw["generator"] = w.generator;
        jw["kind"] = w.kind;
        jw["lhs"] = w.lhs;
        jw["rhs"] = w.rhs;
        jr["witnesses"].push_back(std::move(jw));
      }
      doc["results"].push_back(std::move(jr));
    }
    doc["summary"] = {{"passed", report.passed}, {"failed", report.failed}};
    return doc.dump();
  }
  std::string out;
  for (const auto& r : report.results) {
    bool ok = r.status == "equal" || r.status == "holds";
    out += ok ? "ok   " : "FAIL ";
    out += r.check + " [" + r.status + "]";
    for (const auto& w : r.witnesses) {
      out += "  ";
      if (!w.generator.empty()) out += w.generator + ": ";
      out += w.kind + " " + w.lhs + " vs " + w.rhs;
    }
    out += "\n";
  }
  out += "summary: " + std::to_string(report.passed) + " passed, " +
         std::to_string(report.failed) + " failed\n";
  return out;
}

} // namespace permcoh

#endif
