#ifndef GSC_EULER_HPP
#define GSC_EULER_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsc/error.hpp"
#include "gsc/laurent_poly.hpp"

namespace gsc {

struct SourcePos {
  int line = 1;
  int column = 1;
  std::string str() const {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
  }
};

struct SpaceExpr;
using ExprPtr = std::shared_ptr<const SpaceExpr>;

/// One supplied intersection of union parts; a null value means "empty".
struct Intersection {
  std::vector<std::size_t> parts;  // sorted indices into the union's parts
  ExprPtr value;
  SourcePos pos;
};

struct SpaceExpr {
  enum class Kind { point, projective, affine, product, disjoint_union, fibration, cut, union_ie, named, literal };
  Kind kind = Kind::point;
  Integer n = 0;                   // dimension, or the literal value
  std::string name;                // for `named`
  std::vector<ExprPtr> children;   // operands, or the parts of a union
  std::vector<Intersection> intersections;
  SourcePos pos;
};

struct Definition {
  std::string name;
  ExprPtr expr;
  SourcePos pos;
};

/// `assert x == 3;` is stored with a single allowed value.
struct Assertion {
  std::string name;
  std::vector<Integer> allowed;
  bool interval = false;  // written as assert_in
  SourcePos pos;
};

struct Script {
  std::vector<Definition> definitions;
  std::vector<Assertion> assertions;

  const Definition* find(const std::string& name) const {
    for (const auto& d : definitions)
      if (d.name == name) return &d;
    return nullptr;
  }
};

namespace detail {

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  SourcePos pos;
};

class EulerLexer {
 public:
  explicit EulerLexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.pos = here();
      if (i_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::ident;
        while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                                     text_[i_] == '_' || text_[i_] == '\''))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::integer;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
          t.text += advance();
      } else if (text_.substr(i_, 3) == "|+|") {
        t.kind = Token::Kind::symbol;
        t.text = "|+|";
        advance(), advance(), advance();
      } else if (text_.substr(i_, 2) == "==") {
        t.kind = Token::Kind::symbol;
        t.text = "==";
        advance(), advance();
      } else if (std::string_view("=*\\(){},;-").find(c) != std::string_view::npos) {
        t.kind = Token::Kind::symbol;
        t.text = std::string(1, advance());
      } else {
        throw Error(ErrorKind::parse, "syntax error at " + t.pos.str() + ": unexpected character '" +
                                          std::string(1, c) + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  SourcePos here() const { return {line_, col_}; }
  char advance() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space_and_comments() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline bool is_keyword(const std::string& s) {
  static const std::set<std::string> kw = {"pt", "chi", "fib", "union", "inter", "empty", "assert", "assert_in"};
  return kw.count(s) > 0;
}

/// P<n> or A<n>; returns the dimension or -1.
inline long long space_atom_dim(const std::string& s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return -1;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
  if (s.size() > 12) return -1;
  return std::stoll(s.substr(1));
}

class EulerParser {
 public:
  explicit EulerParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script script() {
    Script s;
    while (peek().kind != Token::Kind::end) {
      const Token& t = peek();
      if (t.kind == Token::Kind::ident && (t.text == "assert" || t.text == "assert_in")) {
        s.assertions.push_back(assertion());
      } else {
        Definition d;
        d.pos = t.pos;
        d.name = name("a definition");
        expect("=");
        d.expr = expr();
        expect(";");
        if (s.find(d.name))
          throw Error(ErrorKind::parse,
                      "duplicate definition of '" + d.name + "' at " + d.pos.str());
        s.definitions.push_back(std::move(d));
      }
    }
    return s;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  Token take() { return toks_[k_ == toks_.size() - 1 ? k_ : k_++]; }
  bool at(std::string_view sym) const {
    return peek().kind == Token::Kind::symbol && peek().text == sym;
  }
  bool at_word(std::string_view w) const {
    return peek().kind == Token::Kind::ident && peek().text == w;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorKind::parse, "syntax error at " + t.pos.str() + ": expected " + what + ", found " + found);
  }
  void expect(std::string_view sym) {
    if (!at(sym)) fail("'" + std::string(sym) + "'");
    take();
  }
  std::string name(const std::string& what) {
    if (peek().kind != Token::Kind::ident || is_keyword(peek().text) ||
        space_atom_dim(peek().text, 'P') >= 0 || space_atom_dim(peek().text, 'A') >= 0)
      fail("a name for " + what);
    return take().text;
  }
  Integer integer() {
    bool neg = false;
    if (at("-")) {
      take();
      neg = true;
    }
    if (peek().kind != Token::Kind::integer) fail("an integer");
    Integer v(take().text);
    return neg ? Integer(-v) : v;
  }

  Assertion assertion() {
    Assertion a;
    a.pos = peek().pos;
    a.interval = take().text == "assert_in";
    a.name = name("an assertion");
    if (a.interval) {
      expect("{");
      a.allowed.push_back(integer());
      while (at(",")) {
        take();
        a.allowed.push_back(integer());
      }
      expect("}");
    } else {
      expect("==");
      a.allowed.push_back(integer());
    }
    expect(";");
    return a;
  }

  // expr := term { ('|+|' | '\') term }
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at("|+|") || at("\\")) {
      const Token op = take();
      ExprPtr rhs = term();
      auto e = std::make_shared<SpaceExpr>();
      e->pos = op.pos;
      if (op.text == "\\") {
        e->kind = SpaceExpr::Kind::cut;
        e->children = {lhs, rhs};
      } else {
        e->kind = SpaceExpr::Kind::disjoint_union;
        if (lhs->kind == SpaceExpr::Kind::disjoint_union) e->children = lhs->children;
        else e->children = {lhs};
        e->children.push_back(rhs);
      }
      lhs = e;
    }
    return lhs;
  }

  // term := factor { '*' factor }
  ExprPtr term() {
    ExprPtr first = factor();
    if (!at("*")) return first;
    auto e = std::make_shared<SpaceExpr>();
    e->kind = SpaceExpr::Kind::product;
    e->pos = first->pos;
    e->children.push_back(first);
    while (at("*")) {
      take();
      e->children.push_back(factor());
    }
    return e;
  }

  ExprPtr factor() {
    if (at("(")) {
      take();
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (peek().kind != Token::Kind::ident) fail("an expression");
    auto e = std::make_shared<SpaceExpr>();
    e->pos = peek().pos;
    const std::string word = take().text;
    if (word == "pt") {
      e->kind = SpaceExpr::Kind::point;
    } else if (long long d = space_atom_dim(word, 'P'); d >= 0) {
      e->kind = SpaceExpr::Kind::projective;
      e->n = d;
    } else if (long long d2 = space_atom_dim(word, 'A'); d2 >= 0) {
      e->kind = SpaceExpr::Kind::affine;
      e->n = d2;
    } else if (word == "chi") {
      e->kind = SpaceExpr::Kind::literal;
      expect("(");
      e->n = integer();
      expect(")");
    } else if (word == "fib") {
      e->kind = SpaceExpr::Kind::fibration;
      expect("(");
      e->children.push_back(expr());
      expect(",");
      e->children.push_back(expr());
      expect(")");
    } else if (word == "union") {
      union_body(*e);
    } else if (is_keyword(word)) {
      --k_;
      fail("an expression");
    } else {
      e->kind = SpaceExpr::Kind::named;
      e->name = word;
    }
    return e;
  }

  // union{A, B, C; inter(A,B)=expr; inter(B,C)=empty}
  void union_body(SpaceExpr& e) {
    e.kind = SpaceExpr::Kind::union_ie;
    expect("{");
    std::vector<std::string> names;
    auto part = [&] {
      auto p = std::make_shared<SpaceExpr>();
      p->pos = peek().pos;
      p->kind = SpaceExpr::Kind::named;
      p->name = name("a union part");
      for (const auto& n : names)
        if (n == p->name) throw Error(ErrorKind::parse, "repeated union part '" + n + "' at " + p->pos.str());
      names.push_back(p->name);
      e.children.push_back(p);
    };
    part();
    while (at(",")) {
      take();
      part();
    }
    while (at(";")) {
      take();
      if (at("}")) break;
      if (!at_word("inter")) fail("'inter'");
      Intersection in;
      in.pos = take().pos;
      expect("(");
      auto ref = [&] {
        const SourcePos pos = peek().pos;
        const std::string n = name("an intersection part");
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == n) return i;
        throw Error(ErrorKind::parse, "'" + n + "' at " + pos.str() + " is not a part of this union");
      };
      in.parts.push_back(ref());
      while (at(",")) {
        take();
        in.parts.push_back(ref());
      }
      expect(")");
      std::sort(in.parts.begin(), in.parts.end());
      if (std::adjacent_find(in.parts.begin(), in.parts.end()) != in.parts.end() || in.parts.size() < 2)
        throw Error(ErrorKind::parse, "an intersection needs at least two distinct parts at " + in.pos.str());
      expect("=");
      if (at_word("empty")) take();
      else in.value = expr();
      for (const auto& other : e.intersections)
        if (other.parts == in.parts)
          throw Error(ErrorKind::parse, "intersection given twice at " + in.pos.str());
      e.intersections.push_back(std::move(in));
    }
    expect("}");
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

inline void collect_names(const SpaceExpr& e, std::vector<const SpaceExpr*>& out) {
  if (e.kind == SpaceExpr::Kind::named) out.push_back(&e);
  for (const auto& c : e.children) collect_names(*c, out);
  for (const auto& in : e.intersections)
    if (in.value) collect_names(*in.value, out);
}

}  // namespace detail

/// Parses and checks a script: every referenced name must be defined
/// somewhere in the file (order does not matter) and definitions must not
/// depend on themselves.
inline Script parse_script(std::string_view text) {
  Script s = detail::EulerParser(detail::EulerLexer(text).run()).script();

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < s.definitions.size(); ++i) index[s.definitions[i].name] = i;
  std::vector<std::vector<std::size_t>> deps(s.definitions.size());
  for (std::size_t i = 0; i < s.definitions.size(); ++i) {
    std::vector<const SpaceExpr*> refs;
    detail::collect_names(*s.definitions[i].expr, refs);
    for (const auto* r : refs) {
      auto it = index.find(r->name);
      if (it == index.end())
        throw Error(ErrorKind::undefined_name, "undefined name '" + r->name + "' at " + r->pos.str());
      deps[i].push_back(it->second);
    }
  }
  for (const auto& a : s.assertions)
    if (!index.count(a.name))
      throw Error(ErrorKind::undefined_name, "undefined name '" + a.name + "' at " + a.pos.str());

  // 0 = unvisited, 1 = on the stack, 2 = done
  std::vector<int> state(s.definitions.size(), 0);
  auto visit = [&](auto&& self, std::size_t v) -> void {
    state[v] = 1;
    for (auto w : deps[v]) {
      if (state[w] == 1)
        throw Error(ErrorKind::cyclic_definition, "cyclic definition involving '" +
                                                      s.definitions[w].name + "' at " +
                                                      s.definitions[w].pos.str());
      if (state[w] == 0) self(self, w);
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < s.definitions.size(); ++v)
    if (state[v] == 0) visit(visit, v);
  return s;
}

/// Compactly supported Euler characteristics of the definitions of a script.
class EulerEvaluator {
 public:
  explicit EulerEvaluator(const Script& s) : script_(s) {}

  Integer value(const std::string& name) {
    if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    const Definition* d = script_.find(name);
    if (!d) throw Error(ErrorKind::undefined_name, "undefined name '" + name + "'");
    if (!active_.insert(name).second)
      throw Error(ErrorKind::cyclic_definition, "cyclic definition involving '" + name + "'");
    const Integer v = eval(*d->expr);
    active_.erase(name);
    memo_.emplace(name, v);
    return v;
  }

  Integer eval(const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    switch (e.kind) {
      case K::point: return 1;
      case K::projective: return e.n + 1;
      case K::affine: return 1;
      case K::literal: return e.n;
      case K::named: return value(e.name);
      case K::product: {
        Integer p = 1;
        for (const auto& c : e.children) p *= eval(*c);
        return p;
      }
      case K::disjoint_union: {
        Integer s = 0;
        for (const auto& c : e.children) s += eval(*c);
        return s;
      }
      case K::fibration: return eval(*e.children[0]) * eval(*e.children[1]);
      case K::cut: return eval(*e.children[0]) - eval(*e.children[1]);
      case K::union_ie: return inclusion_exclusion(e);
    }
    return 0;
  }

 private:
  // chi(union) = sum over nonempty S of (-1)^{|S|+1} chi(intersection of S).
  Integer inclusion_exclusion(const SpaceExpr& e) {
    const std::size_t k = e.children.size();
    if (k > 20) throw Error(ErrorKind::too_large, "union with too many parts at " + e.pos.str());
    Integer total = 0;
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<std::size_t> parts;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ul << i)) parts.push_back(i);
      Integer chi;
      if (parts.size() == 1) {
        chi = eval(*e.children[parts[0]]);
      } else {
        chi = intersection_chi(e, parts);
      }
      total += (parts.size() % 2 ? chi : Integer(-chi));
    }
    return total;
  }

  Integer intersection_chi(const SpaceExpr& e, const std::vector<std::size_t>& parts) {
    for (const auto& in : e.intersections)
      if (in.parts == parts) return in.value ? eval(*in.value) : Integer(0);
    for (const auto& in : e.intersections)
      if (!in.value && std::includes(parts.begin(), parts.end(), in.parts.begin(), in.parts.end()))
        return 0;
    std::string names;
    for (auto i : parts) names += (names.empty() ? "" : ",") + e.children[i]->name;
    throw Error(ErrorKind::missing_intersection,
                "missing intersection inter(" + names + ") in union at " + e.pos.str());
  }

  const Script& script_;
  std::map<std::string, Integer> memo_;
  std::set<std::string> active_;
};

/// Euler characteristic of a closed expression (no names).
inline Integer euler(const SpaceExpr& e) {
  static const Script empty;
  return EulerEvaluator(empty).eval(e);
}

struct ScriptReport {
  struct Row {
    std::string name;
    Integer chi;
    std::string status;  // pass, fail or -
  };
  std::vector<Row> rows;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  const Row& row(const std::string& name) const {
    for (const auto& r : rows)
      if (r.name == name) return r;
    throw Error(ErrorKind::undefined_name, "undefined name '" + name + "'");
  }
};

inline ScriptReport run_script(const Script& s) {
  EulerEvaluator ev(s);
  ScriptReport rep;
  std::map<std::string, std::string> status;
  for (const auto& a : s.assertions) {
    const Integer v = ev.value(a.name);
    bool pass = false;
    for (const auto& x : a.allowed) pass = pass || x == v;
    auto& st = status[a.name];
    if (!pass) {
      st = "fail";
      std::string want;
      for (const auto& x : a.allowed) want += (want.empty() ? "" : ",") + x.str();
      rep.failures.push_back("assertion failed at " + a.pos.str() + ": " + a.name + " = " + v.str() +
                             (a.interval ? ", expected one of {" + want + "}" : ", expected " + want));
    } else if (st.empty()) {
      st = "pass";
    }
  }
  for (const auto& d : s.definitions) {
    auto it = status.find(d.name);
    rep.rows.push_back({d.name, ev.value(d.name), it == status.end() ? "-" : it->second});
  }
  return rep;
}

inline void write_report_tsv(std::ostream& os, const ScriptReport& r) {
  os << "name\tchi\tstatus\n";
  for (const auto& row : r.rows) os << row.name << '\t' << row.chi << '\t' << row.status << '\n';
}

}  // namespace gsc

#endif  // GSC_EULER_HPP
