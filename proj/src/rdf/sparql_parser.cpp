// Copyright 2026 The Scribe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::rdf {

namespace {

enum class Tok { Iri, PName, Var, String, Number, Word, Punct, Op, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
};

bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      if (pos_ >= s_.size()) {
        out.push_back({Tok::End, "", line_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, line_); }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool iriAhead() const {
    for (std::size_t i = pos_ + 1; i < s_.size(); ++i) {
      char c = s_[i];
      if (c == '>') return true;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`' || c == '\\') {
        return false;
      }
    }
    return false;
  }

  Token next() {
    char c = s_[pos_];
    auto tok = [&](Tok k, std::string t) { return Token{k, std::move(t), line_}; };
    if (c == '<' && iriAhead()) {
      auto end = s_.find('>', pos_);
      auto t = tok(Tok::Iri, std::string(s_.substr(pos_ + 1, end - pos_ - 1)));
      pos_ = end + 1;
      return t;
    }
    if (c == '?' || c == '$') {
      auto start = ++pos_;
      while (pos_ < s_.size() && isNameChar(s_[pos_])) ++pos_;
      if (pos_ == start) fail("empty variable name");
      return tok(Tok::Var, std::string(s_.substr(start, pos_ - start)));
    }
    if (c == '"' || c == '\'') return string(c);
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
      auto start = pos_++;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                  (s_[pos_] == '.' && pos_ + 1 < s_.size() &&
                                   std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))))) {
        ++pos_;
      }
      return tok(Tok::Number, std::string(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
      auto start = pos_;
      while (pos_ < s_.size() && isNameChar(s_[pos_])) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == ':') {
        ++pos_;
        while (pos_ < s_.size() &&
               (isNameChar(s_[pos_]) || s_[pos_] == '%' ||
                (s_[pos_] == '.' && pos_ + 1 < s_.size() && isNameChar(s_[pos_ + 1])))) {
          ++pos_;
        }
        return tok(Tok::PName, std::string(s_.substr(start, pos_ - start)));
      }
      return tok(Tok::Word, std::string(s_.substr(start, pos_ - start)));
    }
    static const char* two[] = {"&&", "||", "!=", "<=", ">="};
    for (const char* op : two) {
      if (s_.substr(pos_, 2) == op) {
        pos_ += 2;
        return tok(Tok::Op, op);
      }
    }
    if (c == '!' || c == '=' || c == '<' || c == '>') {
      ++pos_;
      return tok(Tok::Op, std::string(1, c));
    }
    if (std::string_view("{}().;,*/|^+@").find(c) != std::string_view::npos) {
      ++pos_;
      return tok(Tok::Punct, std::string(1, c));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Token string(char quote) {
    auto line = line_;
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated string");
      char c = s_[pos_++];
      if (c == quote) break;
      if (c == '\n') ++line_;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      char e = s_[pos_++];
      switch (e) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case '\\': out.push_back('\\'); break;
        default: fail(std::string("unknown escape \\") + e);
      }
    }
    return {Tok::String, std::move(out), line};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {
    prefixes_ = {
        {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
        {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
        {"owl", "http://www.w3.org/2002/07/owl#"},
        {"xsd", "http://www.w3.org/2001/XMLSchema#"},
        {"foaf", "http://xmlns.com/foaf/0.1/"},
        {"dbo", "http://dbpedia.org/ontology/"},
        {"dbp", "http://dbpedia.org/property/"},
        {"dbr", "http://dbpedia.org/resource/"},
        {"res", "http://dbpedia.org/resource/"},
    };
  }

  StructuredQuery parse() {
    StructuredQuery q;
    prologue();
    if (isWord("ASK") || isWord("CONSTRUCT") || isWord("DESCRIBE")) unsupported(peek().text + " queries");
    if (isWord("INSERT") || isWord("DELETE") || isWord("LOAD") || isWord("CLEAR")) unsupported("SPARQL Update");
    expectWord("SELECT");
    if (acceptWord("DISTINCT")) q.modifiers.distinct = true;
    else if (acceptWord("REDUCED")) unsupported("REDUCED");
    selectClause(q);
    if (isWord("FROM")) unsupported("FROM clauses");
    acceptWord("WHERE");
    groupPattern(q);
    solutionModifiers(q);
    if (peek().kind != Tok::End) fail("unexpected trailing '" + peek().text + "'");
    validate(q);
    return q;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return t_[std::min(i_ + k, t_.size() - 1)]; }
  const Token& take() { return t_[std::min(i_++, t_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, peek().line); }
  [[noreturn]] void unsupported(const std::string& what) const {
    throw UnsupportedFeature(what + " (line " + std::to_string(peek().line) + ") is outside the supported SPARQL subset");
  }

  bool isWord(std::string_view w) const { return peek().kind == Tok::Word && upper(peek().text) == w; }
  bool acceptWord(std::string_view w) {
    if (!isWord(w)) return false;
    ++i_;
    return true;
  }
  void expectWord(std::string_view w) {
    if (!acceptWord(w)) fail("expected " + std::string(w));
  }
  bool isPunct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool acceptPunct(char c) {
    if (!isPunct(c)) return false;
    ++i_;
    return true;
  }
  void expectPunct(char c) {
    if (!acceptPunct(c)) fail(std::string("expected '") + c + "' but found '" + peek().text + "'");
  }

  void prologue() {
    while (true) {
      if (acceptWord("PREFIX")) {
        auto name = take();
        if (name.kind != Tok::PName || name.text.back() != ':') fail("expected prefix name");
        auto iri = take();
        if (iri.kind != Tok::Iri) fail("expected IRI after PREFIX");
        prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
      } else if (isWord("BASE")) {
        unsupported("BASE");
      } else {
        return;
      }
    }
  }

  std::string expand(const std::string& pname) const {
    auto colon = pname.find(':');
    auto it = prefixes_.find(pname.substr(0, colon));
    if (it == prefixes_.end()) throw ParseError("undeclared prefix '" + pname.substr(0, colon) + "'", peek().line);
    return it->second + pname.substr(colon + 1);
  }

  void selectClause(StructuredQuery& q) {
    if (acceptPunct('*')) return;
    bool any = false;
    while (true) {
      if (peek().kind == Tok::Var) {
        q.projection.push_back(take().text);
      } else if (isPunct('(') && peek(1).kind == Tok::Word && upper(peek(1).text) == "COUNT") {
        take();
        take();
        setCount(q, countBody());
        expectWord("AS");
        if (peek().kind != Tok::Var) fail("expected alias variable");
        q.count->alias = take().text;
        expectPunct(')');
      } else if (isWord("COUNT")) {
        take();
        setCount(q, countBody());
      } else if (isPunct('(')) {
        unsupported("projection expressions other than COUNT");
      } else if (isWord("SUM") || isWord("AVG") || isWord("MIN") || isWord("MAX") || isWord("SAMPLE")) {
        unsupported("aggregate " + upper(peek().text));
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("empty SELECT clause");
  }

  void setCount(StructuredQuery& q, CountAggregate c) {
    if (q.count) unsupported("more than one COUNT");
    q.count = std::move(c);
  }

  CountAggregate countBody() {
    CountAggregate c;
    expectPunct('(');
    if (acceptWord("DISTINCT")) c.distinct = true;
    if (acceptPunct('*')) {
      c.argument.clear();
    } else if (peek().kind == Tok::Var) {
      c.argument = take().text;
    } else {
      unsupported("COUNT over expressions");
    }
    expectPunct(')');
    return c;
  }

  void groupPattern(StructuredQuery& q) {
    expectPunct('{');
    while (!acceptPunct('}')) {
      if (peek().kind == Tok::End) fail("unterminated group pattern");
      if (acceptPunct('.')) continue;
      if (isWord("FILTER")) {
        take();
        q.filters.push_back(constraint());
        continue;
      }
      for (auto kw : {"OPTIONAL", "UNION", "MINUS", "BIND", "VALUES", "GRAPH", "SERVICE", "SELECT"}) {
        if (isWord(kw)) unsupported(kw);
      }
      if (isPunct('{')) unsupported("nested group patterns");
      triplesBlock(q);
    }
  }

  void triplesBlock(StructuredQuery& q) {
    Term subject = term(Position::Subject);
    while (true) {
      Term verb = term(Position::Predicate);
      while (true) {
        Term object = term(Position::Object);
        q.patterns.push_back({subject, verb, object});
        if (!acceptPunct(',')) break;
      }
      if (!acceptPunct(';')) break;
      if (isPunct('.') || isPunct('}')) break;
    }
    if (isPunct('/') || isPunct('|') || isPunct('^') || isPunct('*') || isPunct('+')) unsupported("property paths");
  }

  enum class Position { Subject, Predicate, Object, Expression };

  Term term(Position pos) {
    const Token& tk = peek();
    if (pos == Position::Predicate && tk.kind == Tok::Word && tk.text == "a") {
      take();
      return Term::uri(std::string(kRdfType));
    }
    if (tk.kind == Tok::Punct && (tk.text == "^" || tk.text == "(")) unsupported("property paths or collections");
    if (tk.kind == Tok::Punct && tk.text == "[") unsupported("blank node property lists");
    Term t;
    switch (tk.kind) {
      case Tok::Var: t = Term::variable(take().text); break;
      case Tok::Iri: t = Term::uri(take().text); break;
      case Tok::PName: {
        if (tk.text.starts_with("_:")) unsupported("blank nodes in queries");
        t = Term::uri(expand(take().text));
        break;
      }
      case Tok::String: t = literalTail(take().text); break;
      case Tok::Number: t = number(take().text); break;
      case Tok::Word: {
        auto w = lower(tk.text);
        if (w == "true" || w == "false") {
          take();
          t = Term::literal(w, {}, "http://www.w3.org/2001/XMLSchema#boolean");
          break;
        }
        fail("unexpected '" + tk.text + "'");
      }
      default: fail("expected a term but found '" + tk.text + "'");
    }
    if (pos == Position::Predicate) {
      if (isPunct('/') || isPunct('|') || isPunct('*') || isPunct('+')) unsupported("property paths");
      if (t.isLiteral()) fail("literal in predicate position");
    }
    if (pos == Position::Subject && t.isLiteral()) fail("literal in subject position");
    return t;
  }

  Term literalTail(std::string lexical) {
    if (acceptPunct('@')) {
      if (peek().kind != Tok::Word && peek().kind != Tok::PName) fail("expected language tag");
      return Term::literal(std::move(lexical), take().text);
    }
    if (isPunct('^') && peek(1).kind == Tok::Punct && peek(1).text == "^") {
      take();
      take();
      auto dt = take();
      if (dt.kind == Tok::Iri) return Term::literal(std::move(lexical), {}, dt.text);
      if (dt.kind == Tok::PName) return Term::literal(std::move(lexical), {}, expand(dt.text));
      fail("expected datatype IRI");
    }
    return Term::literal(std::move(lexical));
  }

  static Term number(const std::string& text) {
    bool decimal = text.find('.') != std::string::npos;
    std::string lexical = text.starts_with('+') ? text.substr(1) : text;
    return Term::literal(lexical, {},
                         decimal ? "http://www.w3.org/2001/XMLSchema#decimal" : std::string(kXsdInteger));
  }

  Expr constraint() {
    if (isPunct('(')) {
      take();
      Expr e = orExpr();
      expectPunct(')');
      return e;
    }
    if (peek().kind == Tok::Word) return primary();
    fail("expected FILTER constraint");
  }

  Expr orExpr() {
    Expr e = andExpr();
    while (peek().kind == Tok::Op && peek().text == "||") {
      take();
      e = Expr::disjunction(std::move(e), andExpr());
    }
    return e;
  }

  Expr andExpr() {
    Expr e = relExpr();
    while (peek().kind == Tok::Op && peek().text == "&&") {
      take();
      e = Expr::conjunction(std::move(e), relExpr());
    }
    return e;
  }

  Expr relExpr() {
    Expr e = unary();
    if (peek().kind == Tok::Op && peek().text != "!" && peek().text != "&&" && peek().text != "||") {
      auto op = take().text;
      e = Expr::compare(op, std::move(e), unary());
    }
    if (isWord("IN") || (isWord("NOT") && peek(1).kind == Tok::Word && upper(peek(1).text) == "IN")) {
      unsupported("IN expressions");
    }
    return e;
  }

  Expr unary() {
    if (peek().kind == Tok::Op && peek().text == "!") {
      take();
      return Expr::negate(unary());
    }
    return primary();
  }

  Expr primary() {
    const Token& tk = peek();
    if (tk.kind == Tok::Punct && tk.text == "(") {
      take();
      Expr e = orExpr();
      expectPunct(')');
      return e;
    }
    if (tk.kind == Tok::Punct && (tk.text == "+" || tk.text == "*" || tk.text == "/")) unsupported("arithmetic");
    if (tk.kind == Tok::Var) return Expr::variable(take().text);
    if (tk.kind == Tok::Word) {
      auto w = lower(tk.text);
      if (w != "true" && w != "false") {
        static const std::vector<std::string> known = {"isliteral", "isiri", "isuri", "isblank", "lang",
                                                       "str", "strlen", "bound", "lcase", "ucase",
                                                       "contains", "strstarts", "langmatches", "datatype"};
        if (std::find(known.begin(), known.end(), w) == known.end()) unsupported("function " + tk.text);
        if (w == "not" || w == "exists") unsupported("EXISTS");
        take();
        expectPunct('(');
        std::vector<Expr> args;
        if (!acceptPunct(')')) {
          args.push_back(orExpr());
          while (acceptPunct(',')) args.push_back(orExpr());
          expectPunct(')');
        }
        return Expr::call(w, std::move(args));
      }
    }
    return Expr::constant(term(Position::Expression));
  }

  void solutionModifiers(StructuredQuery& q) {
    while (peek().kind != Tok::End) {
      if (acceptWord("GROUP")) {
        expectWord("BY");
        while (peek().kind == Tok::Var) q.modifiers.groupBy.push_back(take().text);
        if (q.modifiers.groupBy.empty()) unsupported("GROUP BY expressions");
      } else if (isWord("HAVING")) {
        unsupported("HAVING");
      } else if (acceptWord("ORDER")) {
        expectWord("BY");
        OrderKey key;
        if (acceptWord("DESC")) {
          key.descending = true;
          expectPunct('(');
          key.variable = variableName();
          expectPunct(')');
        } else if (acceptWord("ASC")) {
          expectPunct('(');
          key.variable = variableName();
          expectPunct(')');
        } else {
          key.variable = variableName();
        }
        if (peek().kind == Tok::Var || isWord("ASC") || isWord("DESC")) unsupported("multiple ORDER BY keys");
        q.modifiers.orderBy = key;
      } else if (acceptWord("LIMIT")) {
        q.modifiers.limit = integer();
      } else if (acceptWord("OFFSET")) {
        q.modifiers.offset = integer();
      } else {
        fail("unexpected '" + peek().text + "' after WHERE clause");
      }
    }
  }

  std::string variableName() {
    if (peek().kind != Tok::Var) unsupported("ORDER BY expressions");
    return take().text;
  }

  std::size_t integer() {
    auto tk = take();
    if (tk.kind != Tok::Number || tk.text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected a non-negative integer", tk.line);
    }
    return static_cast<std::size_t>(std::stoull(tk.text));
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace

StructuredQuery parseSparql(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

}  // namespace scribe::rdf
