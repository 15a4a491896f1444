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

#include "scribe/rdf/ntriples.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::rdf {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t lineNo) : s_(line), line_(lineNo) {}

  Triple parse() {
    Triple t;
    t.subject = term();
    t.predicate = term();
    t.object = term();
    skipSpace();
    if (pos_ >= s_.size() || s_[pos_] != '.') fail("expected '.' terminating the triple");
    ++pos_;
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("unexpected content after '.'");
    if (t.subject.isLiteral()) fail("literal in subject position");
    if (!t.predicate.isUri() || t.predicate.value().starts_with("_:")) fail("predicate must be an IRI");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

  void skipSpace() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  Term term() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end of line");
    char c = s_[pos_];
    if (c == '<') return Term::uri(iri());
    if (c == '_' && pos_ + 1 < s_.size() && s_[pos_ + 1] == ':') {
      auto start = pos_;
      pos_ += 2;
      while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '.') ++pos_;
      return Term::uri(std::string(s_.substr(start, pos_ - start)));
    }
    if (c == '"') return literal();
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string iri() {
    ++pos_;
    auto end = s_.find('>', pos_);
    if (end == std::string_view::npos) fail("unterminated IRI");
    std::string out(s_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }

  Term literal() {
    ++pos_;
    std::string lex;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lex.push_back(c);
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      char e = s_[pos_++];
      switch (e) {
        case 't': lex.push_back('\t'); break;
        case 'n': lex.push_back('\n'); break;
        case 'r': lex.push_back('\r'); break;
        case 'b': lex.push_back('\b'); break;
        case 'f': lex.push_back('\f'); break;
        case '"': lex.push_back('"'); break;
        case '\'': lex.push_back('\''); break;
        case '\\': lex.push_back('\\'); break;
        case 'u':
        case 'U': {
          std::size_t n = e == 'u' ? 4 : 8;
          if (pos_ + n > s_.size()) fail("short unicode escape");
          char32_t cp = 0;
          for (std::size_t i = 0; i < n; ++i) {
            char h = s_[pos_ + i];
            cp <<= 4;
            if (h >= '0' && h <= '9') cp |= static_cast<char32_t>(h - '0');
            else if (h >= 'a' && h <= 'f') cp |= static_cast<char32_t>(h - 'a' + 10);
            else if (h >= 'A' && h <= 'F') cp |= static_cast<char32_t>(h - 'A' + 10);
            else fail("bad hex digit in unicode escape");
          }
          pos_ += n;
          lex += text::encodeUtf8(std::u32string(1, cp));
          break;
        }
        default: fail(std::string("unknown escape \\") + e);
      }
    }
    if (pos_ < s_.size() && s_[pos_] == '@') {
      auto start = ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
      if (pos_ == start) fail("empty language tag");
      return Term::literal(std::move(lex), std::string(s_.substr(start, pos_ - start)));
    }
    if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '^') {
      pos_ += 2;
      if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected datatype IRI");
      return Term::literal(std::move(lex), {}, iri());
    }
    return Term::literal(std::move(lex));
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Triple> parseNTriples(std::string_view text) {
  std::vector<Triple> out;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineNo;
    auto line = text.substr(start, end - start);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      out.push_back(LineParser(line, lineNo).parse());
    }
    start = end + 1;
  }
  return out;
}

TripleStore loadNTriples(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return TripleStore(parseNTriples(buf.str()));
}

void writeNTriples(std::ostream& out, const std::vector<Triple>& triples) {
  for (const auto& t : triples) {
    out << t.subject.toString() << ' ' << t.predicate.toString() << ' ' << t.object.toString() << " .\n";
  }
}

}  // namespace scribe::rdf
