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

#include "scribe/rdf/term.hpp"

#include <algorithm>
#include <cctype>

#include "scribe/util/errors.hpp"

namespace scribe::rdf {

Term Term::uri(std::string iri) {
  Term t;
  t.kind_ = TermKind::Uri;
  t.value_ = std::move(iri);
  return t;
}

Term Term::literal(std::string lexical, std::string language, std::string datatype) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.value_ = std::move(lexical);
  std::transform(language.begin(), language.end(), language.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  t.language_ = std::move(language);
  if (!t.language_.empty() || datatype == kXsdString) datatype.clear();
  t.datatype_ = std::move(datatype);
  return t;
}

Term Term::variable(std::string name) {
  if (name.empty()) throw InvalidQuery("empty variable name");
  for (unsigned char c : name) {
    if (std::isspace(c)) throw InvalidQuery("variable name contains whitespace: " + name);
  }
  Term t;
  t.kind_ = TermKind::Variable;
  t.value_ = std::move(name);
  return t;
}

Term Term::integer(long long value) {
  return literal(std::to_string(value), {}, std::string(kXsdInteger));
}

std::string escapeString(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string Term::toString() const {
  switch (kind_) {
    case TermKind::Uri:
      if (value_.starts_with("_:")) return value_;
      return "<" + value_ + ">";
    case TermKind::Variable:
      return "?" + value_;
    case TermKind::Literal: {
      std::string out = "\"" + escapeString(value_) + "\"";
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (!datatype_.empty()) {
        out += "^^<" + datatype_ + ">";
      }
      return out;
    }
  }
  return {};
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.value());
  h ^= static_cast<std::size_t>(t.kind()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (!t.language().empty()) h ^= std::hash<std::string>{}(t.language()) + (h << 6) + (h >> 2);
  if (!t.datatype().empty()) h ^= std::hash<std::string>{}(t.datatype()) + (h << 6) + (h >> 2);
  return h;
}

void validateTriple(const Triple& t) {
  if (!t.subject.isUri()) throw InvalidQuery("triple subject must be a URI: " + t.subject.toString());
  if (!t.predicate.isUri()) {
    throw InvalidQuery("triple predicate must be a URI: " + t.predicate.toString());
  }
  if (t.object.isVariable()) throw InvalidQuery("triple object cannot be a variable");
}

}  // namespace scribe::rdf
