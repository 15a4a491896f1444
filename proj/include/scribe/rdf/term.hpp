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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace scribe::rdf {

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";

enum class TermKind : unsigned char { Uri, Literal, Variable };

/// An RDF term or a query variable. Language tags are stored lower-cased and
/// an explicit xsd:string datatype is dropped, so equality is RDF term equality.
class Term {
 public:
  Term() = default;

  static Term uri(std::string iri);
  static Term literal(std::string lexical, std::string language = {}, std::string datatype = {});
  static Term variable(std::string name);
  static Term integer(long long value);

  TermKind kind() const noexcept { return kind_; }
  bool isUri() const noexcept { return kind_ == TermKind::Uri; }
  bool isLiteral() const noexcept { return kind_ == TermKind::Literal; }
  bool isVariable() const noexcept { return kind_ == TermKind::Variable; }

  /// IRI, lexical form, or variable name (without '?').
  const std::string& value() const noexcept { return value_; }
  const std::string& language() const noexcept { return language_; }
  const std::string& datatype() const noexcept { return datatype_; }

  /// N-Triples / SPARQL surface syntax.
  std::string toString() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  TermKind kind_ = TermKind::Uri;
  std::string value_;
  std::string language_;
  std::string datatype_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Escapes a lexical form for a double-quoted N-Triples/SPARQL string.
std::string escapeString(std::string_view s);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Throws InvalidQuery if the triple violates the RDF model.
void validateTriple(const Triple& t);

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

}  // namespace scribe::rdf
