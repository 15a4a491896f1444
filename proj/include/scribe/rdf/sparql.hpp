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

#include <string>
#include <string_view>

#include "scribe/rdf/query.hpp"

namespace scribe::rdf {

/// Parses the supported SELECT subset: basic graph patterns, FILTER,
/// DISTINCT, COUNT, GROUP BY, ORDER BY, LIMIT and OFFSET. Common prefixes
/// (rdf, rdfs, owl, xsd, foaf, dbo, dbp, dbr, res) are predeclared.
/// Throws ParseError for malformed text, UnsupportedFeature for SPARQL
/// outside the subset, and validation errors from validate().
StructuredQuery parseSparql(std::string_view text);

/// Emits a SELECT query that parseSparql() reads back to an equal StructuredQuery.
std::string serializeSparql(const StructuredQuery& q);

std::string serializeExpr(const Expr& e);

}  // namespace scribe::rdf
