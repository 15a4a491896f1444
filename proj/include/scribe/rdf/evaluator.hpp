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

#include "scribe/rdf/query.hpp"
#include "scribe/rdf/result_set.hpp"
#include "scribe/rdf/triple_store.hpp"

namespace scribe::rdf {

/// Evaluates a query against an in-memory store with standard SPARQL
/// solution-modifier order: match and filter, group/count, order, project,
/// distinct, offset/limit. Throws UnknownVariableInProjection or InvalidQuery.
ResultSet evaluate(const TripleStore& store, const StructuredQuery& query);

/// SPARQL ORDER BY comparison on terms: IRIs before literals, numeric
/// literals by value, everything else by lexical form.
int compareTerms(const Term& a, const Term& b);

/// Numeric value of a literal with an XSD numeric datatype.
std::optional<double> numericValue(const Term& t);

}  // namespace scribe::rdf
