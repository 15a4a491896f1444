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
#include <vector>

#include <json.hpp>

#include "scribe/rdf/term.hpp"

namespace scribe::rdf {

/// Tabular query answer. Each row holds one term per column.
struct ResultSet {
  std::vector<std::string> columns;
  std::vector<std::vector<Term>> rows;
  bool truncated = false;

  bool empty() const noexcept { return rows.empty(); }
  std::size_t size() const noexcept { return rows.size(); }

  /// Index of a column, or -1.
  int columnIndex(std::string_view name) const;

  friend bool operator==(const ResultSet&, const ResultSet&) = default;
};

/// Rows as a sorted multiset, for order-insensitive comparison.
std::vector<std::vector<Term>> sortedRows(const ResultSet& rs);

/// application/sparql-results+json
nlohmann::json toSparqlJson(const ResultSet& rs);
std::string toSparqlJsonText(const ResultSet& rs);

/// Throws MalformedResponse.
ResultSet fromSparqlJson(const nlohmann::json& doc);
ResultSet parseSparqlJson(std::string_view text);

nlohmann::json termToJson(const Term& t);
Term termFromJson(const nlohmann::json& j);

}  // namespace scribe::rdf
