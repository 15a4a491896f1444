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

#include "scribe/rdf/result_set.hpp"

#include <algorithm>

#include "scribe/util/errors.hpp"

namespace scribe::rdf {

int ResultSet::columnIndex(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::vector<Term>> sortedRows(const ResultSet& rs) {
  auto rows = rs.rows;
  std::sort(rows.begin(), rows.end());
  return rows;
}

nlohmann::json termToJson(const Term& t) {
  nlohmann::json j;
  if (t.isUri()) {
    if (t.value().starts_with("_:")) {
      j["type"] = "bnode";
      j["value"] = t.value().substr(2);
    } else {
      j["type"] = "uri";
      j["value"] = t.value();
    }
  } else {
    j["type"] = "literal";
    j["value"] = t.value();
    if (!t.language().empty()) j["xml:lang"] = t.language();
    if (!t.datatype().empty()) j["datatype"] = t.datatype();
  }
  return j;
}

Term termFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("value")) {
    throw MalformedResponse("binding lacks type/value");
  }
  const auto type = j.at("type").get<std::string>();
  auto value = j.at("value").get<std::string>();
  if (type == "uri") return Term::uri(std::move(value));
  if (type == "bnode") return Term::uri("_:" + value);
  if (type == "literal" || type == "typed-literal") {
    std::string lang = j.contains("xml:lang") ? j.at("xml:lang").get<std::string>() : std::string{};
    std::string dt = j.contains("datatype") ? j.at("datatype").get<std::string>() : std::string{};
    return Term::literal(std::move(value), std::move(lang), std::move(dt));
  }
  throw MalformedResponse("unknown binding type '" + type + "'");
}

nlohmann::json toSparqlJson(const ResultSet& rs) {
  nlohmann::json bindings = nlohmann::json::array();
  for (const auto& row : rs.rows) {
    nlohmann::json b = nlohmann::json::object();
    for (std::size_t i = 0; i < rs.columns.size() && i < row.size(); ++i) b[rs.columns[i]] = termToJson(row[i]);
    bindings.push_back(std::move(b));
  }
  return {{"head", {{"vars", rs.columns}}}, {"results", {{"bindings", std::move(bindings)}}}};
}

std::string toSparqlJsonText(const ResultSet& rs) { return toSparqlJson(rs).dump(); }

ResultSet fromSparqlJson(const nlohmann::json& doc) {
  try {
    ResultSet rs;
    rs.columns = doc.at("head").at("vars").get<std::vector<std::string>>();
    for (const auto& b : doc.at("results").at("bindings")) {
      std::vector<Term> row;
      row.reserve(rs.columns.size());
      for (const auto& col : rs.columns) {
        if (!b.contains(col)) throw MalformedResponse("row does not bind ?" + col);
        row.push_back(termFromJson(b.at(col)));
      }
      rs.rows.push_back(std::move(row));
    }
    return rs;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedResponse(std::string("invalid SPARQL JSON results: ") + e.what());
  }
}

ResultSet parseSparqlJson(std::string_view text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw MalformedResponse("response is not JSON");
  return fromSparqlJson(doc);
}

}  // namespace scribe::rdf
