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

#include "scribe/init/queries.hpp"

#include "scribe/rdf/term.hpp"

namespace scribe::init::queries {

namespace {

std::string iri(const std::string& s) { return "<" + s + ">"; }

std::string literalFilter(const InitConfig& cfg, bool requireLiteral) {
  std::string f;
  if (requireLiteral) f += "isliteral(?o)";
  if (!cfg.language.empty()) {
    if (!f.empty()) f += " && ";
    f += "lang(?o) = '" + cfg.language + "'";
  }
  if (!f.empty()) f += " && ";
  f += "strlen(str(?o)) < " + std::to_string(cfg.maxLiteralLength);
  return "FILTER (" + f + ")";
}

std::string page(std::size_t limit, std::size_t offset) {
  return "\nLIMIT " + std::to_string(limit) + "\nOFFSET " + std::to_string(offset);
}

}  // namespace

std::string predicates() {
  return "SELECT DISTINCT ?p (COUNT(*) AS ?frequency)\nWHERE {\n?s ?p ?o\n}\nGROUP BY ?p\n"
         "ORDER BY DESC(?frequency)";
}

std::string subclasses() {
  return "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\nPREFIX owl: <http://www.w3.org/2002/07/owl#>\n"
         "SELECT DISTINCT ?class ?subclass\nWHERE {\n?class a owl:Class.\n?class rdfs:subClassOf ?subclass\n}";
}

std::string types() {
  return "SELECT DISTINCT ?o (COUNT(?s) AS ?frequency)\nWHERE {\n?s a ?o.\n}\nGROUP BY ?o\n"
         "ORDER BY DESC(?frequency)";
}

std::string literalPredicates() {
  return "SELECT DISTINCT ?p (COUNT(?o) AS ?frequency)\nWHERE {\n?s ?p ?o.\nFILTER (isliteral(?o))\n}\n"
         "GROUP BY ?p\nORDER BY DESC(?frequency)";
}

std::string probeLiteral(const std::string& predicate, const InitConfig& cfg) {
  return "SELECT DISTINCT ?o\nWHERE {\n?s " + iri(predicate) + " ?o.\n" + literalFilter(cfg, true) + "\n}\nLIMIT 1";
}

std::string literalsOfClass(const std::string& type, const std::string& predicate, const InitConfig& cfg) {
  return "SELECT DISTINCT ?o\nWHERE {\n?s a " + iri(type) + ".\n?s " + iri(predicate) + " ?o.\n" +
         literalFilter(cfg, true) + ".\n}";
}

std::string literalsOfType(const std::string& type, const std::string& predicate, const InitConfig& cfg,
                           std::size_t limit, std::size_t offset) {
  return literalsOfClass(type, predicate, cfg) + page(limit, offset);
}

std::string significanceOfType(const std::string& type, const std::string& predicate, const InitConfig& cfg,
                               std::size_t limit, std::size_t offset) {
  return "SELECT DISTINCT ?o (COUNT(DISTINCT ?subject) AS ?frequency)\nWHERE {\n?s a " + iri(type) +
         ".\n?subject ?p ?s.\n?s " + iri(predicate) + " ?o.\n" + literalFilter(cfg, false) +
         "\n}\nGROUP BY ?o\nORDER BY DESC(?frequency)" + page(limit, offset);
}

std::string allLiterals(const InitConfig& cfg, std::size_t limit, std::size_t offset) {
  return "SELECT DISTINCT ?o\nWHERE {\n?s ?p ?o.\n" + literalFilter(cfg, true) + "\n}\nGROUP BY ?o" +
         page(limit, offset);
}

std::string allSignificance(const InitConfig& cfg, std::size_t limit, std::size_t offset) {
  return "SELECT DISTINCT ?o (COUNT(DISTINCT ?s1) AS ?frequency)\nWHERE {\n?s1 ?p ?s2.\n?s2 ?p2 ?o.\n" +
         literalFilter(cfg, true) + "\n}\nGROUP BY ?o\nORDER BY DESC(?frequency)" + page(limit, offset);
}

}  // namespace scribe::init::queries
