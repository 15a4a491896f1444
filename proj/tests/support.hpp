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

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "scribe/rdf/ntriples.hpp"
#include "scribe/rdf/triple_store.hpp"

namespace scribe::testing {

inline std::filesystem::path dataPath(const std::string& rel) { return std::filesystem::path(SCRIBE_DATA_DIR) / rel; }

inline rdf::TripleStore fixture(const std::string& name) { return rdf::loadNTriples(dataPath("fixtures/" + name)); }

inline const std::string kRes = "http://dbpedia.org/resource/";
inline const std::string kOnt = "http://dbpedia.org/ontology/";
inline const std::string kFoaf = "http://xmlns.com/foaf/0.1/";

inline rdf::Term res(const std::string& local) { return rdf::Term::uri(kRes + local); }
inline rdf::Term ont(const std::string& local) { return rdf::Term::uri(kOnt + local); }
inline rdf::Term foaf(const std::string& local) { return rdf::Term::uri(kFoaf + local); }
inline rdf::Term en(const std::string& s) { return rdf::Term::literal(s, "en"); }

/// Small random store over `entities` IRIs, `predicates` IRIs and a pool of
/// short literals.
inline std::vector<rdf::Triple> randomTriples(std::mt19937& rng, int entities, int predicates, int count) {
  std::uniform_int_distribution<int> ent(0, entities - 1), pred(0, predicates - 1), coin(0, 2), lit(0, 9);
  std::vector<rdf::Triple> out;
  for (int i = 0; i < count; ++i) {
    rdf::Triple t;
    t.subject = rdf::Term::uri("http://ex.org/e" + std::to_string(ent(rng)));
    t.predicate = rdf::Term::uri("http://ex.org/p" + std::to_string(pred(rng)));
    if (coin(rng) == 0) {
      t.object = rdf::Term::literal("v" + std::to_string(lit(rng)), lit(rng) < 5 ? "en" : "");
    } else {
      t.object = rdf::Term::uri("http://ex.org/e" + std::to_string(ent(rng)));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace scribe::testing

#include <map>
#include <set>

#include "scribe/rdf/endpoint.hpp"
#include "scribe/util/text.hpp"

namespace scribe::testing {

/// Every literal object passing the language and length filter.
inline std::set<std::string> filteredLiterals(const rdf::TripleStore& store, const std::string& lang,
                                              std::size_t maxLength) {
  std::set<std::string> out;
  for (const auto& t : store.triples()) {
    if (!t.object.isLiteral()) continue;
    if (!lang.empty() && t.object.language() != lang) continue;
    if (text::codepointLength(t.object.value()) >= maxLength) continue;
    out.insert(t.object.value());
  }
  return out;
}

/// |{s : (s,p1,o) and (o,p2,l)}| for every filtered literal l, by nested scan.
inline std::map<std::string, std::size_t> twoHopSignificance(const rdf::TripleStore& store, const std::string& lang,
                                                             std::size_t maxLength) {
  auto triples = store.triples();
  std::map<std::string, std::set<rdf::Term>> subjects;
  for (const auto& lit : triples) {
    if (!lit.object.isLiteral()) continue;
    if (!lang.empty() && lit.object.language() != lang) continue;
    if (text::codepointLength(lit.object.value()) >= maxLength) continue;
    auto& set = subjects[lit.object.value()];
    for (const auto& up : triples) {
      if (up.object == lit.subject) set.insert(up.subject);
    }
  }
  std::map<std::string, std::size_t> out;
  for (const auto& [l, s] : subjects) out[l] = s.size();
  return out;
}

/// Times out any query constraining `?x a <C>` where C has more than
/// `threshold` instances. Class declarations are exempt.
inline rdf::EndpointPtr sizeLimitedEndpoint(std::shared_ptr<const rdf::TripleStore> store, std::size_t threshold) {
  auto local = std::make_shared<rdf::LocalEndpoint>("scripted", store);
  auto policy = [store, threshold](const rdf::StructuredQuery& q) {
    auto type = store->lookup(rdf::Term::uri(std::string(rdf::kRdfType)));
    for (const auto& p : q.patterns) {
      if (p.predicate.value() != rdf::kRdfType || !p.object.isUri() || p.object.value() == rdf::kOwlClass) continue;
      auto cls = store->lookup(p.object);
      if (type && cls && store->count(std::nullopt, type, cls) > threshold) return true;
    }
    return false;
  };
  return std::make_shared<rdf::ScriptedEndpoint>(local, policy);
}

}  // namespace scribe::testing
