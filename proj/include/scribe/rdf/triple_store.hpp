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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "scribe/rdf/term.hpp"

namespace scribe::rdf {

using TermId = std::uint32_t;

/// Immutable, dictionary-encoded triple set with SPO, POS and OSP orderings.
/// Safe for concurrent readers.
class TripleStore {
 public:
  using EncodedTriple = std::array<TermId, 3>;

  TripleStore() = default;
  /// Duplicates are removed. Throws InvalidQuery for triples that violate the RDF model.
  explicit TripleStore(std::vector<Triple> triples);

  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }

  const Term& term(TermId id) const { return terms_[id]; }
  std::optional<TermId> lookup(const Term& t) const;

  /// All triples matching the given ids (nullopt = wildcard). Order is
  /// deterministic for a given binding pattern.
  std::vector<EncodedTriple> match(std::optional<TermId> s, std::optional<TermId> p,
                                   std::optional<TermId> o) const;

  /// Number of matches, without materializing them when an index range suffices.
  std::size_t count(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o) const;

  std::vector<Triple> triples() const;
  const std::vector<EncodedTriple>& encoded() const noexcept { return spo_; }

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::vector<EncodedTriple> spo_;  // (s,p,o)
  std::vector<EncodedTriple> pos_;  // (p,o,s)
  std::vector<EncodedTriple> osp_;  // (o,s,p)
};

}  // namespace scribe::rdf
