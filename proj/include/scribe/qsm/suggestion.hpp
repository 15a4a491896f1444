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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scribe/rdf/query.hpp"
#include "scribe/rdf/result_set.hpp"

namespace scribe::qsm {

enum class AlternativeSource { LexiconThenJw, DirectJw };

struct TermAlternative {
  rdf::Term original;
  rdf::Term replacement;
  double score = 0.0;
  AlternativeSource source = AlternativeSource::DirectJw;

  friend bool operator==(const TermAlternative&, const TermAlternative&) = default;
};

struct TreeEdge {
  std::size_t subject = 0;  // index into vertices
  std::size_t object = 0;
  rdf::Term predicate;
  std::uint64_t weight = 0;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// A relaxed query shape: a tree over data terms with one literal terminal
/// per connected seed group.
struct RelaxationTree {
  std::vector<rdf::Term> vertices;
  std::vector<TreeEdge> edges;
  /// (group, vertex index)
  std::vector<std::pair<std::size_t, std::size_t>> terminals;
  std::uint64_t totalWeight = 0;

  friend bool operator==(const RelaxationTree&, const RelaxationTree&) = default;
};

enum class ChangeKind { Predicate, Literal, Structure };

const char* changeKindName(ChangeKind k);

struct SuggestedQuery {
  rdf::StructuredQuery query;
  ChangeKind kind = ChangeKind::Literal;
  /// Set for term substitutions.
  std::optional<TermAlternative> alternative;
  /// Pattern index of the substituted term.
  std::size_t patternIndex = 0;
  /// Set for structural relaxations.
  std::optional<RelaxationTree> tree;
  std::size_t answerCount = 0;
  /// Cached answers, capped at the prefetch limit.
  rdf::ResultSet prefetched;
  std::string message;
};

/// Wall time per suggestion phase, accumulated across calls.
struct QsmTimings {
  double alternativePredicatesMs = 0;
  double alternativeLiteralsMs = 0;
  double relaxationMs = 0;
  double candidateExecutionMs = 0;
};

}  // namespace scribe::qsm
