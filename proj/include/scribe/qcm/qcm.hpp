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
#include <stop_token>
#include <string>
#include <vector>

#include "scribe/index/literal_index.hpp"
#include "scribe/rdf/term.hpp"
#include "scribe/util/worker_pool.hpp"

namespace scribe::qcm {

enum class Slot { Subject, Predicate, Object };

Slot parseSlot(const std::string& name);
const char* slotName(Slot s);

struct CompletionRequest {
  std::string t;
  Slot slot = Slot::Object;
  std::size_t k = 10;
  std::size_t gamma = 10;

  /// Throws InvalidQuery.
  void validate() const;
};

struct Suggestion {
  std::string display;
  index::EntryKind kind = index::EntryKind::Literal;
  rdf::Term term;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

struct CompletionResponse {
  std::vector<Suggestion> fromTree;
  std::vector<Suggestion> fromBins;
  bool cancelled = false;

  friend bool operator==(const CompletionResponse&, const CompletionResponse&) = default;
};

/// Contiguous slice of one selected bin: positions start..end inclusive.
struct TaskRange {
  std::size_t bin = 0;  // position in the selected-bin list
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start + 1; }
  friend bool operator==(const TaskRange&, const TaskRange&) = default;
};

/// Per-process ranges; empty ranges are omitted.
using TaskAssignment = std::vector<std::vector<TaskRange>>;

/// Splits the selected bins across P processes, filling each to capacity
/// floor(n/P) in bin order; the last process takes the remainder.
TaskAssignment assignTasks(const std::vector<std::size_t>& binSizes, std::size_t P);

/// Called with the tree matches before the bin scan starts.
using TreeCallback = std::function<void(const std::vector<Suggestion>&)>;

/// Tree matches first, then the shortest bin matches of length
/// |t|..|t|+gamma scanned by P tasks on `pool`. A stop request aborts the
/// scan and yields an empty, cancelled response.
CompletionResponse complete(const index::LiteralIndex& index, const CompletionRequest& request, std::size_t P,
                            WorkerPool& pool, std::stop_token stop = {}, const TreeCallback& onTree = {});

/// Fraction of residual literals outside the length window of t.
double eliminationRatio(const index::LiteralIndex& index, const std::string& t, std::size_t gamma);

}  // namespace scribe::qcm
