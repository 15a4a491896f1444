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
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace scribe::init {

struct InitConfig {
  std::size_t maxLiteralLength = 80;
  /// Language tag of cached literals; empty disables the language filter.
  std::string language = "en";
  /// Cap on harvest and significance queries; unset means unlimited.
  std::optional<std::size_t> queryBudget;
  std::size_t pageSize = 10000;
  std::size_t significantLiteralCount = 40000;
  bool warehouseMode = false;

  /// Throws InvalidQuery.
  void validate() const;
};

/// Classes organized by rdfs:subClassOf, acyclic.
class ClassHierarchy {
 public:
  ClassHierarchy() = default;

  /// Builds from (subclass, superclass) pairs. Edges closing a cycle during
  /// a depth-first walk are dropped and logged. `classes` adds nodes that
  /// take part in no edge.
  static ClassHierarchy fromSubClassPairs(const std::vector<std::pair<std::string, std::string>>& pairs,
                                          const std::vector<std::string>& classes = {});

  bool empty() const noexcept { return nodes_.empty(); }
  const std::set<std::string>& nodes() const noexcept { return nodes_; }
  /// Parent -> children, children sorted.
  const std::map<std::string, std::vector<std::string>>& childEdges() const noexcept { return children_; }
  const std::vector<std::string>& children(const std::string& cls) const;
  /// Classes without a parent, sorted.
  const std::vector<std::string>& roots() const noexcept { return roots_; }
  std::size_t edgeCount() const;
  std::size_t droppedEdges() const noexcept { return dropped_; }

  friend bool operator==(const ClassHierarchy& a, const ClassHierarchy& b) {
    return a.nodes_ == b.nodes_ && a.children_ == b.children_ && a.roots_ == b.roots_;
  }

 private:
  std::set<std::string> nodes_;
  std::map<std::string, std::vector<std::string>> children_;
  std::vector<std::string> roots_;
  std::size_t dropped_ = 0;
};

/// Counts budgeted initialization queries.
class BudgetMeter {
 public:
  BudgetMeter() = default;
  explicit BudgetMeter(std::optional<std::size_t> limit) : limit_(limit) {}

  /// Reserves one query; false when the limit is reached.
  bool tryConsume();
  bool exhausted() const noexcept { return limit_ && used_ >= *limit_; }
  std::size_t used() const noexcept { return used_; }
  std::optional<std::size_t> limit() const noexcept { return limit_; }

 private:
  std::optional<std::size_t> limit_;
  std::size_t used_ = 0;
};

struct PredicateStat {
  std::string uri;
  std::size_t frequency = 0;

  friend bool operator==(const PredicateStat&, const PredicateStat&) = default;
};

struct LiteralStat {
  std::string lexical;
  /// 0 means not measured.
  std::size_t significance = 0;

  friend bool operator==(const LiteralStat&, const LiteralStat&) = default;
};

struct InitStats {
  std::size_t queriesIssued = 0;
  std::size_t queriesTimedOut = 0;
  std::size_t literalCount = 0;
  std::size_t budgetUsed = 0;
  bool budgetExhausted = false;

  friend bool operator==(const InitStats&, const InitStats&) = default;
};

struct CacheSnapshot {
  std::string endpointId;
  std::string language = "en";
  std::size_t maxLiteralLength = 80;
  /// Descending frequency, ties by URI.
  std::vector<PredicateStat> predicates;
  /// Sorted by lexical form.
  std::vector<LiteralStat> literals;
  ClassHierarchy hierarchy;
  InitStats stats;

  friend bool operator==(const CacheSnapshot&, const CacheSnapshot&) = default;
};

inline constexpr int kSnapshotFormatVersion = 1;

/// JSON-lines: a header record followed by one record per predicate and
/// literal. Written to a temporary file and renamed into place.
void writeSnapshot(const CacheSnapshot& snapshot, const std::filesystem::path& path);
/// Throws FormatError.
CacheSnapshot readSnapshot(const std::filesystem::path& path);

}  // namespace scribe::init
