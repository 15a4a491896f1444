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
#include <memory>
#include <string>
#include <vector>

#include "scribe/index/suffix_tree.hpp"
#include "scribe/init/snapshot.hpp"

namespace scribe::index {

enum class EntryKind { Predicate, Literal };

/// A string indexed in the suffix tree. Predicates appear under their local
/// name and, when different, its camelCase-split form.
struct IndexEntry {
  std::string display;
  EntryKind kind = EntryKind::Literal;
  /// Predicate URI or literal lexical form.
  std::string canonical;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

/// Residual literals grouped by exact length in code points.
class ResidualBins {
 public:
  struct Bin {
    std::size_t length = 0;
    std::vector<std::string> literals;    // sorted
    std::vector<std::u32string> folded;  // parallel to literals
  };

  ResidualBins() = default;
  explicit ResidualBins(std::vector<std::string> literals);

  const std::vector<Bin>& bins() const noexcept { return bins_; }
  const Bin* bin(std::size_t length) const;
  std::size_t totalCount() const noexcept { return total_; }
  /// Non-empty bins with low <= length <= high, ascending.
  std::vector<const Bin*> range(std::size_t low, std::size_t high) const;

 private:
  std::vector<Bin> bins_;
  std::size_t total_ = 0;
};

struct IndexConfig {
  std::size_t significantLiteralCount = 40000;
  std::size_t maxLiteralLength = 80;
  std::string language = "en";

  friend bool operator==(const IndexConfig&, const IndexConfig&) = default;
};

/// Suffix tree over predicates and the most significant literals, plus
/// residual bins for the remaining literals. Immutable once built.
class LiteralIndex {
 public:
  LiteralIndex(std::vector<IndexEntry> treeEntries, std::vector<std::string> residual, IndexConfig config);

  /// Up to k entries whose display contains t, case-insensitively, shortest
  /// first then lexicographic; one entry per canonical term and kind.
  std::vector<IndexEntry> treeLookup(const std::string& t, std::size_t k, std::size_t* visits = nullptr) const;
  /// Every entry containing t, unordered duplicates removed.
  std::vector<IndexEntry> treeMatches(const std::string& t, std::size_t* visits = nullptr) const;

  /// (length, count) of the non-empty bins with low <= length <= high.
  std::vector<std::pair<std::size_t, std::size_t>> binRange(std::size_t low, std::size_t high) const;

  const SuffixTree& tree() const noexcept { return tree_; }
  const std::vector<IndexEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::u32string>& foldedEntries() const noexcept { return folded_; }
  const ResidualBins& bins() const noexcept { return bins_; }
  const IndexConfig& config() const noexcept { return config_; }
  /// Literal entries of the tree.
  std::vector<std::string> treeLiterals() const;
  std::vector<std::string> predicates() const;

  /// Deterministic JSON-lines serialization.
  std::string serialize() const;
  static LiteralIndex deserialize(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static LiteralIndex load(const std::filesystem::path& path);

 private:
  std::vector<IndexEntry> entries_;
  std::vector<std::u32string> folded_;
  SuffixTree tree_;
  ResidualBins bins_;
  IndexConfig config_;
};

using IndexPtr = std::shared_ptr<const LiteralIndex>;

inline constexpr int kIndexFormatVersion = 1;

/// All predicates plus the top-K literals by significance (ties to the
/// lexicographically smaller) go to the tree; other literals to the bins.
LiteralIndex buildIndex(const init::CacheSnapshot& snapshot, std::size_t K);

}  // namespace scribe::index
