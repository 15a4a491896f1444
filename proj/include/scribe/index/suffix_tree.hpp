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
#include <string>
#include <vector>

namespace scribe::index {

/// Generalized suffix tree over a set of strings, built with Ukkonen's
/// algorithm on the concatenation s0 $0 s1 $1 ... with distinct terminators.
/// Strings are matched exactly as given; callers case-fold beforehand.
class SuffixTree {
 public:
  SuffixTree() = default;
  explicit SuffixTree(const std::vector<std::u32string>& strings);

  /// Ids of the strings containing `pattern`, each once, ascending. An empty
  /// pattern matches nothing. When `visits` is given, it receives the number
  /// of tree nodes touched.
  std::vector<std::uint32_t> find(const std::u32string& pattern, std::size_t* visits = nullptr) const;

  /// Number of occurrences of `pattern` across all strings.
  std::size_t occurrences(const std::u32string& pattern) const;

  std::size_t stringCount() const noexcept { return stringCount_; }
  std::size_t nodeCount() const noexcept { return start_.size(); }

 private:
  /// Node where `pattern` ends (or the child below it), or -1.
  int locate(const std::u32string& pattern, std::size_t& visits) const;
  int child(int node, char32_t symbol) const;

  std::vector<char32_t> text_;
  std::vector<std::int32_t> start_;
  std::vector<std::int32_t> end_;
  std::vector<std::int32_t> leafString_;  // -1 for internal nodes
  // Children in CSR form, sorted by first symbol.
  std::vector<std::uint32_t> childOffset_;
  std::vector<char32_t> childSymbol_;
  std::vector<std::int32_t> childNode_;
  std::size_t stringCount_ = 0;
};

}  // namespace scribe::index
