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

#include "scribe/index/suffix_tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace scribe::index {

namespace {

constexpr char32_t kTerminatorBase = 0x110000;

struct Builder {
  std::vector<char32_t>& text;
  std::vector<std::int32_t>& start;
  std::vector<std::int32_t>& end;
  std::vector<std::int32_t> link;
  std::unordered_map<std::uint64_t, std::int32_t> next;

  std::int32_t leafEnd;
  std::int32_t activeNode = 0;
  std::int32_t activeEdge = 0;
  std::int32_t activeLength = 0;
  std::int32_t remainder = 0;
  std::int32_t needLink = -1;
  std::int32_t pos = 0;

  Builder(std::vector<char32_t>& t, std::vector<std::int32_t>& s, std::vector<std::int32_t>& e)
      : text(t), start(s), end(e), leafEnd(static_cast<std::int32_t>(t.size())) {
    next.reserve(text.size() * 2);
    newNode(0, 0);
  }

  static std::uint64_t key(std::int32_t node, char32_t sym) {
    return (static_cast<std::uint64_t>(node) << 32) | static_cast<std::uint64_t>(sym);
  }

  std::int32_t newNode(std::int32_t s, std::int32_t e) {
    start.push_back(s);
    end.push_back(e);
    link.push_back(-1);
    return static_cast<std::int32_t>(start.size() - 1);
  }

  std::int32_t edgeLength(std::int32_t node) const { return std::min(end[node], pos + 1) - start[node]; }

  void addLink(std::int32_t node) {
    if (needLink > 0) link[needLink] = node;
    needLink = node;
  }

  bool walkDown(std::int32_t node) {
    auto len = edgeLength(node);
    if (activeLength >= len) {
      activeEdge += len;
      activeLength -= len;
      activeNode = node;
      return true;
    }
    return false;
  }

  void extend() {
    needLink = -1;
    ++remainder;
    while (remainder > 0) {
      if (activeLength == 0) activeEdge = pos;
      auto it = next.find(key(activeNode, text[activeEdge]));
      if (it == next.end()) {
        auto leaf = newNode(pos, leafEnd);
        next[key(activeNode, text[activeEdge])] = leaf;
        addLink(activeNode);
      } else {
        auto nxt = it->second;
        if (walkDown(nxt)) continue;
        if (text[start[nxt] + activeLength] == text[pos]) {
          ++activeLength;
          addLink(activeNode);
          break;
        }
        auto split = newNode(start[nxt], start[nxt] + activeLength);
        next[key(activeNode, text[activeEdge])] = split;
        auto leaf = newNode(pos, leafEnd);
        next[key(split, text[pos])] = leaf;
        start[nxt] += activeLength;
        next[key(split, text[start[nxt]])] = nxt;
        addLink(split);
      }
      --remainder;
      if (activeNode == 0 && activeLength > 0) {
        --activeLength;
        activeEdge = pos - remainder + 1;
      } else {
        activeNode = link[activeNode] > 0 ? link[activeNode] : 0;
      }
    }
  }

  void run() {
    for (pos = 0; pos < static_cast<std::int32_t>(text.size()); ++pos) extend();
  }
};

}  // namespace

SuffixTree::SuffixTree(const std::vector<std::u32string>& strings) : stringCount_(strings.size()) {
  std::size_t total = 0;
  for (const auto& s : strings) total += s.size() + 1;
  if (total >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()) ||
      strings.size() >= static_cast<std::size_t>(0xFFFFFFFFu - kTerminatorBase)) {
    throw std::length_error("suffix tree input too large");
  }
  text_.reserve(total);
  std::vector<std::uint32_t> owner;
  owner.reserve(total);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (char32_t c : strings[i]) {
      if (c >= kTerminatorBase) throw std::invalid_argument("symbol outside the Unicode range");
      text_.push_back(c);
      owner.push_back(static_cast<std::uint32_t>(i));
    }
    text_.push_back(kTerminatorBase + static_cast<char32_t>(i));
    owner.push_back(static_cast<std::uint32_t>(i));
  }

  std::vector<std::tuple<std::int32_t, char32_t, std::int32_t>> edges;
  {
    Builder b(text_, start_, end_);
    b.run();
    edges.reserve(b.next.size());
    for (const auto& [k, child] : b.next) {
      edges.emplace_back(static_cast<std::int32_t>(k >> 32), static_cast<char32_t>(k & 0xFFFFFFFFu), child);
    }
  }
  std::sort(edges.begin(), edges.end());

  const auto n = start_.size();
  childOffset_.assign(n + 1, 0);
  childSymbol_.reserve(edges.size());
  childNode_.reserve(edges.size());
  for (const auto& [parent, sym, child] : edges) {
    ++childOffset_[parent + 1];
    childSymbol_.push_back(sym);
    childNode_.push_back(child);
  }
  for (std::size_t i = 0; i < n; ++i) childOffset_[i + 1] += childOffset_[i];

  // A leaf's suffix begins at textLen - (depth of parent + leaf edge length).
  leafString_.assign(n, -1);
  const auto textLen = static_cast<std::int32_t>(text_.size());
  std::vector<std::pair<std::int32_t, std::int32_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    auto first = childOffset_[node], last = childOffset_[node + 1];
    if (node != 0 && first == last) {
      auto suffixStart = textLen - (depth + end_[node] - start_[node]);
      leafString_[node] = static_cast<std::int32_t>(owner[suffixStart]);
      continue;
    }
    auto childDepth = node == 0 ? 0 : depth + end_[node] - start_[node];
    for (auto i = first; i < last; ++i) stack.emplace_back(childNode_[i], childDepth);
  }
}

int SuffixTree::child(int node, char32_t symbol) const {
  auto first = childSymbol_.begin() + childOffset_[node];
  auto last = childSymbol_.begin() + childOffset_[node + 1];
  auto it = std::lower_bound(first, last, symbol);
  if (it == last || *it != symbol) return -1;
  return childNode_[it - childSymbol_.begin()];
}

int SuffixTree::locate(const std::u32string& pattern, std::size_t& visits) const {
  if (pattern.empty() || start_.empty()) return -1;
  int node = 0;
  ++visits;
  std::size_t i = 0;
  while (i < pattern.size()) {
    int c = child(node, pattern[i]);
    if (c < 0) return -1;
    ++visits;
    for (auto p = start_[c]; p < end_[c] && i < pattern.size(); ++p, ++i) {
      if (text_[p] != pattern[i]) return -1;
    }
    node = c;
  }
  return node;
}

std::vector<std::uint32_t> SuffixTree::find(const std::u32string& pattern, std::size_t* visits) const {
  std::size_t count = 0;
  std::vector<std::uint32_t> out;
  int top = locate(pattern, count);
  if (top >= 0) {
    std::vector<int> stack{top};
    bool first = true;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      if (!first) ++count;
      first = false;
      if (leafString_[node] >= 0) {
        out.push_back(static_cast<std::uint32_t>(leafString_[node]));
        continue;
      }
      for (auto i = childOffset_[node]; i < childOffset_[node + 1]; ++i) stack.push_back(childNode_[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  if (visits) *visits = count;
  return out;
}

std::size_t SuffixTree::occurrences(const std::u32string& pattern) const {
  std::size_t visits = 0;
  int top = locate(pattern, visits);
  if (top < 0) return 0;
  std::size_t leaves = 0;
  std::vector<int> stack{top};
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    if (leafString_[node] >= 0) {
      ++leaves;
      continue;
    }
    for (auto i = childOffset_[node]; i < childOffset_[node + 1]; ++i) stack.push_back(childNode_[i]);
  }
  return leaves;
}

}  // namespace scribe::index
