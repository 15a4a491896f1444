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

#include <doctest.h>

#include <random>
#include <set>

#include "scribe/index/literal_index.hpp"
#include "scribe/index/suffix_tree.hpp"
#include "scribe/util/text.hpp"

using namespace scribe;
using namespace scribe::index;

namespace {

std::u32string u32(const std::string& s) { return text::decodeUtf8(s); }

std::vector<std::uint32_t> bruteForce(const std::vector<std::u32string>& strings, const std::u32string& t) {
  std::vector<std::uint32_t> out;
  if (t.empty()) return out;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].find(t) != std::u32string::npos) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::size_t bruteOccurrences(const std::vector<std::u32string>& strings, const std::u32string& t) {
  std::size_t n = 0;
  for (const auto& s : strings) {
    for (auto pos = s.find(t); pos != std::u32string::npos; pos = s.find(t, pos + 1)) ++n;
  }
  return n;
}

init::CacheSnapshot snapshotOf(std::vector<std::pair<std::string, std::size_t>> literals,
                               std::vector<std::string> predicates = {}) {
  init::CacheSnapshot s;
  for (auto& p : predicates) s.predicates.push_back({std::move(p), 1});
  for (auto& [l, sig] : literals) s.literals.push_back({std::move(l), sig});
  return s;
}

std::set<std::string> displays(const std::vector<IndexEntry>& entries) {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(e.display);
  return out;
}

}  // namespace

TEST_CASE("suffix tree matches brute-force substring search") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 400; ++round) {
    std::uniform_int_distribution<int> count(0, 25), len(0, 12), alpha(0, 2 + round % 5);
    std::vector<std::u32string> strings(count(rng));
    for (auto& s : strings) {
      int n = len(rng);
      for (int i = 0; i < n; ++i) s.push_back(U'a' + alpha(rng));
    }
    SuffixTree tree(strings);
    for (int probe = 0; probe < 10; ++probe) {
      std::u32string t;
      if (!strings.empty() && probe % 2 == 0) {
        const auto& src = strings[rng() % strings.size()];
        if (!src.empty()) {
          auto a = rng() % src.size();
          auto b = a + 1 + rng() % (src.size() - a);
          t = src.substr(a, b - a);
        }
      }
      if (t.empty()) {
        int n = 1 + len(rng) % 4;
        for (int i = 0; i < n; ++i) t.push_back(U'a' + alpha(rng));
      }
      std::size_t visits = 0;
      auto got = tree.find(t, &visits);
      CHECK(got == bruteForce(strings, t));
      auto z = bruteOccurrences(strings, t);
      CHECK(tree.occurrences(t) == z);
      CHECK(visits <= 4 * (t.size() + z));
    }
  }
}

TEST_CASE("suffix tree edge cases") {
  SuffixTree empty(std::vector<std::u32string>{});
  CHECK(empty.find(U"a").empty());
  SuffixTree tree({U"", U"aaaa", U"aa", U"banana"});
  CHECK(tree.find(U"").empty());
  CHECK(tree.find(U"aa") == std::vector<std::uint32_t>{1, 2});
  CHECK(tree.occurrences(U"aa") == 4);
  CHECK(tree.find(U"ana") == std::vector<std::uint32_t>{3});
  CHECK(tree.occurrences(U"ana") == 2);
  CHECK(tree.find(U"nab").empty());
  CHECK(tree.find(U"aaaaa").empty());
}

TEST_CASE("buildIndex selection") {
  auto snap = snapshotOf({{"alpha", 9}, {"bravo", 7}, {"charlie", 5}, {"delta", 3}, {"echo", 1}});
  SUBCASE("top-K by significance") {
    auto idx = buildIndex(snap, 2);
    CHECK(idx.treeLiterals() == std::vector<std::string>{"alpha", "bravo"});
    CHECK(idx.bins().totalCount() == 3);
  }
  SUBCASE("K=0 bins every literal") {
    auto idx = buildIndex(snapshotOf({{"x", 1}, {"yy", 2}}, {"http://ex.org/birthPlace"}), 0);
    CHECK(idx.treeLiterals().empty());
    CHECK(idx.bins().totalCount() == 2);
    CHECK(displays(idx.treeLookup("place", 10)) == std::set<std::string>{"birthPlace"});
    CHECK(idx.treeLookup("birth p", 10).size() == 1);
  }
  SUBCASE("ties at rank K admit the lexicographically smaller") {
    auto idx = buildIndex(snapshotOf({{"zulu", 4}, {"yankee", 4}, {"xray", 4}}), 1);
    CHECK(idx.treeLiterals() == std::vector<std::string>{"xray"});
  }
  SUBCASE("K beyond the literal count leaves the bins empty") {
    auto idx = buildIndex(snap, 100);
    CHECK(idx.bins().totalCount() == 0);
    CHECK(idx.treeLiterals().size() == 5);
  }
}

TEST_CASE("treeLookup") {
  auto idx = buildIndex(snapshotOf({{"New York", 3}, {"Yorkshire", 2}, {"London", 1}}), 10);
  SUBCASE("substring hits, case-insensitive") {
    auto hits = idx.treeLookup("York", 10);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].display == "New York");
    CHECK(hits[1].display == "Yorkshire");
    CHECK(idx.treeLookup("york", 10).size() == 2);
  }
  SUBCASE("a full string finds itself") { CHECK(displays(idx.treeLookup("London", 10)).count("London")); }
  SUBCASE("absent substring") { CHECK(idx.treeLookup("Paris", 10).empty()); }
  SUBCASE("empty probe") { CHECK(idx.treeLookup("", 10).empty()); }
  SUBCASE("k truncates after ordering") {
    auto hits = idx.treeLookup("o", 1);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].display == "London");
  }
}

TEST_CASE("binRange") {
  auto idx = buildIndex(snapshotOf({{"abcd", 1}, {"abcdefghi", 1}, {"abcdefghijklmno", 1}, {"wxyz", 1}}), 0);
  CHECK(idx.binRange(4, 14) == std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {9, 1}});
  CHECK(idx.binRange(1, 3).empty());
  std::size_t total = 0;
  for (auto [len, n] : idx.binRange(0, 1000)) total += n;
  CHECK(total == idx.bins().totalCount());
  CHECK(idx.binRange(9, 4).empty());
}

TEST_CASE("index properties on random snapshots") {
  std::mt19937 rng(99);
  const std::vector<std::string> syllables = {"ka", "ne", "dy", "Vi", "king", " ", "Pré", "ss", "oñ", "Ω"};
  for (int round = 0; round < 60; ++round) {
    std::vector<std::pair<std::string, std::size_t>> lits;
    std::set<std::string> unique;
    int n = rng() % 40;
    for (int i = 0; i < n; ++i) {
      std::string s;
      int parts = 1 + rng() % 5;
      for (int p = 0; p < parts; ++p) s += syllables[rng() % syllables.size()];
      if (unique.insert(s).second) lits.emplace_back(s, rng() % 5);
    }
    auto snap = snapshotOf(lits, {"http://ex.org/p#hasName"});
    std::size_t K = rng() % 20;
    auto idx = buildIndex(snap, K);

    // Partition: every literal is in the tree xor in exactly the bin of its length.
    auto inTree = idx.treeLiterals();
    std::multiset<std::string> seen(inTree.begin(), inTree.end());
    for (const auto& b : idx.bins().bins()) {
      for (const auto& l : b.literals) {
        CHECK(text::codepointLength(l) == b.length);
        seen.insert(l);
      }
    }
    CHECK(seen == std::multiset<std::string>(unique.begin(), unique.end()));
    CHECK(inTree.size() == std::min(K, unique.size()));

    // Completeness against case-folded brute force over tree entries.
    for (int probe = 0; probe < 8; ++probe) {
      std::string t = syllables[rng() % syllables.size()];
      if (probe % 2) t += syllables[rng() % syllables.size()];
      auto ft = text::foldCase(text::decodeUtf8(t));
      std::set<std::pair<int, std::string>> expected;
      for (const auto& e : idx.entries()) {
        if (text::foldCase(text::decodeUtf8(e.display)).find(ft) != std::u32string::npos) {
          expected.emplace(static_cast<int>(e.kind), e.canonical);
        }
      }
      std::set<std::pair<int, std::string>> got;
      for (const auto& e : idx.treeMatches(t)) got.emplace(static_cast<int>(e.kind), e.canonical);
      CHECK(got == expected);
    }

    // Determinism and exact round trip.
    auto text = idx.serialize();
    CHECK(buildIndex(snap, K).serialize() == text);
    CHECK(LiteralIndex::deserialize(text).serialize() == text);
  }
}
