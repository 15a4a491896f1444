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

#include "scribe/index/literal_index.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::index {

using nlohmann::json;

ResidualBins::ResidualBins(std::vector<std::string> literals) {
  std::map<std::size_t, std::vector<std::string>> grouped;
  for (auto& l : literals) grouped[text::codepointLength(l)].push_back(std::move(l));
  for (auto& [length, group] : grouped) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    Bin b;
    b.length = length;
    b.folded.reserve(group.size());
    for (const auto& l : group) b.folded.push_back(text::foldCase(text::decodeUtf8(l)));
    b.literals = std::move(group);
    total_ += b.literals.size();
    bins_.push_back(std::move(b));
  }
}

const ResidualBins::Bin* ResidualBins::bin(std::size_t length) const {
  auto it = std::lower_bound(bins_.begin(), bins_.end(), length,
                             [](const Bin& b, std::size_t len) { return b.length < len; });
  return it != bins_.end() && it->length == length ? &*it : nullptr;
}

std::vector<const ResidualBins::Bin*> ResidualBins::range(std::size_t low, std::size_t high) const {
  std::vector<const Bin*> out;
  for (const auto& b : bins_) {
    if (b.length >= low && b.length <= high) out.push_back(&b);
  }
  return out;
}

namespace {

std::vector<std::u32string> foldAll(const std::vector<IndexEntry>& entries) {
  std::vector<std::u32string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(text::foldCase(text::decodeUtf8(e.display)));
  return out;
}

bool shorterFirst(const IndexEntry& a, const IndexEntry& b) {
  auto la = text::codepointLength(a.display), lb = text::codepointLength(b.display);
  if (la != lb) return la < lb;
  if (a.display != b.display) return a.display < b.display;
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.canonical < b.canonical;
}

const char* kindName(EntryKind k) { return k == EntryKind::Predicate ? "predicate" : "literal"; }

}  // namespace

LiteralIndex::LiteralIndex(std::vector<IndexEntry> treeEntries, std::vector<std::string> residual, IndexConfig config)
    : entries_(std::move(treeEntries)),
      folded_(foldAll(entries_)),
      tree_(folded_),
      bins_(std::move(residual)),
      config_(std::move(config)) {}

std::vector<IndexEntry> LiteralIndex::treeMatches(const std::string& t, std::size_t* visits) const {
  std::vector<IndexEntry> out;
  if (t.empty()) {
    if (visits) *visits = 0;
    return out;
  }
  auto ids = tree_.find(text::foldCase(text::decodeUtf8(t)), visits);
  std::set<std::pair<EntryKind, std::string>> seen;
  std::vector<IndexEntry> all;
  for (auto id : ids) all.push_back(entries_[id]);
  std::sort(all.begin(), all.end(), shorterFirst);
  for (auto& e : all) {
    if (seen.emplace(e.kind, e.canonical).second) out.push_back(std::move(e));
  }
  return out;
}

std::vector<IndexEntry> LiteralIndex::treeLookup(const std::string& t, std::size_t k, std::size_t* visits) const {
  auto out = treeMatches(t, visits);
  if (out.size() > k) out.resize(k);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> LiteralIndex::binRange(std::size_t low, std::size_t high) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (low > high) return out;
  for (const auto* b : bins_.range(low, high)) out.emplace_back(b->length, b->literals.size());
  return out;
}

std::vector<std::string> LiteralIndex::treeLiterals() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.kind == EntryKind::Literal) out.push_back(e.canonical);
  }
  return out;
}

std::vector<std::string> LiteralIndex::predicates() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.kind == EntryKind::Predicate && seen.insert(e.canonical).second) out.push_back(e.canonical);
  }
  return out;
}

std::string LiteralIndex::serialize() const {
  std::ostringstream out;
  out << json{{"format_version", kIndexFormatVersion},
              {"record", "header"},
              {"significant_literal_count", config_.significantLiteralCount},
              {"max_literal_length", config_.maxLiteralLength},
              {"language", config_.language}}
             .dump()
      << '\n';
  for (const auto& e : entries_) {
    out << json{{"record", "tree"}, {"kind", kindName(e.kind)}, {"display", e.display}, {"canonical", e.canonical}}
               .dump()
        << '\n';
  }
  for (const auto& b : bins_.bins()) {
    out << json{{"record", "bin"}, {"length", b.length}, {"literals", b.literals}}.dump() << '\n';
  }
  return out.str();
}

LiteralIndex LiteralIndex::deserialize(const std::string& textBody) {
  std::istringstream in(textBody);
  std::string line;
  IndexConfig config;
  std::vector<IndexEntry> entries;
  std::vector<std::string> residual;
  bool header = false;
  std::size_t lineNo = 0;
  try {
    while (std::getline(in, line)) {
      ++lineNo;
      if (line.empty()) continue;
      auto j = json::parse(line);
      auto record = j.at("record").get<std::string>();
      if (record == "header") {
        if (j.at("format_version").get<int>() != kIndexFormatVersion) throw FormatError("unsupported index format_version");
        config.significantLiteralCount = j.at("significant_literal_count").get<std::size_t>();
        config.maxLiteralLength = j.at("max_literal_length").get<std::size_t>();
        config.language = j.at("language").get<std::string>();
        header = true;
      } else if (!header) {
        throw FormatError("index record before header");
      } else if (record == "tree") {
        auto kind = j.at("kind").get<std::string>();
        if (kind != "predicate" && kind != "literal") throw FormatError("unknown entry kind " + kind);
        entries.push_back({j.at("display").get<std::string>(),
                           kind == "predicate" ? EntryKind::Predicate : EntryKind::Literal,
                           j.at("canonical").get<std::string>()});
      } else if (record == "bin") {
        auto length = j.at("length").get<std::size_t>();
        for (auto& l : j.at("literals").get<std::vector<std::string>>()) {
          if (text::codepointLength(l) != length) throw FormatError("literal in the wrong bin: " + l);
          residual.push_back(std::move(l));
        }
      } else {
        throw FormatError("unknown index record " + record);
      }
    }
  } catch (const json::exception& e) {
    throw FormatError("index line " + std::to_string(lineNo) + ": " + e.what());
  }
  if (!header) throw FormatError("index lacks a header");
  return LiteralIndex(std::move(entries), std::move(residual), std::move(config));
}

void LiteralIndex::save(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << serialize();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

LiteralIndex LiteralIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open index " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

LiteralIndex buildIndex(const init::CacheSnapshot& snapshot, std::size_t K) {
  std::vector<IndexEntry> entries;
  for (const auto& p : snapshot.predicates) {
    std::string local(text::localName(p.uri));
    if (local.empty()) continue;
    entries.push_back({local, EntryKind::Predicate, p.uri});
    auto split = text::displayName(p.uri);
    if (split != local) entries.push_back({split, EntryKind::Predicate, p.uri});
  }

  std::vector<const init::LiteralStat*> ranked;
  ranked.reserve(snapshot.literals.size());
  for (const auto& l : snapshot.literals) ranked.push_back(&l);
  std::sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
    return a->significance != b->significance ? a->significance > b->significance : a->lexical < b->lexical;
  });

  std::vector<std::string> residual;
  std::set<std::string_view> seen;
  std::size_t admitted = 0;
  for (const auto* l : ranked) {
    if (!seen.insert(l->lexical).second) continue;
    if (admitted < K) {
      entries.push_back({l->lexical, EntryKind::Literal, l->lexical});
      ++admitted;
    } else {
      residual.push_back(l->lexical);
    }
  }
  IndexConfig config{K, snapshot.maxLiteralLength, snapshot.language};
  return LiteralIndex(std::move(entries), std::move(residual), std::move(config));
}

}  // namespace scribe::index
