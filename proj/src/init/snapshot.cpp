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

#include "scribe/init/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "scribe/util/errors.hpp"

namespace scribe::init {

using nlohmann::json;

void InitConfig::validate() const {
  if (maxLiteralLength == 0) throw InvalidQuery("maxLiteralLength must be positive");
  if (pageSize == 0) throw InvalidQuery("pageSize must be positive");
}

ClassHierarchy ClassHierarchy::fromSubClassPairs(const std::vector<std::pair<std::string, std::string>>& pairs,
                                                  const std::vector<std::string>& classes) {
  ClassHierarchy h;
  h.nodes_.insert(classes.begin(), classes.end());
  std::map<std::string, std::set<std::string>> adj;
  std::map<std::string, std::size_t> indegree;
  for (const auto& [sub, super] : pairs) {
    h.nodes_.insert(sub);
    h.nodes_.insert(super);
    if (sub == super) {
      spdlog::warn("dropping reflexive subClassOf edge on {}", sub);
      ++h.dropped_;
      continue;
    }
    if (adj[super].insert(sub).second) ++indegree[sub];
  }

  enum class Mark { White, Gray, Black };
  std::map<std::string, Mark> mark;
  std::map<std::string, std::set<std::string>> kept;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    mark[v] = Mark::Gray;
    auto it = adj.find(v);
    if (it != adj.end()) {
      for (const auto& child : it->second) {
        auto m = mark[child];
        if (m == Mark::Gray) {
          spdlog::warn("subClassOf cycle: dropping edge {} -> {}", child, v);
          ++h.dropped_;
          continue;
        }
        kept[v].insert(child);
        if (m == Mark::White) visit(child);
      }
    }
    mark[v] = Mark::Black;
  };
  for (const auto& n : h.nodes_) {
    if (indegree[n] == 0) visit(n);
  }
  for (const auto& n : h.nodes_) {
    if (mark[n] == Mark::White) visit(n);
  }

  std::set<std::string> hasParent;
  for (auto& [parent, children] : kept) {
    h.children_[parent].assign(children.begin(), children.end());
    hasParent.insert(children.begin(), children.end());
  }
  for (const auto& n : h.nodes_) {
    if (!hasParent.count(n)) h.roots_.push_back(n);
  }
  return h;
}

const std::vector<std::string>& ClassHierarchy::children(const std::string& cls) const {
  static const std::vector<std::string> kNone;
  auto it = children_.find(cls);
  return it == children_.end() ? kNone : it->second;
}

std::size_t ClassHierarchy::edgeCount() const {
  std::size_t n = 0;
  for (const auto& [_, c] : children_) n += c.size();
  return n;
}

bool BudgetMeter::tryConsume() {
  if (exhausted()) return false;
  ++used_;
  return true;
}

namespace {

json statsToJson(const InitStats& s) {
  return {{"queries_issued", s.queriesIssued}, {"queries_timed_out", s.queriesTimedOut},
          {"literal_count", s.literalCount},   {"budget_used", s.budgetUsed},
          {"budget_exhausted", s.budgetExhausted}};
}

InitStats statsFromJson(const json& j) {
  InitStats s;
  s.queriesIssued = j.at("queries_issued").get<std::size_t>();
  s.queriesTimedOut = j.at("queries_timed_out").get<std::size_t>();
  s.literalCount = j.at("literal_count").get<std::size_t>();
  s.budgetUsed = j.at("budget_used").get<std::size_t>();
  s.budgetExhausted = j.at("budget_exhausted").get<bool>();
  return s;
}

}  // namespace

void writeSnapshot(const CacheSnapshot& snapshot, const std::filesystem::path& path) {
  json edges = json::array();
  for (const auto& [parent, children] : snapshot.hierarchy.childEdges()) {
    for (const auto& c : children) edges.push_back({c, parent});
  }
  json header = {{"format_version", kSnapshotFormatVersion},
                 {"record", "header"},
                 {"endpoint", snapshot.endpointId},
                 {"language", snapshot.language},
                 {"max_literal_length", snapshot.maxLiteralLength},
                 {"classes", std::vector<std::string>(snapshot.hierarchy.nodes().begin(), snapshot.hierarchy.nodes().end())},
                 {"subclass_of", edges},
                 {"stats", statsToJson(snapshot.stats)}};

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << header.dump() << '\n';
    for (const auto& p : snapshot.predicates) {
      out << json{{"record", "predicate"}, {"uri", p.uri}, {"frequency", p.frequency}}.dump() << '\n';
    }
    for (const auto& l : snapshot.literals) {
      out << json{{"record", "literal"}, {"lexical", l.lexical}, {"significance", l.significance}}.dump() << '\n';
    }
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CacheSnapshot readSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open snapshot " + path.string());
  CacheSnapshot s;
  std::string line;
  std::size_t lineNo = 0;
  bool sawHeader = false;
  try {
    while (std::getline(in, line)) {
      ++lineNo;
      if (line.empty()) continue;
      auto j = json::parse(line);
      auto record = j.at("record").get<std::string>();
      if (record == "header") {
        auto version = j.at("format_version").get<int>();
        if (version != kSnapshotFormatVersion) {
          throw FormatError("unsupported snapshot format_version " + std::to_string(version));
        }
        s.endpointId = j.at("endpoint").get<std::string>();
        s.language = j.at("language").get<std::string>();
        s.maxLiteralLength = j.at("max_literal_length").get<std::size_t>();
        s.hierarchy = ClassHierarchy::fromSubClassPairs(
            j.at("subclass_of").get<std::vector<std::pair<std::string, std::string>>>(),
            j.at("classes").get<std::vector<std::string>>());
        s.stats = statsFromJson(j.at("stats"));
        sawHeader = true;
      } else if (!sawHeader) {
        throw FormatError("snapshot record before header");
      } else if (record == "predicate") {
        s.predicates.push_back({j.at("uri").get<std::string>(), j.at("frequency").get<std::size_t>()});
      } else if (record == "literal") {
        s.literals.push_back({j.at("lexical").get<std::string>(), j.at("significance").get<std::size_t>()});
      } else {
        throw FormatError("unknown snapshot record '" + record + "'");
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ":" + std::to_string(lineNo) + ": " + e.what());
  }
  if (!sawHeader) throw FormatError("snapshot lacks a header: " + path.string());
  return s;
}

}  // namespace scribe::init
