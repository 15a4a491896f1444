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

#include "scribe/qcm/qcm.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::qcm {

using index::EntryKind;

Slot parseSlot(const std::string& name) {
  if (name == "subject") return Slot::Subject;
  if (name == "predicate") return Slot::Predicate;
  if (name == "object") return Slot::Object;
  throw InvalidQuery("unknown slot '" + name + "'");
}

const char* slotName(Slot s) {
  switch (s) {
    case Slot::Subject:
      return "subject";
    case Slot::Predicate:
      return "predicate";
    case Slot::Object:
      return "object";
  }
  return "object";
}

void CompletionRequest::validate() const {
  if (k == 0) throw InvalidQuery("k must be positive");
}

TaskAssignment assignTasks(const std::vector<std::size_t>& binSizes, std::size_t P) {
  if (P == 0) throw InvalidQuery("P must be at least 1");
  std::size_t n = 0;
  for (auto s : binSizes) n += s;
  std::vector<std::size_t> capacity(P, n / P);
  capacity[P - 1] += n - (n / P) * P;

  TaskAssignment out(P);
  std::size_t pid = 0;
  for (std::size_t i = 0; i < binSizes.size(); ++i) {
    const auto size = binSizes[i];
    auto j = size;
    while (j > 0) {
      if (j < capacity[pid]) {
        out[pid].push_back({i, size - j, size - 1});
        capacity[pid] -= j;
        j = 0;
      } else {
        auto take = capacity[pid];
        if (take > 0) out[pid].push_back({i, size - j, size - j + take - 1});
        j -= take;
        capacity[pid] = 0;
        ++pid;
      }
    }
  }
  return out;
}

namespace {

Suggestion fromEntry(const index::IndexEntry& e, const std::string& language) {
  return {e.display, e.kind,
          e.kind == EntryKind::Predicate ? rdf::Term::uri(e.canonical) : rdf::Term::literal(e.canonical, language)};
}

struct BinHit {
  std::size_t length;
  const std::string* literal;
};

}  // namespace

CompletionResponse complete(const index::LiteralIndex& index, const CompletionRequest& request, std::size_t P,
                            WorkerPool& pool, std::stop_token stop, const TreeCallback& onTree) {
  request.validate();
  CompletionResponse response;
  if (request.t.empty() || request.t.front() == '?') {
    if (onTree) onTree(response.fromTree);
    return response;
  }

  const auto& language = index.config().language;
  for (const auto& e : index.treeMatches(request.t)) {
    if (response.fromTree.size() == request.k) break;
    if (request.slot == Slot::Predicate && e.kind != EntryKind::Predicate) continue;
    response.fromTree.push_back(fromEntry(e, language));
  }
  if (onTree) onTree(response.fromTree);
  if (response.fromTree.size() >= request.k || request.slot == Slot::Predicate) return response;

  auto folded = text::foldCase(text::decodeUtf8(request.t));
  auto bins = index.bins().range(folded.size(), folded.size() + request.gamma);
  std::vector<std::size_t> sizes;
  for (const auto* b : bins) sizes.push_back(b->literals.size());
  auto tasks = assignTasks(sizes, std::max<std::size_t>(1, P));

  std::vector<std::future<std::vector<BinHit>>> futures;
  for (auto& ranges : tasks) {
    if (ranges.empty()) continue;
    futures.push_back(pool.submit([&bins, &folded, stop, ranges = std::move(ranges)] {
      std::vector<BinHit> hits;
      std::size_t scanned = 0;
      for (const auto& r : ranges) {
        const auto& bin = *bins[r.bin];
        for (auto i = r.start; i <= r.end; ++i) {
          if ((++scanned & 1023) == 0 && stop.stop_requested()) return hits;
          if (bin.folded[i].find(folded) != std::u32string::npos) hits.push_back({bin.length, &bin.literals[i]});
        }
      }
      return hits;
    }));
  }
  std::vector<BinHit> hits;
  for (auto& f : futures) {
    auto part = f.get();
    hits.insert(hits.end(), part.begin(), part.end());
  }
  if (stop.stop_requested()) return CompletionResponse{{}, {}, true};

  std::sort(hits.begin(), hits.end(), [](const BinHit& a, const BinHit& b) {
    return a.length != b.length ? a.length < b.length : *a.literal < *b.literal;
  });
  std::set<std::string> shown;
  for (const auto& s : response.fromTree) shown.insert(s.display);
  for (const auto& h : hits) {
    if (response.fromTree.size() + response.fromBins.size() >= request.k) break;
    if (!shown.insert(*h.literal).second) continue;
    response.fromBins.push_back({*h.literal, EntryKind::Literal, rdf::Term::literal(*h.literal, language)});
  }
  return response;
}

double eliminationRatio(const index::LiteralIndex& index, const std::string& t, std::size_t gamma) {
  const auto total = index.bins().totalCount();
  if (total == 0) return 0.0;
  auto len = text::codepointLength(t);
  std::size_t inWindow = 0;
  for (auto [_, n] : index.binRange(len, len + gamma)) inWindow += n;
  return 1.0 - static_cast<double>(inWindow) / static_cast<double>(total);
}

}  // namespace scribe::qcm
