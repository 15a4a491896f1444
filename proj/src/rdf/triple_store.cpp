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

#include "scribe/rdf/triple_store.hpp"

#include <algorithm>

namespace scribe::rdf {

namespace {

using Encoded = TripleStore::EncodedTriple;

/// Range of rows in a sorted permutation whose first `n` columns equal `key`.
std::span<const Encoded> prefixRange(const std::vector<Encoded>& rows, const Encoded& key, int n) {
  auto less = [n](const Encoded& a, const Encoded& b) {
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  auto [lo, hi] = std::equal_range(rows.begin(), rows.end(), key, less);
  return {lo, hi};
}

}  // namespace

TripleStore::TripleStore(std::vector<Triple> triples) {
  auto intern = [this](Term t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    auto id = static_cast<TermId>(terms_.size());
    ids_.emplace(t, id);
    terms_.push_back(std::move(t));
    return id;
  };
  spo_.reserve(triples.size());
  for (auto& t : triples) {
    validateTriple(t);
    spo_.push_back({intern(std::move(t.subject)), intern(std::move(t.predicate)), intern(std::move(t.object))});
  }
  std::sort(spo_.begin(), spo_.end());
  spo_.erase(std::unique(spo_.begin(), spo_.end()), spo_.end());
  pos_.reserve(spo_.size());
  osp_.reserve(spo_.size());
  for (const auto& t : spo_) {
    pos_.push_back({t[1], t[2], t[0]});
    osp_.push_back({t[2], t[0], t[1]});
  }
  std::sort(pos_.begin(), pos_.end());
  std::sort(osp_.begin(), osp_.end());
}

std::optional<TermId> TripleStore::lookup(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<TripleStore::EncodedTriple> TripleStore::match(std::optional<TermId> s, std::optional<TermId> p,
                                                           std::optional<TermId> o) const {
  std::vector<Encoded> out;
  if (s) {
    if (p) {
      auto r = prefixRange(spo_, {*s, *p, o.value_or(0)}, o ? 3 : 2);
      out.assign(r.begin(), r.end());
    } else {
      auto r = prefixRange(spo_, {*s, 0, 0}, 1);
      for (const auto& t : r) {
        if (!o || t[2] == *o) out.push_back(t);
      }
    }
    return out;
  }
  if (p) {
    auto r = prefixRange(pos_, {*p, o.value_or(0), 0}, o ? 2 : 1);
    out.reserve(r.size());
    for (const auto& t : r) out.push_back({t[2], t[0], t[1]});
    return out;
  }
  if (o) {
    auto r = prefixRange(osp_, {*o, 0, 0}, 1);
    out.reserve(r.size());
    for (const auto& t : r) out.push_back({t[1], t[2], t[0]});
    return out;
  }
  return spo_;
}

std::size_t TripleStore::count(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o) const {
  if (s && p) return prefixRange(spo_, {*s, *p, o.value_or(0)}, o ? 3 : 2).size();
  if (s && !o) return prefixRange(spo_, {*s, 0, 0}, 1).size();
  if (!s && p) return prefixRange(pos_, {*p, o.value_or(0), 0}, o ? 2 : 1).size();
  if (!s && o) return prefixRange(osp_, {*o, 0, 0}, 1).size();
  if (!s && !p && !o) return spo_.size();
  return match(s, p, o).size();
}

std::vector<Triple> TripleStore::triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const auto& t : spo_) out.push_back({terms_[t[0]], terms_[t[1]], terms_[t[2]]});
  return out;
}

}  // namespace scribe::rdf
