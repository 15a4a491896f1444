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

#include "scribe/similarity/jaro_winkler.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::similarity {

void JwParams::validate() const {
  if (!(prefixScale > 0.0 && prefixScale <= 0.25)) throw InvalidQuery("prefixScale must be in (0, 0.25]");
  if (!(threshold > 0.0 && threshold <= 1.0)) throw InvalidQuery("threshold must be in (0, 1]");
}

namespace {

double jaroFolded(const std::u32string& a, const std::u32string& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t longer = std::max(a.size(), b.size());
  const std::size_t window = longer / 2 > 0 ? longer / 2 - 1 : 0;

  std::vector<char> usedB(b.size(), 0);
  std::vector<std::size_t> matchedA;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (!usedB[j] && a[i] == b[j]) {
        usedB[j] = 1;
        matchedA.push_back(i);
        break;
      }
    }
  }
  const std::size_t m = matchedA.size();
  if (m == 0) return 0.0;

  std::size_t half = 0, k = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!usedB[j]) continue;
    if (a[matchedA[k++]] != b[j]) ++half;
  }
  const double md = static_cast<double>(m);
  const double t = static_cast<double>(half) / 2.0;
  return (md / a.size() + md / b.size() + (md - t) / md) / 3.0;
}

}  // namespace

double jaro(std::string_view a, std::string_view b) {
  return jaroFolded(text::foldCase(text::decodeUtf8(a)), text::foldCase(text::decodeUtf8(b)));
}

double jaroWinkler(std::string_view a, std::string_view b, const JwParams& params) {
  auto fa = text::foldCase(text::decodeUtf8(a));
  auto fb = text::foldCase(text::decodeUtf8(b));
  const double j = jaroFolded(fa, fb);
  std::size_t prefix = 0;
  const std::size_t limit = std::min({fa.size(), fb.size(), params.maxPrefix});
  while (prefix < limit && fa[prefix] == fb[prefix]) ++prefix;
  return j + static_cast<double>(prefix) * params.prefixScale * (1.0 - j);
}

}  // namespace scribe::similarity
