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
#include <vector>

#include "scribe/qcm/qcm.hpp"

namespace scribe::testing {

/// Hand trace of task assignment one literal at a time: each process takes
/// literals in bin order until its capacity (floor(n/P), remainder to the
/// last process) is used up, then the next process continues.
inline qcm::TaskAssignment traceAssignment(const std::vector<std::size_t>& sizes, std::size_t P) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  std::vector<std::size_t> left(P, n / P);
  left.back() += n % P;

  qcm::TaskAssignment out(P);
  std::size_t pid = 0;
  for (std::size_t bin = 0; bin < sizes.size(); ++bin) {
    for (std::size_t pos = 0; pos < sizes[bin]; ++pos) {
      while (left[pid] == 0) ++pid;
      --left[pid];
      auto& ranges = out[pid];
      if (!ranges.empty() && ranges.back().bin == bin && ranges.back().end + 1 == pos) {
        ranges.back().end = pos;
      } else {
        ranges.push_back({bin, pos, pos});
      }
    }
  }
  return out;
}

}  // namespace scribe::testing
