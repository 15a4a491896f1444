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
#include <string_view>

namespace scribe::similarity {

struct JwParams {
  double prefixScale = 0.1;
  std::size_t maxPrefix = 4;
  double threshold = 0.7;

  /// Throws InvalidQuery.
  void validate() const;
};

/// Jaro similarity of the case-folded strings.
double jaro(std::string_view a, std::string_view b);

/// Jaro-Winkler similarity of the case-folded strings, in [0, 1].
double jaroWinkler(std::string_view a, std::string_view b, const JwParams& params = {});

}  // namespace scribe::similarity
