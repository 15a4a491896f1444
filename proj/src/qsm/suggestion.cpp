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

#include "scribe/qsm/suggestion.hpp"

namespace scribe::qsm {

const char* changeKindName(ChangeKind k) {
  switch (k) {
    case ChangeKind::Predicate:
      return "predicate";
    case ChangeKind::Literal:
      return "literal";
    case ChangeKind::Structure:
      return "structure";
  }
  return "literal";
}

}  // namespace scribe::qsm
