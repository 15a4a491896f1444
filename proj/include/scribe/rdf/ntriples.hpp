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

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "scribe/rdf/triple_store.hpp"

namespace scribe::rdf {

/// Parses N-Triples text. Throws ParseError carrying the 1-based line number.
std::vector<Triple> parseNTriples(std::string_view text);

TripleStore loadNTriples(const std::filesystem::path& path);

void writeNTriples(std::ostream& out, const std::vector<Triple>& triples);

}  // namespace scribe::rdf
