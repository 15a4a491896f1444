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
#include <string>
#include <string_view>
#include <vector>

namespace scribe::text {

/// Decodes UTF-8; malformed sequences become U+FFFD.
std::u32string decodeUtf8(std::string_view s);
std::string encodeUtf8(std::u32string_view s);

/// Number of Unicode scalar values in a UTF-8 string.
std::size_t codepointLength(std::string_view s);

/// Simple (one-to-one) case folding for Latin, Greek and Cyrillic.
char32_t foldCase(char32_t c);
std::u32string foldCase(std::u32string_view s);
std::string foldCaseUtf8(std::string_view s);

/// Fragment after the last '/' or '#' of an IRI.
std::string_view localName(std::string_view iri);

/// "birthPlace" -> "birth place"; returns the input when there is nothing to split.
std::string splitCamelCase(std::string_view name);

/// Local name rendered for people: camelCase split, underscores to spaces.
std::string displayName(std::string_view iri);

}  // namespace scribe::text
