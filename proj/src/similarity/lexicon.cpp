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

#include "scribe/similarity/lexicon.hpp"

#include <fstream>

#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::similarity {

Lexicon Lexicon::fromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FormatError("lexicon must be a JSON object");
  Lexicon lex;
  for (const auto& [key, values] : doc.items()) {
    if (!values.is_array()) throw FormatError("lexicon entry '" + key + "' must be an array");
    for (const auto& v : values) {
      if (!v.is_string()) throw FormatError("lexicon entry '" + key + "' holds a non-string");
      lex.add(key, v.get<std::string>());
    }
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open lexicon " + path.string());
  try {
    return fromJson(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void Lexicon::add(std::string_view canonical, std::string_view lexicalization) {
  auto c = text::foldCaseUtf8(canonical);
  auto l = text::foldCaseUtf8(lexicalization);
  forward_[c].insert(l);
  inverse_[l].insert(c);
}

std::set<std::string> Lexicon::lexicalize(std::string_view term) const {
  std::set<std::string> out{std::string(term)};
  auto key = text::foldCaseUtf8(term);
  if (auto it = forward_.find(key); it != forward_.end()) out.insert(it->second.begin(), it->second.end());
  if (auto it = inverse_.find(key); it != inverse_.end()) out.insert(it->second.begin(), it->second.end());
  return out;
}

}  // namespace scribe::similarity
