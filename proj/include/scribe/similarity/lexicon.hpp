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
#include <map>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

namespace scribe::similarity {

/// Verbalizations of vocabulary terms. Keys are case-folded; lookups of
/// unknown terms return the term itself.
class Lexicon {
 public:
  Lexicon() = default;

  /// JSON object: canonical term -> array of lexicalizations. Throws FormatError.
  static Lexicon fromJson(const nlohmann::json& doc);
  static Lexicon load(const std::filesystem::path& path);

  void add(std::string_view canonical, std::string_view lexicalization);

  /// The term, its lexicalizations, and every canonical term it lexicalizes.
  std::set<std::string> lexicalize(std::string_view term) const;

  std::size_t size() const noexcept { return forward_.size(); }

 private:
  std::map<std::string, std::set<std::string>> forward_;
  std::map<std::string, std::set<std::string>> inverse_;
};

}  // namespace scribe::similarity
