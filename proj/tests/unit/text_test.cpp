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

#include <doctest.h>

#include "scribe/util/text.hpp"

using namespace scribe::text;

TEST_CASE("UTF-8 round trip and length") {
  std::string s = "Pr\xC3\xA9sident \xE2\x82\xAC \xF0\x9F\x98\x80";
  CHECK(encodeUtf8(decodeUtf8(s)) == s);
  CHECK(codepointLength(s) == 13);
  CHECK(decodeUtf8("\xFF") == std::u32string(1, 0xFFFD));
}

TEST_CASE("case folding") {
  CHECK(foldCaseUtf8("Kennedy") == "kennedy");
  CHECK(foldCaseUtf8("\xC3\x89LAN") == "\xC3\xA9lan");
  CHECK(foldCaseUtf8("\xCE\xA9\xD0\x96") == "\xCF\x89\xD0\xB6");
}

TEST_CASE("IRI local names") {
  CHECK(localName("http://dbpedia.org/ontology/birthPlace") == "birthPlace");
  CHECK(localName("http://xmlns.com/foaf/0.1/name") == "name");
  CHECK(localName("http://www.w3.org/2000/01/rdf-schema#label") == "label");
  CHECK(splitCamelCase("birthPlace") == "birth place");
  CHECK(splitCamelCase("name") == "name");
  CHECK(displayName("http://dbpedia.org/resource/Viking_Press") == "Viking Press");
}
