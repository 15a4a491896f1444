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

#include <cctype>
#include <fstream>
#include <random>
#include <unordered_set>

#include "scribe/bench/bench.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::bench {

namespace {

const std::string kRes = "http://dbpedia.org/resource/";
const std::string kOnt = "http://dbpedia.org/ontology/";
const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const std::string kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
const std::string kSubClass = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
const std::string kNick = "http://xmlns.com/foaf/0.1/nick";

const char* const kSyllables[] = {"ka", "lo", "mi", "ren", "to", "va", "shi", "dor", "el", "an", "bru", "cas",
                                  "fen", "gal", "hor", "is", "jun", "kel", "mar", "nos", "or", "pel", "quin", "ros",
                                  "sul", "tam", "ur", "vin", "wes", "yan", "zor", "bel", "cor", "dan", "er", "fal"};
constexpr std::size_t kSyllableCount = sizeof(kSyllables) / sizeof(kSyllables[0]);

/// Leaf classes and their parents.
const std::vector<std::pair<std::string, std::string>> kHierarchy = {
    {"Person", "Agent"}, {"Writer", "Person"}, {"Actor", "Person"}, {"Organisation", "Agent"},
    {"Company", "Organisation"}, {"City", "Place"}, {"Work", "Thing"}, {"Book", "Work"},
    {"Film", "Work"}, {"Agent", "Thing"}, {"Place", "Thing"}};

class Namer {
 public:
  explicit Namer(std::uint64_t seed) : rng_(seed) {}

  std::string word(std::size_t minSyl, std::size_t maxSyl) {
    std::size_t n = minSyl + rng_() % (maxSyl - minSyl + 1);
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += kSyllables[rng_() % kSyllableCount];
    w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    return w;
  }

  /// Draws from `make` until the result is unused.
  template <class F>
  std::string unique(F make) {
    for (;;) {
      auto s = make();
      if (used_.insert(s).second) return s;
    }
  }

  bool reserve(const std::string& s) { return used_.insert(s).second; }
  std::size_t pick(std::size_t n) { return rng_() % n; }

 private:
  std::mt19937_64 rng_;
  std::unordered_set<std::string> used_;
};

enum class Kind { Writer, Actor, City, Company, Book, Film };

Kind kindOf(std::size_t i) {
  switch (i % 10) {
    case 0:
    case 1:
      return Kind::Writer;
    case 2:
    case 3:
      return Kind::Actor;
    case 4:
      return Kind::City;
    case 5:
      return Kind::Company;
    case 6:
    case 7:
      return Kind::Book;
    default:
      return Kind::Film;
  }
}

const char* className(Kind k) {
  switch (k) {
    case Kind::Writer:
      return "Writer";
    case Kind::Actor:
      return "Actor";
    case Kind::City:
      return "City";
    case Kind::Company:
      return "Company";
    case Kind::Book:
      return "Book";
    case Kind::Film:
      return "Film";
  }
  return "Thing";
}

}  // namespace

rdf::TripleStore generateSynthetic(const SyntheticConfig& config) {
  if (config.entities < 10) throw InvalidQuery("synthetic store needs at least 10 entities");
  const std::size_t n = config.entities;
  Namer namer(config.seed);
  std::vector<rdf::Triple> triples;
  triples.reserve(n * 5);
  auto uri = [](const std::string& s) { return rdf::Term::uri(s); };
  auto en = [](std::string s) { return rdf::Term::literal(std::move(s), "en"); };

  for (const auto& [sub, sup] : kHierarchy) triples.push_back({uri(kOnt + sub), uri(kSubClass), uri(kOnt + sup)});

  std::vector<std::string> labels(n);
  for (std::size_t j = 0; j < config.plantedTerms.size(); j += 2) {
    std::size_t slot = (j * 7919 + 11) % n;
    if (labels[slot].empty() && namer.reserve(config.plantedTerms[j])) labels[slot] = config.plantedTerms[j];
  }

  std::vector<std::size_t> byKind[6];
  for (std::size_t i = 0; i < n; ++i) byKind[static_cast<int>(kindOf(i))].push_back(i);
  auto entity = [&](std::size_t i) { return uri(kRes + "E" + std::to_string(i)); };
  auto any = [&](Kind k) { const auto& v = byKind[static_cast<int>(k)]; return v[namer.pick(v.size())]; };
  auto person = [&] { return any(namer.pick(2) ? Kind::Writer : Kind::Actor); };

  for (std::size_t i = 0; i < n; ++i) {
    const Kind kind = kindOf(i);
    const auto e = entity(i);
    triples.push_back({e, uri(kRdfType), uri(kOnt + className(kind))});
    if (labels[i].empty()) {
      labels[i] = namer.unique([&] {
        switch (kind) {
          case Kind::City:
            return namer.word(2, 3);
          case Kind::Company:
            return namer.word(2, 3) + " " + (namer.pick(2) ? "Press" : "Industries");
          case Kind::Book:
          case Kind::Film:
            return "The " + namer.word(2, 3) + " " + namer.word(1, 3);
          default:
            return namer.word(1, 3) + " " + namer.word(2, 3);
        }
      });
    }
    triples.push_back({e, uri(kLabel), en(labels[i])});

    switch (kind) {
      case Kind::Writer:
      case Kind::Actor:
        triples.push_back({e, uri(kNick), en(namer.unique([&] { return namer.word(1, 2) + " the " + namer.word(2, 2); }))});
        triples.push_back({e, uri(kOnt + "birthPlace"), entity(any(Kind::City))});
        if (namer.pick(8) == 0) triples.push_back({e, uri(kOnt + "spouse"), entity(person())});
        break;
      case Kind::City:
        triples.push_back({e, uri(kOnt + "motto"), en(namer.unique([&] { return namer.word(2, 3) + " and " + namer.word(2, 3); }))});
        break;
      case Kind::Company:
        triples.push_back({e, uri(kOnt + "slogan"), en(namer.unique([&] { return "Always " + namer.word(2, 4); }))});
        triples.push_back({e, uri(kOnt + "location"), entity(any(Kind::City))});
        break;
      case Kind::Book:
        triples.push_back({e, uri(kOnt + "subtitle"), en(namer.unique([&] { return "A " + namer.word(2, 3) + " of " + namer.word(2, 3); }))});
        triples.push_back({e, uri(kOnt + "writer"), entity(any(Kind::Writer))});
        triples.push_back({e, uri(kOnt + "publisher"), entity(any(Kind::Company))});
        break;
      case Kind::Film:
        triples.push_back({e, uri(kOnt + "subtitle"), en(namer.unique([&] { return "A " + namer.word(2, 3) + " of " + namer.word(2, 3); }))});
        triples.push_back({e, uri(kOnt + "director"), entity(person())});
        triples.push_back({e, uri(kOnt + "starring"), entity(any(Kind::Actor))});
        break;
    }
  }
  return rdf::TripleStore(std::move(triples));
}

std::vector<std::string> loadTerms(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> typedPrefixes(const std::vector<std::string>& terms) {
  std::vector<std::string> out;
  for (const auto& t : terms) {
    for (std::size_t i = 1; i <= t.size(); ++i) {
      // Cut only at UTF-8 character boundaries.
      if (i < t.size() && (static_cast<unsigned char>(t[i]) & 0xC0) == 0x80) continue;
      out.push_back(t.substr(0, i));
    }
  }
  return out;
}

}  // namespace scribe::bench
