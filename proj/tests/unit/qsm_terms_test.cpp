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

#include <random>

#include "engine_support.hpp"
#include "scribe/qsm/terms.hpp"
#include "scribe/rdf/evaluator.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/util/text.hpp"

using namespace scribe;
using namespace scribe::qsm;
using rdf::Term;

namespace {

std::vector<std::string> replacements(const std::vector<TermAlternative>& alts) {
  std::vector<std::string> out;
  for (const auto& a : alts) out.push_back(a.replacement.value());
  return out;
}

std::size_t differingTerms(const rdf::StructuredQuery& a, const rdf::StructuredQuery& b) {
  REQUIRE(a.patterns.size() == b.patterns.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    n += a.patterns[i].subject != b.patterns[i].subject;
    n += a.patterns[i].predicate != b.patterns[i].predicate;
    n += a.patterns[i].object != b.patterns[i].object;
  }
  return n;
}

}  // namespace

TEST_CASE("findPredicateAlternatives") {
  WorkerPool pool(4);
  auto lex = similarity::Lexicon::load(testing::dataPath("lexicon/sample.json"));
  const std::vector<std::string> set{testing::kOnt + "spouse", testing::kOnt + "birthPlace", testing::kOnt + "child",
                                     testing::kOnt + "wifeOf"};

  SUBCASE("lexicon maps wife to spouse") {
    auto alts = findPredicateAlternatives(testing::ont("wife"), set, lex, {}, 1, pool);
    REQUIRE_FALSE(alts.empty());
    CHECK(alts[0].replacement == testing::ont("spouse"));
    CHECK(alts[0].score == 1.0);
    CHECK(alts[0].source == AlternativeSource::LexiconThenJw);
  }
  SUBCASE("nothing close") {
    CHECK(findPredicateAlternatives(testing::ont("zzzzqqq"), set, lex, {}, 1, pool).empty());
  }
  SUBCASE("brute-force filter and sort on random predicate sets") {
    std::mt19937 rng(11);
    const std::string alphabet = "abcdeKLM";
    similarity::Lexicon none;
    for (int round = 0; round < 60; ++round) {
      std::vector<std::string> preds;
      for (int i = 0; i < 40; ++i) {
        std::string s;
        for (int j = 0, n = 3 + rng() % 6; j < n; ++j) s += alphabet[rng() % alphabet.size()];
        preds.push_back("http://ex.org/" + s);
      }
      std::sort(preds.begin(), preds.end());
      preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
      auto p = Term::uri(preds[rng() % preds.size()] + "x");
      std::vector<std::pair<double, std::string>> oracle;
      const std::string local(text::localName(p.value()));
      for (const auto& q : preds) {
        const std::string ql(text::localName(q));
        double s = std::max(similarity::jaroWinkler(local, ql), similarity::jaroWinkler(local, text::displayName(q)));
        s = std::max(s, std::max(similarity::jaroWinkler(text::displayName(p.value()), ql),
                                 similarity::jaroWinkler(text::displayName(p.value()), text::displayName(q))));
        if (s >= 0.7) oracle.emplace_back(-s, q);
      }
      std::sort(oracle.begin(), oracle.end());
      for (std::size_t P : {1u, 3u}) {
        auto got = findPredicateAlternatives(p, preds, none, {}, P, pool);
        REQUIRE(got.size() == oracle.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          CHECK(got[i].replacement.value() == oracle[i].second);
          CHECK(got[i].score == doctest::Approx(-oracle[i].first).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("findLiteralAlternatives") {
  WorkerPool pool(4);
  SUBCASE("Kennedys finds Kennedy") {
    auto engine = testing::makeEngine("kennedy.nt", 0);
    auto alts = findLiteralAlternatives(testing::en("Kennedys"), engine.index, {}, {}, 2, pool);
    REQUIRE_FALSE(alts.empty());
    CHECK(alts[0].replacement == testing::en("Kennedy"));
    CHECK(alts[0].score == doctest::Approx(0.975));
  }
  SUBCASE("Viking Press variants") {
    auto engine = testing::makeEngine("kerouac.nt");
    auto alts = replacements(findLiteralAlternatives(Term::literal("Viking Press"), engine.index, {}, {}, 1, pool));
    CHECK(std::find(alts.begin(), alts.end(), "Viking Press") != alts.end());
    CHECK(std::find(alts.begin(), alts.end(), "The Viking Press") != alts.end());
    // Jaro-Winkler 0.594, under the 0.7 threshold.
    CHECK(std::find(alts.begin(), alts.end(), "The Viking") == alts.end());
  }
  SUBCASE("nothing inside the window") {
    index::LiteralIndex idx({}, {"a", "abcdefghijklmnopqrstuvwxyz"}, {});
    CHECK(findLiteralAlternatives(testing::en("abcdefgh"), idx, {}, {}, 1, pool).empty());
  }
  SUBCASE("brute-force oracle over tree and windowed bins") {
    std::mt19937 rng(23);
    const std::string alphabet = "abcab ";
    for (int round = 0; round < 60; ++round) {
      std::set<std::string> pool_strings;
      while (pool_strings.size() < 80) {
        std::string s;
        for (int j = 0, n = 1 + rng() % 14; j < n; ++j) s += alphabet[rng() % alphabet.size()];
        pool_strings.insert(s);
      }
      std::vector<std::string> all(pool_strings.begin(), pool_strings.end());
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<std::string> tree(all.begin(), all.begin() + 10), bins(all.begin() + 10, all.end());
      std::vector<index::IndexEntry> entries;
      for (const auto& t : tree) entries.push_back({t, index::EntryKind::Literal, t});
      index::LiteralIndex idx(entries, bins, {});
      std::string l;
      for (int j = 0, n = 2 + rng() % 10; j < n; ++j) l += alphabet[rng() % alphabet.size()];
      auto term = testing::en(l);

      std::set<std::string> expected;
      for (const auto& t : tree) {
        if (similarity::jaroWinkler(l, t) >= 0.7) expected.insert(t);
      }
      for (const auto& b : bins) {
        bool windowed = b.size() + 2 >= l.size() && b.size() <= l.size() + 3;
        if (windowed && similarity::jaroWinkler(l, b) >= 0.7) expected.insert(b);
      }
      expected.erase(l);  // the original term itself
      for (std::size_t P : {1u, 4u}) {
        auto got = findLiteralAlternatives(term, idx, {}, {}, P, pool);
        auto r = replacements(got);
        CHECK(std::set<std::string>(r.begin(), r.end()) == expected);
        CHECK(r.size() == expected.size());
        for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].score >= got[i].score);
      }
    }
  }
}

TEST_CASE("suggestTermQueries") {
  WorkerPool pool(4);
  SUBCASE("Kennedys query is answered through the Kennedy substitution") {
    auto engine = testing::makeEngine("kennedy.nt");
    auto ctx = engine.context(pool);
    auto q = rdf::parseSparql("SELECT ?person WHERE { ?person foaf:surname \"Kennedys\"@en }");
    CHECK(rdf::evaluate(*engine.store, q).empty());
    auto suggestions = suggestTermQueries(q, ctx, 10);
    REQUIRE_FALSE(suggestions.empty());
    const SuggestedQuery* kennedy = nullptr;
    for (const auto& s : suggestions) {
      if (s.alternative && s.alternative->replacement == testing::en("Kennedy")) kennedy = &s;
    }
    REQUIRE(kennedy);
    auto oracle = rdf::evaluate(*engine.store, kennedy->query);
    std::size_t scan = 0;
    for (const auto& t : engine.store->triples()) scan += t.object == testing::en("Kennedy");
    CHECK(kennedy->answerCount == scan);
    CHECK(kennedy->answerCount == 12);
    CHECK(kennedy->prefetched.rows.size() == oracle.rows.size());
    CHECK(kennedy->message ==
          "In the triple (?person surname Kennedys), did you mean Kennedy instead of Kennedys? There are 12 answers "
          "available.");
    for (const auto& s : suggestions) {
      CHECK(s.answerCount >= 1);
      CHECK(differingTerms(s.query, q) == 1);
      CHECK(s.answerCount == rdf::evaluate(*engine.store, s.query).size());
    }
  }
  SUBCASE("answered queries still get suggestions") {
    auto engine = testing::makeEngine("kennedy.nt");
    auto ctx = engine.context(pool);
    auto q = rdf::parseSparql("SELECT ?person WHERE { ?person foaf:surname \"Kennedy\"@en }");
    CHECK_FALSE(rdf::evaluate(*engine.store, q).empty());
    auto suggestions = suggestTermQueries(q, ctx, 10);
    CHECK_FALSE(suggestions.empty());
  }
  SUBCASE("predicate substitution through the lexicon") {
    auto engine = testing::makeEngine("kennedy.nt");
    auto ctx = engine.context(pool);
    auto q = rdf::parseSparql("SELECT ?w WHERE { res:John_F._Kennedy dbo:wife ?w }");
    auto suggestions = suggestTermQueries(q, ctx, 4);
    REQUIRE_FALSE(suggestions.empty());
    CHECK(suggestions[0].kind == ChangeKind::Predicate);
    CHECK(suggestions[0].alternative->replacement == testing::ont("spouse"));
  }
  SUBCASE("no candidate with answers") {
    auto engine = testing::makeEngine("kennedy.nt");
    auto ctx = engine.context(pool);
    auto q = rdf::parseSparql("SELECT ?x WHERE { ?x <http://ex.org/qqqqqq> \"zzzzzzzz\" }");
    CHECK(suggestTermQueries(q, ctx, 10).empty());
  }
  SUBCASE("split of k and score order") {
    auto engine = testing::makeEngine("kennedy.nt");
    auto ctx = engine.context(pool);
    auto q = rdf::parseSparql("SELECT ?p WHERE { ?p foaf:surnam \"Kennedys\"@en }");
    for (std::size_t k : {1u, 2u, 3u, 5u}) {
      auto suggestions = suggestTermQueries(q, ctx, k);
      std::size_t preds = 0, lits = 0;
      double last[2] = {2.0, 2.0};
      for (const auto& s : suggestions) {
        int slot = s.kind == ChangeKind::Predicate ? 0 : 1;
        (slot == 0 ? preds : lits)++;
        CHECK(s.alternative->score <= last[slot]);
        last[slot] = s.alternative->score;
      }
      CHECK(preds <= (k + 1) / 2);
      CHECK(lits <= k / 2);
    }
  }
  SUBCASE("candidate execution cap") {
    auto engine = testing::makeEngine("kennedy.nt");
    QsmConfig cfg;
    cfg.maxCandidateExecutions = 3;
    auto ctx = engine.context(pool, cfg);
    auto q = rdf::parseSparql("SELECT ?p WHERE { ?p foaf:surname \"Kennedys\"@en }");
    engine.metered->reset();
    suggestTermQueries(q, ctx, 10);
    CHECK(engine.metered->count() <= 6);
  }
}
