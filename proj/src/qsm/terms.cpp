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

#include "scribe/qsm/terms.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "scribe/fed/federation.hpp"
#include "scribe/qcm/qcm.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/util/stopwatch.hpp"
#include "scribe/util/text.hpp"

namespace scribe::qsm {

using rdf::Term;
using similarity::jaroWinkler;

namespace {

bool byScore(const TermAlternative& a, const TermAlternative& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.replacement < b.replacement;
}

/// Runs fn(begin, end) over P contiguous slices of [0, n) on the pool.
template <class R, class F>
std::vector<R> sliced(std::size_t n, std::size_t P, WorkerPool& pool, F fn) {
  P = std::max<std::size_t>(1, std::min(P, n));
  if (P <= 1) return fn(0, n);
  std::vector<std::future<std::vector<R>>> parts;
  for (std::size_t p = 0; p < P; ++p) {
    std::size_t begin = n * p / P, end = n * (p + 1) / P;
    parts.push_back(pool.submit([&fn, begin, end] { return fn(begin, end); }));
  }
  std::vector<R> out;
  for (auto& f : parts) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string comparable(const Term& t) { return t.isUri() ? text::displayName(t.value()) : t.value(); }

}  // namespace

std::string shortTerm(const Term& t) {
  if (t.isUri()) return std::string(text::localName(t.value()));
  if (t.isVariable()) return "?" + t.value();
  return t.value();
}

std::vector<TermAlternative> findPredicateAlternatives(const Term& predicate,
                                                       const std::vector<std::string>& predicateSet,
                                                       const similarity::Lexicon& lexicon,
                                                       const similarity::JwParams& jw, std::size_t P,
                                                       WorkerPool& pool) {
  if (!predicate.isUri()) return {};
  const std::string local(text::localName(predicate.value()));
  std::set<std::string> forms = lexicon.lexicalize(local);
  for (const auto& f : lexicon.lexicalize(text::displayName(predicate.value()))) forms.insert(f);
  const std::vector<std::string> lexicalizations(forms.begin(), forms.end());

  auto out = sliced<TermAlternative>(predicateSet.size(), P, pool, [&](std::size_t begin, std::size_t end) {
    std::vector<TermAlternative> part;
    for (auto i = begin; i < end; ++i) {
      const auto& uri = predicateSet[i];
      if (uri == predicate.value()) continue;
      const std::string qLocal(text::localName(uri));
      const auto qDisplay = text::displayName(uri);
      double best = -1.0;
      bool viaLexicon = false;
      for (const auto& s : lexicalizations) {
        double score = std::max(jaroWinkler(s, qLocal, jw), jaroWinkler(s, qDisplay, jw));
        bool lexical = s != local && text::foldCaseUtf8(s) != text::foldCaseUtf8(local);
        if (score > best || (score == best && !lexical)) {
          best = score;
          viaLexicon = lexical;
        }
      }
      if (best >= jw.threshold) {
        part.push_back({predicate, Term::uri(uri), best,
                        viaLexicon ? AlternativeSource::LexiconThenJw : AlternativeSource::DirectJw});
      }
    }
    return part;
  });
  std::sort(out.begin(), out.end(), byScore);
  return out;
}

std::vector<TermAlternative> findLiteralAlternatives(const Term& literal, const index::LiteralIndex& index,
                                                     const WindowParams& window, const similarity::JwParams& jw,
                                                     std::size_t P, WorkerPool& pool) {
  if (literal.isVariable()) return {};
  const auto text = comparable(literal);
  const auto& language = index.config().language;
  std::vector<TermAlternative> out;

  for (const auto& l : index.treeLiterals()) {
    double score = jaroWinkler(text, l, jw);
    Term replacement = Term::literal(l, language);
    if (score >= jw.threshold && replacement != literal) {
      out.push_back({literal, std::move(replacement), score, AlternativeSource::DirectJw});
    }
  }

  const auto len = text::codepointLength(text);
  auto bins = index.bins().range(len > window.alpha ? len - window.alpha : 0, len + window.beta);
  std::vector<std::size_t> sizes;
  for (const auto* b : bins) sizes.push_back(b->literals.size());
  auto tasks = qcm::assignTasks(sizes, std::max<std::size_t>(1, P));
  std::vector<std::future<std::vector<TermAlternative>>> futures;
  for (auto& ranges : tasks) {
    if (ranges.empty()) continue;
    futures.push_back(pool.submit([&, ranges = std::move(ranges)] {
      std::vector<TermAlternative> part;
      for (const auto& r : ranges) {
        const auto& bin = *bins[r.bin];
        for (auto i = r.start; i <= r.end; ++i) {
          double score = jaroWinkler(text, bin.literals[i], jw);
          if (score < jw.threshold) continue;
          Term replacement = Term::literal(bin.literals[i], language);
          if (replacement != literal) part.push_back({literal, std::move(replacement), score, AlternativeSource::DirectJw});
        }
      }
      return part;
    }));
  }
  for (auto& f : futures) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), byScore);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.replacement == b.replacement; }),
            out.end());
  return out;
}

std::string substitutionMessage(const rdf::TriplePattern& pattern, const TermAlternative& alt, std::size_t answers) {
  return "In the triple (" + shortTerm(pattern.subject) + " " + shortTerm(pattern.predicate) + " " +
         shortTerm(pattern.object) + "), did you mean " + shortTerm(alt.replacement) + " instead of " +
         shortTerm(alt.original) + "? There are " + std::to_string(answers) + " answers available.";
}

namespace {

SuggestedQuery substitution(const rdf::StructuredQuery& query, ChangeKind kind, const TermAlternative& alt,
                            std::size_t pattern) {
  SuggestedQuery s;
  s.query = query;
  s.kind = kind;
  s.alternative = alt;
  s.patternIndex = pattern;
  return s;
}

struct Candidate {
  SuggestedQuery suggestion;
  double score;
};

/// Executes candidates in order with bounded fan-out until `want` answered
/// or the execution budget is spent.
std::vector<SuggestedQuery> executeCandidates(std::vector<Candidate> candidates, const QsmContext& ctx,
                                              std::size_t want) {
  std::vector<SuggestedQuery> out;
  if (want == 0) return out;
  std::size_t executed = 0;
  const std::size_t limit = std::min(candidates.size(), ctx.config.maxCandidateExecutions);
  const std::size_t fanOut = std::max<std::size_t>(1, ctx.config.fanOut);
  while (executed < limit && out.size() < want) {
    const std::size_t batch = std::min(fanOut, limit - executed);
    std::vector<std::future<std::optional<fed::Prefetched>>> futures;
    for (std::size_t i = 0; i < batch; ++i) {
      const auto* q = &candidates[executed + i].suggestion.query;
      futures.push_back(std::async(std::launch::async, [&ctx, q] {
        return fed::prefetchQuery(ctx.endpoints, *q, ctx.config.prefetchRowCap);
      }));
    }
    for (std::size_t i = 0; i < batch; ++i) {
      auto p = futures[i].get();
      if (!p || out.size() >= want) continue;
      auto& s = candidates[executed + i].suggestion;
      s.answerCount = p->answerCount;
      s.prefetched = std::move(p->rows);
      out.push_back(std::move(s));
    }
    executed += batch;
  }
  return out;
}

}  // namespace

std::vector<SuggestedQuery> suggestTermQueries(const rdf::StructuredQuery& query, const QsmContext& ctx,
                                               std::size_t k, QsmTimings* timings) {
  Stopwatch predicateClock, literalClock, executionClock;
  const auto& cfg = ctx.config;
  std::vector<Candidate> predicateCandidates, literalCandidates;
  std::set<std::string> seen{rdf::serializeSparql(query)};
  const auto predicates = ctx.index.predicates();

  std::map<Term, std::vector<TermAlternative>> predicateAlts, literalAlts;
  for (std::size_t i = 0; i < query.patterns.size(); ++i) {
    const auto& pattern = query.patterns[i];
    if (pattern.predicate.isUri()) {
      auto [it, fresh] = predicateAlts.try_emplace(pattern.predicate);
      if (fresh) {
        auto lap = predicateClock.lap();
        it->second = findPredicateAlternatives(pattern.predicate, predicates, ctx.lexicon, cfg.jw, cfg.parallelism,
                                               ctx.pool);
      }
      for (const auto& alt : it->second) {
        auto s = substitution(query, ChangeKind::Predicate, alt, i);
        s.query.patterns[i].predicate = alt.replacement;
        if (seen.insert(rdf::serializeSparql(s.query)).second) predicateCandidates.push_back({std::move(s), alt.score});
      }
    }
    if (pattern.object.isLiteral() || pattern.object.isUri()) {
      auto [it, fresh] = literalAlts.try_emplace(pattern.object);
      if (fresh) {
        auto lap = literalClock.lap();
        it->second = findLiteralAlternatives(pattern.object, ctx.index, cfg.window, cfg.jw, cfg.parallelism, ctx.pool);
      }
      for (const auto& alt : it->second) {
        auto s = substitution(query, ChangeKind::Literal, alt, i);
        s.query.patterns[i].object = alt.replacement;
        if (seen.insert(rdf::serializeSparql(s.query)).second) literalCandidates.push_back({std::move(s), alt.score});
      }
    }
  }
  auto order = [](const Candidate& a, const Candidate& b) { return a.score > b.score; };
  std::stable_sort(predicateCandidates.begin(), predicateCandidates.end(), order);
  std::stable_sort(literalCandidates.begin(), literalCandidates.end(), order);

  std::vector<SuggestedQuery> out;
  {
    auto lap = executionClock.lap();
    out = executeCandidates(std::move(predicateCandidates), ctx, (k + 1) / 2);
    for (auto& s : executeCandidates(std::move(literalCandidates), ctx, k / 2)) out.push_back(std::move(s));
  }
  if (timings) {
    timings->alternativePredicatesMs += predicateClock.ms();
    timings->alternativeLiteralsMs += literalClock.ms();
    timings->candidateExecutionMs += executionClock.ms();
  }
  for (auto& s : out) {
    s.message = substitutionMessage(query.patterns[s.patternIndex], *s.alternative, s.answerCount);
  }
  return out;
}

}  // namespace scribe::qsm
