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

#include "scribe/rdf/query.hpp"

#include <algorithm>
#include <numeric>

#include <spdlog/spdlog.h>

#include "scribe/util/errors.hpp"

namespace scribe::rdf {

Expr Expr::constant(Term t) {
  Expr e;
  e.kind = Kind::Constant;
  e.term = std::move(t);
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = Kind::Variable;
  e.term = Term::variable(std::move(name));
  return e;
}

Expr Expr::call(std::string function, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Call;
  e.name = std::move(function);
  e.args = std::move(args);
  return e;
}

Expr Expr::negate(Expr inner) {
  Expr e;
  e.kind = Kind::Not;
  e.args.push_back(std::move(inner));
  return e;
}

Expr Expr::conjunction(Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::And;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::disjunction(Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Or;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::compare(std::string op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Compare;
  e.name = std::move(op);
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

void Expr::collectVariables(std::vector<std::string>& out) const {
  if (kind == Kind::Variable) {
    if (std::find(out.begin(), out.end(), term.value()) == out.end()) out.push_back(term.value());
    return;
  }
  for (const auto& a : args) a.collectVariables(out);
}

std::vector<std::string> StructuredQuery::patternVariables() const {
  std::vector<std::string> vars;
  for (const auto& p : patterns) {
    for (const Term* t : {&p.subject, &p.predicate, &p.object}) {
      if (t->isVariable() && std::find(vars.begin(), vars.end(), t->value()) == vars.end()) {
        vars.push_back(t->value());
      }
    }
  }
  return vars;
}

std::vector<std::string> StructuredQuery::columns() const {
  if (selectsAll()) return patternVariables();
  std::vector<std::string> cols = projection;
  if (count) cols.push_back(count->alias);
  return cols;
}

std::vector<Term> StructuredQuery::literals() const {
  std::vector<Term> out;
  for (const auto& p : patterns) {
    for (const Term* t : {&p.subject, &p.predicate, &p.object}) {
      if (t->isLiteral() && std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
    }
  }
  return out;
}

bool StructuredQuery::isConnected() const {
  if (patterns.size() <= 1) return true;
  std::vector<std::size_t> parent(patterns.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto nodes = [](const TriplePattern& p) {
    // Predicates do not connect patterns; shared subjects/objects do.
    return std::vector<const Term*>{&p.subject, &p.object};
  };
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      bool shared = false;
      for (const Term* a : nodes(patterns[i])) {
        for (const Term* b : nodes(patterns[j])) {
          if (*a == *b && !a->isLiteral()) shared = true;
        }
      }
      if (shared) parent[find(i)] = find(j);
    }
  }
  auto root = find(0);
  for (std::size_t i = 1; i < patterns.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

void validate(const StructuredQuery& q) {
  if (q.patterns.empty()) throw InvalidQuery("query has no triple patterns");
  for (const auto& p : q.patterns) {
    if (p.subject.isLiteral()) throw InvalidQuery("literal in subject position: " + p.subject.toString());
    if (p.predicate.isLiteral()) {
      throw InvalidQuery("literal in predicate position: " + p.predicate.toString());
    }
  }
  auto vars = q.patternVariables();
  auto known = [&](const std::string& v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); };
  for (const auto& v : q.projection) {
    if (!known(v)) throw UnknownVariableInProjection("projected variable ?" + v + " does not occur in the patterns");
  }
  if (q.count && !q.count->argument.empty() && !known(q.count->argument)) {
    throw UnknownVariableInProjection("counted variable ?" + q.count->argument + " does not occur in the patterns");
  }
  for (const auto& g : q.modifiers.groupBy) {
    if (!known(g)) throw UnknownVariableInProjection("grouped variable ?" + g + " does not occur in the patterns");
  }
  if (q.modifiers.orderBy) {
    const auto& v = q.modifiers.orderBy->variable;
    bool isAlias = q.count && q.count->alias == v;
    if (!known(v) && !isAlias) throw InvalidQuery("ORDER BY on unknown variable ?" + v);
  }
  for (const auto& f : q.filters) {
    std::vector<std::string> fv;
    f.collectVariables(fv);
    for (const auto& v : fv) {
      if (!known(v)) throw InvalidQuery("FILTER references unknown variable ?" + v);
    }
  }
  if (!q.isConnected()) spdlog::warn("query patterns are not connected through shared variables");
}

}  // namespace scribe::rdf
