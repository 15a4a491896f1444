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

#include <sstream>

#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::rdf {

namespace {

std::string termText(const Term& t) {
  if (t.isUri() && t.value().starts_with("_:")) throw UnsupportedFeature("blank nodes cannot be serialized into queries");
  return t.toString();
}

}  // namespace

std::string serializeExpr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant: return termText(e.term);
    case Expr::Kind::Variable: return "?" + e.term.value();
    case Expr::Kind::Not: return "!(" + serializeExpr(e.args.at(0)) + ")";
    case Expr::Kind::And: return "(" + serializeExpr(e.args.at(0)) + " && " + serializeExpr(e.args.at(1)) + ")";
    case Expr::Kind::Or: return "(" + serializeExpr(e.args.at(0)) + " || " + serializeExpr(e.args.at(1)) + ")";
    case Expr::Kind::Compare:
      return "(" + serializeExpr(e.args.at(0)) + " " + e.name + " " + serializeExpr(e.args.at(1)) + ")";
    case Expr::Kind::Call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += serializeExpr(e.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string serializeSparql(const StructuredQuery& q) {
  std::ostringstream out;
  out << "SELECT ";
  if (q.modifiers.distinct) out << "DISTINCT ";
  if (q.selectsAll()) {
    out << "*";
  } else {
    bool first = true;
    for (const auto& v : q.projection) {
      out << (first ? "" : " ") << "?" << v;
      first = false;
    }
    if (q.count) {
      out << (first ? "" : " ") << "(COUNT(" << (q.count->distinct ? "DISTINCT " : "")
          << (q.count->argument.empty() ? "*" : "?" + q.count->argument) << ") AS ?" << q.count->alias << ")";
    }
  }
  out << " WHERE {\n";
  for (const auto& p : q.patterns) {
    out << "  " << termText(p.subject) << " " << termText(p.predicate) << " " << termText(p.object) << " .\n";
  }
  for (const auto& f : q.filters) out << "  FILTER(" << serializeExpr(f) << ")\n";
  out << "}";
  if (!q.modifiers.groupBy.empty()) {
    out << "\nGROUP BY";
    for (const auto& g : q.modifiers.groupBy) out << " ?" << g;
  }
  if (q.modifiers.orderBy) {
    out << "\nORDER BY " << (q.modifiers.orderBy->descending ? "DESC" : "ASC") << "(?" << q.modifiers.orderBy->variable
        << ")";
  }
  if (q.modifiers.offset) out << "\nOFFSET " << *q.modifiers.offset;
  if (q.modifiers.limit) out << "\nLIMIT " << *q.modifiers.limit;
  return out.str();
}

}  // namespace scribe::rdf
