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
#include <optional>
#include <string>
#include <vector>

#include "scribe/rdf/term.hpp"

namespace scribe::rdf {

/// FILTER expression tree.
struct Expr {
  enum class Kind { Constant, Variable, Call, Not, And, Or, Compare };

  Kind kind = Kind::Constant;
  Term term;         // Constant: the value; Variable: the variable term
  std::string name;  // Call: lower-cased function name; Compare: operator
  std::vector<Expr> args;

  static Expr constant(Term t);
  static Expr variable(std::string name);
  static Expr call(std::string function, std::vector<Expr> args);
  static Expr negate(Expr e);
  static Expr conjunction(Expr lhs, Expr rhs);
  static Expr disjunction(Expr lhs, Expr rhs);
  static Expr compare(std::string op, Expr lhs, Expr rhs);

  void collectVariables(std::vector<std::string>& out) const;

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct CountAggregate {
  std::string argument;  // empty means COUNT(*)
  bool distinct = false;
  std::string alias = "count";

  friend bool operator==(const CountAggregate&, const CountAggregate&) = default;
};

struct OrderKey {
  std::string variable;
  bool descending = false;

  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

struct QueryModifiers {
  bool distinct = false;
  std::vector<std::string> groupBy;
  std::optional<OrderKey> orderBy;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> offset;

  friend bool operator==(const QueryModifiers&, const QueryModifiers&) = default;
};

/// A SELECT query over a basic graph pattern. An empty projection without an
/// aggregate means SELECT *.
struct StructuredQuery {
  std::vector<TriplePattern> patterns;
  std::vector<Expr> filters;
  std::vector<std::string> projection;
  std::optional<CountAggregate> count;
  QueryModifiers modifiers;

  bool selectsAll() const { return projection.empty() && !count; }

  /// Variables in order of first appearance in the patterns.
  std::vector<std::string> patternVariables() const;

  /// Output column names in order.
  std::vector<std::string> columns() const;

  /// Literal constants in order of first appearance (duplicates removed).
  std::vector<Term> literals() const;

  /// True when every pattern is reachable from the first through shared variables or constants.
  bool isConnected() const;

  friend bool operator==(const StructuredQuery&, const StructuredQuery&) = default;
};

/// Throws UnknownVariableInProjection or InvalidQuery. Logs a warning for
/// disconnected patterns.
void validate(const StructuredQuery& q);

}  // namespace scribe::rdf
