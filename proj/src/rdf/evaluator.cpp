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

#include "scribe/rdf/evaluator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::rdf {

namespace {

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

struct Value {
  enum class Kind { Error, Bool, Number, Term } kind = Kind::Error;
  bool boolean = false;
  double number = 0;
  rdf::Term term;

  static Value error() { return {}; }
  static Value of(bool b) {
    Value v;
    v.kind = Kind::Bool;
    v.boolean = b;
    return v;
  }
  static Value of(double n) {
    Value v;
    v.kind = Kind::Number;
    v.number = n;
    return v;
  }
  static Value of(rdf::Term t) {
    Value v;
    v.kind = Kind::Term;
    v.term = std::move(t);
    return v;
  }
};

std::optional<double> asNumber(const Value& v) {
  if (v.kind == Value::Kind::Number) return v.number;
  if (v.kind == Value::Kind::Term) return numericValue(v.term);
  return std::nullopt;
}

std::optional<bool> effectiveBoolean(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Bool: return v.boolean;
    case Value::Kind::Number: return v.number != 0 && !std::isnan(v.number);
    case Value::Kind::Term: {
      const auto& t = v.term;
      if (!t.isLiteral()) return std::nullopt;
      if (t.datatype() == std::string(kXsd) + "boolean") return t.value() == "true" || t.value() == "1";
      if (auto n = numericValue(t)) return *n != 0;
      if (t.datatype().empty()) return !t.value().empty();
      return std::nullopt;
    }
    case Value::Kind::Error: return std::nullopt;
  }
  return std::nullopt;
}

using Row = std::vector<std::optional<TermId>>;

class ExprEvaluator {
 public:
  ExprEvaluator(const TripleStore& store, const std::unordered_map<std::string, std::size_t>& slots)
      : store_(store), slots_(slots) {}

  bool test(const Expr& e, const Row& row) const { return effectiveBoolean(eval(e, row)).value_or(false); }

 private:
  Value eval(const Expr& e, const Row& row) const {
    switch (e.kind) {
      case Expr::Kind::Constant: return Value::of(e.term);
      case Expr::Kind::Variable: {
        auto it = slots_.find(e.term.value());
        if (it == slots_.end() || !row[it->second]) return Value::error();
        return Value::of(store_.term(*row[it->second]));
      }
      case Expr::Kind::Not: {
        auto b = effectiveBoolean(eval(e.args[0], row));
        return b ? Value::of(!*b) : Value::error();
      }
      case Expr::Kind::And: {
        auto l = effectiveBoolean(eval(e.args[0], row));
        auto r = effectiveBoolean(eval(e.args[1], row));
        if (l && r) return Value::of(*l && *r);
        if ((l && !*l) || (r && !*r)) return Value::of(false);
        return Value::error();
      }
      case Expr::Kind::Or: {
        auto l = effectiveBoolean(eval(e.args[0], row));
        auto r = effectiveBoolean(eval(e.args[1], row));
        if (l && r) return Value::of(*l || *r);
        if ((l && *l) || (r && *r)) return Value::of(true);
        return Value::error();
      }
      case Expr::Kind::Compare: return compare(e.name, eval(e.args[0], row), eval(e.args[1], row));
      case Expr::Kind::Call: return call(e, row);
    }
    return Value::error();
  }

  static Value compare(const std::string& op, const Value& a, const Value& b) {
    if (a.kind == Value::Kind::Error || b.kind == Value::Kind::Error) return Value::error();
    int cmp = 0;
    auto na = asNumber(a);
    auto nb = asNumber(b);
    if (na && nb) {
      cmp = *na < *nb ? -1 : (*na > *nb ? 1 : 0);
    } else if (a.kind == Value::Kind::Bool && b.kind == Value::Kind::Bool) {
      cmp = static_cast<int>(a.boolean) - static_cast<int>(b.boolean);
    } else if (a.kind == Value::Kind::Term && b.kind == Value::Kind::Term) {
      const auto& x = a.term;
      const auto& y = b.term;
      bool comparableStrings = x.isLiteral() && y.isLiteral() && x.datatype() == y.datatype() &&
                               x.language() == y.language();
      if (op == "=" || op == "!=") {
        bool eq = x == y;
        return Value::of(op == "=" ? eq : !eq);
      }
      if (!comparableStrings) return Value::error();
      cmp = x.value().compare(y.value());
    } else {
      if (op == "=") return Value::of(false);
      if (op == "!=") return Value::of(true);
      return Value::error();
    }
    if (op == "=") return Value::of(cmp == 0);
    if (op == "!=") return Value::of(cmp != 0);
    if (op == "<") return Value::of(cmp < 0);
    if (op == "<=") return Value::of(cmp <= 0);
    if (op == ">") return Value::of(cmp > 0);
    if (op == ">=") return Value::of(cmp >= 0);
    return Value::error();
  }

  Value call(const Expr& e, const Row& row) const {
    const auto& f = e.name;
    if (f == "bound") {
      if (e.args.size() != 1 || e.args[0].kind != Expr::Kind::Variable) return Value::error();
      auto it = slots_.find(e.args[0].term.value());
      return Value::of(it != slots_.end() && row[it->second].has_value());
    }
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) args.push_back(eval(a, row));
    auto termArg = [&](std::size_t i) -> const Term* {
      if (i >= args.size() || args[i].kind != Value::Kind::Term) return nullptr;
      return &args[i].term;
    };
    const Term* t = termArg(0);
    if (f == "isliteral") return t ? Value::of(t->isLiteral()) : Value::error();
    if (f == "isiri" || f == "isuri") return t ? Value::of(t->isUri() && !t->value().starts_with("_:")) : Value::error();
    if (f == "isblank") return t ? Value::of(t->isUri() && t->value().starts_with("_:")) : Value::error();
    if (f == "lang") {
      if (!t || !t->isLiteral()) return Value::error();
      return Value::of(Term::literal(t->language()));
    }
    if (f == "str") {
      if (!t) return Value::error();
      return Value::of(Term::literal(t->value()));
    }
    if (f == "strlen") {
      if (!t || !t->isLiteral()) return Value::error();
      return Value::of(static_cast<double>(text::codepointLength(t->value())));
    }
    if (f == "datatype") {
      if (!t || !t->isLiteral()) return Value::error();
      if (!t->language().empty()) return Value::of(Term::uri("http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"));
      return Value::of(Term::uri(t->datatype().empty() ? std::string(kXsdString) : t->datatype()));
    }
    if (f == "lcase" || f == "ucase") {
      if (!t || !t->isLiteral()) return Value::error();
      std::string s = t->value();
      for (auto& c : s) c = static_cast<char>(f == "lcase" ? std::tolower(static_cast<unsigned char>(c))
                                                            : std::toupper(static_cast<unsigned char>(c)));
      return Value::of(Term::literal(std::move(s), t->language(), t->datatype()));
    }
    if (f == "contains" || f == "strstarts") {
      const Term* u = termArg(1);
      if (!t || !u || !t->isLiteral() || !u->isLiteral()) return Value::error();
      if (f == "contains") return Value::of(t->value().find(u->value()) != std::string::npos);
      return Value::of(t->value().starts_with(u->value()));
    }
    if (f == "langmatches") {
      const Term* u = termArg(1);
      if (!t || !u) return Value::error();
      auto tag = text::foldCaseUtf8(t->value());
      auto range = text::foldCaseUtf8(u->value());
      if (range == "*") return Value::of(!tag.empty());
      return Value::of(tag == range || (tag.starts_with(range) && tag.size() > range.size() && tag[range.size()] == '-'));
    }
    throw UnsupportedFeature("function " + f);
  }

  const TripleStore& store_;
  const std::unordered_map<std::string, std::size_t>& slots_;
};

struct PlannedPattern {
  // Each position is either a constant id or a variable slot.
  std::array<std::optional<TermId>, 3> constant;
  std::array<int, 3> slot{-1, -1, -1};
};

class BgpMatcher {
 public:
  BgpMatcher(const TripleStore& store, const StructuredQuery& q) : store_(store), q_(q) {
    for (const auto& v : q.patternVariables()) slots_.emplace(v, slots_.size());
  }

  const std::unordered_map<std::string, std::size_t>& slots() const { return slots_; }

  std::vector<Row> run() {
    std::vector<Row> out;
    std::vector<PlannedPattern> planned;
    for (const auto& p : q_.patterns) {
      PlannedPattern pp;
      const Term* terms[3] = {&p.subject, &p.predicate, &p.object};
      for (int i = 0; i < 3; ++i) {
        if (terms[i]->isVariable()) {
          pp.slot[i] = static_cast<int>(slots_.at(terms[i]->value()));
        } else {
          auto id = store_.lookup(*terms[i]);
          if (!id) return out;  // constant absent from the data: no solutions
          pp.constant[i] = *id;
        }
      }
      planned.push_back(pp);
    }
    order_ = planOrder(planned);
    planned_ = std::move(planned);
    filterAt_ = placeFilters();
    ExprEvaluator evaluator(store_, slots_);
    Row row(slots_.size());
    extend(0, row, out, evaluator);
    return out;
  }

 private:
  std::vector<std::size_t> planOrder(const std::vector<PlannedPattern>& pats) const {
    std::vector<std::size_t> order;
    std::vector<bool> used(pats.size(), false);
    std::vector<bool> bound(slots_.size(), false);
    for (std::size_t step = 0; step < pats.size(); ++step) {
      std::size_t best = 0;
      long bestScore = -1;
      for (std::size_t i = 0; i < pats.size(); ++i) {
        if (used[i]) continue;
        long score = 0;
        for (int k = 0; k < 3; ++k) {
          if (pats[i].constant[k] || (pats[i].slot[k] >= 0 && bound[pats[i].slot[k]])) score += (k == 1 ? 1 : 2);
        }
        if (score > bestScore) {
          bestScore = score;
          best = i;
        }
      }
      used[best] = true;
      order.push_back(best);
      for (int k = 0; k < 3; ++k) {
        if (pats[best].slot[k] >= 0) bound[pats[best].slot[k]] = true;
      }
    }
    return order;
  }

  std::vector<std::vector<const Expr*>> placeFilters() const {
    std::vector<std::vector<const Expr*>> at(order_.size());
    std::vector<bool> bound(slots_.size(), false);
    std::vector<std::size_t> boundAfter(slots_.size(), order_.size());
    for (std::size_t step = 0; step < order_.size(); ++step) {
      for (int k = 0; k < 3; ++k) {
        int s = planned_[order_[step]].slot[k];
        if (s >= 0 && boundAfter[s] == order_.size()) boundAfter[s] = step;
      }
    }
    for (const auto& f : q_.filters) {
      std::vector<std::string> vars;
      f.collectVariables(vars);
      std::size_t step = 0;
      for (const auto& v : vars) {
        auto it = slots_.find(v);
        if (it != slots_.end()) step = std::max(step, boundAfter[it->second]);
      }
      at[std::min(step, order_.size() - 1)].push_back(&f);
    }
    return at;
  }

  void extend(std::size_t depth, Row& row, std::vector<Row>& out, const ExprEvaluator& ev) {
    if (depth == order_.size()) {
      out.push_back(row);
      return;
    }
    const auto& pp = planned_[order_[depth]];
    std::array<std::optional<TermId>, 3> key;
    for (int k = 0; k < 3; ++k) {
      key[k] = pp.constant[k];
      if (pp.slot[k] >= 0 && row[pp.slot[k]]) key[k] = row[pp.slot[k]];
    }
    auto matches = store_.match(key[0], key[1], key[2]);
    for (const auto& t : matches) {
      std::array<int, 3> assigned{-1, -1, -1};
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        int s = pp.slot[k];
        if (s < 0 || key[k]) continue;
        if (row[s]) {
          // Same variable twice in one pattern.
          ok = *row[s] == t[k];
        } else {
          row[s] = t[k];
          assigned[k] = s;
        }
      }
      if (ok) {
        for (const Expr* f : filterAt_[depth]) {
          if (!ev.test(*f, row)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) extend(depth + 1, row, out, ev);
      for (int s : assigned) {
        if (s >= 0) row[s].reset();
      }
    }
  }

  const TripleStore& store_;
  const StructuredQuery& q_;
  std::unordered_map<std::string, std::size_t> slots_;
  std::vector<PlannedPattern> planned_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<const Expr*>> filterAt_;
};

struct RowHash {
  std::size_t operator()(const std::vector<Term>& r) const noexcept {
    std::size_t h = 0;
    TermHash th;
    for (const auto& t : r) h = h * 1000003u ^ th(t);
    return h;
  }
};

struct IdRowHash {
  std::size_t operator()(const std::vector<TermId>& r) const noexcept {
    std::size_t h = 0;
    for (auto id : r) h = h * 1000003u ^ id;
    return h;
  }
};

}  // namespace

std::optional<double> numericValue(const Term& t) {
  if (!t.isLiteral() || !t.datatype().starts_with(kXsd)) return std::nullopt;
  auto local = std::string_view(t.datatype()).substr(kXsd.size());
  static const std::set<std::string_view> numeric = {
      "integer", "decimal", "double", "float", "int", "long", "short", "byte", "nonNegativeInteger",
      "positiveInteger", "negativeInteger", "nonPositiveInteger", "unsignedInt", "unsignedLong",
      "unsignedShort", "unsignedByte"};
  if (!numeric.contains(local)) return std::nullopt;
  try {
    std::size_t used = 0;
    double v = std::stod(t.value(), &used);
    if (used != t.value().size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int compareTerms(const Term& a, const Term& b) {
  auto rank = [](const Term& t) {
    if (t.isUri()) return t.value().starts_with("_:") ? 0 : 1;
    return 2;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  auto na = numericValue(a);
  auto nb = numericValue(b);
  if (na && nb) {
    if (*na != *nb) return *na < *nb ? -1 : 1;
    return 0;
  }
  int c = a.value().compare(b.value());
  if (c != 0) return c < 0 ? -1 : 1;
  if (a.language() != b.language()) return a.language() < b.language() ? -1 : 1;
  if (a.datatype() != b.datatype()) return a.datatype() < b.datatype() ? -1 : 1;
  return 0;
}

ResultSet evaluate(const TripleStore& store, const StructuredQuery& q) {
  validate(q);
  BgpMatcher matcher(store, q);
  auto solutions = matcher.run();
  const auto& slots = matcher.slots();

  // Table with named columns prior to projection.
  std::vector<std::string> tableColumns;
  std::vector<std::vector<Term>> table;

  bool aggregate = q.count.has_value() || !q.modifiers.groupBy.empty();
  if (aggregate) {
    for (const auto& v : q.projection) {
      if (std::find(q.modifiers.groupBy.begin(), q.modifiers.groupBy.end(), v) == q.modifiers.groupBy.end()) {
        throw InvalidQuery("projected variable ?" + v + " is neither grouped nor aggregated");
      }
    }
    std::vector<std::size_t> keySlots;
    for (const auto& g : q.modifiers.groupBy) keySlots.push_back(slots.at(g));
    struct Group {
      std::size_t first = 0;
      std::size_t rows = 0;
      std::unordered_set<std::vector<TermId>, IdRowHash> distinct;
    };
    std::map<std::vector<TermId>, Group> groups;
    std::vector<std::vector<TermId>> firstSeen;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      std::vector<TermId> key;
      key.reserve(keySlots.size());
      for (auto s : keySlots) key.push_back(*solutions[i][s]);
      auto [it, inserted] = groups.try_emplace(key);
      if (inserted) {
        it->second.first = i;
        firstSeen.push_back(key);
      }
      ++it->second.rows;
      if (q.count && q.count->distinct) {
        std::vector<TermId> val;
        if (q.count->argument.empty()) {
          for (const auto& b : solutions[i]) val.push_back(*b);
        } else {
          val.push_back(*solutions[i][slots.at(q.count->argument)]);
        }
        it->second.distinct.insert(std::move(val));
      }
    }
    if (groups.empty() && q.modifiers.groupBy.empty()) {
      groups.try_emplace({});
      firstSeen.push_back({});
    }
    tableColumns = q.modifiers.groupBy;
    if (q.count) tableColumns.push_back(q.count->alias);
    for (const auto& key : firstSeen) {
      const auto& g = groups.at(key);
      std::vector<Term> row;
      for (auto id : key) row.push_back(store.term(id));
      if (q.count) {
        auto n = q.count->distinct ? g.distinct.size() : g.rows;
        row.push_back(Term::integer(static_cast<long long>(n)));
      }
      table.push_back(std::move(row));
    }
  } else {
    tableColumns = q.patternVariables();
    table.reserve(solutions.size());
    for (const auto& s : solutions) {
      std::vector<Term> row;
      row.reserve(tableColumns.size());
      for (const auto& v : tableColumns) row.push_back(store.term(*s[slots.at(v)]));
      table.push_back(std::move(row));
    }
  }

  if (q.modifiers.orderBy) {
    auto col = std::find(tableColumns.begin(), tableColumns.end(), q.modifiers.orderBy->variable);
    if (col == tableColumns.end()) throw InvalidQuery("cannot order by ?" + q.modifiers.orderBy->variable);
    auto idx = static_cast<std::size_t>(col - tableColumns.begin());
    bool desc = q.modifiers.orderBy->descending;
    std::stable_sort(table.begin(), table.end(), [&](const auto& a, const auto& b) {
      int c = compareTerms(a[idx], b[idx]);
      return desc ? c > 0 : c < 0;
    });
  }

  ResultSet rs;
  rs.columns = q.columns();
  std::vector<std::size_t> pick;
  for (const auto& c : rs.columns) {
    pick.push_back(static_cast<std::size_t>(std::find(tableColumns.begin(), tableColumns.end(), c) - tableColumns.begin()));
  }
  std::unordered_set<std::vector<Term>, RowHash> seen;
  std::size_t skipped = 0;
  std::size_t offset = q.modifiers.offset.value_or(0);
  for (auto& row : table) {
    std::vector<Term> out;
    out.reserve(pick.size());
    for (auto i : pick) out.push_back(row[i]);
    if (q.modifiers.distinct && !seen.insert(out).second) continue;
    if (skipped < offset) {
      ++skipped;
      continue;
    }
    if (q.modifiers.limit && rs.rows.size() >= *q.modifiers.limit) break;
    rs.rows.push_back(std::move(out));
  }
  return rs;
}

}  // namespace scribe::rdf
