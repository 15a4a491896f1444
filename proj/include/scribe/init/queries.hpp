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
#include <string>

#include "scribe/init/snapshot.hpp"

namespace scribe::init::queries {

/// Predicates by frequency.
std::string predicates();
/// (class, superclass) pairs of declared owl:Class resources.
std::string subclasses();
/// rdf:type objects by frequency.
std::string types();
/// Predicates by number of literal objects.
std::string literalPredicates();
/// One filtered literal of a predicate.
std::string probeLiteral(const std::string& predicate, const InitConfig& cfg);
/// Filtered literals of a predicate on entities of a class.
std::string literalsOfClass(const std::string& type, const std::string& predicate, const InitConfig& cfg);
/// Paginated form of literalsOfClass.
std::string literalsOfType(const std::string& type, const std::string& predicate, const InitConfig& cfg,
                           std::size_t limit, std::size_t offset);
/// Upstream subject counts per literal of (type, predicate), paginated.
std::string significanceOfType(const std::string& type, const std::string& predicate, const InitConfig& cfg,
                               std::size_t limit, std::size_t offset);
/// All filtered literals, paginated (warehouse mode).
std::string allLiterals(const InitConfig& cfg, std::size_t limit, std::size_t offset);
/// Upstream subject counts of all filtered literals, paginated (warehouse mode).
std::string allSignificance(const InitConfig& cfg, std::size_t limit, std::size_t offset);

}  // namespace scribe::init::queries
