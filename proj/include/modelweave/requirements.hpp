/*
 * Copyright 2026 the modelweave authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MODELWEAVE_REQUIREMENTS_HPP
#define MODELWEAVE_REQUIREMENTS_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "modelweave/diagnostics.hpp"

namespace modelweave {

/// Cooperative requirements decompose into existing requirements (provided by
/// some source system) and additional requirements (provided by nobody yet).
enum class RequirementKind { Cooperative, Existing, Additional };

struct RequirementNode {
    std::string id;
    RequirementKind kind = RequirementKind::Cooperative;
    std::string text;
    std::string source_system;              // existing requirements only
    std::vector<std::string> linked_aspects; // traceability, not evaluated

    friend bool operator==(const RequirementNode&, const RequirementNode&) = default;
};

enum class ConnectorOp { And, Or };

struct Connector {
    std::string parent; // a cooperative-requirement id
    ConnectorOp op = ConnectorOp::And;
    std::vector<std::string> children;

    friend bool operator==(const Connector&, const Connector&) = default;
};

/// Acyclic AND/OR decomposition graph. Every cooperative requirement has
/// exactly one connector; existing/additional requirements are leaves.
struct DecompositionGraph {
    std::string name;
    std::vector<RequirementNode> nodes;
    std::vector<Connector> connectors;

    friend bool operator==(const DecompositionGraph&, const DecompositionGraph&) = default;
};

/// Negation-free boolean formula over leaf requirement ids.
struct Expression {
    enum class Kind { Leaf, And, Or };

    Kind kind = Kind::Leaf;
    std::string leaf;
    std::vector<Expression> children;

    static Expression leaf_of(std::string id);
    static Expression combine(ConnectorOp op, std::vector<Expression> children);

    bool evaluate(const std::set<std::string>& satisfied) const;
    /// "(er1 and (ar1 or er3))"
    std::string str() const;

    friend bool operator==(const Expression&, const Expression&) = default;
};

/// Pure; detects duplicate ids, dangling or empty connectors, connectors on
/// non-cooperative nodes, missing connectors, cycles, and stray fields.
ValidationReport validate_graph(const DecompositionGraph& g);

/// The formula for `cr` with every nested cooperative requirement substituted
/// by its connector; leaves are existing/additional ids. Throws ModelError
/// when `cr` is absent or not a cooperative requirement.
Expression expression_of(const DecompositionGraph& g, const std::string& cr);

/// Truth of `cr` when exactly the leaves in `satisfied` hold. Evaluates the
/// graph directly, without building the expression.
bool evaluate(const DecompositionGraph& g, const std::string& cr,
              const std::set<std::string>& satisfied);

inline constexpr std::size_t kDefaultLeafCapacity = 20;

/// Exhaustive entailment: true iff every leaf assignment that satisfies all
/// of `given` also satisfies `target`. Throws CapacityError when the graph
/// has more than `leaf_capacity` leaves, and ModelError when target is in
/// `given` or ids are not cooperative requirements.
bool is_inferable(const DecompositionGraph& g, const std::string& target,
                  const std::set<std::string>& given,
                  std::size_t leaf_capacity = kDefaultLeafCapacity);

struct RedundancyEntry {
    std::string cr;
    /// Minimal-by-inclusion witness sets, each sorted by declaration order,
    /// listed smallest first.
    std::vector<std::vector<std::string>> witnesses;

    friend bool operator==(const RedundancyEntry&, const RedundancyEntry&) = default;
};

/// Every cooperative requirement inferable from some subset of the others,
/// with its minimal witness subsets. Deterministic order follows node
/// declaration order.
std::vector<RedundancyEntry> redundant_crs(const DecompositionGraph& g,
                                           std::size_t leaf_capacity = kDefaultLeafCapacity);

} // namespace modelweave

#endif // MODELWEAVE_REQUIREMENTS_HPP
