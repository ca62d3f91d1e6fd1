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

#include "modelweave/requirements.hpp"

#include <algorithm>
#include <map>

namespace modelweave {

Expression Expression::leaf_of(std::string id) {
    Expression e;
    e.kind = Kind::Leaf;
    e.leaf = std::move(id);
    return e;
}

Expression Expression::combine(ConnectorOp op, std::vector<Expression> children) {
    Expression e;
    e.kind = op == ConnectorOp::And ? Kind::And : Kind::Or;
    e.children = std::move(children);
    return e;
}

bool Expression::evaluate(const std::set<std::string>& satisfied) const {
    switch (kind) {
    case Kind::Leaf:
        return satisfied.count(leaf) > 0;
    case Kind::And:
        for (const Expression& c : children) {
            if (!c.evaluate(satisfied)) {
                return false;
            }
        }
        return true;
    case Kind::Or:
        for (const Expression& c : children) {
            if (c.evaluate(satisfied)) {
                return true;
            }
        }
        return false;
    }
    return false;
}

std::string Expression::str() const {
    if (kind == Kind::Leaf) {
        return leaf;
    }
    std::string sep = kind == Kind::And ? " and " : " or ";
    std::string out = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += children[i].str();
    }
    out += ')';
    return out;
}

namespace {

const RequirementNode* find_node(const DecompositionGraph& g, const std::string& id) {
    for (const RequirementNode& n : g.nodes) {
        if (n.id == id) {
            return &n;
        }
    }
    return nullptr;
}

const Connector* find_connector(const DecompositionGraph& g, const std::string& parent) {
    for (const Connector& c : g.connectors) {
        if (c.parent == parent) {
            return &c;
        }
    }
    return nullptr;
}

/// Leaf ids (existing and additional requirements) in declaration order.
std::vector<std::string> leaves_of(const DecompositionGraph& g) {
    std::vector<std::string> out;
    for (const RequirementNode& n : g.nodes) {
        if (n.kind != RequirementKind::Cooperative) {
            out.push_back(n.id);
        }
    }
    return out;
}

} // namespace

ValidationReport validate_graph(const DecompositionGraph& g) {
    ValidationReport report;
    if (!is_identifier(g.name)) {
        report.add("requirements", "graph name '" + g.name + "' is not a valid identifier");
    }
    std::set<std::string> ids;
    for (const RequirementNode& n : g.nodes) {
        std::string at = "requirement " + n.id;
        if (!is_identifier(n.id)) {
            report.add(at, "id is not a valid identifier");
        } else if (!ids.insert(n.id).second) {
            report.add(at, "duplicate requirement id");
        }
        if (!n.source_system.empty() && n.kind != RequirementKind::Existing) {
            report.add(at, "only existing requirements may carry a source system");
        }
        if (!n.source_system.empty() && !is_identifier(n.source_system)) {
            report.add(at, "source system '" + n.source_system +
                               "' is not a valid identifier");
        }
        for (const std::string& asp : n.linked_aspects) {
            if (!is_identifier(asp)) {
                report.add(at, "linked aspect '" + asp + "' is not a valid identifier");
            }
        }
    }
    std::set<std::string> connected;
    for (const Connector& c : g.connectors) {
        std::string at = "connector of " + c.parent;
        const RequirementNode* parent = find_node(g, c.parent);
        if (!parent) {
            report.add(at, "parent '" + c.parent + "' is not a declared requirement");
        } else if (parent->kind != RequirementKind::Cooperative) {
            report.add(at, "parent '" + c.parent +
                               "' is not a cooperative requirement; only cooperative "
                               "requirements decompose");
        }
        if (!connected.insert(c.parent).second) {
            report.add(at, "cooperative requirement '" + c.parent +
                               "' has more than one connector");
        }
        if (c.children.empty()) {
            report.add(at, "connector has no children");
        }
        std::set<std::string> seen_children;
        for (const std::string& child : c.children) {
            if (!find_node(g, child)) {
                report.add(at, "child '" + child + "' is not a declared requirement");
            }
            if (!seen_children.insert(child).second) {
                report.add(at, "duplicate child '" + child + "'");
            }
            if (child == c.parent) {
                report.add(at, "requirement '" + child + "' cannot decompose into itself");
            }
        }
    }
    for (const RequirementNode& n : g.nodes) {
        if (n.kind == RequirementKind::Cooperative && connected.count(n.id) == 0) {
            report.add("requirement " + n.id,
                       "cooperative requirement has no decomposition connector");
        }
    }

    // Cycle detection over the child edges of cooperative requirements.
    std::map<std::string, int> state; // 0 unvisited, 1 on stack, 2 done
    std::vector<std::string> cyclic;
    auto dfs = [&](auto&& self, const std::string& id) -> bool {
        int& s = state[id];
        if (s == 1) {
            return true;
        }
        if (s == 2) {
            return false;
        }
        s = 1;
        if (const Connector* c = find_connector(g, id)) {
            for (const std::string& child : c->children) {
                if (find_node(g, child) && self(self, child)) {
                    state[id] = 2;
                    cyclic.push_back(id);
                    return true;
                }
            }
        }
        s = 2;
        return false;
    };
    for (const RequirementNode& n : g.nodes) {
        if (n.kind == RequirementKind::Cooperative && state[n.id] == 0 &&
            dfs(dfs, n.id)) {
            report.add("requirement " + cyclic.back(),
                       "decomposition of '" + cyclic.back() + "' is cyclic");
            cyclic.clear();
        }
    }
    report.normalize();
    return report;
}

namespace {

Expression expression_of_impl(const DecompositionGraph& g, const std::string& id,
                              std::set<std::string>& in_progress) {
    const RequirementNode* node = find_node(g, id);
    if (!node) {
        throw ModelError("requirement '" + id + "' does not exist");
    }
    if (node->kind != RequirementKind::Cooperative) {
        return Expression::leaf_of(id);
    }
    if (!in_progress.insert(id).second) {
        throw ModelError("decomposition of '" + id + "' is cyclic");
    }
    const Connector* conn = find_connector(g, id);
    if (!conn) {
        throw ModelError("cooperative requirement '" + id + "' has no connector");
    }
    std::vector<Expression> children;
    children.reserve(conn->children.size());
    for (const std::string& child : conn->children) {
        children.push_back(expression_of_impl(g, child, in_progress));
    }
    in_progress.erase(id);
    return Expression::combine(conn->op, std::move(children));
}

} // namespace

Expression expression_of(const DecompositionGraph& g, const std::string& cr) {
    const RequirementNode* node = find_node(g, cr);
    if (!node || node->kind != RequirementKind::Cooperative) {
        throw ModelError("'" + cr + "' is not a cooperative requirement of graph '" +
                         g.name + "'");
    }
    std::set<std::string> in_progress;
    return expression_of_impl(g, cr, in_progress);
}

namespace {

bool evaluate_impl(const DecompositionGraph& g, const std::string& id,
                   const std::set<std::string>& satisfied,
                   std::set<std::string>& in_progress) {
    const RequirementNode* node = find_node(g, id);
    if (!node) {
        throw ModelError("requirement '" + id + "' does not exist");
    }
    if (node->kind != RequirementKind::Cooperative) {
        return satisfied.count(id) > 0;
    }
    if (!in_progress.insert(id).second) {
        throw ModelError("decomposition of '" + id + "' is cyclic");
    }
    const Connector* conn = find_connector(g, id);
    if (!conn) {
        throw ModelError("cooperative requirement '" + id + "' has no connector");
    }
    bool result = conn->op == ConnectorOp::And;
    for (const std::string& child : conn->children) {
        bool child_value = evaluate_impl(g, child, satisfied, in_progress);
        if (conn->op == ConnectorOp::And) {
            result = result && child_value;
        } else {
            result = result || child_value;
        }
    }
    in_progress.erase(id);
    return result;
}

} // namespace

bool evaluate(const DecompositionGraph& g, const std::string& cr,
              const std::set<std::string>& satisfied) {
    const RequirementNode* node = find_node(g, cr);
    if (!node || node->kind != RequirementKind::Cooperative) {
        throw ModelError("'" + cr + "' is not a cooperative requirement of graph '" +
                         g.name + "'");
    }
    std::set<std::string> in_progress;
    return evaluate_impl(g, cr, satisfied, in_progress);
}

namespace {

/// Truth of one requirement for every assignment of the n leaves; entry
/// `mask` has leaf j satisfied iff bit j of mask is set.
using TruthTable = std::vector<bool>;

TruthTable truth_table(const DecompositionGraph& g, const std::string& id,
                       const std::vector<std::string>& leaves,
                       std::map<std::string, TruthTable>& memo,
                       std::set<std::string>& in_progress) {
    auto cached = memo.find(id);
    if (cached != memo.end()) {
        return cached->second;
    }
    const std::size_t rows = std::size_t{1} << leaves.size();
    const RequirementNode* node = find_node(g, id);
    if (!node) {
        throw ModelError("requirement '" + id + "' does not exist");
    }
    TruthTable table(rows, false);
    if (node->kind != RequirementKind::Cooperative) {
        auto pos = std::find(leaves.begin(), leaves.end(), id);
        std::size_t bit = static_cast<std::size_t>(pos - leaves.begin());
        for (std::size_t mask = 0; mask < rows; ++mask) {
            table[mask] = (mask >> bit) & 1u;
        }
    } else {
        if (!in_progress.insert(id).second) {
            throw ModelError("decomposition of '" + id + "' is cyclic");
        }
        const Connector* conn = find_connector(g, id);
        if (!conn) {
            throw ModelError("cooperative requirement '" + id + "' has no connector");
        }
        bool first = true;
        for (const std::string& child : conn->children) {
            TruthTable ct = truth_table(g, child, leaves, memo, in_progress);
            if (first) {
                table = std::move(ct);
                first = false;
            } else if (conn->op == ConnectorOp::And) {
                for (std::size_t mask = 0; mask < rows; ++mask) {
                    table[mask] = table[mask] && ct[mask];
                }
            } else {
                for (std::size_t mask = 0; mask < rows; ++mask) {
                    table[mask] = table[mask] || ct[mask];
                }
            }
        }
        in_progress.erase(id);
    }
    memo[id] = table;
    return table;
}

void check_capacity(const std::vector<std::string>& leaves, std::size_t leaf_capacity,
                    const DecompositionGraph& g) {
    if (leaves.size() > leaf_capacity) {
        throw CapacityError("graph '" + g.name + "' has " +
                            std::to_string(leaves.size()) +
                            " leaf requirements; exhaustive analysis is capped at " +
                            std::to_string(leaf_capacity));
    }
}

/// Next size-|pick| combination of {0..n-1} in lexicographic order; false
/// when exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    std::size_t size = pick.size();
    std::size_t i = size;
    while (i > 0) {
        --i;
        if (pick[i] != n - size + i) {
            ++pick[i];
            for (std::size_t j = i + 1; j < size; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

/// given ==> target on every row?
bool entails(const std::vector<const TruthTable*>& given, const TruthTable& target) {
    const std::size_t rows = target.size();
    for (std::size_t mask = 0; mask < rows; ++mask) {
        bool all = true;
        for (const TruthTable* t : given) {
            if (!(*t)[mask]) {
                all = false;
                break;
            }
        }
        if (all && !target[mask]) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_inferable(const DecompositionGraph& g, const std::string& target,
                  const std::set<std::string>& given, std::size_t leaf_capacity) {
    const RequirementNode* target_node = find_node(g, target);
    if (!target_node || target_node->kind != RequirementKind::Cooperative) {
        throw ModelError("'" + target + "' is not a cooperative requirement of graph '" +
                         g.name + "'");
    }
    if (given.count(target) > 0) {
        throw ModelError("'" + target + "' cannot be inferred from itself");
    }
    for (const std::string& id : given) {
        const RequirementNode* node = find_node(g, id);
        if (!node || node->kind != RequirementKind::Cooperative) {
            throw ModelError("'" + id + "' is not a cooperative requirement of graph '" +
                             g.name + "'");
        }
    }
    std::vector<std::string> leaves = leaves_of(g);
    check_capacity(leaves, leaf_capacity, g);
    std::map<std::string, TruthTable> memo;
    std::set<std::string> in_progress;
    TruthTable target_table = truth_table(g, target, leaves, memo, in_progress);
    std::vector<TruthTable> given_tables;
    given_tables.reserve(given.size());
    for (const std::string& id : given) {
        given_tables.push_back(truth_table(g, id, leaves, memo, in_progress));
    }
    std::vector<const TruthTable*> given_ptrs;
    given_ptrs.reserve(given_tables.size());
    for (const TruthTable& t : given_tables) {
        given_ptrs.push_back(&t);
    }
    return entails(given_ptrs, target_table);
}

std::vector<RedundancyEntry> redundant_crs(const DecompositionGraph& g,
                                           std::size_t leaf_capacity) {
    std::vector<std::string> leaves = leaves_of(g);
    check_capacity(leaves, leaf_capacity, g);

    std::vector<std::string> crs;
    for (const RequirementNode& n : g.nodes) {
        if (n.kind == RequirementKind::Cooperative) {
            crs.push_back(n.id);
        }
    }
    std::map<std::string, TruthTable> memo;
    std::set<std::string> in_progress;
    std::vector<TruthTable> tables;
    tables.reserve(crs.size());
    for (const std::string& id : crs) {
        tables.push_back(truth_table(g, id, leaves, memo, in_progress));
    }

    std::vector<RedundancyEntry> out;
    for (std::size_t t = 0; t < crs.size(); ++t) {
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < crs.size(); ++i) {
            if (i != t) {
                others.push_back(i);
            }
        }
        std::vector<std::vector<std::size_t>> witness_indices;
        // Size-ascending, then lexicographic enumeration keeps every recorded
        // witness minimal by inclusion: any superset of an earlier witness is
        // pruned before testing.
        for (std::size_t size = 1; size <= others.size(); ++size) {
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i) {
                pick[i] = i;
            }
            do {
                bool pruned = false;
                for (const std::vector<std::size_t>& w : witness_indices) {
                    if (std::includes(pick.begin(), pick.end(), w.begin(), w.end())) {
                        pruned = true;
                        break;
                    }
                }
                if (!pruned) {
                    std::vector<const TruthTable*> given;
                    given.reserve(size);
                    for (std::size_t i : pick) {
                        given.push_back(&tables[others[i]]);
                    }
                    if (entails(given, tables[t])) {
                        witness_indices.push_back(pick);
                    }
                }
            } while (next_combination(pick, others.size()));
        }
        if (!witness_indices.empty()) {
            RedundancyEntry entry;
            entry.cr = crs[t];
            for (const std::vector<std::size_t>& w : witness_indices) {
                std::vector<std::string> ids;
                ids.reserve(w.size());
                for (std::size_t i : w) {
                    ids.push_back(crs[others[i]]);
                }
                entry.witnesses.push_back(std::move(ids));
            }
            out.push_back(std::move(entry));
        }
    }
    return out;
}

} // namespace modelweave
