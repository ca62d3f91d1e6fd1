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

#ifndef MODELWEAVE_DIAGNOSTICS_HPP
#define MODELWEAVE_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "modelweave/names.hpp"

namespace modelweave {

/// A single rule violation found by a validator. Violations are data, not
/// failures: validators always return, never throw.
struct Violation {
    QualifiedName at;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool empty() const { return violations.empty(); }
    std::size_t size() const { return violations.size(); }

    void add(QualifiedName at, std::string message) {
        violations.push_back({std::move(at), std::move(message)});
    }
    /// For violations located by prose ("weaving W1, link L1") rather than a
    /// canonical element name; stored as a single-segment location.
    void add(std::string at, std::string message) {
        violations.push_back({QualifiedName{{std::move(at)}}, std::move(message)});
    }
    /// Sorts by location then message; validators call this before returning.
    void normalize();

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// 1-based source positions; columns count bytes.
struct SourceSpan {
    std::string file;
    int start_line = 1;
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

struct ParseDiagnostic {
    Severity severity = Severity::Error;
    SourceSpan span;
    std::string message;

    friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

/// "file:line:col: error: message"
std::string format_diagnostic(const ParseDiagnostic& d);

/// Misuse of the library API: foreign element handles, kind/model mismatches,
/// malformed structured documents. Distinct from validation results, which are
/// returned as data.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// A weave could not be carried out: colliding copies, stale plans,
/// dangling references introduced by a copy.
class WeaveError : public ModelError {
public:
    explicit WeaveError(const std::string& what) : ModelError(what) {}
};

/// Equal-priority conflict left unresolved; the weave cannot proceed.
class UnresolvedConflictError : public WeaveError {
public:
    explicit UnresolvedConflictError(const std::string& what) : WeaveError(what) {}
};

/// Exhaustive evaluation refused: leaf count exceeds the configured bound.
class CapacityError : public ModelError {
public:
    explicit CapacityError(const std::string& what) : ModelError(what) {}
};

} // namespace modelweave

#endif // MODELWEAVE_DIAGNOSTICS_HPP
