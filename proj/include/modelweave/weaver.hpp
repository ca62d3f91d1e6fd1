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

#ifndef MODELWEAVE_WEAVER_HPP
#define MODELWEAVE_WEAVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modelweave/aspect_model.hpp"
#include "modelweave/core_model.hpp"
#include "modelweave/weaving_model.hpp"

namespace modelweave {

/// Execution-order requirement produced by weaving a method advice at a
/// called operation.
struct OrderingConstraint {
    QualifiedName advice_method;
    QualifiedName target_method;
    AdvicePosition position = AdvicePosition::Before;
    std::string source_aspect;

    friend bool operator==(const OrderingConstraint&, const OrderingConstraint&) = default;
};

struct ProvenanceEntry {
    enum class Origin { Core, Additional, Aspect };

    QualifiedName element;
    Origin origin = Origin::Core;
    std::string aspect; // set when origin == Aspect

    friend bool operator==(const ProvenanceEntry&, const ProvenanceEntry&) = default;
};

/// A core model plus what weaving added to it: ordering constraints and
/// per-element provenance for everything that did not come from the
/// original core.
struct WovenModel {
    CoreModel base;
    std::vector<OrderingConstraint> ordering_constraints;
    std::vector<ProvenanceEntry> provenance;

    friend bool operator==(const WovenModel&, const WovenModel&) = default;
};

enum class EditKind { Add, Update, Delete };

/// One planned modification. `target` is the element the pointcut matched,
/// `touched` the element the edit creates, rewrites or removes; they differ
/// for additions (a method advice at Student.NewSubscription touches
/// Student.<newMethod>).
struct Edit {
    EditKind kind = EditKind::Add;
    QualifiedName target;
    QualifiedName touched;
    AdvicePayload payload;
    AdvicePosition position = AdvicePosition::Before;
    PointcutKind pointcut_kind = PointcutKind::Call;
    std::string source_aspect;
    std::string source_link;
    std::string source_advice;
    bool dropped = false;

    friend bool operator==(const Edit&, const Edit&) = default;
};

/// Ordered edit list: link order, then pointcut order, then canonical target
/// order, then advice declaration order. Order is the application contract.
struct WeavePlan {
    std::vector<Edit> edits;

    friend bool operator==(const WeavePlan&, const WeavePlan&) = default;
};

enum class ConflictCategory { DeleteVsOther, DoubleUpdate, DuplicateAdd };

/// Two edits from different aspects or links contending for one element.
/// Indices point into the plan's edit list.
struct Conflict {
    std::size_t first_edit = 0;
    std::size_t second_edit = 0;
    QualifiedName target;
    ConflictCategory category = ConflictCategory::DuplicateAdd;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct Resolution {
    Conflict conflict;
    std::optional<std::size_t> kept;
    std::optional<std::size_t> dropped;
    bool resolved = false;
};

enum class ReportKind { Edit, Warning, Conflict, Resolution, Constraint, Info };

/// Ordered, renderable log of everything a weave run did. Line order is part
/// of the deterministic output contract.
struct WeaveReport {
    struct Line {
        ReportKind kind;
        std::string text;

        friend bool operator==(const Line&, const Line&) = default;
    };

    std::vector<Line> lines;

    void edit(std::string text) { lines.push_back({ReportKind::Edit, std::move(text)}); }
    void warn(std::string text) { lines.push_back({ReportKind::Warning, std::move(text)}); }
    void conflict(std::string text) { lines.push_back({ReportKind::Conflict, std::move(text)}); }
    void resolution(std::string text) { lines.push_back({ReportKind::Resolution, std::move(text)}); }
    void constraint(std::string text) { lines.push_back({ReportKind::Constraint, std::move(text)}); }
    void info(std::string text) { lines.push_back({ReportKind::Info, std::move(text)}); }

    /// One "<kind>: <text>" line each, in recording order.
    std::string render() const;
};

/// All locations of the model where the pointcut takes effect, sorted by
/// canonical qualified name. Pure; no match is an empty list.
std::vector<QualifiedName> match_pointcut(const Pointcut& p, const CoreModel& m);

/// Copies the linked additional elements into the core model, link by link.
/// Unlinked additional content is never copied. Identical duplicates are
/// no-ops (warned); differing collisions and copies that would dangle throw
/// WeaveError. Provenance for the copies lands in `provenance` when given.
CoreModel weave_core_additional(const CoreModel& core, const CoreModel& additional,
                                const WeavingModel& w, WeaveReport& report,
                                std::vector<ProvenanceEntry>* provenance = nullptr);

struct PlanResult {
    WeavePlan plan;
    std::vector<Conflict> conflicts;
};

/// Expands every link into edits (see WeavePlan for the order) and detects
/// conflicts pairwise: a delete against any other edit on the same element
/// or inside its cascade, two updates rewriting the same field, and two
/// same-named adds with differing content. Identical contributions from
/// different sources are deduplicated with a warning instead of conflicting.
PlanResult plan_weave(const CoreModel& core, const AspectModel& aspects, const WeavingModel& w,
                      WeaveReport& report);

/// Keeps the edit of the strictly higher-priority aspect per conflict. Equal
/// priorities are unresolved unless `force_first` picks the plan-order
/// earlier edit. Only relative priority order matters.
std::vector<Resolution> resolve_conflicts(const WeavePlan& plan,
                                          const std::vector<Conflict>& conflicts,
                                          const AspectModel& aspects, bool force_first = false);

/// Marks the dropped side of each resolution in the plan. Throws
/// UnresolvedConflictError when any conflict is unresolved.
void apply_resolutions(WeavePlan& plan, const std::vector<Resolution>& resolutions);

/// Executes a conflict-free plan against the core model. Method additions at
/// called targets emit ordering constraints; renames rewrite every reference
/// (including pending edits and already-emitted constraints); deletes
/// cascade so no association end dangles. Throws WeaveError when the plan no
/// longer fits the model.
WovenModel apply_plan(const CoreModel& core, const WeavePlan& plan, WeaveReport& report);

struct WeaveOptions {
    bool strict_digest = false;
    bool force_first = false;
};

struct AdditionalInput {
    CoreModel model;
    WeavingModel weaving;
};

struct AspectInput {
    AspectModel model;
    WeavingModel weaving;
};

struct WeaveInputs {
    CoreModel core;
    std::vector<AdditionalInput> additionals;
    std::vector<AspectInput> aspects;
};

struct WeaveResult {
    WovenModel woven;
    WeaveReport report;
};

/// Full pipeline: every core-additional weaving first, in order, then every
/// core-aspect weaving (plan, resolve, apply) against the evolving model.
/// Digest mismatches warn, or fail under strict_digest.
WeaveResult weave(const WeaveInputs& inputs, const WeaveOptions& options = {});

std::string to_string(EditKind k);
std::string to_string(ConflictCategory c);
std::string describe(const Edit& e);

} // namespace modelweave

#endif // MODELWEAVE_WEAVER_HPP
