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

#ifndef MODELWEAVE_ASPECT_MODEL_HPP
#define MODELWEAVE_ASPECT_MODEL_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modelweave/core_model.hpp"
#include "modelweave/diagnostics.hpp"
#include "modelweave/names.hpp"

namespace modelweave {

/// Call pointcuts match methods; structural pointcuts match classes,
/// attributes and associations.
enum class PointcutKind { Call, Structural };

/// Execution position of an advice relative to a matched call. Only
/// meaningful for call pointcuts; accepted and ignored (with a warning)
/// on structural ones.
enum class AdvicePosition { Before, After };

enum class AdviceKind { AddElt, Update, DeleteElt };

/// Segment-wise match against canonical qualified names. "*" matches exactly
/// one whole segment; there is no partial-segment matching.
struct NamePattern {
    std::vector<std::string> segments;

    bool matches(const QualifiedName& qn) const;
    std::string str() const;

    friend bool operator==(const NamePattern&, const NamePattern&) = default;
};

struct Pointcut {
    std::string name;
    PointcutKind kind = PointcutKind::Call;
    NamePattern pattern;

    friend bool operator==(const Pointcut&, const Pointcut&) = default;
};

using AddElement = std::variant<AttributeDecl, MethodDecl, ClassDecl, AssociationDecl>;

struct AddPayload {
    AddElement element;

    friend bool operator==(const AddPayload&, const AddPayload&) = default;
};

/// Field rewrite applied to the matched element. Updates never move elements
/// between classes; `new_type` rewrites an attribute type or a method return
/// type depending on what was matched.
struct UpdatePayload {
    std::optional<std::string> new_name;
    std::optional<std::string> new_type;

    friend bool operator==(const UpdatePayload&, const UpdatePayload&) = default;
};

struct DeletePayload {
    friend bool operator==(const DeletePayload&, const DeletePayload&) = default;
};

using AdvicePayload = std::variant<AddPayload, UpdatePayload, DeletePayload>;

struct Advice {
    std::string name;
    AdvicePosition position = AdvicePosition::Before;
    AdviceKind kind = AdviceKind::AddElt;
    std::string bound_pointcut;
    AdvicePayload payload;
    std::string body; // stored verbatim, never interpreted

    friend bool operator==(const Advice&, const Advice&) = default;
};

/// A modular crosscutting requirement: where it applies (pointcuts) and what
/// it does there (advices). Priority is stakeholder-assigned in [0,1] and
/// decides conflicts; 0.5 when unstated.
struct AspectRequirement {
    std::string name;
    double priority = 0.5;
    std::vector<Pointcut> pointcuts;
    std::vector<Advice> advices;

    friend bool operator==(const AspectRequirement&, const AspectRequirement&) = default;
};

struct AspectModel {
    std::string name;
    std::vector<AspectRequirement> aspects;

    friend bool operator==(const AspectModel&, const AspectModel&) = default;
};

/// Pure; report sorted. Covers name uniqueness, pointcut references,
/// priority range, pattern well-formedness and embedded element payloads.
ValidationReport validate_aspect(const AspectModel& model);

const AspectRequirement* find_aspect(const AspectModel& model, std::string_view name);
const Pointcut* find_pointcut(const AspectRequirement& aspect, std::string_view name);

} // namespace modelweave

#endif // MODELWEAVE_ASPECT_MODEL_HPP
