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

#include "modelweave/weaving_model.hpp"

#include <set>

#include "modelweave/printer.hpp"

namespace modelweave {

namespace {

const char* link_kind_name(LinkKind kind) {
    switch (kind) {
    case LinkKind::AttributeToClass: return "attributeToClass";
    case LinkKind::MethodToClass: return "methodToClass";
    case LinkKind::ClassToModel: return "classToModel";
    case LinkKind::AssociationToModel: return "associationToModel";
    case LinkKind::AspectToTarget: return "aspectToTarget";
    }
    return "?";
}

// Shared head checks: naming, refs, link-name uniqueness, end/ref agreement.
void check_shell(const WeavingModel& w, std::string_view left_name,
                 std::string_view right_name, ValidationReport& report) {
    if (!is_identifier(w.name)) {
        report.add("weaving", "weaving name '" + w.name + "' is not a valid identifier");
    }
    if (w.left_ref.logical_name != left_name) {
        report.add("weaving " + w.name, "left reference '" + w.left_ref.logical_name +
                                            "' does not match model '" +
                                            std::string(left_name) + "'");
    }
    if (w.right_ref.logical_name != right_name) {
        report.add("weaving " + w.name, "right reference '" + w.right_ref.logical_name +
                                            "' does not match model '" +
                                            std::string(right_name) + "'");
    }
    std::set<std::string> seen;
    for (const WeaveLink& link : w.links) {
        std::string at = "weaving " + w.name + ", link " + link.name;
        if (!is_identifier(link.name)) {
            report.add(at, "link name is not a valid identifier");
        } else if (!seen.insert(link.name).second) {
            report.add(at, "duplicate link name");
        }
        if (link.left_end.model != w.left_ref.logical_name) {
            report.add(at, "left end is bound to model '" + link.left_end.model +
                               "', expected '" + w.left_ref.logical_name + "'");
        }
        if (link.right_end.model != w.right_ref.logical_name) {
            report.add(at, "right end is bound to model '" + link.right_end.model +
                               "', expected '" + w.right_ref.logical_name + "'");
        }
    }
}

void check_core_end(const CoreModel& m, const QualifiedName& target, ElementKind want,
                    const std::string& at, const char* side, ValidationReport& report) {
    std::optional<ElementHandle> handle = resolve(m, target);
    if (!handle) {
        report.add(at, std::string(side) + " end '" + target.str() +
                           "' does not resolve in model '" + m.name + "'");
        return;
    }
    if (handle->kind != want) {
        const char* want_name = "?";
        switch (want) {
        case ElementKind::Class: want_name = "a class"; break;
        case ElementKind::Attribute: want_name = "an attribute"; break;
        case ElementKind::Method: want_name = "a method"; break;
        case ElementKind::Association: want_name = "an association"; break;
        case ElementKind::AssociationEnd: want_name = "an association end"; break;
        }
        report.add(at, std::string(side) + " end '" + target.str() + "' must name " +
                           want_name);
    }
}

void check_model_end(const CoreModel& m, const QualifiedName& target, const std::string& at,
                     ValidationReport& report) {
    if (target.size() != 1 || target.segments[0] != m.name) {
        report.add(at, "left end '" + target.str() + "' must name the model '" + m.name +
                       "' itself");
    }
}

} // namespace

ValidationReport validate_weaving(const WeavingModel& w, const CoreModel& left,
                                  const CoreModel& right) {
    if (w.kind != WeavingKind::CoreAdditional) {
        throw ModelError("weaving '" + w.name +
                         "' is not a core-additional weaving; validate it against an "
                         "aspect model instead");
    }
    ValidationReport report;
    check_shell(w, left.name, right.name, report);
    for (const WeaveLink& link : w.links) {
        std::string at = "weaving " + w.name + ", link " + link.name;
        switch (link.kind) {
        case LinkKind::AttributeToClass:
            check_core_end(left, link.left_end.target, ElementKind::Class, at, "left",
                           report);
            check_core_end(right, link.right_end.target, ElementKind::Attribute, at,
                           "right", report);
            break;
        case LinkKind::MethodToClass:
            check_core_end(left, link.left_end.target, ElementKind::Class, at, "left",
                           report);
            check_core_end(right, link.right_end.target, ElementKind::Method, at, "right",
                           report);
            break;
        case LinkKind::ClassToModel:
            check_model_end(left, link.left_end.target, at, report);
            check_core_end(right, link.right_end.target, ElementKind::Class, at, "right",
                           report);
            break;
        case LinkKind::AssociationToModel:
            check_model_end(left, link.left_end.target, at, report);
            check_core_end(right, link.right_end.target, ElementKind::Association, at,
                           "right", report);
            break;
        case LinkKind::AspectToTarget:
            report.add(at, "link kind aspectToTarget requires a core-aspect weaving");
            break;
        }
    }
    report.normalize();
    return report;
}

ValidationReport validate_weaving(const WeavingModel& w, const CoreModel& left,
                                  const AspectModel& right) {
    if (w.kind != WeavingKind::CoreAspect) {
        throw ModelError("weaving '" + w.name +
                         "' is not a core-aspect weaving; validate it against a core "
                         "model instead");
    }
    ValidationReport report;
    check_shell(w, left.name, right.name, report);
    for (const WeaveLink& link : w.links) {
        std::string at = "weaving " + w.name + ", link " + link.name;
        if (link.kind != LinkKind::AspectToTarget) {
            report.add(at, std::string("link kind ") + link_kind_name(link.kind) +
                               " requires a core-additional weaving");
            continue;
        }
        const QualifiedName& scope = link.left_end.target;
        bool whole_model = scope.size() == 1 && scope.segments[0] == left.name;
        if (!whole_model && !resolve(left, scope)) {
            report.add(at, "left end '" + scope.str() + "' does not resolve in model '" +
                               left.name + "' and is not the model itself");
        }
        const QualifiedName& target = link.right_end.target;
        if (target.size() != 1 && target.size() != 2) {
            report.add(at, "right end '" + target.str() +
                               "' must name an aspect or aspect.pointcut");
            continue;
        }
        const AspectRequirement* asp = find_aspect(right, target.segments[0]);
        if (!asp) {
            report.add(at, "right end names unknown aspect '" + target.segments[0] + "'");
            continue;
        }
        if (target.size() == 2 && !find_pointcut(*asp, target.segments[1])) {
            report.add(at, "right end names unknown pointcut '" + target.segments[1] +
                               "' of aspect '" + asp->name + "'");
        }
    }
    report.normalize();
    return report;
}

namespace {

template <typename Right>
DigestStatus digest_check_impl(const WeavingModel& w, const CoreModel& left,
                               const Right& right) {
    DigestStatus status;
    if (!w.left_ref.content_digest.empty() &&
        w.left_ref.content_digest != canonical_digest(left)) {
        status.stale.push_back(w.left_ref);
    }
    if (!w.right_ref.content_digest.empty() &&
        w.right_ref.content_digest != canonical_digest(right)) {
        status.stale.push_back(w.right_ref);
    }
    return status;
}

} // namespace

DigestStatus digest_check(const WeavingModel& w, const CoreModel& left,
                          const CoreModel& right) {
    return digest_check_impl(w, left, right);
}

DigestStatus digest_check(const WeavingModel& w, const CoreModel& left,
                          const AspectModel& right) {
    return digest_check_impl(w, left, right);
}

} // namespace modelweave
