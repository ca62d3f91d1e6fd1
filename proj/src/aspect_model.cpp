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

#include "modelweave/aspect_model.hpp"

#include <set>

namespace modelweave {

bool NamePattern::matches(const QualifiedName& qn) const {
    if (segments.size() != qn.segments.size()) {
        return false;
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i] != "*" && segments[i] != qn.segments[i]) {
            return false;
        }
    }
    return true;
}

std::string NamePattern::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) {
            out += '.';
        }
        out += segments[i];
    }
    return out;
}

namespace {

void validate_payload(const Advice& adv, const QualifiedName& at, ValidationReport& out) {
    switch (adv.kind) {
    case AdviceKind::AddElt: {
        const auto* add = std::get_if<AddPayload>(&adv.payload);
        if (!add) {
            out.add(at, "addElt advice carries a non-add payload");
            return;
        }
        if (const auto* a = std::get_if<AttributeDecl>(&add->element)) {
            validate_attribute_decl(*a, at, out);
        } else if (const auto* m = std::get_if<MethodDecl>(&add->element)) {
            validate_method_decl(*m, at, out);
        } else if (const auto* c = std::get_if<ClassDecl>(&add->element)) {
            validate_class_decl(*c, at, out);
        } else if (const auto* assoc = std::get_if<AssociationDecl>(&add->element)) {
            validate_association_decl(*assoc, at, out);
        }
        return;
    }
    case AdviceKind::Update: {
        const auto* upd = std::get_if<UpdatePayload>(&adv.payload);
        if (!upd) {
            out.add(at, "update advice carries a non-update payload");
            return;
        }
        if (!upd->new_name && !upd->new_type) {
            out.add(at, "update advice rewrites no field");
        }
        if (upd->new_name && !is_identifier(*upd->new_name)) {
            out.add(at, "update target name '" + *upd->new_name + "' is not a valid identifier");
        }
        if (upd->new_type && !is_identifier(*upd->new_type)) {
            out.add(at, "update target type '" + *upd->new_type + "' is not a valid identifier");
        }
        return;
    }
    case AdviceKind::DeleteElt:
        if (!std::holds_alternative<DeletePayload>(adv.payload)) {
            out.add(at, "deleteElt advice carries a payload");
        }
        return;
    }
}

} // namespace

ValidationReport validate_aspect(const AspectModel& model) {
    ValidationReport out;
    if (!is_identifier(model.name)) {
        out.add(QualifiedName{model.name}, "model name '" + model.name + "' is not a valid identifier");
    }

    std::set<std::string> aspect_names;
    for (const AspectRequirement& asp : model.aspects) {
        QualifiedName at{asp.name};
        if (!is_identifier(asp.name)) {
            out.add(at, "aspect name '" + asp.name + "' is not a valid identifier");
        }
        if (!aspect_names.insert(asp.name).second) {
            out.add(at, "duplicate aspect name '" + asp.name + "'");
        }
        if (asp.priority < 0.0 || asp.priority > 1.0) {
            out.add(at, "priority outside [0,1]");
        }

        std::set<std::string> pointcut_names;
        for (const Pointcut& p : asp.pointcuts) {
            QualifiedName pat{asp.name, p.name};
            if (!is_identifier(p.name)) {
                out.add(pat, "pointcut name '" + p.name + "' is not a valid identifier");
            }
            if (!pointcut_names.insert(p.name).second) {
                out.add(pat, "duplicate pointcut name '" + p.name + "'");
            }
            if (p.pattern.segments.empty()) {
                out.add(pat, "empty pointcut pattern");
            }
            for (const std::string& seg : p.pattern.segments) {
                if (seg != "*" && !is_identifier(seg)) {
                    out.add(pat, "pattern segment '" + seg + "' is neither an identifier nor '*'");
                }
            }
        }

        std::set<std::string> advice_names;
        for (const Advice& adv : asp.advices) {
            QualifiedName aat{asp.name, adv.name};
            if (!is_identifier(adv.name)) {
                out.add(aat, "advice name '" + adv.name + "' is not a valid identifier");
            }
            if (!advice_names.insert(adv.name).second) {
                out.add(aat, "duplicate advice name '" + adv.name + "'");
            }
            if (!pointcut_names.count(adv.bound_pointcut)) {
                out.add(aat, "advice bound to unknown pointcut '" + adv.bound_pointcut + "'");
            }
            validate_payload(adv, aat, out);
        }
    }

    out.normalize();
    return out;
}

const AspectRequirement* find_aspect(const AspectModel& model, std::string_view name) {
    for (const AspectRequirement& a : model.aspects) {
        if (a.name == name) {
            return &a;
        }
    }
    return nullptr;
}

const Pointcut* find_pointcut(const AspectRequirement& aspect, std::string_view name) {
    for (const Pointcut& p : aspect.pointcuts) {
        if (p.name == name) {
            return &p;
        }
    }
    return nullptr;
}

} // namespace modelweave
