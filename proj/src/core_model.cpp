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

#include "modelweave/core_model.hpp"

#include <cassert>
#include <set>

namespace modelweave {

std::string Multiplicity::str() const {
    std::string out = std::to_string(lower);
    out += "..";
    out += upper ? std::to_string(*upper) : std::string("*");
    return out;
}

const ClassDecl& ElementHandle::as_class() const {
    assert(model && kind == ElementKind::Class);
    return model->classes[class_index];
}

const AttributeDecl& ElementHandle::as_attribute() const {
    assert(model && kind == ElementKind::Attribute);
    return model->classes[class_index].attributes[feature_index];
}

const MethodDecl& ElementHandle::as_method() const {
    assert(model && kind == ElementKind::Method);
    return model->classes[class_index].methods[feature_index];
}

const AssociationDecl& ElementHandle::as_association() const {
    assert(model && kind == ElementKind::Association);
    return model->associations[assoc_index];
}

const AssociationEnd& ElementHandle::as_association_end() const {
    assert(model && kind == ElementKind::AssociationEnd);
    const AssociationDecl& a = model->associations[assoc_index];
    return end_index == 0 ? a.end_a : a.end_b;
}

namespace {

void check_identifier(const std::string& s, const QualifiedName& at, const char* what,
                      ValidationReport& out) {
    if (!is_identifier(s)) {
        out.add(at, std::string(what) + " '" + s + "' is not a valid identifier");
    }
}

void check_multiplicity(const Multiplicity& m, const QualifiedName& at, ValidationReport& out) {
    if (m.upper && m.lower > *m.upper) {
        out.add(at, "multiplicity lower bound " + std::to_string(m.lower) +
                        " exceeds upper bound " + std::to_string(*m.upper));
    }
}

} // namespace

void validate_attribute_decl(const AttributeDecl& a, const QualifiedName& at,
                             ValidationReport& out) {
    check_identifier(a.name, at, "attribute name", out);
    check_identifier(a.type_name, at, "type name", out);
    check_multiplicity(a.multiplicity, at, out);
}

void validate_method_decl(const MethodDecl& m, const QualifiedName& at, ValidationReport& out) {
    check_identifier(m.name, at, "method name", out);
    if (m.return_type) {
        check_identifier(*m.return_type, at, "return type", out);
    }
    std::set<std::string> seen;
    for (const Parameter& p : m.parameters) {
        check_identifier(p.name, at, "parameter name", out);
        check_identifier(p.type_name, at, "parameter type", out);
        if (!seen.insert(p.name).second) {
            out.add(at, "duplicate parameter name '" + p.name + "'");
        }
    }
}

void validate_association_decl(const AssociationDecl& a, const QualifiedName& at,
                               ValidationReport& out) {
    check_identifier(a.name, at, "association name", out);
    for (const AssociationEnd* end : {&a.end_a, &a.end_b}) {
        QualifiedName end_at = at;
        end_at.segments.push_back(end->role);
        check_identifier(end->role, end_at, "end role", out);
        check_identifier(end->class_name, end_at, "end class name", out);
        check_multiplicity(end->multiplicity, end_at, out);
    }
    if (a.end_a.role == a.end_b.role) {
        out.add(at, "association ends share the role '" + a.end_a.role + "'");
    }
}

void validate_class_decl(const ClassDecl& c, const QualifiedName& at, ValidationReport& out) {
    check_identifier(c.name, at, "class name", out);
    if (c.name == kAssocSegment) {
        out.add(at, "class name 'assoc' is reserved for association paths");
    }
    std::set<std::string> features;
    for (const AttributeDecl& a : c.attributes) {
        QualifiedName fat = at;
        fat.segments.push_back(a.name);
        validate_attribute_decl(a, fat, out);
        if (!features.insert(a.name).second) {
            out.add(fat, "duplicate feature name '" + a.name + "'");
        }
    }
    for (const MethodDecl& m : c.methods) {
        QualifiedName fat = at;
        fat.segments.push_back(m.name);
        validate_method_decl(m, fat, out);
        if (!features.insert(m.name).second) {
            out.add(fat, "duplicate feature name '" + m.name + "'");
        }
    }
}

ValidationReport validate_core(const CoreModel& model) {
    ValidationReport out;
    check_identifier(model.name, QualifiedName{model.name}, "model name", out);

    std::set<std::string> class_names;
    for (const ClassDecl& c : model.classes) {
        QualifiedName at{c.name};
        validate_class_decl(c, at, out);
        if (!class_names.insert(c.name).second) {
            out.add(at, "duplicate class name '" + c.name + "'");
        }
    }

    std::set<std::string> assoc_names;
    for (const AssociationDecl& a : model.associations) {
        QualifiedName at{std::string(kAssocSegment), a.name};
        validate_association_decl(a, at, out);
        if (!assoc_names.insert(a.name).second) {
            out.add(at, "duplicate association name '" + a.name + "'");
        }
        for (const AssociationEnd* end : {&a.end_a, &a.end_b}) {
            if (!class_names.count(end->class_name)) {
                QualifiedName end_at = at;
                end_at.segments.push_back(end->role);
                out.add(end_at, "association end references unknown class '" +
                                    end->class_name + "'");
            }
        }
    }

    for (const ClassDecl& c : model.classes) {
        if (c.association_class_of && !assoc_names.count(*c.association_class_of)) {
            out.add(QualifiedName{c.name}, "association class references unknown association '" +
                                               *c.association_class_of + "'");
        }
    }

    out.normalize();
    return out;
}

std::optional<ElementHandle> resolve(const CoreModel& model, const QualifiedName& qn) {
    const auto& segs = qn.segments;
    if (segs.empty() || segs.size() > 3) {
        return std::nullopt;
    }

    if (segs.front() == kAssocSegment && segs.size() >= 2) {
        for (std::size_t ai = 0; ai < model.associations.size(); ++ai) {
            const AssociationDecl& a = model.associations[ai];
            if (a.name != segs[1]) {
                continue;
            }
            if (segs.size() == 2) {
                return ElementHandle{&model, ElementKind::Association, 0, 0, ai, 0};
            }
            if (a.end_a.role == segs[2]) {
                return ElementHandle{&model, ElementKind::AssociationEnd, 0, 0, ai, 0};
            }
            if (a.end_b.role == segs[2]) {
                return ElementHandle{&model, ElementKind::AssociationEnd, 0, 0, ai, 1};
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    if (segs.size() == 3) {
        return std::nullopt;
    }
    for (std::size_t ci = 0; ci < model.classes.size(); ++ci) {
        const ClassDecl& c = model.classes[ci];
        if (c.name != segs[0]) {
            continue;
        }
        if (segs.size() == 1) {
            return ElementHandle{&model, ElementKind::Class, ci, 0, 0, 0};
        }
        for (std::size_t fi = 0; fi < c.attributes.size(); ++fi) {
            if (c.attributes[fi].name == segs[1]) {
                return ElementHandle{&model, ElementKind::Attribute, ci, fi, 0, 0};
            }
        }
        for (std::size_t fi = 0; fi < c.methods.size(); ++fi) {
            if (c.methods[fi].name == segs[1]) {
                return ElementHandle{&model, ElementKind::Method, ci, fi, 0, 0};
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

QualifiedName qualified_name_of(const CoreModel& model, const ElementHandle& handle) {
    if (handle.model != &model) {
        throw ModelError("element handle does not belong to model '" + model.name + "'");
    }
    switch (handle.kind) {
    case ElementKind::Class:
        return QualifiedName{handle.as_class().name};
    case ElementKind::Attribute:
        return QualifiedName{model.classes[handle.class_index].name, handle.as_attribute().name};
    case ElementKind::Method:
        return QualifiedName{model.classes[handle.class_index].name, handle.as_method().name};
    case ElementKind::Association:
        return QualifiedName{std::string(kAssocSegment), handle.as_association().name};
    case ElementKind::AssociationEnd:
        return QualifiedName{std::string(kAssocSegment),
                             model.associations[handle.assoc_index].name,
                             handle.as_association_end().role};
    }
    throw ModelError("corrupt element handle");
}

const ClassDecl* find_class(const CoreModel& model, std::string_view name) {
    for (const ClassDecl& c : model.classes) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

ClassDecl* find_class(CoreModel& model, std::string_view name) {
    return const_cast<ClassDecl*>(find_class(static_cast<const CoreModel&>(model), name));
}

const AssociationDecl* find_association(const CoreModel& model, std::string_view name) {
    for (const AssociationDecl& a : model.associations) {
        if (a.name == name) {
            return &a;
        }
    }
    return nullptr;
}

AssociationDecl* find_association(CoreModel& model, std::string_view name) {
    return const_cast<AssociationDecl*>(
        find_association(static_cast<const CoreModel&>(model), name));
}

const AttributeDecl* find_attribute(const ClassDecl& cls, std::string_view name) {
    for (const AttributeDecl& a : cls.attributes) {
        if (a.name == name) {
            return &a;
        }
    }
    return nullptr;
}

const MethodDecl* find_method(const ClassDecl& cls, std::string_view name) {
    for (const MethodDecl& m : cls.methods) {
        if (m.name == name) {
            return &m;
        }
    }
    return nullptr;
}

bool has_feature(const ClassDecl& cls, std::string_view name) {
    return find_attribute(cls, name) != nullptr || find_method(cls, name) != nullptr;
}

} // namespace modelweave
