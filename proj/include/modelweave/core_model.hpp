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

#ifndef MODELWEAVE_CORE_MODEL_HPP
#define MODELWEAVE_CORE_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modelweave/diagnostics.hpp"
#include "modelweave/names.hpp"

namespace modelweave {

/// UML-style multiplicity. Unbounded upper is nullopt; defaults to 1..1
/// when omitted in source.
struct Multiplicity {
    unsigned lower = 1;
    std::optional<unsigned> upper = 1u;

    static Multiplicity exactly_one() { return {}; }
    static Multiplicity bounded(unsigned lo, unsigned hi) { return {lo, hi}; }
    static Multiplicity at_least(unsigned lo) { return {lo, std::nullopt}; }

    bool is_default() const { return lower == 1 && upper && *upper == 1; }
    /// "0..1", "1..*"
    std::string str() const;

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

struct AttributeDecl {
    std::string name;
    std::string type_name;
    Multiplicity multiplicity{};

    friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

struct Parameter {
    std::string name;
    std::string type_name;

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct MethodDecl {
    std::string name;
    std::vector<Parameter> parameters;
    std::optional<std::string> return_type;

    friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

struct AssociationEnd {
    std::string role;
    std::string class_name;
    bool navigable = false;
    Multiplicity multiplicity{};

    friend bool operator==(const AssociationEnd&, const AssociationEnd&) = default;
};

struct AssociationDecl {
    std::string name;
    AssociationEnd end_a;
    AssociationEnd end_b;

    friend bool operator==(const AssociationDecl&, const AssociationDecl&) = default;
};

/// A plain class, or an association class when association_class_of names the
/// association it decorates.
struct ClassDecl {
    std::string name;
    std::vector<AttributeDecl> attributes;
    std::vector<MethodDecl> methods;
    std::optional<std::string> association_class_of;

    friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

/// A class-diagram model: the left-hand input of every weaving. Declaration
/// order of classes and associations is significant and preserved everywhere.
struct CoreModel {
    std::string name;
    std::vector<ClassDecl> classes;
    std::vector<AssociationDecl> associations;

    friend bool operator==(const CoreModel&, const CoreModel&) = default;
};

enum class ElementKind { Class, Attribute, Method, Association, AssociationEnd };

/// A resolved reference into one specific CoreModel. Handles are only valid
/// for the model that produced them and only as long as that model is alive.
struct ElementHandle {
    const CoreModel* model = nullptr;
    ElementKind kind = ElementKind::Class;
    std::size_t class_index = 0;
    std::size_t feature_index = 0; // attribute or method within the class
    std::size_t assoc_index = 0;
    std::size_t end_index = 0; // 0 = end_a, 1 = end_b

    const ClassDecl& as_class() const;
    const AttributeDecl& as_attribute() const;
    const MethodDecl& as_method() const;
    const AssociationDecl& as_association() const;
    const AssociationEnd& as_association_end() const;

    friend bool operator==(const ElementHandle&, const ElementHandle&) = default;
};

/// Checks all structural rules: identifier well-formedness, unique class and
/// association names, unique feature names per class, unique parameter names,
/// distinct end roles, multiplicity bounds, and referential integrity of
/// association ends and association-class links. The reserved class name
/// "assoc" is rejected so canonical names stay unambiguous.
/// Pure; the report is sorted by qualified name then message.
ValidationReport validate_core(const CoreModel& model);

/// Looks up the element whose canonical qualified name is `qn`.
/// Total: absent names give nullopt. Assumes the model validates.
std::optional<ElementHandle> resolve(const CoreModel& model, const QualifiedName& qn);

/// Inverse of resolve. Throws ModelError when the handle belongs to a
/// different model.
QualifiedName qualified_name_of(const CoreModel& model, const ElementHandle& handle);

// Non-throwing lookups used throughout the weaver.
const ClassDecl* find_class(const CoreModel& model, std::string_view name);
ClassDecl* find_class(CoreModel& model, std::string_view name);
const AssociationDecl* find_association(const CoreModel& model, std::string_view name);
AssociationDecl* find_association(CoreModel& model, std::string_view name);
const AttributeDecl* find_attribute(const ClassDecl& cls, std::string_view name);
const MethodDecl* find_method(const ClassDecl& cls, std::string_view name);
/// True if the class declares a feature (attribute or method) of that name.
bool has_feature(const ClassDecl& cls, std::string_view name);

// Element-level validators, shared with the aspect payload checks.
void validate_attribute_decl(const AttributeDecl& a, const QualifiedName& at, ValidationReport& out);
void validate_method_decl(const MethodDecl& m, const QualifiedName& at, ValidationReport& out);
void validate_association_decl(const AssociationDecl& a, const QualifiedName& at, ValidationReport& out);
void validate_class_decl(const ClassDecl& c, const QualifiedName& at, ValidationReport& out);

} // namespace modelweave

#endif // MODELWEAVE_CORE_MODEL_HPP
