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

#include "modelweave/export.hpp"

#include <sstream>

namespace modelweave {

namespace {

// -- reading helpers: every malformed access becomes a ModelError -----------

[[noreturn]] void malformed(const std::string& what) {
    throw ModelError("malformed structured document: " + what);
}

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        malformed(std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

std::string get_string(const Json& doc, const char* key) {
    const Json& v = member(doc, key);
    if (!v.is_string()) {
        malformed(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

std::optional<std::string> opt_string(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        return std::nullopt;
    }
    const Json& v = doc.at(key);
    if (!v.is_string()) {
        malformed(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

bool get_bool(const Json& doc, const char* key) {
    const Json& v = member(doc, key);
    if (!v.is_boolean()) {
        malformed(std::string("field '") + key + "' must be a boolean");
    }
    return v.get<bool>();
}

const Json& get_array(const Json& doc, const char* key) {
    const Json& v = member(doc, key);
    if (!v.is_array()) {
        malformed(std::string("field '") + key + "' must be an array");
    }
    return v;
}

void expect_kind(const Json& doc, const char* kind) {
    if (get_string(doc, "kind") != kind) {
        malformed(std::string("expected a document of kind '") + kind + "'");
    }
}

// -- multiplicity -----------------------------------------------------------

Json multiplicity_to_json(const Multiplicity& m) {
    Json j;
    j["lower"] = m.lower;
    if (m.upper) {
        j["upper"] = *m.upper;
    } else {
        j["upper"] = nullptr;
    }
    return j;
}

Multiplicity multiplicity_from_json(const Json& doc) {
    Multiplicity m;
    const Json& lower = member(doc, "lower");
    if (!lower.is_number_unsigned()) {
        malformed("multiplicity lower bound must be a non-negative integer");
    }
    m.lower = lower.get<unsigned>();
    const Json& upper = member(doc, "upper");
    if (upper.is_null()) {
        m.upper = std::nullopt;
    } else if (upper.is_number_unsigned()) {
        m.upper = upper.get<unsigned>();
    } else {
        malformed("multiplicity upper bound must be a non-negative integer or null");
    }
    return m;
}

// -- core model pieces ------------------------------------------------------

Json attribute_to_json(const AttributeDecl& a) {
    Json j;
    j["name"] = a.name;
    j["type"] = a.type_name;
    j["multiplicity"] = multiplicity_to_json(a.multiplicity);
    return j;
}

AttributeDecl attribute_from_json(const Json& doc) {
    AttributeDecl a;
    a.name = get_string(doc, "name");
    a.type_name = get_string(doc, "type");
    a.multiplicity = multiplicity_from_json(member(doc, "multiplicity"));
    return a;
}

Json method_to_json(const MethodDecl& m) {
    Json j;
    j["name"] = m.name;
    Json params = Json::array();
    for (const Parameter& p : m.parameters) {
        Json pj;
        pj["name"] = p.name;
        pj["type"] = p.type_name;
        params.push_back(std::move(pj));
    }
    j["parameters"] = std::move(params);
    if (m.return_type) {
        j["returnType"] = *m.return_type;
    }
    return j;
}

MethodDecl method_from_json(const Json& doc) {
    MethodDecl m;
    m.name = get_string(doc, "name");
    for (const Json& pj : get_array(doc, "parameters")) {
        Parameter p;
        p.name = get_string(pj, "name");
        p.type_name = get_string(pj, "type");
        m.parameters.push_back(std::move(p));
    }
    m.return_type = opt_string(doc, "returnType");
    return m;
}

Json end_to_json(const AssociationEnd& e) {
    Json j;
    j["role"] = e.role;
    j["class"] = e.class_name;
    j["navigable"] = e.navigable;
    j["multiplicity"] = multiplicity_to_json(e.multiplicity);
    return j;
}

AssociationEnd end_from_json(const Json& doc) {
    AssociationEnd e;
    e.role = get_string(doc, "role");
    e.class_name = get_string(doc, "class");
    e.navigable = get_bool(doc, "navigable");
    e.multiplicity = multiplicity_from_json(member(doc, "multiplicity"));
    return e;
}

Json association_to_json(const AssociationDecl& a) {
    Json j;
    j["name"] = a.name;
    Json ends = Json::array();
    ends.push_back(end_to_json(a.end_a));
    ends.push_back(end_to_json(a.end_b));
    j["ends"] = std::move(ends);
    return j;
}

AssociationDecl association_from_json(const Json& doc) {
    AssociationDecl a;
    a.name = get_string(doc, "name");
    const Json& ends = get_array(doc, "ends");
    if (ends.size() != 2) {
        malformed("association '" + a.name + "' must have exactly two ends");
    }
    a.end_a = end_from_json(ends.at(0));
    a.end_b = end_from_json(ends.at(1));
    return a;
}

Json class_to_json(const ClassDecl& c) {
    Json j;
    j["name"] = c.name;
    Json attrs = Json::array();
    for (const AttributeDecl& a : c.attributes) {
        attrs.push_back(attribute_to_json(a));
    }
    j["attributes"] = std::move(attrs);
    Json methods = Json::array();
    for (const MethodDecl& m : c.methods) {
        methods.push_back(method_to_json(m));
    }
    j["methods"] = std::move(methods);
    if (c.association_class_of) {
        j["associationClassOf"] = *c.association_class_of;
    }
    return j;
}

ClassDecl class_from_json(const Json& doc) {
    ClassDecl c;
    c.name = get_string(doc, "name");
    for (const Json& aj : get_array(doc, "attributes")) {
        c.attributes.push_back(attribute_from_json(aj));
    }
    for (const Json& mj : get_array(doc, "methods")) {
        c.methods.push_back(method_from_json(mj));
    }
    c.association_class_of = opt_string(doc, "associationClassOf");
    return c;
}

} // namespace

Json export_structured(const CoreModel& m) {
    Json j;
    j["kind"] = "core";
    j["name"] = m.name;
    Json classes = Json::array();
    for (const ClassDecl& c : m.classes) {
        classes.push_back(class_to_json(c));
    }
    j["classes"] = std::move(classes);
    Json assocs = Json::array();
    for (const AssociationDecl& a : m.associations) {
        assocs.push_back(association_to_json(a));
    }
    j["associations"] = std::move(assocs);
    return j;
}

CoreModel import_structured_core(const Json& doc) {
    expect_kind(doc, "core");
    CoreModel m;
    m.name = get_string(doc, "name");
    for (const Json& cj : get_array(doc, "classes")) {
        m.classes.push_back(class_from_json(cj));
    }
    for (const Json& aj : get_array(doc, "associations")) {
        m.associations.push_back(association_from_json(aj));
    }
    return m;
}

namespace {

// -- aspect model pieces ----------------------------------------------------

NamePattern pattern_from_string(const std::string& dotted) {
    NamePattern pat;
    std::string segment;
    for (char c : dotted) {
        if (c == '.') {
            pat.segments.push_back(segment);
            segment.clear();
        } else {
            segment += c;
        }
    }
    pat.segments.push_back(segment);
    return pat;
}

const char* advice_kind_name(AdviceKind k) {
    switch (k) {
    case AdviceKind::AddElt: return "addElt";
    case AdviceKind::Update: return "update";
    case AdviceKind::DeleteElt: return "deleteElt";
    }
    return "?";
}

Json add_element_to_json(const AddElement& elt) {
    Json j;
    if (const auto* a = std::get_if<AttributeDecl>(&elt)) {
        j = attribute_to_json(*a);
        j["elementKind"] = "attribute";
    } else if (const auto* m = std::get_if<MethodDecl>(&elt)) {
        j = method_to_json(*m);
        j["elementKind"] = "method";
    } else if (const auto* c = std::get_if<ClassDecl>(&elt)) {
        j = class_to_json(*c);
        j["elementKind"] = "class";
    } else {
        j = association_to_json(std::get<AssociationDecl>(elt));
        j["elementKind"] = "association";
    }
    return j;
}

AddElement add_element_from_json(const Json& doc) {
    std::string kind = get_string(doc, "elementKind");
    if (kind == "attribute") {
        return attribute_from_json(doc);
    }
    if (kind == "method") {
        return method_from_json(doc);
    }
    if (kind == "class") {
        return class_from_json(doc);
    }
    if (kind == "association") {
        return association_from_json(doc);
    }
    malformed("unknown elementKind '" + kind + "'");
}

Json advice_to_json(const Advice& adv) {
    Json j;
    j["name"] = adv.name;
    j["position"] = adv.position == AdvicePosition::Before ? "before" : "after";
    j["adviceKind"] = advice_kind_name(adv.kind);
    j["pointcut"] = adv.bound_pointcut;
    if (const auto* add = std::get_if<AddPayload>(&adv.payload)) {
        j["element"] = add_element_to_json(add->element);
    } else if (const auto* upd = std::get_if<UpdatePayload>(&adv.payload)) {
        if (upd->new_name) {
            j["rename"] = *upd->new_name;
        }
        if (upd->new_type) {
            j["retype"] = *upd->new_type;
        }
    }
    if (!adv.body.empty()) {
        j["body"] = adv.body;
    }
    return j;
}

Advice advice_from_json(const Json& doc) {
    Advice adv;
    adv.name = get_string(doc, "name");
    std::string position = get_string(doc, "position");
    if (position == "before") {
        adv.position = AdvicePosition::Before;
    } else if (position == "after") {
        adv.position = AdvicePosition::After;
    } else {
        malformed("unknown advice position '" + position + "'");
    }
    std::string kind = get_string(doc, "adviceKind");
    adv.bound_pointcut = get_string(doc, "pointcut");
    if (kind == "addElt") {
        adv.kind = AdviceKind::AddElt;
        adv.payload = AddPayload{add_element_from_json(member(doc, "element"))};
    } else if (kind == "update") {
        adv.kind = AdviceKind::Update;
        UpdatePayload upd;
        upd.new_name = opt_string(doc, "rename");
        upd.new_type = opt_string(doc, "retype");
        adv.payload = std::move(upd);
    } else if (kind == "deleteElt") {
        adv.kind = AdviceKind::DeleteElt;
        adv.payload = DeletePayload{};
    } else {
        malformed("unknown adviceKind '" + kind + "'");
    }
    adv.body = opt_string(doc, "body").value_or("");
    return adv;
}

} // namespace

Json export_structured(const AspectModel& m) {
    Json j;
    j["kind"] = "aspect";
    j["name"] = m.name;
    Json aspects = Json::array();
    for (const AspectRequirement& asp : m.aspects) {
        Json aj;
        aj["name"] = asp.name;
        aj["priority"] = asp.priority;
        Json pointcuts = Json::array();
        for (const Pointcut& p : asp.pointcuts) {
            Json pj;
            pj["name"] = p.name;
            pj["pointcutKind"] = p.kind == PointcutKind::Call ? "call" : "structural";
            pj["pattern"] = p.pattern.str();
            pointcuts.push_back(std::move(pj));
        }
        aj["pointcuts"] = std::move(pointcuts);
        Json advices = Json::array();
        for (const Advice& adv : asp.advices) {
            advices.push_back(advice_to_json(adv));
        }
        aj["advices"] = std::move(advices);
        aspects.push_back(std::move(aj));
    }
    j["aspects"] = std::move(aspects);
    return j;
}

AspectModel import_structured_aspect(const Json& doc) {
    expect_kind(doc, "aspect");
    AspectModel m;
    m.name = get_string(doc, "name");
    for (const Json& aj : get_array(doc, "aspects")) {
        AspectRequirement asp;
        asp.name = get_string(aj, "name");
        const Json& priority = member(aj, "priority");
        if (!priority.is_number()) {
            malformed("aspect priority must be a number");
        }
        asp.priority = priority.get<double>();
        for (const Json& pj : get_array(aj, "pointcuts")) {
            Pointcut p;
            p.name = get_string(pj, "name");
            std::string kind = get_string(pj, "pointcutKind");
            if (kind == "call") {
                p.kind = PointcutKind::Call;
            } else if (kind == "structural") {
                p.kind = PointcutKind::Structural;
            } else {
                malformed("unknown pointcutKind '" + kind + "'");
            }
            p.pattern = pattern_from_string(get_string(pj, "pattern"));
            asp.pointcuts.push_back(std::move(p));
        }
        for (const Json& advj : get_array(aj, "advices")) {
            asp.advices.push_back(advice_from_json(advj));
        }
        m.aspects.push_back(std::move(asp));
    }
    return m;
}

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

LinkKind link_kind_from_string(const std::string& name) {
    if (name == "attributeToClass") {
        return LinkKind::AttributeToClass;
    }
    if (name == "methodToClass") {
        return LinkKind::MethodToClass;
    }
    if (name == "classToModel") {
        return LinkKind::ClassToModel;
    }
    if (name == "associationToModel") {
        return LinkKind::AssociationToModel;
    }
    if (name == "aspectToTarget") {
        return LinkKind::AspectToTarget;
    }
    malformed("unknown linkKind '" + name + "'");
}

Json ref_to_json(const ModelRef& ref) {
    Json j;
    j["name"] = ref.logical_name;
    j["path"] = ref.source_path;
    if (!ref.content_digest.empty()) {
        j["digest"] = ref.content_digest;
    }
    return j;
}

ModelRef ref_from_json(const Json& doc) {
    ModelRef ref;
    ref.logical_name = get_string(doc, "name");
    ref.source_path = get_string(doc, "path");
    ref.content_digest = opt_string(doc, "digest").value_or("");
    return ref;
}

Json element_ref_to_json(const ElementRef& ref) {
    Json j;
    j["model"] = ref.model;
    j["target"] = ref.target.str();
    return j;
}

ElementRef element_ref_from_json(const Json& doc) {
    ElementRef ref;
    ref.model = get_string(doc, "model");
    ref.target = QualifiedName::parse(get_string(doc, "target"));
    return ref;
}

} // namespace

Json export_structured(const WeavingModel& m) {
    Json j;
    j["kind"] = "weaving";
    j["name"] = m.name;
    j["weavingKind"] = m.kind == WeavingKind::CoreAspect ? "coreaspect" : "coreadditional";
    j["left"] = ref_to_json(m.left_ref);
    j["right"] = ref_to_json(m.right_ref);
    Json links = Json::array();
    for (const WeaveLink& link : m.links) {
        Json lj;
        lj["name"] = link.name;
        lj["linkKind"] = link_kind_name(link.kind);
        lj["left"] = element_ref_to_json(link.left_end);
        lj["right"] = element_ref_to_json(link.right_end);
        links.push_back(std::move(lj));
    }
    j["links"] = std::move(links);
    return j;
}

WeavingModel import_structured_weaving(const Json& doc) {
    expect_kind(doc, "weaving");
    WeavingModel m;
    m.name = get_string(doc, "name");
    std::string kind = get_string(doc, "weavingKind");
    if (kind == "coreaspect") {
        m.kind = WeavingKind::CoreAspect;
    } else if (kind == "coreadditional") {
        m.kind = WeavingKind::CoreAdditional;
    } else {
        malformed("unknown weavingKind '" + kind + "'");
    }
    m.left_ref = ref_from_json(member(doc, "left"));
    m.right_ref = ref_from_json(member(doc, "right"));
    for (const Json& lj : get_array(doc, "links")) {
        WeaveLink link;
        link.name = get_string(lj, "name");
        link.kind = link_kind_from_string(get_string(lj, "linkKind"));
        link.left_end = element_ref_from_json(member(lj, "left"));
        link.right_end = element_ref_from_json(member(lj, "right"));
        m.links.push_back(std::move(link));
    }
    return m;
}

Json export_structured(const DecompositionGraph& g) {
    Json j;
    j["kind"] = "requirements";
    j["name"] = g.name;
    Json nodes = Json::array();
    for (const RequirementNode& n : g.nodes) {
        Json nj;
        nj["id"] = n.id;
        switch (n.kind) {
        case RequirementKind::Cooperative: nj["nodeKind"] = "cooperative"; break;
        case RequirementKind::Existing: nj["nodeKind"] = "existing"; break;
        case RequirementKind::Additional: nj["nodeKind"] = "additional"; break;
        }
        nj["text"] = n.text;
        if (!n.source_system.empty()) {
            nj["sourceSystem"] = n.source_system;
        }
        Json linked = Json::array();
        for (const std::string& asp : n.linked_aspects) {
            linked.push_back(asp);
        }
        nj["linkedAspects"] = std::move(linked);
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    Json connectors = Json::array();
    for (const Connector& c : g.connectors) {
        Json cj;
        cj["parent"] = c.parent;
        cj["op"] = c.op == ConnectorOp::And ? "and" : "or";
        Json children = Json::array();
        for (const std::string& child : c.children) {
            children.push_back(child);
        }
        cj["children"] = std::move(children);
        connectors.push_back(std::move(cj));
    }
    j["connectors"] = std::move(connectors);
    return j;
}

DecompositionGraph import_structured_requirements(const Json& doc) {
    expect_kind(doc, "requirements");
    DecompositionGraph g;
    g.name = get_string(doc, "name");
    for (const Json& nj : get_array(doc, "nodes")) {
        RequirementNode n;
        n.id = get_string(nj, "id");
        std::string kind = get_string(nj, "nodeKind");
        if (kind == "cooperative") {
            n.kind = RequirementKind::Cooperative;
        } else if (kind == "existing") {
            n.kind = RequirementKind::Existing;
        } else if (kind == "additional") {
            n.kind = RequirementKind::Additional;
        } else {
            malformed("unknown nodeKind '" + kind + "'");
        }
        n.text = get_string(nj, "text");
        n.source_system = opt_string(nj, "sourceSystem").value_or("");
        for (const Json& asp : get_array(nj, "linkedAspects")) {
            if (!asp.is_string()) {
                malformed("linkedAspects entries must be strings");
            }
            n.linked_aspects.push_back(asp.get<std::string>());
        }
        g.nodes.push_back(std::move(n));
    }
    for (const Json& cj : get_array(doc, "connectors")) {
        Connector c;
        c.parent = get_string(cj, "parent");
        std::string op = get_string(cj, "op");
        if (op == "and") {
            c.op = ConnectorOp::And;
        } else if (op == "or") {
            c.op = ConnectorOp::Or;
        } else {
            malformed("unknown connector op '" + op + "'");
        }
        for (const Json& child : get_array(cj, "children")) {
            if (!child.is_string()) {
                malformed("connector children must be strings");
            }
            c.children.push_back(child.get<std::string>());
        }
        g.connectors.push_back(std::move(c));
    }
    return g;
}

Json export_structured(const WovenModel& m) {
    Json j;
    j["kind"] = "woven";
    j["model"] = export_structured(m.base);
    Json constraints = Json::array();
    for (const OrderingConstraint& c : m.ordering_constraints) {
        Json cj;
        cj["adviceMethod"] = c.advice_method.str();
        cj["position"] = c.position == AdvicePosition::Before ? "before" : "after";
        cj["targetMethod"] = c.target_method.str();
        cj["aspect"] = c.source_aspect;
        constraints.push_back(std::move(cj));
    }
    j["orderingConstraints"] = std::move(constraints);
    Json provenance = Json::array();
    for (const ProvenanceEntry& p : m.provenance) {
        Json pj;
        pj["element"] = p.element.str();
        switch (p.origin) {
        case ProvenanceEntry::Origin::Core: pj["origin"] = "core"; break;
        case ProvenanceEntry::Origin::Additional: pj["origin"] = "additional"; break;
        case ProvenanceEntry::Origin::Aspect: pj["origin"] = "aspect"; break;
        }
        if (!p.aspect.empty()) {
            pj["aspect"] = p.aspect;
        }
        provenance.push_back(std::move(pj));
    }
    j["provenance"] = std::move(provenance);
    return j;
}

WovenModel import_structured_woven(const Json& doc) {
    expect_kind(doc, "woven");
    WovenModel m;
    m.base = import_structured_core(member(doc, "model"));
    for (const Json& cj : get_array(doc, "orderingConstraints")) {
        OrderingConstraint c;
        c.advice_method = QualifiedName::parse(get_string(cj, "adviceMethod"));
        std::string position = get_string(cj, "position");
        if (position == "before") {
            c.position = AdvicePosition::Before;
        } else if (position == "after") {
            c.position = AdvicePosition::After;
        } else {
            malformed("unknown constraint position '" + position + "'");
        }
        c.target_method = QualifiedName::parse(get_string(cj, "targetMethod"));
        c.source_aspect = get_string(cj, "aspect");
        m.ordering_constraints.push_back(std::move(c));
    }
    for (const Json& pj : get_array(doc, "provenance")) {
        ProvenanceEntry p;
        p.element = QualifiedName::parse(get_string(pj, "element"));
        std::string origin = get_string(pj, "origin");
        if (origin == "core") {
            p.origin = ProvenanceEntry::Origin::Core;
        } else if (origin == "additional") {
            p.origin = ProvenanceEntry::Origin::Additional;
        } else if (origin == "aspect") {
            p.origin = ProvenanceEntry::Origin::Aspect;
        } else {
            malformed("unknown provenance origin '" + origin + "'");
        }
        p.aspect = opt_string(pj, "aspect").value_or("");
        m.provenance.push_back(std::move(p));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Diagrams
// ---------------------------------------------------------------------------

namespace {

std::string escape_record(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '{':
        case '}':
        case '|':
        case '<':
        case '>':
        case '"':
        case '\\':
            out += '\\';
            out += c;
            break;
        default:
            out += c;
            break;
        }
    }
    return out;
}

std::string method_signature(const MethodDecl& m) {
    std::string out = m.name + "(";
    for (std::size_t i = 0; i < m.parameters.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += m.parameters[i].name + " : " + m.parameters[i].type_name;
    }
    out += ")";
    if (m.return_type) {
        out += " : " + *m.return_type;
    }
    return out;
}

/// Emits one node line per class and one edge line per association; `added`
/// decides which elements render dashed and which features get a "+" mark.
std::string render_diagram(const CoreModel& m,
                           const std::vector<ProvenanceEntry>* provenance) {
    auto is_added = [&](const QualifiedName& qn) {
        if (!provenance) {
            return false;
        }
        for (const ProvenanceEntry& p : *provenance) {
            if (p.element == qn && p.origin != ProvenanceEntry::Origin::Core) {
                return true;
            }
        }
        return false;
    };
    std::ostringstream os;
    os << "digraph " << m.name << " {\n";
    os << "    rankdir=LR;\n";
    os << "    node [shape=record];\n";
    for (const ClassDecl& c : m.classes) {
        std::string label = "{" + escape_record(c.name);
        if (c.association_class_of) {
            label += "\\n\\<\\<associationClass " + escape_record(*c.association_class_of) +
                     "\\>\\>";
        }
        label += "|";
        for (const AttributeDecl& a : c.attributes) {
            if (is_added(QualifiedName{{c.name, a.name}})) {
                label += "+ ";
            }
            label += escape_record(a.name + " : " + a.type_name);
            if (!a.multiplicity.is_default()) {
                label += " " + a.multiplicity.str();
            }
            label += "\\l";
        }
        label += "|";
        for (const MethodDecl& op : c.methods) {
            if (is_added(QualifiedName{{c.name, op.name}})) {
                label += "+ ";
            }
            label += escape_record(method_signature(op)) + "\\l";
        }
        label += "}";
        os << "    \"" << c.name << "\" [label=\"" << label << "\"";
        if (is_added(QualifiedName{{c.name}})) {
            os << ", style=dashed";
        }
        os << "];\n";
    }
    for (const AssociationDecl& a : m.associations) {
        os << "    \"" << a.end_a.class_name << "\" -> \"" << a.end_b.class_name << "\"";
        os << " [label=\"" << escape_record(a.name) << "\"";
        os << ", dir=both";
        os << ", arrowtail=" << (a.end_a.navigable ? "vee" : "none");
        os << ", arrowhead=" << (a.end_b.navigable ? "vee" : "none");
        os << ", taillabel=\"" << escape_record(a.end_a.role) << " "
           << a.end_a.multiplicity.str() << "\"";
        os << ", headlabel=\"" << escape_record(a.end_b.role) << " "
           << a.end_b.multiplicity.str() << "\"";
        if (is_added(QualifiedName{{std::string(kAssocSegment), a.name}})) {
            os << ", style=dashed";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string export_diagram(const CoreModel& m) {
    return render_diagram(m, nullptr);
}

std::string export_diagram(const WovenModel& m) {
    return render_diagram(m.base, &m.provenance);
}

} // namespace modelweave
