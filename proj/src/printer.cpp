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

#include "modelweave/printer.hpp"

#include <charconv>
#include <sstream>

#include "modelweave/digest.hpp"

namespace modelweave {

namespace {

constexpr std::string_view kIndent = "    ";

void indent(std::ostream& os, int depth) {
    for (int i = 0; i < depth; ++i) {
        os << kIndent;
    }
}

void print_string(std::ostream& os, std::string_view text) {
    os << '"';
    for (char c : text) {
        switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        case '\r': os << "\\r"; break;
        default: os << c; break;
        }
    }
    os << '"';
}

std::string print_double(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, p);
}

void print_multiplicity(std::ostream& os, const Multiplicity& m) {
    if (m.is_default()) {
        return;
    }
    os << ' ' << m.str();
}

void print_attribute(std::ostream& os, const AttributeDecl& a, int depth) {
    indent(os, depth);
    os << "attr " << a.name << " : " << a.type_name;
    print_multiplicity(os, a.multiplicity);
    os << ";\n";
}

void print_method(std::ostream& os, const MethodDecl& m, int depth) {
    indent(os, depth);
    os << "op " << m.name << '(';
    for (std::size_t i = 0; i < m.parameters.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << m.parameters[i].name << " : " << m.parameters[i].type_name;
    }
    os << ')';
    if (m.return_type) {
        os << " : " << *m.return_type;
    }
    os << ";\n";
}

void print_class(std::ostream& os, const ClassDecl& c, int depth) {
    indent(os, depth);
    os << "class " << c.name;
    if (c.association_class_of) {
        os << " associationClassOf " << *c.association_class_of;
    }
    os << " {\n";
    for (const AttributeDecl& a : c.attributes) {
        print_attribute(os, a, depth + 1);
    }
    for (const MethodDecl& m : c.methods) {
        print_method(os, m, depth + 1);
    }
    indent(os, depth);
    os << "}\n";
}

void print_end(std::ostream& os, const AssociationEnd& e, int depth) {
    indent(os, depth);
    os << "end " << e.role << " : " << e.class_name;
    if (e.navigable) {
        os << " navigable";
    }
    print_multiplicity(os, e.multiplicity);
    os << ";\n";
}

void print_association(std::ostream& os, const AssociationDecl& a, int depth) {
    indent(os, depth);
    os << "association " << a.name << " {\n";
    print_end(os, a.end_a, depth + 1);
    print_end(os, a.end_b, depth + 1);
    indent(os, depth);
    os << "}\n";
}

void print_add_element(std::ostream& os, const AddElement& elt, int depth) {
    if (const auto* a = std::get_if<AttributeDecl>(&elt)) {
        print_attribute(os, *a, depth);
    } else if (const auto* m = std::get_if<MethodDecl>(&elt)) {
        print_method(os, *m, depth);
    } else if (const auto* c = std::get_if<ClassDecl>(&elt)) {
        print_class(os, *c, depth);
    } else if (const auto* as = std::get_if<AssociationDecl>(&elt)) {
        print_association(os, *as, depth);
    }
}

void print_advice(std::ostream& os, const Advice& adv, int depth) {
    indent(os, depth);
    os << "advice " << adv.name << " : "
       << (adv.position == AdvicePosition::Before ? "before" : "after") << ' ';
    switch (adv.kind) {
    case AdviceKind::AddElt: os << "addElt"; break;
    case AdviceKind::Update: os << "update"; break;
    case AdviceKind::DeleteElt: os << "deleteElt"; break;
    }
    os << " bind " << adv.bound_pointcut << " {\n";
    if (const auto* add = std::get_if<AddPayload>(&adv.payload)) {
        print_add_element(os, add->element, depth + 1);
    } else if (const auto* upd = std::get_if<UpdatePayload>(&adv.payload)) {
        if (upd->new_name) {
            indent(os, depth + 1);
            os << "rename " << *upd->new_name << ";\n";
        }
        if (upd->new_type) {
            indent(os, depth + 1);
            os << "retype " << *upd->new_type << ";\n";
        }
    }
    if (!adv.body.empty()) {
        indent(os, depth + 1);
        os << "body ";
        print_string(os, adv.body);
        os << ";\n";
    }
    indent(os, depth);
    os << "}\n";
}

} // namespace

std::string print_core(const CoreModel& m) {
    std::ostringstream os;
    os << "model " << m.name << " {\n";
    for (const ClassDecl& c : m.classes) {
        print_class(os, c, 1);
    }
    for (const AssociationDecl& a : m.associations) {
        print_association(os, a, 1);
    }
    os << "}\n";
    return os.str();
}

std::string print_aspect(const AspectModel& m) {
    std::ostringstream os;
    os << "aspectmodel " << m.name << " {\n";
    for (const AspectRequirement& asp : m.aspects) {
        indent(os, 1);
        os << "aspect " << asp.name << " priority " << print_double(asp.priority) << " {\n";
        for (const Pointcut& p : asp.pointcuts) {
            indent(os, 2);
            os << "pointcut " << p.name << " : "
               << (p.kind == PointcutKind::Call ? "call" : "structural") << " on "
               << p.pattern.str() << ";\n";
        }
        for (const Advice& adv : asp.advices) {
            print_advice(os, adv, 2);
        }
        indent(os, 1);
        os << "}\n";
    }
    os << "}\n";
    return os.str();
}

std::string print_weaving(const WeavingModel& w) {
    std::ostringstream os;
    os << "weaving " << w.name << " : "
       << (w.kind == WeavingKind::CoreAspect ? "coreaspect" : "coreadditional") << " {\n";
    auto print_ref = [&os](std::string_view side, const ModelRef& ref) {
        indent(os, 1);
        os << side << ' ' << ref.logical_name << " at ";
        print_string(os, ref.source_path);
        if (!ref.content_digest.empty()) {
            os << " digest ";
            print_string(os, ref.content_digest);
        }
        os << ";\n";
    };
    print_ref("left", w.left_ref);
    print_ref("right", w.right_ref);
    for (const WeaveLink& link : w.links) {
        indent(os, 1);
        os << "link " << link.name << " : ";
        switch (link.kind) {
        case LinkKind::AttributeToClass: os << "attributeToClass"; break;
        case LinkKind::MethodToClass: os << "methodToClass"; break;
        case LinkKind::ClassToModel: os << "classToModel"; break;
        case LinkKind::AssociationToModel: os << "associationToModel"; break;
        case LinkKind::AspectToTarget: os << "aspectToTarget"; break;
        }
        os << ' ' << link.left_end.target.str() << " <-> " << link.right_end.target.str()
           << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

void print_links(std::ostringstream& os, const RequirementNode& node) {
    if (node.linked_aspects.empty()) {
        return;
    }
    os << " links ";
    for (std::size_t i = 0; i < node.linked_aspects.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << node.linked_aspects[i];
    }
}

} // namespace

std::string print_requirements(const DecompositionGraph& g) {
    std::ostringstream os;
    os << "requirements " << g.name << " {\n";
    for (const RequirementNode& node : g.nodes) {
        indent(os, 1);
        switch (node.kind) {
        case RequirementKind::Cooperative: {
            os << "cr " << node.id << ' ';
            print_string(os, node.text);
            const Connector* conn = nullptr;
            for (const Connector& c : g.connectors) {
                if (c.parent == node.id) {
                    conn = &c;
                    break;
                }
            }
            if (conn) {
                os << " = " << (conn->op == ConnectorOp::And ? "and" : "or") << '(';
                for (std::size_t i = 0; i < conn->children.size(); ++i) {
                    if (i > 0) {
                        os << ", ";
                    }
                    os << conn->children[i];
                }
                os << ')';
            }
            print_links(os, node);
            os << ";\n";
            break;
        }
        case RequirementKind::Existing:
            os << "er " << node.id << ' ';
            print_string(os, node.text);
            if (!node.source_system.empty()) {
                os << " from " << node.source_system;
            }
            print_links(os, node);
            os << ";\n";
            break;
        case RequirementKind::Additional:
            os << "ar " << node.id << ' ';
            print_string(os, node.text);
            print_links(os, node);
            os << ";\n";
            break;
        }
    }
    os << "}\n";
    return os.str();
}

std::string print_woven(const WovenModel& woven) {
    std::string out = print_core(woven.base);
    for (const OrderingConstraint& c : woven.ordering_constraints) {
        out += "// constraint: " + c.advice_method.str() + ' ' +
               (c.position == AdvicePosition::Before ? "before" : "after") + ' ' +
               c.target_method.str() + " (aspect " + c.source_aspect + ")\n";
    }
    return out;
}

std::string canonical_digest(const CoreModel& m) {
    return fnv1a64_hex(print_core(m));
}

std::string canonical_digest(const AspectModel& m) {
    return fnv1a64_hex(print_aspect(m));
}

} // namespace modelweave
