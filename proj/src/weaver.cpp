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

#include "modelweave/weaver.hpp"

#include <algorithm>
#include <set>

namespace modelweave {

std::string to_string(EditKind k) {
    switch (k) {
    case EditKind::Add: return "add";
    case EditKind::Update: return "update";
    case EditKind::Delete: return "delete";
    }
    return "?";
}

std::string to_string(ConflictCategory c) {
    switch (c) {
    case ConflictCategory::DeleteVsOther: return "delete-vs-other";
    case ConflictCategory::DoubleUpdate: return "double-update";
    case ConflictCategory::DuplicateAdd: return "duplicate-add";
    }
    return "?";
}

std::string describe(const Edit& e) {
    return to_string(e.kind) + " of '" + e.touched.str() + "' (aspect '" + e.source_aspect +
           "', link '" + e.source_link + "', advice '" + e.source_advice + "')";
}

std::string WeaveReport::render() const {
    std::string out;
    for (const Line& line : lines) {
        switch (line.kind) {
        case ReportKind::Edit: out += "edit: "; break;
        case ReportKind::Warning: out += "warning: "; break;
        case ReportKind::Conflict: out += "conflict: "; break;
        case ReportKind::Resolution: out += "resolution: "; break;
        case ReportKind::Constraint: out += "constraint: "; break;
        case ReportKind::Info: out += "info: "; break;
        }
        out += line.text;
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pointcut matching
// ---------------------------------------------------------------------------

std::vector<QualifiedName> match_pointcut(const Pointcut& p, const CoreModel& m) {
    std::vector<QualifiedName> out;
    auto consider = [&](QualifiedName qn) {
        if (p.pattern.matches(qn)) {
            out.push_back(std::move(qn));
        }
    };
    if (p.kind == PointcutKind::Call) {
        for (const ClassDecl& c : m.classes) {
            for (const MethodDecl& op : c.methods) {
                consider(QualifiedName{{c.name, op.name}});
            }
        }
    } else {
        for (const ClassDecl& c : m.classes) {
            consider(QualifiedName{{c.name}});
            for (const AttributeDecl& a : c.attributes) {
                consider(QualifiedName{{c.name, a.name}});
            }
        }
        for (const AssociationDecl& a : m.associations) {
            std::string assoc(kAssocSegment);
            consider(QualifiedName{{assoc, a.name}});
            consider(QualifiedName{{assoc, a.name, a.end_a.role}});
            consider(QualifiedName{{assoc, a.name, a.end_b.role}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Core + additional merge
// ---------------------------------------------------------------------------

namespace {

void add_provenance(std::vector<ProvenanceEntry>* sink, ProvenanceEntry entry) {
    if (!sink) {
        return;
    }
    if (std::find(sink->begin(), sink->end(), entry) != sink->end()) {
        return;
    }
    sink->push_back(std::move(entry));
}

void class_provenance(std::vector<ProvenanceEntry>* sink, const ClassDecl& c,
                      ProvenanceEntry::Origin origin, const std::string& aspect) {
    add_provenance(sink, {QualifiedName{{c.name}}, origin, aspect});
    for (const AttributeDecl& a : c.attributes) {
        add_provenance(sink, {QualifiedName{{c.name, a.name}}, origin, aspect});
    }
    for (const MethodDecl& m : c.methods) {
        add_provenance(sink, {QualifiedName{{c.name, m.name}}, origin, aspect});
    }
}

void association_provenance(std::vector<ProvenanceEntry>* sink, const AssociationDecl& a,
                            ProvenanceEntry::Origin origin, const std::string& aspect) {
    std::string assoc(kAssocSegment);
    add_provenance(sink, {QualifiedName{{assoc, a.name}}, origin, aspect});
    add_provenance(sink, {QualifiedName{{assoc, a.name, a.end_a.role}}, origin, aspect});
    add_provenance(sink, {QualifiedName{{assoc, a.name, a.end_b.role}}, origin, aspect});
}

std::string join_violations(const ValidationReport& report) {
    std::string out;
    for (const Violation& v : report.violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v.at.str() + ": " + v.message;
    }
    return out;
}

} // namespace

CoreModel weave_core_additional(const CoreModel& core, const CoreModel& additional,
                                const WeavingModel& w, WeaveReport& report,
                                std::vector<ProvenanceEntry>* provenance) {
    if (w.kind != WeavingKind::CoreAdditional) {
        throw ModelError("weaving '" + w.name + "' is not a core-additional weaving");
    }
    CoreModel result = core;
    for (const WeaveLink& link : w.links) {
        std::string where = "link '" + link.name + "' of weaving '" + w.name + "'";
        switch (link.kind) {
        case LinkKind::AttributeToClass:
        case LinkKind::MethodToClass: {
            if (link.left_end.target.size() != 1) {
                throw WeaveError(where + ": left end '" + link.left_end.target.str() +
                                 "' must name a class");
            }
            ClassDecl* cls = find_class(result, link.left_end.target.segments[0]);
            if (!cls) {
                throw WeaveError(where + ": class '" + link.left_end.target.str() +
                                 "' does not exist in the core model");
            }
            std::optional<ElementHandle> src = resolve(additional, link.right_end.target);
            if (link.kind == LinkKind::AttributeToClass) {
                if (!src || src->kind != ElementKind::Attribute) {
                    throw WeaveError(where + ": right end '" + link.right_end.target.str() +
                                     "' does not name an attribute of the additional model");
                }
                const AttributeDecl& attr = src->as_attribute();
                QualifiedName touched{{cls->name, attr.name}};
                if (const AttributeDecl* existing = find_attribute(*cls, attr.name)) {
                    if (*existing == attr) {
                        report.warn("skipping duplicate copy of attribute '" +
                                    touched.str() + "' (" + where + ")");
                        break;
                    }
                    throw WeaveError(where + ": attribute '" + touched.str() +
                                     "' collides with an existing member");
                }
                if (has_feature(*cls, attr.name)) {
                    throw WeaveError(where + ": attribute '" + touched.str() +
                                     "' collides with an existing member");
                }
                cls->attributes.push_back(attr);
                add_provenance(provenance,
                               {touched, ProvenanceEntry::Origin::Additional, {}});
                report.edit("copy attribute '" + link.right_end.target.str() + "' as '" +
                            touched.str() + "' (link '" + link.name + "')");
            } else {
                if (!src || src->kind != ElementKind::Method) {
                    throw WeaveError(where + ": right end '" + link.right_end.target.str() +
                                     "' does not name a method of the additional model");
                }
                const MethodDecl& op = src->as_method();
                QualifiedName touched{{cls->name, op.name}};
                if (const MethodDecl* existing = find_method(*cls, op.name)) {
                    if (*existing == op) {
                        report.warn("skipping duplicate copy of method '" + touched.str() +
                                    "' (" + where + ")");
                        break;
                    }
                    throw WeaveError(where + ": method '" + touched.str() +
                                     "' collides with an existing member");
                }
                if (has_feature(*cls, op.name)) {
                    throw WeaveError(where + ": method '" + touched.str() +
                                     "' collides with an existing member");
                }
                cls->methods.push_back(op);
                add_provenance(provenance,
                               {touched, ProvenanceEntry::Origin::Additional, {}});
                report.edit("copy method '" + link.right_end.target.str() + "' as '" +
                            touched.str() + "' (link '" + link.name + "')");
            }
            break;
        }
        case LinkKind::ClassToModel: {
            std::optional<ElementHandle> src = resolve(additional, link.right_end.target);
            if (!src || src->kind != ElementKind::Class) {
                throw WeaveError(where + ": right end '" + link.right_end.target.str() +
                                 "' does not name a class of the additional model");
            }
            const ClassDecl& decl = src->as_class();
            if (const ClassDecl* existing = find_class(result, decl.name)) {
                if (*existing == decl) {
                    report.warn("skipping duplicate copy of class '" + decl.name + "' (" +
                                where + ")");
                    break;
                }
                throw WeaveError(where + ": class '" + decl.name +
                                 "' collides with an existing class");
            }
            result.classes.push_back(decl);
            class_provenance(provenance, decl, ProvenanceEntry::Origin::Additional, {});
            report.edit("copy class '" + decl.name + "' (link '" + link.name + "')");
            break;
        }
        case LinkKind::AssociationToModel: {
            std::optional<ElementHandle> src = resolve(additional, link.right_end.target);
            if (!src || src->kind != ElementKind::Association) {
                throw WeaveError(where + ": right end '" + link.right_end.target.str() +
                                 "' does not name an association of the additional model");
            }
            const AssociationDecl& decl = src->as_association();
            if (const AssociationDecl* existing = find_association(result, decl.name)) {
                if (*existing == decl) {
                    report.warn("skipping duplicate copy of association '" + decl.name +
                                "' (" + where + ")");
                    break;
                }
                throw WeaveError(where + ": association '" + decl.name +
                                 "' collides with an existing association");
            }
            result.associations.push_back(decl);
            association_provenance(provenance, decl, ProvenanceEntry::Origin::Additional,
                                   {});
            report.edit("copy association '" + decl.name + "' (link '" + link.name + "')");
            break;
        }
        case LinkKind::AspectToTarget:
            throw WeaveError(where + ": aspectToTarget links do not belong in a "
                                     "core-additional weaving");
        }
    }
    ValidationReport check = validate_core(result);
    if (!check.empty()) {
        throw WeaveError("weaving '" + w.name + "' produced an invalid model: " +
                         join_violations(check));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Planning
// ---------------------------------------------------------------------------

namespace {

// Everything a delete of `target` takes down with it, computed against the
// unmodified core: the element, its contained features and ends, and every
// association left dangling by it. Used for conflict detection only; the
// actual cascade re-walks the current model at apply time.
std::set<QualifiedName> delete_closure(const CoreModel& core, const QualifiedName& target) {
    std::set<QualifiedName> out;
    out.insert(target);
    std::optional<ElementHandle> handle = resolve(core, target);
    if (!handle) {
        return out;
    }
    std::string assoc(kAssocSegment);
    auto insert_association = [&](const AssociationDecl& a) {
        out.insert(QualifiedName{{assoc, a.name}});
        out.insert(QualifiedName{{assoc, a.name, a.end_a.role}});
        out.insert(QualifiedName{{assoc, a.name, a.end_b.role}});
    };
    switch (handle->kind) {
    case ElementKind::Class: {
        const ClassDecl& c = handle->as_class();
        for (const AttributeDecl& a : c.attributes) {
            out.insert(QualifiedName{{c.name, a.name}});
        }
        for (const MethodDecl& m : c.methods) {
            out.insert(QualifiedName{{c.name, m.name}});
        }
        for (const AssociationDecl& a : core.associations) {
            if (a.end_a.class_name == c.name || a.end_b.class_name == c.name) {
                insert_association(a);
            }
        }
        break;
    }
    case ElementKind::Association:
        insert_association(handle->as_association());
        break;
    case ElementKind::Attribute:
    case ElementKind::Method:
    case ElementKind::AssociationEnd:
        break;
    }
    return out;
}

// Structural references an edit makes into the model, beyond its target:
// association-end classes and association-class links of added elements, and
// the class an association end is being retyped to. Type names of attributes
// and return types are opaque strings, not references.
std::vector<QualifiedName> payload_references(const Edit& e) {
    std::vector<QualifiedName> out;
    if (e.kind == EditKind::Add) {
        const auto* add = std::get_if<AddPayload>(&e.payload);
        if (!add) {
            return out;
        }
        if (const auto* a = std::get_if<AssociationDecl>(&add->element)) {
            out.push_back(QualifiedName{{a->end_a.class_name}});
            out.push_back(QualifiedName{{a->end_b.class_name}});
        } else if (const auto* c = std::get_if<ClassDecl>(&add->element)) {
            if (c->association_class_of) {
                out.push_back(QualifiedName{{std::string(kAssocSegment),
                                             *c->association_class_of}});
            }
        }
    } else if (e.kind == EditKind::Update && e.target.size() == 3) {
        const auto* upd = std::get_if<UpdatePayload>(&e.payload);
        if (upd && upd->new_type) {
            out.push_back(QualifiedName{{*upd->new_type}});
        }
    }
    return out;
}

bool same_source(const Edit& a, const Edit& b) {
    return a.source_aspect == b.source_aspect && a.source_link == b.source_link;
}

bool identical_contribution(const Edit& a, const Edit& b) {
    return a.kind == b.kind && a.target == b.target && a.touched == b.touched &&
           a.payload == b.payload && a.position == b.position;
}

// Name of the element an addElt payload declares.
std::string added_name(const AddPayload& add) {
    if (const auto* a = std::get_if<AttributeDecl>(&add.element)) {
        return a->name;
    }
    if (const auto* m = std::get_if<MethodDecl>(&add.element)) {
        return m->name;
    }
    if (const auto* c = std::get_if<ClassDecl>(&add.element)) {
        return c->name;
    }
    return std::get<AssociationDecl>(add.element).name;
}

bool is_feature_payload(const AddPayload& add) {
    return std::holds_alternative<AttributeDecl>(add.element) ||
           std::holds_alternative<MethodDecl>(add.element);
}

} // namespace

PlanResult plan_weave(const CoreModel& core, const AspectModel& aspects,
                      const WeavingModel& w, WeaveReport& report) {
    if (w.kind != WeavingKind::CoreAspect) {
        throw ModelError("weaving '" + w.name + "' is not a core-aspect weaving");
    }
    PlanResult result;
    for (const WeaveLink& link : w.links) {
        std::string where = "link '" + link.name + "' of weaving '" + w.name + "'";
        if (link.kind != LinkKind::AspectToTarget) {
            throw WeaveError(where + ": only aspectToTarget links can drive an aspect "
                                     "weaving");
        }
        const QualifiedName& ref = link.right_end.target;
        if (ref.size() != 1 && ref.size() != 2) {
            throw WeaveError(where + ": right end '" + ref.str() +
                             "' must name an aspect or aspect.pointcut");
        }
        const AspectRequirement* aspect = find_aspect(aspects, ref.segments[0]);
        if (!aspect) {
            throw WeaveError(where + ": unknown aspect '" + ref.segments[0] + "'");
        }
        std::vector<const Pointcut*> pointcuts;
        if (ref.size() == 2) {
            const Pointcut* p = find_pointcut(*aspect, ref.segments[1]);
            if (!p) {
                throw WeaveError(where + ": unknown pointcut '" + ref.segments[1] +
                                 "' of aspect '" + aspect->name + "'");
            }
            pointcuts.push_back(p);
        } else {
            for (const Pointcut& p : aspect->pointcuts) {
                pointcuts.push_back(&p);
            }
        }
        const QualifiedName& scope = link.left_end.target;
        bool whole_model = scope.size() == 1 && scope.segments[0] == core.name;
        for (const Pointcut* pointcut : pointcuts) {
            std::vector<QualifiedName> targets = match_pointcut(*pointcut, core);
            if (!whole_model) {
                std::erase_if(targets, [&](const QualifiedName& qn) {
                    return !(qn == scope || scope.is_prefix_of(qn));
                });
            }
            if (targets.empty()) {
                report.warn(where + ": pointcut '" + pointcut->name +
                            "' matches no element; nothing to weave");
                continue;
            }
            for (const QualifiedName& target : targets) {
                for (const Advice& adv : aspect->advices) {
                    if (adv.bound_pointcut != pointcut->name) {
                        continue;
                    }
                    Edit edit;
                    edit.target = target;
                    edit.touched = target;
                    edit.payload = adv.payload;
                    edit.position = adv.position;
                    edit.pointcut_kind = pointcut->kind;
                    edit.source_aspect = aspect->name;
                    edit.source_link = link.name;
                    edit.source_advice = adv.name;
                    switch (adv.kind) {
                    case AdviceKind::AddElt: {
                        edit.kind = EditKind::Add;
                        const auto& add = std::get<AddPayload>(adv.payload);
                        if (is_feature_payload(add)) {
                            if (target.segments[0] == kAssocSegment) {
                                report.warn(where + ": advice '" + adv.name +
                                            "' cannot add a feature to '" + target.str() +
                                            "'; skipping");
                                continue;
                            }
                            edit.touched =
                                QualifiedName{{target.segments[0], added_name(add)}};
                            if (std::holds_alternative<MethodDecl>(add.element) &&
                                pointcut->kind == PointcutKind::Structural) {
                                report.warn(where + ": advice '" + adv.name +
                                            "' adds a method at structural target '" +
                                            target.str() +
                                            "'; no ordering constraint will be emitted");
                            }
                        } else if (std::holds_alternative<ClassDecl>(add.element)) {
                            edit.touched = QualifiedName{{added_name(add)}};
                        } else {
                            edit.touched = QualifiedName{
                                {std::string(kAssocSegment), added_name(add)}};
                        }
                        break;
                    }
                    case AdviceKind::Update:
                        edit.kind = EditKind::Update;
                        break;
                    case AdviceKind::DeleteElt:
                        edit.kind = EditKind::Delete;
                        if (target.segments[0] == kAssocSegment && target.size() == 3) {
                            report.warn(where + ": advice '" + adv.name +
                                        "' cannot delete association end '" + target.str() +
                                        "'; delete the association instead; skipping");
                            continue;
                        }
                        break;
                    }
                    bool duplicate = false;
                    for (const Edit& prior : result.plan.edits) {
                        if (same_source(prior, edit) && identical_contribution(prior, edit)) {
                            duplicate = true;
                            break;
                        }
                    }
                    if (duplicate) {
                        report.warn(where + ": advice '" + adv.name +
                                    "' repeats an identical edit on '" + edit.touched.str() +
                                    "'; dropping the repeat");
                        continue;
                    }
                    result.plan.edits.push_back(std::move(edit));
                }
            }
        }
    }

    // Pairwise conflict detection over the unmodified core.
    const std::vector<Edit>& edits = result.plan.edits;
    for (std::size_t i = 0; i < edits.size(); ++i) {
        for (std::size_t j = i + 1; j < edits.size(); ++j) {
            const Edit& a = edits[i];
            const Edit& b = edits[j];
            if (same_source(a, b)) {
                continue; // one author's own sequence, not a conflict
            }
            if (a.kind == EditKind::Delete || b.kind == EditKind::Delete) {
                if (a.kind == EditKind::Delete && b.kind == EditKind::Delete) {
                    continue; // compatible: both want the element gone
                }
                const Edit& del = a.kind == EditKind::Delete ? a : b;
                const Edit& other = a.kind == EditKind::Delete ? b : a;
                std::set<QualifiedName> closure = delete_closure(core, del.target);
                bool hit = closure.count(other.touched) > 0 ||
                           del.target.is_prefix_of(other.touched);
                if (!hit) {
                    for (const QualifiedName& ref : payload_references(other)) {
                        if (closure.count(ref) > 0) {
                            hit = true;
                            break;
                        }
                    }
                }
                if (hit) {
                    result.conflicts.push_back(
                        {i, j, del.target, ConflictCategory::DeleteVsOther});
                }
            } else if (a.kind == EditKind::Update && b.kind == EditKind::Update) {
                if (a.touched != b.touched) {
                    continue;
                }
                const auto& ua = std::get<UpdatePayload>(a.payload);
                const auto& ub = std::get<UpdatePayload>(b.payload);
                bool overlap = (ua.new_name && ub.new_name) || (ua.new_type && ub.new_type);
                if (overlap) {
                    result.conflicts.push_back(
                        {i, j, a.touched, ConflictCategory::DoubleUpdate});
                }
            } else if (a.kind == EditKind::Add && b.kind == EditKind::Add) {
                if (a.touched == b.touched && !(a.payload == b.payload)) {
                    result.conflicts.push_back(
                        {i, j, a.touched, ConflictCategory::DuplicateAdd});
                }
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Conflict resolution
// ---------------------------------------------------------------------------

std::vector<Resolution> resolve_conflicts(const WeavePlan& plan,
                                          const std::vector<Conflict>& conflicts,
                                          const AspectModel& aspects, bool force_first) {
    auto priority_of = [&aspects](const std::string& name) {
        const AspectRequirement* asp = find_aspect(aspects, name);
        if (!asp) {
            throw ModelError("conflict references unknown aspect '" + name + "'");
        }
        return asp->priority;
    };
    std::vector<Resolution> out;
    out.reserve(conflicts.size());
    for (const Conflict& c : conflicts) {
        Resolution r;
        r.conflict = c;
        double pa = priority_of(plan.edits[c.first_edit].source_aspect);
        double pb = priority_of(plan.edits[c.second_edit].source_aspect);
        if (pa > pb) {
            r.kept = c.first_edit;
            r.dropped = c.second_edit;
            r.resolved = true;
        } else if (pb > pa) {
            r.kept = c.second_edit;
            r.dropped = c.first_edit;
            r.resolved = true;
        } else if (force_first) {
            r.kept = c.first_edit;
            r.dropped = c.second_edit;
            r.resolved = true;
        }
        out.push_back(r);
    }
    return out;
}

void apply_resolutions(WeavePlan& plan, const std::vector<Resolution>& resolutions) {
    for (const Resolution& r : resolutions) {
        if (r.resolved && r.dropped) {
            plan.edits[*r.dropped].dropped = true;
        }
    }
    std::string unresolved;
    for (const Resolution& r : resolutions) {
        if (r.resolved) {
            continue;
        }
        const Edit& a = plan.edits[r.conflict.first_edit];
        const Edit& b = plan.edits[r.conflict.second_edit];
        if (a.dropped || b.dropped) {
            continue; // settled by another, higher-priority conflict
        }
        if (!unresolved.empty()) {
            unresolved += "; ";
        }
        unresolved += to_string(r.conflict.category) + " on '" + r.conflict.target.str() +
                      "' between " + describe(a) + " and " + describe(b);
    }
    if (!unresolved.empty()) {
        throw UnresolvedConflictError("equal-priority conflict needs manual resolution: " +
                                      unresolved);
    }
}

// ---------------------------------------------------------------------------
// Plan application
// ---------------------------------------------------------------------------

namespace {

void rewrite_qn(QualifiedName& qn, const QualifiedName& from, const QualifiedName& to) {
    if (!from.is_prefix_of(qn)) {
        return;
    }
    std::vector<std::string> segments = to.segments;
    segments.insert(segments.end(), qn.segments.begin() + from.size(), qn.segments.end());
    qn.segments = std::move(segments);
}

class PlanRunner {
public:
    PlanRunner(WovenModel& state, std::vector<Edit> edits, WeaveReport& report)
        : state_(state), edits_(std::move(edits)), report_(report) {}

    void run() {
        for (current_ = 0; current_ < edits_.size(); ++current_) {
            const Edit& e = edits_[current_];
            if (e.dropped) {
                continue;
            }
            switch (e.kind) {
            case EditKind::Add: apply_add(e); break;
            case EditKind::Update: apply_update(e); break;
            case EditKind::Delete: apply_delete(e); break;
            }
        }
    }

private:
    CoreModel& model() { return state_.base; }

    std::string source_of(const Edit& e) const {
        return "aspect '" + e.source_aspect + "', advice '" + e.source_advice + "'";
    }

    void note_provenance(const QualifiedName& qn, const std::string& aspect) {
        add_provenance(&state_.provenance, {qn, ProvenanceEntry::Origin::Aspect, aspect});
    }

    void drop_provenance_under(const QualifiedName& qn) {
        std::erase_if(state_.provenance, [&](const ProvenanceEntry& entry) {
            return qn.is_prefix_of(entry.element);
        });
    }

    // Renames ripple through the model, the not-yet-applied tail of the plan,
    // every recorded constraint, and provenance.
    void rewrite_references(const QualifiedName& from, const QualifiedName& to) {
        for (std::size_t m = current_ + 1; m < edits_.size(); ++m) {
            Edit& pending = edits_[m];
            rewrite_qn(pending.target, from, to);
            rewrite_qn(pending.touched, from, to);
            if (auto* add = std::get_if<AddPayload>(&pending.payload)) {
                if (from.size() == 1) {
                    if (auto* a = std::get_if<AssociationDecl>(&add->element)) {
                        if (a->end_a.class_name == from.segments[0]) {
                            a->end_a.class_name = to.segments[0];
                        }
                        if (a->end_b.class_name == from.segments[0]) {
                            a->end_b.class_name = to.segments[0];
                        }
                    }
                } else if (from.size() == 2 && from.segments[0] == kAssocSegment) {
                    if (auto* c = std::get_if<ClassDecl>(&add->element)) {
                        if (c->association_class_of &&
                            *c->association_class_of == from.segments[1]) {
                            c->association_class_of = to.segments[1];
                        }
                    }
                }
            }
        }
        for (OrderingConstraint& c : state_.ordering_constraints) {
            rewrite_qn(c.advice_method, from, to);
            rewrite_qn(c.target_method, from, to);
        }
        for (ProvenanceEntry& p : state_.provenance) {
            rewrite_qn(p.element, from, to);
        }
    }

    void drop_constraints_about(const QualifiedName& method, const std::string& why) {
        std::erase_if(state_.ordering_constraints, [&](const OrderingConstraint& c) {
            bool hit = c.advice_method == method || c.target_method == method;
            if (hit) {
                report_.warn("dropping ordering constraint on '" + method.str() + "': " +
                             why);
            }
            return hit;
        });
    }

    void note_constraint(OrderingConstraint c) {
        auto& list = state_.ordering_constraints;
        if (std::find(list.begin(), list.end(), c) != list.end()) {
            return;
        }
        report_.constraint("'" + c.advice_method.str() + "' " +
                           (c.position == AdvicePosition::Before ? "before" : "after") +
                           " '" + c.target_method.str() + "' (aspect '" + c.source_aspect +
                           "')");
        list.push_back(std::move(c));
    }

    // -- additions ----------------------------------------------------------

    void apply_add(const Edit& e) {
        const auto& add = std::get<AddPayload>(e.payload);
        if (const auto* a = std::get_if<AttributeDecl>(&add.element)) {
            add_attribute(e, *a);
        } else if (const auto* m = std::get_if<MethodDecl>(&add.element)) {
            add_method(e, *m);
        } else if (const auto* c = std::get_if<ClassDecl>(&add.element)) {
            add_class(e, *c);
        } else {
            add_association(e, std::get<AssociationDecl>(add.element));
        }
    }

    void add_attribute(const Edit& e, const AttributeDecl& decl) {
        ClassDecl* cls = find_class(model(), e.touched.segments[0]);
        if (!cls) {
            throw WeaveError("cannot add attribute '" + e.touched.str() + "': class '" +
                             e.touched.segments[0] + "' does not exist (" + source_of(e) +
                             ")");
        }
        if (const AttributeDecl* existing = find_attribute(*cls, decl.name)) {
            if (*existing == decl) {
                report_.warn("skipping duplicate addition of attribute '" +
                             e.touched.str() + "' (" + source_of(e) + ")");
                return;
            }
            throw WeaveError("addition of attribute '" + e.touched.str() +
                             "' collides with an existing member (" + source_of(e) + ")");
        }
        if (has_feature(*cls, decl.name)) {
            throw WeaveError("addition of attribute '" + e.touched.str() +
                             "' collides with an existing member (" + source_of(e) + ")");
        }
        cls->attributes.push_back(decl);
        note_provenance(e.touched, e.source_aspect);
        report_.edit("add attribute '" + e.touched.str() + "' (" + source_of(e) + ")");
    }

    void add_method(const Edit& e, const MethodDecl& decl) {
        ClassDecl* cls = find_class(model(), e.touched.segments[0]);
        if (!cls) {
            throw WeaveError("cannot add method '" + e.touched.str() + "': class '" +
                             e.touched.segments[0] + "' does not exist (" + source_of(e) +
                             ")");
        }
        bool fresh = true;
        if (const MethodDecl* existing = find_method(*cls, decl.name)) {
            if (*existing != decl) {
                throw WeaveError("addition of method '" + e.touched.str() +
                                 "' collides with an existing member (" + source_of(e) +
                                 ")");
            }
            report_.warn("skipping duplicate addition of method '" + e.touched.str() +
                         "' (" + source_of(e) + ")");
            fresh = false;
        } else if (has_feature(*cls, decl.name)) {
            throw WeaveError("addition of method '" + e.touched.str() +
                             "' collides with an existing member (" + source_of(e) + ")");
        }
        if (fresh) {
            cls->methods.push_back(decl);
            note_provenance(e.touched, e.source_aspect);
            report_.edit("add method '" + e.touched.str() + "' (" + source_of(e) + ")");
        }
        // A method advised onto a called operation still constrains execution
        // order even when the method body was already present.
        if (e.pointcut_kind == PointcutKind::Call && e.target.size() == 2) {
            note_constraint({e.touched, e.target, e.position, e.source_aspect});
        }
    }

    void add_class(const Edit& e, const ClassDecl& decl) {
        if (decl.name == kAssocSegment) {
            throw WeaveError("class name 'assoc' is reserved (" + source_of(e) + ")");
        }
        if (const ClassDecl* existing = find_class(model(), decl.name)) {
            if (*existing == decl) {
                report_.warn("skipping duplicate addition of class '" + decl.name + "' (" +
                             source_of(e) + ")");
                return;
            }
            throw WeaveError("addition of class '" + decl.name +
                             "' collides with an existing class (" + source_of(e) + ")");
        }
        if (decl.association_class_of &&
            !find_association(model(), *decl.association_class_of)) {
            throw WeaveError("added class '" + decl.name +
                             "' references unknown association '" +
                             *decl.association_class_of + "' (" + source_of(e) + ")");
        }
        model().classes.push_back(decl);
        class_provenance(&state_.provenance, decl, ProvenanceEntry::Origin::Aspect,
                         e.source_aspect);
        report_.edit("add class '" + decl.name + "' (" + source_of(e) + ")");
    }

    void add_association(const Edit& e, const AssociationDecl& decl) {
        if (const AssociationDecl* existing = find_association(model(), decl.name)) {
            if (*existing == decl) {
                report_.warn("skipping duplicate addition of association '" + decl.name +
                             "' (" + source_of(e) + ")");
                return;
            }
            throw WeaveError("addition of association '" + decl.name +
                             "' collides with an existing association (" + source_of(e) +
                             ")");
        }
        for (const AssociationEnd* end : {&decl.end_a, &decl.end_b}) {
            if (!find_class(model(), end->class_name)) {
                throw WeaveError("added association '" + decl.name +
                                 "' has an end at unknown class '" + end->class_name +
                                 "' (" + source_of(e) + ")");
            }
        }
        model().associations.push_back(decl);
        association_provenance(&state_.provenance, decl, ProvenanceEntry::Origin::Aspect,
                               e.source_aspect);
        report_.edit("add association '" + decl.name + "' (" + source_of(e) + ")");
    }

    // -- updates ------------------------------------------------------------

    void apply_update(const Edit& e) {
        std::optional<ElementHandle> handle = resolve(model(), e.target);
        if (!handle) {
            throw WeaveError("update target '" + e.target.str() + "' does not exist (" +
                             source_of(e) + ")");
        }
        const auto& upd = std::get<UpdatePayload>(e.payload);
        switch (handle->kind) {
        case ElementKind::Class: update_class(e, *handle, upd); break;
        case ElementKind::Attribute: update_attribute(e, *handle, upd); break;
        case ElementKind::Method: update_method(e, *handle, upd); break;
        case ElementKind::Association: update_association(e, *handle, upd); break;
        case ElementKind::AssociationEnd: update_end(e, *handle, upd); break;
        }
    }

    void update_class(const Edit& e, const ElementHandle& handle, const UpdatePayload& upd) {
        ClassDecl& cls = model().classes[handle.class_index];
        if (upd.new_name) {
            const std::string old = cls.name;
            if (*upd.new_name != old) {
                if (*upd.new_name == kAssocSegment) {
                    throw WeaveError("class name 'assoc' is reserved (" + source_of(e) +
                                     ")");
                }
                if (find_class(model(), *upd.new_name)) {
                    throw WeaveError("rename of class '" + old + "' to '" + *upd.new_name +
                                     "' collides with an existing class (" + source_of(e) +
                                     ")");
                }
                cls.name = *upd.new_name;
                for (AssociationDecl& a : model().associations) {
                    if (a.end_a.class_name == old) {
                        a.end_a.class_name = cls.name;
                    }
                    if (a.end_b.class_name == old) {
                        a.end_b.class_name = cls.name;
                    }
                }
                rewrite_references(QualifiedName{{old}}, QualifiedName{{cls.name}});
                report_.edit("rename class '" + old + "' to '" + cls.name + "' (" +
                             source_of(e) + ")");
            }
        }
        if (upd.new_type) {
            report_.warn("retype has no effect on class '" + cls.name + "' (" +
                         source_of(e) + ")");
        }
    }

    void update_attribute(const Edit& e, const ElementHandle& handle,
                          const UpdatePayload& upd) {
        ClassDecl& cls = model().classes[handle.class_index];
        AttributeDecl& attr = cls.attributes[handle.feature_index];
        if (upd.new_name && *upd.new_name != attr.name) {
            if (has_feature(cls, *upd.new_name)) {
                throw WeaveError("rename of attribute '" + e.target.str() + "' to '" +
                                 *upd.new_name + "' collides with an existing member (" +
                                 source_of(e) + ")");
            }
            QualifiedName from{{cls.name, attr.name}};
            attr.name = *upd.new_name;
            rewrite_references(from, QualifiedName{{cls.name, attr.name}});
            report_.edit("rename attribute '" + from.str() + "' to '" + attr.name + "' (" +
                         source_of(e) + ")");
        }
        if (upd.new_type) {
            attr.type_name = *upd.new_type;
            report_.edit("retype attribute '" + cls.name + "." + attr.name + "' to '" +
                         attr.type_name + "' (" + source_of(e) + ")");
        }
    }

    void update_method(const Edit& e, const ElementHandle& handle, const UpdatePayload& upd) {
        ClassDecl& cls = model().classes[handle.class_index];
        MethodDecl& op = cls.methods[handle.feature_index];
        if (upd.new_name && *upd.new_name != op.name) {
            if (has_feature(cls, *upd.new_name)) {
                throw WeaveError("rename of method '" + e.target.str() + "' to '" +
                                 *upd.new_name + "' collides with an existing member (" +
                                 source_of(e) + ")");
            }
            QualifiedName from{{cls.name, op.name}};
            op.name = *upd.new_name;
            rewrite_references(from, QualifiedName{{cls.name, op.name}});
            report_.edit("rename method '" + from.str() + "' to '" + op.name + "' (" +
                         source_of(e) + ")");
        }
        if (upd.new_type) {
            op.return_type = *upd.new_type;
            report_.edit("retype method '" + cls.name + "." + op.name + "' to return '" +
                         *op.return_type + "' (" + source_of(e) + ")");
        }
    }

    void update_association(const Edit& e, const ElementHandle& handle,
                            const UpdatePayload& upd) {
        AssociationDecl& assoc = model().associations[handle.assoc_index];
        if (upd.new_name && *upd.new_name != assoc.name) {
            const std::string old = assoc.name;
            if (find_association(model(), *upd.new_name)) {
                throw WeaveError("rename of association '" + old + "' to '" +
                                 *upd.new_name +
                                 "' collides with an existing association (" +
                                 source_of(e) + ")");
            }
            assoc.name = *upd.new_name;
            for (ClassDecl& c : model().classes) {
                if (c.association_class_of && *c.association_class_of == old) {
                    c.association_class_of = assoc.name;
                }
            }
            rewrite_references(QualifiedName{{std::string(kAssocSegment), old}},
                               QualifiedName{{std::string(kAssocSegment), assoc.name}});
            report_.edit("rename association '" + old + "' to '" + assoc.name + "' (" +
                         source_of(e) + ")");
        }
        if (upd.new_type) {
            report_.warn("retype has no effect on association '" + assoc.name + "' (" +
                         source_of(e) + ")");
        }
    }

    void update_end(const Edit& e, const ElementHandle& handle, const UpdatePayload& upd) {
        AssociationDecl& assoc = model().associations[handle.assoc_index];
        AssociationEnd& end = handle.end_index == 0 ? assoc.end_a : assoc.end_b;
        const AssociationEnd& other = handle.end_index == 0 ? assoc.end_b : assoc.end_a;
        if (upd.new_name && *upd.new_name != end.role) {
            if (other.role == *upd.new_name) {
                throw WeaveError("rename of end '" + e.target.str() + "' to '" +
                                 *upd.new_name + "' collides with the opposite end (" +
                                 source_of(e) + ")");
            }
            QualifiedName from{{std::string(kAssocSegment), assoc.name, end.role}};
            end.role = *upd.new_name;
            rewrite_references(
                from, QualifiedName{{std::string(kAssocSegment), assoc.name, end.role}});
            report_.edit("rename end '" + from.str() + "' to '" + end.role + "' (" +
                         source_of(e) + ")");
        }
        if (upd.new_type) {
            if (!find_class(model(), *upd.new_type)) {
                throw WeaveError("retype of end '" + e.target.str() +
                                 "' targets unknown class '" + *upd.new_type + "' (" +
                                 source_of(e) + ")");
            }
            end.class_name = *upd.new_type;
            report_.edit("retype end '" + std::string(kAssocSegment) + "." + assoc.name +
                         "." + end.role + "' to class '" + end.class_name + "' (" +
                         source_of(e) + ")");
        }
    }

    // -- deletions ----------------------------------------------------------

    void apply_delete(const Edit& e) {
        std::optional<ElementHandle> handle = resolve(model(), e.target);
        if (!handle) {
            report_.warn("delete target '" + e.target.str() + "' is already absent; "
                         "skipping (" + source_of(e) + ")");
            return;
        }
        switch (handle->kind) {
        case ElementKind::Class:
            delete_class(model().classes[handle->class_index].name, &e);
            break;
        case ElementKind::Attribute: {
            ClassDecl& cls = model().classes[handle->class_index];
            cls.attributes.erase(cls.attributes.begin() +
                                 static_cast<std::ptrdiff_t>(handle->feature_index));
            drop_provenance_under(e.target);
            report_.edit("delete attribute '" + e.target.str() + "' (" + source_of(e) +
                         ")");
            break;
        }
        case ElementKind::Method: {
            ClassDecl& cls = model().classes[handle->class_index];
            cls.methods.erase(cls.methods.begin() +
                              static_cast<std::ptrdiff_t>(handle->feature_index));
            drop_constraints_about(e.target, "its method was deleted");
            drop_provenance_under(e.target);
            report_.edit("delete method '" + e.target.str() + "' (" + source_of(e) + ")");
            break;
        }
        case ElementKind::Association:
            delete_association(model().associations[handle->assoc_index].name, nullptr,
                               &e);
            break;
        case ElementKind::AssociationEnd:
            report_.warn("cannot delete association end '" + e.target.str() +
                         "'; delete the association instead; skipping (" + source_of(e) +
                         ")");
            break;
        }
    }

    // `name` by value: the declarations it refers into are erased below.
    void delete_class(std::string name, const Edit* e) {
        std::vector<std::string> doomed;
        for (const AssociationDecl& a : model().associations) {
            if (a.end_a.class_name == name || a.end_b.class_name == name) {
                doomed.push_back(a.name);
            }
        }
        for (const std::string& assoc_name : doomed) {
            delete_association(assoc_name, &name, nullptr);
        }
        const ClassDecl* cls = find_class(model(), name);
        for (const MethodDecl& m : cls->methods) {
            drop_constraints_about(QualifiedName{{name, m.name}}, "its method was deleted");
        }
        std::erase_if(model().classes, [&](const ClassDecl& c) { return c.name == name; });
        drop_provenance_under(QualifiedName{{name}});
        if (e) {
            report_.edit("delete class '" + name + "' (" + source_of(*e) + ")");
        }
    }

    void delete_association(std::string name, const std::string* cascade_from,
                            const Edit* e) {
        for (ClassDecl& c : model().classes) {
            if (c.association_class_of && *c.association_class_of == name) {
                c.association_class_of.reset();
                report_.warn("class '" + c.name + "' is no longer an association class; "
                             "association '" + name + "' was deleted");
            }
        }
        std::erase_if(model().associations,
                      [&](const AssociationDecl& a) { return a.name == name; });
        drop_provenance_under(QualifiedName{{std::string(kAssocSegment), name}});
        if (cascade_from) {
            report_.edit("delete association '" + std::string(kAssocSegment) + "." + name +
                         "' (cascade from class '" + *cascade_from + "')");
        } else if (e) {
            report_.edit("delete association '" + std::string(kAssocSegment) + "." + name +
                         "' (" + source_of(*e) + ")");
        }
    }

    WovenModel& state_;
    std::vector<Edit> edits_;
    WeaveReport& report_;
    std::size_t current_ = 0;
};

void apply_plan_state(WovenModel& state, const WeavePlan& plan, WeaveReport& report) {
    PlanRunner runner(state, plan.edits, report);
    runner.run();
}

} // namespace

WovenModel apply_plan(const CoreModel& core, const WeavePlan& plan, WeaveReport& report) {
    WovenModel state;
    state.base = core;
    apply_plan_state(state, plan, report);
    return state;
}

// ---------------------------------------------------------------------------
// Full pipeline
// ---------------------------------------------------------------------------

namespace {

void check_digests(const DigestStatus& status, const std::string& weaving_name,
                   bool strict, WeaveReport& report) {
    for (const ModelRef& ref : status.stale) {
        std::string text = "model '" + ref.logical_name + "' referenced by weaving '" +
                           weaving_name + "' changed since the weaving was authored "
                           "(digest mismatch)";
        if (strict) {
            throw WeaveError(text);
        }
        report.warn(text);
    }
}

} // namespace

WeaveResult weave(const WeaveInputs& inputs, const WeaveOptions& options) {
    WeaveResult result;
    WovenModel& state = result.woven;
    state.base = inputs.core;
    WeaveReport& report = result.report;

    for (const AdditionalInput& add : inputs.additionals) {
        if (add.weaving.kind != WeavingKind::CoreAdditional) {
            throw ModelError("weaving '" + add.weaving.name +
                             "' does not describe a core-additional composition");
        }
        check_digests(digest_check(add.weaving, inputs.core, add.model), add.weaving.name,
                      options.strict_digest, report);
        report.info("weaving additional model '" + add.model.name + "' via '" +
                    add.weaving.name + "'");
        state.base = weave_core_additional(state.base, add.model, add.weaving, report,
                                           &state.provenance);
    }

    for (const AspectInput& asp : inputs.aspects) {
        if (asp.weaving.kind != WeavingKind::CoreAspect) {
            throw ModelError("weaving '" + asp.weaving.name +
                             "' does not describe a core-aspect composition");
        }
        check_digests(digest_check(asp.weaving, inputs.core, asp.model), asp.weaving.name,
                      options.strict_digest, report);
        report.info("weaving aspect model '" + asp.model.name + "' via '" +
                    asp.weaving.name + "'");
        PlanResult planned = plan_weave(state.base, asp.model, asp.weaving, report);
        for (const Conflict& c : planned.conflicts) {
            report.conflict(to_string(c.category) + " on '" + c.target.str() + "': " +
                            describe(planned.plan.edits[c.first_edit]) + " vs " +
                            describe(planned.plan.edits[c.second_edit]));
        }
        std::vector<Resolution> resolutions = resolve_conflicts(
            planned.plan, planned.conflicts, asp.model, options.force_first);
        for (const Resolution& r : resolutions) {
            if (r.resolved) {
                report.resolution("kept " + describe(planned.plan.edits[*r.kept]) +
                                  "; dropped " + describe(planned.plan.edits[*r.dropped]));
            } else {
                report.resolution("unresolved " + to_string(r.conflict.category) + " on '" +
                                  r.conflict.target.str() + "' (equal priorities)");
            }
        }
        apply_resolutions(planned.plan, resolutions);
        apply_plan_state(state, planned.plan, report);
    }
    return result;
}

} // namespace modelweave
