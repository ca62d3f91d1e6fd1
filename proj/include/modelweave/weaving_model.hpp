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

#ifndef MODELWEAVE_WEAVING_MODEL_HPP
#define MODELWEAVE_WEAVING_MODEL_HPP

#include <string>
#include <vector>

#include "modelweave/aspect_model.hpp"
#include "modelweave/core_model.hpp"
#include "modelweave/diagnostics.hpp"
#include "modelweave/names.hpp"

namespace modelweave {

/// Reference to an entire model. Weaving models never embed model content,
/// only references; the optional digest detects edits made to a model after
/// the weaving was authored.
struct ModelRef {
    std::string logical_name;
    std::string source_path;
    std::string content_digest; // empty = not recorded

    friend bool operator==(const ModelRef&, const ModelRef&) = default;
};

/// Reference to one element of a referenced model, by canonical qualified
/// name. For aspect models the target is an aspect path: the aspect name,
/// optionally followed by a pointcut name.
struct ElementRef {
    std::string model; // a ModelRef logical name
    QualifiedName target;

    friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

enum class LinkKind {
    AttributeToClass,
    MethodToClass,
    ClassToModel,
    AssociationToModel,
    AspectToTarget,
};

/// A binary typed link: left end into the core model, right end into the
/// aspect or additional model.
struct WeaveLink {
    std::string name;
    ElementRef left_end;
    ElementRef right_end;
    LinkKind kind = LinkKind::AspectToTarget;

    friend bool operator==(const WeaveLink&, const WeaveLink&) = default;
};

enum class WeavingKind { CoreAspect, CoreAdditional };

struct WeavingModel {
    std::string name;
    WeavingKind kind = WeavingKind::CoreAspect;
    ModelRef left_ref;
    ModelRef right_ref;
    std::vector<WeaveLink> links;

    friend bool operator==(const WeavingModel&, const WeavingModel&) = default;
};

/// Binds a core-with-additional weaving to its two models and checks every
/// link end: left ends must name the core model itself (for *ToModel links)
/// or resolve in it, right ends must resolve to an element of the expected
/// kind. Throws ModelError when w.kind is not CoreAdditional.
ValidationReport validate_weaving(const WeavingModel& w, const CoreModel& left,
                                  const CoreModel& right);

/// Same for a core-with-aspect weaving: every link must be aspectToTarget,
/// the right end must name an existing aspect (and pointcut, if given).
/// Throws ModelError when w.kind is not CoreAspect.
ValidationReport validate_weaving(const WeavingModel& w, const CoreModel& left,
                                  const AspectModel& right);

struct DigestStatus {
    std::vector<ModelRef> stale;

    bool ok() const { return stale.empty(); }
};

/// Compares recorded digests against the canonical digest of each model.
/// Empty recorded digests are never stale.
DigestStatus digest_check(const WeavingModel& w, const CoreModel& left, const CoreModel& right);
DigestStatus digest_check(const WeavingModel& w, const CoreModel& left, const AspectModel& right);

} // namespace modelweave

#endif // MODELWEAVE_WEAVING_MODEL_HPP
