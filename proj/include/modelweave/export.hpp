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

#ifndef MODELWEAVE_EXPORT_HPP
#define MODELWEAVE_EXPORT_HPP

#include <string>

#include <json.hpp>

#include "modelweave/aspect_model.hpp"
#include "modelweave/core_model.hpp"
#include "modelweave/requirements.hpp"
#include "modelweave/weaver.hpp"
#include "modelweave/weaving_model.hpp"

namespace modelweave {

using Json = nlohmann::ordered_json;

// Structured interchange documents. Field names are stable (documented in
// the README); nothing present in the value is dropped, including ordering
// constraints and provenance of woven models. import_* are exact inverses
// and throw ModelError on malformed documents.

Json export_structured(const CoreModel& m);
Json export_structured(const AspectModel& m);
Json export_structured(const WeavingModel& m);
Json export_structured(const DecompositionGraph& g);
Json export_structured(const WovenModel& m);

CoreModel import_structured_core(const Json& doc);
AspectModel import_structured_aspect(const Json& doc);
WeavingModel import_structured_weaving(const Json& doc);
DecompositionGraph import_structured_requirements(const Json& doc);
WovenModel import_structured_woven(const Json& doc);

/// Graphviz dot: one node per class, one edge per association. Woven
/// additions are dashed and added features carry a "+" marker in the label.
std::string export_diagram(const CoreModel& m);
std::string export_diagram(const WovenModel& m);

} // namespace modelweave

#endif // MODELWEAVE_EXPORT_HPP
