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

#ifndef MODELWEAVE_PRINTER_HPP
#define MODELWEAVE_PRINTER_HPP

#include <string>

#include "modelweave/aspect_model.hpp"
#include "modelweave/core_model.hpp"
#include "modelweave/requirements.hpp"
#include "modelweave/weaver.hpp"
#include "modelweave/weaving_model.hpp"

namespace modelweave {

// Canonical text: declaration order preserved, whitespace normalized,
// parse(print(x)) == x. Printing twice gives identical bytes.

std::string print_core(const CoreModel& m);
std::string print_aspect(const AspectModel& m);
std::string print_weaving(const WeavingModel& m);
std::string print_requirements(const DecompositionGraph& g);

/// Core syntax plus a trailing comment block carrying the ordering
/// constraints, so the output stays parseable as a plain core model.
std::string print_woven(const WovenModel& m);

/// Digest of the canonical text, as recorded in weaving model references.
std::string canonical_digest(const CoreModel& m);
std::string canonical_digest(const AspectModel& m);

} // namespace modelweave

#endif // MODELWEAVE_PRINTER_HPP
