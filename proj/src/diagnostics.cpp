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

#include "modelweave/diagnostics.hpp"

#include <algorithm>

namespace modelweave {

void ValidationReport::normalize() {
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) {
                         if (a.at != b.at) {
                             return a.at < b.at;
                         }
                         return a.message < b.message;
                     });
}

std::string format_diagnostic(const ParseDiagnostic& d) {
    std::string out = d.span.file;
    out += ':';
    out += std::to_string(d.span.start_line);
    out += ':';
    out += std::to_string(d.span.start_col);
    out += d.severity == Severity::Error ? ": error: " : ": warning: ";
    out += d.message;
    return out;
}

} // namespace modelweave
