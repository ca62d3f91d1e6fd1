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

#ifndef MODELWEAVE_PARSER_HPP
#define MODELWEAVE_PARSER_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "modelweave/aspect_model.hpp"
#include "modelweave/core_model.hpp"
#include "modelweave/diagnostics.hpp"
#include "modelweave/requirements.hpp"
#include "modelweave/weaving_model.hpp"

namespace modelweave {

/// No value means at least one Error diagnostic; a value may still carry
/// warnings. Parsing never partially succeeds.
template <typename T>
struct ParseResult {
    std::optional<T> value;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return value.has_value(); }
    bool has_errors() const {
        for (const ParseDiagnostic& d : diagnostics) {
            if (d.severity == Severity::Error) {
                return true;
            }
        }
        return false;
    }
};

// All parsers take strict UTF-8, normalize CRLF to LF, and treat "//" as a
// comment to end of line. `source_name` feeds diagnostic spans and names the
// model of an empty file (by file stem).

ParseResult<CoreModel> parse_core(std::string_view text, std::string_view source_name = "<input>");
ParseResult<AspectModel> parse_aspect(std::string_view text,
                                      std::string_view source_name = "<input>");
ParseResult<WeavingModel> parse_weaving(std::string_view text,
                                        std::string_view source_name = "<input>");
ParseResult<DecompositionGraph> parse_requirements(std::string_view text,
                                                   std::string_view source_name = "<input>");

} // namespace modelweave

#endif // MODELWEAVE_PARSER_HPP
