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

#include "modelweave/names.hpp"

#include <algorithm>

namespace modelweave {

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

} // namespace

bool is_identifier(std::string_view s) {
    if (s.empty() || !is_ident_start(s.front())) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

QualifiedName QualifiedName::parse(std::string_view dotted) {
    QualifiedName qn;
    if (dotted.empty()) {
        return qn;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t dot = dotted.find('.', start);
        if (dot == std::string_view::npos) {
            qn.segments.emplace_back(dotted.substr(start));
            break;
        }
        qn.segments.emplace_back(dotted.substr(start, dot - start));
        start = dot + 1;
    }
    return qn;
}

std::string QualifiedName::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) {
            out += '.';
        }
        out += segments[i];
    }
    return out;
}

bool QualifiedName::is_prefix_of(const QualifiedName& other) const {
    if (segments.size() > other.segments.size()) {
        return false;
    }
    return std::equal(segments.begin(), segments.end(), other.segments.begin());
}

} // namespace modelweave
