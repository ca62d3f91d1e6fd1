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

#ifndef MODELWEAVE_NAMES_HPP
#define MODELWEAVE_NAMES_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace modelweave {

/// ASCII letters, digits, underscore; must not start with a digit. Case-sensitive.
bool is_identifier(std::string_view s);

/// Canonical model-scoped path of an element: "Student", "Student.NewSubscription",
/// or an association path with the reserved first segment "assoc"
/// ("assoc.Enrolls", "assoc.Enrolls.studentEnd"). Because "assoc" is reserved,
/// no class may carry that name and canonical names stay injective.
struct QualifiedName {
    std::vector<std::string> segments;

    QualifiedName() = default;
    explicit QualifiedName(std::vector<std::string> segs) : segments(std::move(segs)) {}
    QualifiedName(std::initializer_list<std::string> segs) : segments(segs) {}

    /// Splits a dotted path; empty input gives an empty name.
    static QualifiedName parse(std::string_view dotted);

    std::string str() const;
    bool empty() const { return segments.empty(); }
    std::size_t size() const { return segments.size(); }

    /// True if this name is a proper or improper prefix of `other`.
    bool is_prefix_of(const QualifiedName& other) const;

    friend bool operator==(const QualifiedName&, const QualifiedName&) = default;
    friend auto operator<=>(const QualifiedName&, const QualifiedName&) = default;
};

/// Reserved leading segment for association paths.
inline constexpr std::string_view kAssocSegment = "assoc";

} // namespace modelweave

#endif // MODELWEAVE_NAMES_HPP
