// Copyright 2026 the modelweave authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODELWEAVE_TESTS_TEST_HELPERS_HPP
#define MODELWEAVE_TESTS_TEST_HELPERS_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <modelweave/aspect_model.hpp>
#include <modelweave/core_model.hpp>
#include <modelweave/parser.hpp>
#include <modelweave/requirements.hpp>
#include <modelweave/weaving_model.hpp>

namespace mwtest {

inline std::filesystem::path fixture_dir() {
#ifdef MW_FIXTURE_DIR
    return std::filesystem::path(MW_FIXTURE_DIR);
#else
    return std::filesystem::path("tests/fixtures");
#endif
}

inline std::string read_fixture(const std::string& name) {
    const auto path = fixture_dir() / name;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open fixture: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Parse helpers that fail loudly: fixtures are expected to be error-free.
inline modelweave::CoreModel load_core(const std::string& name) {
    auto result = modelweave::parse_core(read_fixture(name), name);
    if (!result.ok()) {
        throw std::runtime_error("fixture failed to parse: " + name);
    }
    return *result.value;
}

inline modelweave::AspectModel load_aspect(const std::string& name) {
    auto result = modelweave::parse_aspect(read_fixture(name), name);
    if (!result.ok()) {
        throw std::runtime_error("fixture failed to parse: " + name);
    }
    return *result.value;
}

inline modelweave::WeavingModel load_weaving(const std::string& name) {
    auto result = modelweave::parse_weaving(read_fixture(name), name);
    if (!result.ok()) {
        throw std::runtime_error("fixture failed to parse: " + name);
    }
    return *result.value;
}

inline modelweave::DecompositionGraph load_requirements(const std::string& name) {
    auto result = modelweave::parse_requirements(read_fixture(name), name);
    if (!result.ok()) {
        throw std::runtime_error("fixture failed to parse: " + name);
    }
    return *result.value;
}

}  // namespace mwtest

#endif  // MODELWEAVE_TESTS_TEST_HELPERS_HPP
