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

#include <doctest.h>

#include <string>

#include <modelweave/parser.hpp>
#include <modelweave/printer.hpp>
#include <modelweave/weaver.hpp>

#include "generators.hpp"
#include "test_helpers.hpp"

using namespace modelweave;

TEST_CASE("canonical fixtures reprint to their exact file bytes") {
    SUBCASE("class model") {
        const std::string text = mwtest::read_fixture("m1.core");
        const auto r = parse_core(text, "m1.core");
        REQUIRE(r.ok());
        CHECK(print_core(*r.value) == text);
    }
    SUBCASE("aspect model") {
        const std::string text = mwtest::read_fixture("m2.aspect");
        const auto r = parse_aspect(text, "m2.aspect");
        REQUIRE(r.ok());
        CHECK(print_aspect(*r.value) == text);
    }
    SUBCASE("weaving model") {
        const std::string text = mwtest::read_fixture("w1.weave");
        const auto r = parse_weaving(text, "w1.weave");
        REQUIRE(r.ok());
        CHECK(print_weaving(*r.value) == text);
    }
    SUBCASE("requirements graph") {
        const std::string text = mwtest::read_fixture("g1.reqs");
        const auto r = parse_requirements(text, "g1.reqs");
        REQUIRE(r.ok());
        CHECK(print_requirements(*r.value) == text);
    }
}

TEST_CASE("default multiplicities are omitted, others printed") {
    CoreModel m;
    m.name = "M";
    ClassDecl c;
    c.name = "C";
    c.attributes.push_back({"a", "int", Multiplicity::exactly_one()});
    c.attributes.push_back({"b", "int", Multiplicity::bounded(0, 1)});
    m.classes.push_back(c);
    const std::string text = print_core(m);
    CHECK(text.find("attr a : int;") != std::string::npos);
    CHECK(text.find("attr b : int 0..1;") != std::string::npos);
}

TEST_CASE("priorities print in shortest round-trip form") {
    AspectModel m;
    m.name = "A";
    AspectRequirement asp;
    asp.name = "X";
    asp.priority = 0.8;
    Pointcut pc;
    pc.name = "P";
    pc.kind = PointcutKind::Structural;
    pc.pattern.segments = {"C"};
    asp.pointcuts.push_back(pc);
    Advice adv;
    adv.name = "a";
    adv.kind = AdviceKind::DeleteElt;
    adv.position = AdvicePosition::After;
    adv.bound_pointcut = "P";
    adv.payload = DeletePayload{};
    asp.advices.push_back(adv);
    m.aspects.push_back(asp);
    CHECK(print_aspect(m).find("aspect X priority 0.8 {") != std::string::npos);
    asp.priority = 0.125;
    m.aspects[0] = asp;
    CHECK(print_aspect(m).find("priority 0.125") != std::string::npos);
}

TEST_CASE("string bodies are escaped so they re-lex") {
    AspectModel m;
    m.name = "A";
    AspectRequirement asp;
    asp.name = "X";
    Pointcut pc;
    pc.name = "P";
    pc.kind = PointcutKind::Call;
    pc.pattern.segments = {"C", "m"};
    asp.pointcuts.push_back(pc);
    Advice adv;
    adv.name = "a";
    adv.kind = AdviceKind::AddElt;
    adv.bound_pointcut = "P";
    AddPayload add;
    add.element = MethodDecl{"f", {}, std::nullopt};
    adv.payload = add;
    adv.body = "say \"hi\"\nthen\tstop\\now";
    asp.advices.push_back(adv);
    m.aspects.push_back(asp);

    const std::string text = print_aspect(m);
    const auto back = parse_aspect(text, "<reprint>");
    REQUIRE(back.ok());
    CHECK(back.value->aspects[0].advices[0].body == adv.body);
}

TEST_CASE("printing is deterministic") {
    const CoreModel m = mwtest::load_core("m1.core");
    CHECK(print_core(m) == print_core(m));
    CHECK(canonical_digest(m) == canonical_digest(m));
    const AspectModel a = mwtest::load_aspect("m2.aspect");
    CHECK(canonical_digest(a) == canonical_digest(a));
}

TEST_CASE("digests are sixteen hex digits and content-sensitive") {
    CoreModel m = mwtest::load_core("m1.core");
    const std::string d1 = canonical_digest(m);
    CHECK(d1.size() == 16);
    CHECK(d1.find_first_not_of("0123456789abcdef") == std::string::npos);
    m.classes[0].name = "Renamed";
    CHECK(canonical_digest(m) != d1);
}

TEST_CASE("woven models print as their base plus constraint comments") {
    WovenModel woven;
    woven.base = mwtest::load_core("m1.core");
    woven.ordering_constraints.push_back(
        {QualifiedName::parse("Student.check"), QualifiedName::parse("Student.NewSubscription"),
         AdvicePosition::Before, "HoursConstraint"});
    woven.ordering_constraints.push_back(
        {QualifiedName::parse("Student.log"), QualifiedName::parse("Student.NewSubscription"),
         AdvicePosition::After, "Audit"});
    const std::string text = print_woven(woven);
    const std::string base = print_core(woven.base);
    REQUIRE(text.substr(0, base.size()) == base);
    CHECK(text.find("// constraint: Student.check before Student.NewSubscription "
                    "(aspect HoursConstraint)\n") != std::string::npos);
    CHECK(text.find("// constraint: Student.log after Student.NewSubscription "
                    "(aspect Audit)\n") != std::string::npos);
}

TEST_CASE("generated class models survive a parse-print round trip") {
    for (std::uint32_t seed = 1; seed <= 200; ++seed) {
        mwtest::Rng rng(seed);
        const CoreModel model = mwtest::gen_core(rng, "G" + std::to_string(seed));
        CAPTURE(seed);
        REQUIRE(validate_core(model).empty());
        const std::string text = print_core(model);
        const auto back = parse_core(text, "<gen>");
        REQUIRE(back.ok());
        CHECK(*back.value == model);
        CHECK(print_core(*back.value) == text);
    }
}

TEST_CASE("generated aspect and weaving models survive a parse-print round trip") {
    for (std::uint32_t seed = 1; seed <= 200; ++seed) {
        mwtest::Rng rng(seed ^ 0x9e3779b9u);
        const CoreModel core = mwtest::gen_core(rng, "Core");
        mwtest::AspectGenOptions opts;
        opts.allow_update = true;
        opts.allow_delete = true;
        const auto gen = mwtest::gen_aspects(rng, core, opts, "Asp", "W");
        CAPTURE(seed);
        REQUIRE(validate_aspect(gen.model).empty());

        const std::string atext = print_aspect(gen.model);
        const auto aback = parse_aspect(atext, "<gen>");
        REQUIRE(aback.ok());
        CHECK(*aback.value == gen.model);

        const std::string wtext = print_weaving(gen.weaving);
        const auto wback = parse_weaving(wtext, "<gen>");
        REQUIRE(wback.ok());
        CHECK(*wback.value == gen.weaving);

        const auto additional = mwtest::gen_additional(rng, core, "Extra", "WX");
        const std::string xtext = print_weaving(additional.weaving);
        const auto xback = parse_weaving(xtext, "<gen>");
        REQUIRE(xback.ok());
        CHECK(*xback.value == additional.weaving);
    }
}

TEST_CASE("generated requirement graphs survive a parse-print round trip") {
    for (std::uint32_t seed = 1; seed <= 200; ++seed) {
        mwtest::Rng rng(seed ^ 0x5bd1e995u);
        const DecompositionGraph g = mwtest::gen_graph(rng, "G", 8);
        CAPTURE(seed);
        REQUIRE(validate_graph(g).empty());
        const std::string text = print_requirements(g);
        const auto back = parse_requirements(text, "<gen>");
        REQUIRE(back.ok());
        CHECK(*back.value == g);
        CHECK(print_requirements(*back.value) == text);
    }
}
