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

#include "modelweave/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "modelweave/export.hpp"
#include "modelweave/parser.hpp"
#include "modelweave/printer.hpp"
#include "modelweave/weaver.hpp"

namespace modelweave {

namespace {

namespace fs = std::filesystem;

enum class FileKind { Core, Aspect, Weaving, Requirements, Unknown };

FileKind kind_of(const std::string& path) {
    std::string ext = fs::path(path).extension().string();
    if (ext == ".core") {
        return FileKind::Core;
    }
    if (ext == ".aspect") {
        return FileKind::Aspect;
    }
    if (ext == ".weave") {
        return FileKind::Weaving;
    }
    if (ext == ".reqs") {
        return FileKind::Requirements;
    }
    return FileKind::Unknown;
}

bool read_file(const std::string& path, std::string& out, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

bool write_output(const std::string& path, const std::string& content, std::ostream& out,
                  std::ostream& err) {
    if (path.empty()) {
        out << content;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    file << content;
    return static_cast<bool>(file);
}

void print_diagnostics(const std::vector<ParseDiagnostic>& diags, std::ostream& err) {
    for (const ParseDiagnostic& d : diags) {
        err << format_diagnostic(d) << '\n';
    }
}

void print_violations(const std::string& file, const ValidationReport& report,
                      std::ostream& err) {
    for (const Violation& v : report.violations) {
        err << file << ": " << v.at.str() << ": " << v.message << '\n';
    }
}

/// Parses one file of known kind; diagnostics go to err. Returns nullopt on
/// parse errors (exit 1 territory).
template <typename T>
std::optional<T> parse_file(ParseResult<T> (*parse)(std::string_view, std::string_view),
                            const std::string& path, const std::string& text,
                            std::ostream& err) {
    ParseResult<T> result = parse(text, path);
    print_diagnostics(result.diagnostics, err);
    return result.value;
}

std::set<std::string> split_ids(const std::string& csv) {
    std::set<std::string> out;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            if (!current.empty()) {
                out.insert(current);
                current.clear();
            }
        } else {
            current += c;
        }
    }
    if (!current.empty()) {
        out.insert(current);
    }
    return out;
}

std::string join_ids(const std::set<std::string>& ids) {
    std::string out = "{";
    bool first = true;
    for (const std::string& id : ids) {
        if (!first) {
            out += ", ";
        }
        out += id;
        first = false;
    }
    out += "}";
    return out;
}

fs::path resolve_relative(const std::string& base_file, const std::string& ref_path) {
    fs::path p(ref_path);
    if (p.is_absolute()) {
        return p;
    }
    return fs::path(base_file).parent_path() / p;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct ValidateOutcome {
    bool usage_error = false;
    bool failed = false;
};

void validate_weaving_file(const std::string& path, const WeavingModel& w, bool strict,
                           ValidateOutcome& outcome, std::ostream& out, std::ostream& err) {
    auto load_text = [&](const std::string& ref_path, std::string& text) {
        std::ifstream in(resolve_relative(path, ref_path), std::ios::binary);
        if (!in) {
            return false;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
        return true;
    };

    std::string left_text;
    std::string right_text;
    if (!load_text(w.left_ref.source_path, left_text) ||
        !load_text(w.right_ref.source_path, right_text)) {
        err << "warning: " << path << ": cannot read the referenced models; structural "
            << "checks only\n";
        out << path << ": valid\n";
        return;
    }
    ParseResult<CoreModel> left = parse_core(left_text, w.left_ref.source_path);
    if (!left.ok()) {
        err << "warning: " << path << ": referenced model '" << w.left_ref.source_path
            << "' does not parse; structural checks only\n";
        out << path << ": valid\n";
        return;
    }

    ValidationReport report;
    DigestStatus digests;
    if (w.kind == WeavingKind::CoreAspect) {
        ParseResult<AspectModel> right = parse_aspect(right_text, w.right_ref.source_path);
        if (!right.ok()) {
            err << "warning: " << path << ": referenced model '" << w.right_ref.source_path
                << "' does not parse; structural checks only\n";
            out << path << ": valid\n";
            return;
        }
        report = validate_weaving(w, *left.value, *right.value);
        digests = digest_check(w, *left.value, *right.value);
    } else {
        ParseResult<CoreModel> right = parse_core(right_text, w.right_ref.source_path);
        if (!right.ok()) {
            err << "warning: " << path << ": referenced model '" << w.right_ref.source_path
                << "' does not parse; structural checks only\n";
            out << path << ": valid\n";
            return;
        }
        report = validate_weaving(w, *left.value, *right.value);
        digests = digest_check(w, *left.value, *right.value);
    }

    bool failed = !report.empty();
    print_violations(path, report, err);
    for (const ModelRef& ref : digests.stale) {
        if (strict) {
            err << path << ": model '" << ref.logical_name
                << "' changed since the weaving was authored (digest mismatch)\n";
            failed = true;
        } else {
            err << "warning: " << path << ": model '" << ref.logical_name
                << "' changed since the weaving was authored (digest mismatch)\n";
        }
    }
    if (failed) {
        outcome.failed = true;
        out << path << ": invalid\n";
    } else {
        out << path << ": valid\n";
    }
}

int cmd_validate(const std::vector<std::string>& files, bool strict, std::ostream& out,
                 std::ostream& err) {
    ValidateOutcome outcome;
    for (const std::string& path : files) {
        FileKind kind = kind_of(path);
        if (kind == FileKind::Unknown) {
            err << "error: '" << path << "' has no recognized extension "
                << "(.core, .aspect, .weave, .reqs)\n";
            return kExitUsage;
        }
        std::string text;
        if (!read_file(path, text, err)) {
            return kExitUsage;
        }
        ValidationReport report;
        bool parsed = true;
        switch (kind) {
        case FileKind::Core: {
            auto model = parse_file(parse_core, path, text, err);
            parsed = model.has_value();
            if (model) {
                report = validate_core(*model);
            }
            break;
        }
        case FileKind::Aspect: {
            auto model = parse_file(parse_aspect, path, text, err);
            parsed = model.has_value();
            if (model) {
                report = validate_aspect(*model);
            }
            break;
        }
        case FileKind::Requirements: {
            auto graph = parse_file(parse_requirements, path, text, err);
            parsed = graph.has_value();
            if (graph) {
                report = validate_graph(*graph);
            }
            break;
        }
        case FileKind::Weaving: {
            auto model = parse_file(parse_weaving, path, text, err);
            parsed = model.has_value();
            if (model) {
                validate_weaving_file(path, *model, strict, outcome, out, err);
                continue; // wrote its own verdict line
            }
            break;
        }
        case FileKind::Unknown:
            break;
        }
        if (!parsed) {
            outcome.failed = true;
            out << path << ": invalid\n";
            continue;
        }
        print_violations(path, report, err);
        if (!report.empty()) {
            outcome.failed = true;
            out << path << ": invalid\n";
        } else {
            out << path << ": valid\n";
        }
    }
    return outcome.failed ? kExitFailure : kExitSuccess;
}

// ---------------------------------------------------------------------------
// weave
// ---------------------------------------------------------------------------

struct WeaveArgs {
    std::string core_path;
    std::vector<std::string> additional_paths;
    std::vector<std::string> aspect_paths;
    std::vector<std::string> weaving_paths;
    bool plan = false;
    bool force_first = false;
    bool strict = false;
    std::string format = "text";
    std::string output;
};

int cmd_weave(const WeaveArgs& args, std::ostream& out, std::ostream& err) {
    std::string text;
    if (!read_file(args.core_path, text, err)) {
        return kExitUsage;
    }
    auto core = parse_file(parse_core, args.core_path, text, err);
    if (!core) {
        return kExitFailure;
    }

    std::vector<CoreModel> additionals;
    for (const std::string& path : args.additional_paths) {
        if (!read_file(path, text, err)) {
            return kExitUsage;
        }
        auto model = parse_file(parse_core, path, text, err);
        if (!model) {
            return kExitFailure;
        }
        additionals.push_back(std::move(*model));
    }
    std::vector<AspectModel> aspects;
    for (const std::string& path : args.aspect_paths) {
        if (!read_file(path, text, err)) {
            return kExitUsage;
        }
        auto model = parse_file(parse_aspect, path, text, err);
        if (!model) {
            return kExitFailure;
        }
        aspects.push_back(std::move(*model));
    }
    std::vector<WeavingModel> additional_weavings;
    std::vector<WeavingModel> aspect_weavings;
    for (const std::string& path : args.weaving_paths) {
        if (!read_file(path, text, err)) {
            return kExitUsage;
        }
        auto model = parse_file(parse_weaving, path, text, err);
        if (!model) {
            return kExitFailure;
        }
        if (model->kind == WeavingKind::CoreAdditional) {
            additional_weavings.push_back(std::move(*model));
        } else {
            aspect_weavings.push_back(std::move(*model));
        }
    }
    bool counts_mismatch = false;
    if (additional_weavings.size() != additionals.size()) {
        err << "error: " << additionals.size() << " additional model(s) but "
            << additional_weavings.size() << " core-additional weaving(s)\n";
        counts_mismatch = true;
    }
    if (aspect_weavings.size() != aspects.size()) {
        err << "error: " << aspects.size() << " aspect model(s) but "
            << aspect_weavings.size() << " core-aspect weaving(s)\n";
        counts_mismatch = true;
    }
    if (counts_mismatch) {
        return kExitUsage;
    }

    // Input sanity: the models themselves must validate, and each weaving
    // must name the models it is paired with.
    ValidationReport report = validate_core(*core);
    print_violations(args.core_path, report, err);
    bool invalid = !report.empty();
    for (std::size_t i = 0; i < additionals.size(); ++i) {
        report = validate_core(additionals[i]);
        print_violations(args.additional_paths[i], report, err);
        invalid = invalid || !report.empty();
    }
    for (std::size_t i = 0; i < aspects.size(); ++i) {
        report = validate_aspect(aspects[i]);
        print_violations(args.aspect_paths[i], report, err);
        invalid = invalid || !report.empty();
    }
    if (invalid) {
        return kExitFailure;
    }
    auto check_binding = [&err](const WeavingModel& w, const std::string& side,
                                const std::string& expected) {
        const ModelRef& ref = side == "left" ? w.left_ref : w.right_ref;
        if (ref.logical_name != expected) {
            err << "error: weaving '" << w.name << "' expects " << side << " model '"
                << ref.logical_name << "' but was paired with '" << expected << "'\n";
            return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < additionals.size(); ++i) {
        if (!check_binding(additional_weavings[i], "left", core->name) ||
            !check_binding(additional_weavings[i], "right", additionals[i].name)) {
            return kExitFailure;
        }
    }
    for (std::size_t i = 0; i < aspects.size(); ++i) {
        if (!check_binding(aspect_weavings[i], "left", core->name) ||
            !check_binding(aspect_weavings[i], "right", aspects[i].name)) {
            return kExitFailure;
        }
    }

    WeaveInputs inputs;
    inputs.core = *core;
    for (std::size_t i = 0; i < additionals.size(); ++i) {
        inputs.additionals.push_back({additionals[i], additional_weavings[i]});
    }
    for (std::size_t i = 0; i < aspects.size(); ++i) {
        inputs.aspects.push_back({aspects[i], aspect_weavings[i]});
    }
    WeaveOptions options;
    options.strict_digest = args.strict;
    options.force_first = args.force_first;

    if (args.plan) {
        // Same pipeline, but narrate stage by stage instead of printing the
        // final model. Each stage must still apply so later stages plan
        // against the model they will really see.
        std::ostringstream plan_text;
        CoreModel current = inputs.core;
        try {
            for (const AdditionalInput& add : inputs.additionals) {
                WeaveReport stage;
                for (const ModelRef& ref :
                     digest_check(add.weaving, inputs.core, add.model).stale) {
                    if (args.strict) {
                        throw WeaveError("model '" + ref.logical_name +
                                         "' changed since weaving '" + add.weaving.name +
                                         "' was authored (digest mismatch)");
                    }
                    stage.warn("model '" + ref.logical_name + "' changed since the "
                               "weaving was authored (digest mismatch)");
                }
                current = weave_core_additional(current, add.model, add.weaving, stage);
                plan_text << "plan for weaving '" << add.weaving.name << "':\n"
                          << stage.render();
            }
            for (const AspectInput& asp : inputs.aspects) {
                WeaveReport stage;
                for (const ModelRef& ref :
                     digest_check(asp.weaving, inputs.core, asp.model).stale) {
                    if (args.strict) {
                        throw WeaveError("model '" + ref.logical_name +
                                         "' changed since weaving '" + asp.weaving.name +
                                         "' was authored (digest mismatch)");
                    }
                    stage.warn("model '" + ref.logical_name + "' changed since the "
                               "weaving was authored (digest mismatch)");
                }
                PlanResult planned = plan_weave(current, asp.model, asp.weaving, stage);
                for (const Conflict& c : planned.conflicts) {
                    stage.conflict(to_string(c.category) + " on '" + c.target.str() +
                                   "': " + describe(planned.plan.edits[c.first_edit]) +
                                   " vs " + describe(planned.plan.edits[c.second_edit]));
                }
                std::vector<Resolution> resolutions = resolve_conflicts(
                    planned.plan, planned.conflicts, asp.model, args.force_first);
                for (const Resolution& r : resolutions) {
                    if (r.resolved) {
                        stage.resolution("kept " + describe(planned.plan.edits[*r.kept]) +
                                         "; dropped " +
                                         describe(planned.plan.edits[*r.dropped]));
                    } else {
                        stage.resolution("unresolved " + to_string(r.conflict.category) +
                                         " on '" + r.conflict.target.str() +
                                         "' (equal priorities)");
                    }
                }
                try {
                    apply_resolutions(planned.plan, resolutions);
                } catch (const UnresolvedConflictError& e) {
                    plan_text << "plan for weaving '" << asp.weaving.name << "':\n"
                              << stage.render();
                    if (!write_output(args.output, plan_text.str(), out, err)) {
                        return kExitUsage;
                    }
                    err << "error: " << e.what() << '\n';
                    return kExitFailure;
                }
                WovenModel step = apply_plan(current, planned.plan, stage);
                current = std::move(step.base);
                plan_text << "plan for weaving '" << asp.weaving.name << "':\n"
                          << stage.render();
            }
        } catch (const ModelError& e) {
            err << "error: " << e.what() << '\n';
            return kExitFailure;
        }
        if (!write_output(args.output, plan_text.str(), out, err)) {
            return kExitUsage;
        }
        return kExitSuccess;
    }

    WeaveResult result;
    try {
        result = weave(inputs, options);
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << result.report.render();
    std::string rendered;
    if (args.format == "structured") {
        rendered = export_structured(result.woven).dump(2) + "\n";
    } else {
        rendered = print_woven(result.woven);
    }
    if (!write_output(args.output, rendered, out, err)) {
        return kExitUsage;
    }
    return kExitSuccess;
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

int cmd_export(const std::string& path, const std::string& format,
               const std::string& output, std::ostream& out, std::ostream& err) {
    FileKind kind = kind_of(path);
    if (kind == FileKind::Unknown) {
        err << "error: '" << path << "' has no recognized extension "
            << "(.core, .aspect, .weave, .reqs)\n";
        return kExitUsage;
    }
    if (format == "diagram" && kind != FileKind::Core) {
        err << "error: diagram export needs a .core file\n";
        return kExitUsage;
    }
    std::string text;
    if (!read_file(path, text, err)) {
        return kExitUsage;
    }
    std::string rendered;
    switch (kind) {
    case FileKind::Core: {
        auto model = parse_file(parse_core, path, text, err);
        if (!model) {
            return kExitFailure;
        }
        rendered = format == "diagram" ? export_diagram(*model)
                                       : export_structured(*model).dump(2) + "\n";
        break;
    }
    case FileKind::Aspect: {
        auto model = parse_file(parse_aspect, path, text, err);
        if (!model) {
            return kExitFailure;
        }
        rendered = export_structured(*model).dump(2) + "\n";
        break;
    }
    case FileKind::Weaving: {
        auto model = parse_file(parse_weaving, path, text, err);
        if (!model) {
            return kExitFailure;
        }
        rendered = export_structured(*model).dump(2) + "\n";
        break;
    }
    case FileKind::Requirements: {
        auto graph = parse_file(parse_requirements, path, text, err);
        if (!graph) {
            return kExitFailure;
        }
        rendered = export_structured(*graph).dump(2) + "\n";
        break;
    }
    case FileKind::Unknown:
        return kExitUsage;
    }
    if (!write_output(output, rendered, out, err)) {
        return kExitUsage;
    }
    return kExitSuccess;
}

// ---------------------------------------------------------------------------
// reqs
// ---------------------------------------------------------------------------

struct ReqsArgs {
    std::string path;
    std::string eval_cr;
    std::string satisfied;
    std::string infer_cr;
    std::string given;
    bool redundant = false;
    std::size_t capacity = kDefaultLeafCapacity;
};

int cmd_reqs(const ReqsArgs& args, std::ostream& out, std::ostream& err) {
    if (kind_of(args.path) != FileKind::Requirements) {
        err << "error: '" << args.path << "' is not a .reqs file\n";
        return kExitUsage;
    }
    std::string text;
    if (!read_file(args.path, text, err)) {
        return kExitUsage;
    }
    auto graph = parse_file(parse_requirements, args.path, text, err);
    if (!graph) {
        return kExitFailure;
    }
    ValidationReport report = validate_graph(*graph);
    print_violations(args.path, report, err);
    if (!report.empty()) {
        return kExitFailure;
    }

    try {
        bool acted = false;
        if (!args.eval_cr.empty()) {
            std::set<std::string> satisfied = split_ids(args.satisfied);
            bool value = evaluate(*graph, args.eval_cr, satisfied);
            out << args.eval_cr << ": " << (value ? "satisfied" : "not satisfied")
                << " given " << join_ids(satisfied) << '\n';
            acted = true;
        }
        if (!args.infer_cr.empty()) {
            std::set<std::string> given = split_ids(args.given);
            bool value = is_inferable(*graph, args.infer_cr, given, args.capacity);
            out << args.infer_cr << ": " << (value ? "inferable" : "not inferable")
                << " from " << join_ids(given) << '\n';
            acted = true;
        }
        if (args.redundant) {
            std::vector<RedundancyEntry> entries = redundant_crs(*graph, args.capacity);
            if (entries.empty()) {
                out << "no redundant cooperative requirements\n";
            }
            for (const RedundancyEntry& entry : entries) {
                out << entry.cr << ": redundant (witnesses:";
                for (std::size_t i = 0; i < entry.witnesses.size(); ++i) {
                    out << (i > 0 ? ", {" : " {");
                    for (std::size_t j = 0; j < entry.witnesses[i].size(); ++j) {
                        if (j > 0) {
                            out << ", ";
                        }
                        out << entry.witnesses[i][j];
                    }
                    out << "}";
                }
                out << ")\n";
            }
            acted = true;
        }
        if (!acted) {
            std::size_t crs = 0, ers = 0, ars = 0;
            for (const RequirementNode& n : graph->nodes) {
                switch (n.kind) {
                case RequirementKind::Cooperative: ++crs; break;
                case RequirementKind::Existing: ++ers; break;
                case RequirementKind::Additional: ++ars; break;
                }
            }
            out << "graph " << graph->name << ": " << crs << " cooperative, " << ers
                << " existing, " << ars << " additional\n";
            for (const RequirementNode& n : graph->nodes) {
                if (n.kind == RequirementKind::Cooperative) {
                    out << n.id << " = " << expression_of(*graph, n.id).str() << '\n';
                }
            }
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitSuccess;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"aspect-oriented model weaving for class-diagram models"};
    app.name("modelweave");
    app.set_version_flag("--version", "modelweave 1.0.0");
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "check model files for violations");
    std::vector<std::string> validate_files;
    bool validate_strict = false;
    validate->add_option("files", validate_files, "model files (.core/.aspect/.weave/.reqs)")
        ->required()
        ->expected(-1);
    validate->add_flag("--strict", validate_strict, "treat stale digests as failures");

    // weave
    auto* weave_cmd = app.add_subcommand("weave", "compose a core model with additional "
                                                  "and aspect models");
    WeaveArgs weave_args;
    weave_cmd->add_option("--core", weave_args.core_path, "core model (.core)")->required();
    weave_cmd->add_option("--additional", weave_args.additional_paths,
                          "additional models (.core), in weave order");
    weave_cmd->add_option("--aspects", weave_args.aspect_paths,
                          "aspect models (.aspect), in weave order");
    weave_cmd->add_option("--with-weaving", weave_args.weaving_paths,
                          "weaving models (.weave) pairing the models")
        ->required();
    weave_cmd->add_flag("--plan", weave_args.plan, "print the weave plan per stage "
                                                   "instead of the woven model");
    weave_cmd->add_flag("--force-first", weave_args.force_first,
                        "resolve equal-priority conflicts in favor of the plan-order "
                        "earlier edit");
    weave_cmd->add_flag("--strict", weave_args.strict, "fail on stale digests");
    weave_cmd->add_option("--format", weave_args.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->default_val("text");
    weave_cmd->add_option("-o,--output", weave_args.output, "write output to a file");

    // export
    auto* export_cmd = app.add_subcommand("export", "export a model file as structured "
                                                    "JSON or a diagram");
    std::string export_path;
    std::string export_format = "structured";
    std::string export_output;
    export_cmd->add_option("file", export_path, "model file")->required();
    export_cmd->add_option("--format", export_format, "output format")
        ->check(CLI::IsMember({"structured", "diagram"}))
        ->default_val("structured");
    export_cmd->add_option("-o,--output", export_output, "write output to a file");

    // reqs
    auto* reqs_cmd = app.add_subcommand("reqs", "analyze a requirements decomposition "
                                                "graph");
    ReqsArgs reqs_args;
    reqs_cmd->add_option("file", reqs_args.path, "requirements graph (.reqs)")->required();
    reqs_cmd->add_option("--eval", reqs_args.eval_cr,
                         "evaluate this cooperative requirement");
    reqs_cmd->add_option("--satisfied", reqs_args.satisfied,
                         "comma-separated satisfied leaf requirements for --eval");
    reqs_cmd->add_option("--infer", reqs_args.infer_cr,
                         "test whether this cooperative requirement is inferable");
    reqs_cmd->add_option("--given", reqs_args.given,
                         "comma-separated cooperative requirements assumed for --infer");
    reqs_cmd->add_flag("--redundant", reqs_args.redundant,
                       "list redundant cooperative requirements with witnesses");
    reqs_cmd->add_option("--capacity", reqs_args.capacity,
                         "leaf limit for exhaustive analyses");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("modelweave");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& a : full) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    if (validate->parsed()) {
        return cmd_validate(validate_files, validate_strict, out, err);
    }
    if (weave_cmd->parsed()) {
        return cmd_weave(weave_args, out, err);
    }
    if (export_cmd->parsed()) {
        return cmd_export(export_path, export_format, export_output, out, err);
    }
    if (reqs_cmd->parsed()) {
        return cmd_reqs(reqs_args, out, err);
    }
    return kExitUsage;
}

} // namespace modelweave
