#include "pclab/cli.hpp"

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "pclab/deform.hpp"
#include "pclab/report.hpp"

namespace pclab {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kValidationError = 2;
constexpr int kGoldenMismatch = 3;

std::map<std::string, Rational> parse_substitutions(const std::vector<std::string>& items) {
    std::map<std::string, Rational> out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--subst expects name=rational, got '" + item + "'");
        out[item.substr(0, eq)] = Rational::from_string(item.substr(eq + 1));
    }
    return out;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    FrameSpec spec;
    try {
        spec = load_frame_file(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    SignConvention conv = SignConvention::from_env();
    ValidationResult res = validate(spec, conv);
    Json j = validation_to_json(spec.label, conv, res.violations);
    out << j.dump(2) << "\n";
    return res.ok() ? kOk : kValidationError;
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& subst_items,
                const std::string& format, std::ostream& out, std::ostream& err) {
    FrameSpec spec;
    std::map<std::string, Rational> subst;
    try {
        spec = load_frame_file(path);
        subst = parse_substitutions(subst_items);
        spec = spec.substituted(subst);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    SignConvention conv = SignConvention::from_env();
    ValidationResult res = validate(spec, conv);
    if (!res.ok()) {
        Json j = validation_to_json(spec.label, conv, res.violations);
        if (format == "json")
            out << j.dump(2) << "\n";
        else {
            out << "frame: " << spec.label << "\nvalidation FAILED:\n";
            for (const auto& v : res.violations) out << "  " << v.to_string() << "\n";
        }
        return kValidationError;
    }
    auto started = std::chrono::steady_clock::now();
    Analysis a = analyze_frame(*res.frame, spec.inequations());
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    if (format == "json") {
        Json j = analysis_to_json(a);
        // timing is opt-in so that reports stay byte-identical across runs
        if (std::getenv("PCLAB_TIMINGS") != nullptr) j["timing_ms"] = elapsed_ms;
        out << j.dump(2) << "\n";
    } else {
        out << analysis_to_text(a);
        out << "\nelapsed: " << elapsed_ms << " ms\n";
    }
    return kOk;
}

int cmd_catalog(const std::string& sub, const std::string& id, const std::string& dir,
                std::ostream& out, std::ostream& err) {
    Catalog cat;
    try {
        cat = Catalog::load(dir);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (sub == "list") {
        for (const auto& e : cat.entries())
            out << e.id << "  -  " << e.description << "\n";
        return kOk;
    }
    if (sub == "show") {
        const CatalogEntry* entry = nullptr;
        try {
            entry = &cat.get(id);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kInputError;
        }
        out << entry->id << ": " << entry->description << "\n";
        auto name_of = [&](std::size_t k) {
            return k < entry->basis_names.size() ? entry->basis_names[k]
                                                 : "E" + std::to_string(k);
        };
        const FrameSpec& f = entry->frame;
        for (std::size_t a = 0; a < f.dim; ++a)
            for (std::size_t b = a + 1; b < f.dim; ++b) {
                bool nonzero = false;
                for (std::size_t k = 0; k < f.dim; ++k)
                    if (!f.brackets[a][b][k].is_zero()) nonzero = true;
                if (!nonzero) continue;
                out << "  [" << name_of(a) << "," << name_of(b) << "] = ";
                bool first = true;
                for (std::size_t k = 0; k < f.dim; ++k) {
                    if (f.brackets[a][b][k].is_zero()) continue;
                    std::string c = f.brackets[a][b][k].to_string();
                    if (!first) out << " + ";
                    if (c == "1")
                        out << name_of(k);
                    else
                        out << "(" << c << ")*" << name_of(k);
                    first = false;
                }
                out << "\n";
            }
        if (!entry->nonzero.empty()) {
            out << "  constraints:";
            for (const auto& c : entry->nonzero) out << " " << c << " != 0";
            out << "\n";
        }
        if (!entry->notes.empty()) out << "  notes: " << entry->notes << "\n";
        return kOk;
    }
    if (sub == "verify") {
        std::vector<std::string> ids;
        if (id == "all" || id.empty()) {
            for (const auto& e : cat.entries()) ids.push_back(e.id);
        } else {
            ids.push_back(id);
        }
        bool all_ok = true;
        for (const auto& i : ids) {
            VerifyReport r;
            try {
                r = cat.verify(i);
            } catch (const std::exception& e) {
                err << "error verifying " << i << ": " << e.what() << "\n";
                return kInputError;
            }
            out << i << ": " << (r.ok ? "ok" : "GOLDEN MISMATCH") << "\n";
            for (const auto& c : r.checks) {
                if (c.ok)
                    out << "   " << c.what << ": ok\n";
                else
                    out << "   " << c.what << ": MISMATCH " << c.detail << "\n";
            }
            if (!r.ok && !r.counterexample.empty())
                out << "   counterexample: " << r.counterexample << "\n";
            all_ok = all_ok && r.ok;
        }
        return all_ok ? kOk : kGoldenMismatch;
    }
    err << "error: unknown catalog subcommand '" << sub << "'\n";
    return kInputError;
}

int cmd_deform(const std::string& path, const std::string& t_str, int eps,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    FrameSpec spec;
    Rational t;
    try {
        spec = load_frame_file(path);
        t = Rational::from_string(t_str);
        if (t.is_zero()) throw std::invalid_argument("--t must be nonzero");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    SignConvention conv = SignConvention::from_env();
    ValidationResult res = validate(spec, conv);
    if (!res.ok()) {
        err << "error: input frame fails validation\n";
        for (const auto& v : res.violations) err << "  " << v.to_string() << "\n";
        return kValidationError;
    }
    const ParacontactFrame& frame = *res.frame;
    FrameSpec deformed_spec;
    try {
        deformed_spec = d_homothety(frame, {t, eps});
    } catch (const DegenerateDeformedMetric& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
    ValidationResult dres = validate(deformed_spec, conv);
    Json j;
    j["schema"] = 1;
    j["label"] = spec.label;
    j["t"] = t.to_string();
    j["eps"] = eps;
    j["deformed_valid"] = dres.ok();
    if (!dres.ok()) {
        Json v = Json::array();
        for (const auto& viol : dres.violations) v.push_back(viol.to_string());
        j["violations"] = v;
        out << j.dump(2) << "\n";
        return kValidationError;
    }
    Connection conn = levi_civita(frame);
    CurvaturePackage pkg = riemann(frame, conn);
    Connection dconn = levi_civita(*dres.frame);
    CurvaturePackage dpkg = riemann(*dres.frame, dconn);

    j["ricci_xi_relation"] = check_deformed_ricci_relation(frame, pkg, dpkg, t);
    j["restricted_curvature_relation"] =
        check_restricted_curvature_relation(frame, conn, pkg, dpkg, t);

    Verdict before = is_H_paracontact(frame, conn, pkg, spec.inequations());
    Verdict after = is_H_paracontact(*dres.frame, dconn, dpkg, spec.inequations());
    j["H_paracontact_before"] = {{"status", to_string(before.status)},
                                 {"conditions", before.conditions.gen_strings()}};
    j["H_paracontact_after"] = {{"status", to_string(after.status)},
                                {"conditions", after.conditions.gen_strings()}};
    j["H_paracontact_preserved"] = before.conditions.equivalent(after.conditions);

    if (!out_path.empty()) {
        try {
            save_frame_file(deformed_spec, out_path);
            j["written"] = out_path;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kInputError;
        }
    }
    out << j.dump(2) << "\n";
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pclab - exact verification of left-invariant paracontact metric structures"};
    app.require_subcommand(1);

    std::string path, format = "text", catalog_dir = Catalog::default_dir();
    std::vector<std::string> substs;
    std::string t_str = "1", out_path, catalog_sub, catalog_id;
    int eps = 1;

    auto* validate_cmd = app.add_subcommand("validate", "validate a frame file");
    validate_cmd->add_option("file", path, "frame file (JSON)")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "full identity and classification report");
    analyze_cmd->add_option("file", path, "frame file (JSON)")->required();
    analyze_cmd->add_option("--subst", substs, "parameter substitution name=rational");
    analyze_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "work with the built-in example catalog");
    catalog_cmd->add_option("subcommand", catalog_sub, "list | show <id> | verify [id|all]")
        ->required();
    catalog_cmd->add_option("id", catalog_id, "entry id");
    catalog_cmd->add_option("--dir", catalog_dir, "catalog directory");

    auto* deform_cmd = app.add_subcommand("deform", "apply a D-homothetic deformation");
    deform_cmd->add_option("file", path, "frame file (JSON)")->required();
    deform_cmd->add_option("--t", t_str, "deformation constant (nonzero rational)")->required();
    deform_cmd->add_option("--eps", eps, "sign in the deformed metric")
        ->check(CLI::IsMember({1, -1}));
    deform_cmd->add_option("--out", out_path, "write the deformed frame file here");

    std::vector<const char*> argv;
    argv.push_back("pclab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(path, out, err);
        if (analyze_cmd->parsed()) return cmd_analyze(path, substs, format, out, err);
        if (catalog_cmd->parsed()) return cmd_catalog(catalog_sub, catalog_id, catalog_dir, out, err);
        if (deform_cmd->parsed()) return cmd_deform(path, t_str, eps, out_path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "usage error: no subcommand\n";
    return kInputError;
}

}  // namespace pclab
