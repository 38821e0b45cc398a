#include "pclab/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef PCLAB_CATALOG_DIR_DEFAULT
#define PCLAB_CATALOG_DIR_DEFAULT "data/catalog"
#endif

namespace pclab {

namespace fs = std::filesystem;

std::vector<Polynomial> CatalogEntry::inequations() const {
    std::vector<Polynomial> out;
    for (const auto& name : nonzero)
        out.push_back(Polynomial::variable(frame.params, name));
    return out;
}

std::string Catalog::default_dir() {
    if (const char* env = std::getenv("PCLAB_CATALOG_DIR")) return env;
    return PCLAB_CATALOG_DIR_DEFAULT;
}

Catalog Catalog::load(const std::string& dir) {
    Catalog cat;
    if (!fs::is_directory(dir)) throw FrameIOError("catalog directory not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& e) {
            throw FrameIOError("catalog file " + entry.path().string() + ": " + e.what());
        }
        CatalogEntry ce;
        ce.id = j.at("id").get<std::string>();
        ce.description = j.value("description", std::string());
        ce.notes = j.value("notes", std::string());
        ce.order = j.value("order", 1000);
        ce.frame = frame_spec_from_json(j.at("frame"));
        if (j.contains("constraints")) {
            const auto& c = j.at("constraints");
            if (c.contains("nonzero")) ce.nonzero = c.at("nonzero").get<std::vector<std::string>>();
            if (c.contains("pm_one")) ce.pm_one = c.at("pm_one").get<std::vector<std::string>>();
        }
        ce.frame.nonzero = ce.nonzero;
        if (j.contains("basis_names"))
            ce.basis_names = j.at("basis_names").get<std::vector<std::string>>();
        if (j.contains("goldens")) ce.goldens = j.at("goldens");
        cat.entries_.push_back(std::move(ce));
    }
    std::sort(cat.entries_.begin(), cat.entries_.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return std::tie(a.order, a.id) < std::tie(b.order, b.id);
              });
    return cat;
}

const CatalogEntry& Catalog::get(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    throw std::out_of_range("no catalog entry with id '" + id + "'");
}

ParacontactFrame Catalog::instantiate(const std::string& id,
                                      const std::map<std::string, Rational>& assignment) const {
    const CatalogEntry& entry = get(id);
    for (const auto& name : entry.nonzero) {
        auto it = assignment.find(name);
        if (it != assignment.end() && it->second.is_zero())
            throw ConstraintViolation("constraint violated: " + name + " must be nonzero in '" +
                                      id + "'");
    }
    for (const auto& name : entry.pm_one) {
        auto it = assignment.find(name);
        if (it != assignment.end() && it->second != Rational(1) && it->second != Rational(-1))
            throw ConstraintViolation("constraint violated: " + name + " must be +1 or -1 in '" +
                                      id + "'");
    }
    FrameSpec spec = entry.frame.substituted(assignment);
    ValidationResult res = validate(spec, SignConvention::from_env());
    if (!res.ok()) {
        std::string msg = "catalog entry '" + id + "' failed validation (engine/convention bug):";
        for (const auto& v : res.violations) msg += " " + v.to_string();
        throw EngineError(msg);
    }
    return *res.frame;
}

namespace {

// Small search for a rational assignment (respecting constraints) where the
// mismatch polynomial does not vanish.
std::string counterexample_for(const Polynomial& residual, const CatalogEntry& entry) {
    const auto& params = entry.frame.params;
    if (params.empty()) return "(no parameters)";
    std::vector<Rational> candidates = {Rational(1), Rational(-1), Rational(2),  Rational(-2),
                                        Rational(3), Rational(1, 2), Rational(0)};
    std::vector<std::size_t> idx(params.size(), 0);
    while (true) {
        std::map<std::string, Rational> assignment;
        bool admissible = true;
        for (std::size_t p = 0; p < params.size(); ++p) {
            const Rational& v = candidates[idx[p]];
            if (std::find(entry.nonzero.begin(), entry.nonzero.end(), params[p]) !=
                    entry.nonzero.end() &&
                v.is_zero())
                admissible = false;
            if (std::find(entry.pm_one.begin(), entry.pm_one.end(), params[p]) !=
                    entry.pm_one.end() &&
                v != Rational(1) && v != Rational(-1))
                admissible = false;
            assignment[params[p]] = v;
        }
        if (admissible) {
            auto val = residual.substitute(assignment).as_constant();
            if (val.has_value() && !val->is_zero()) {
                std::string s;
                for (const auto& [k, v] : assignment) {
                    if (!s.empty()) s += ", ";
                    s += k + "=" + v.to_string();
                }
                return s;
            }
        }
        std::size_t p = 0;
        while (p < params.size() && ++idx[p] == candidates.size()) idx[p++] = 0;
        if (p == params.size()) break;
    }
    return "(none found on the sample grid)";
}

Status status_from_string(const std::string& s) {
    if (s == "holds") return Status::Holds;
    if (s == "fails") return Status::Fails;
    if (s == "conditional") return Status::Conditional;
    throw FrameIOError("bad golden status: " + s);
}

}  // namespace

VerifyReport Catalog::verify(const std::string& id) const {
    const CatalogEntry& entry = get(id);
    VerifyReport report;
    report.id = id;
    report.ok = true;
    const auto& params = entry.frame.params;

    auto record = [&](const std::string& what, bool ok, const std::string& detail,
                      const Polynomial* residual) {
        report.checks.push_back({what, ok, detail});
        if (!ok) {
            report.ok = false;
            if (report.counterexample.empty() && residual != nullptr)
                report.counterexample = counterexample_for(*residual, entry);
        }
    };

    ValidationResult res = validate(entry.frame, SignConvention::from_env());
    if (!res.ok()) {
        std::string msg;
        for (const auto& v : res.violations) msg += v.to_string() + "; ";
        record("validate", false, msg, nullptr);
        return report;
    }
    const ParacontactFrame& frame = *res.frame;
    Connection conn = levi_civita(frame);
    CurvaturePackage pkg = riemann(frame, conn);
    std::vector<Polynomial> ineqs = entry.inequations();

    auto parse_matrix = [&](const Json& m, const std::string& what, const PolyMat& got) {
        for (std::size_t i = 0; i < frame.dim(); ++i)
            for (std::size_t j = 0; j < frame.dim(); ++j) {
                Polynomial want = parse_expr(m[i][j].get<std::string>(), params);
                Polynomial diff = got.at(i, j) - want;
                if (!diff.is_zero()) {
                    record(what, false,
                           "entry (" + std::to_string(i) + "," + std::to_string(j) + "): got " +
                               got.at(i, j).to_string() + ", want " + want.to_string(),
                           &diff);
                    return;
                }
            }
        record(what, true, "", nullptr);
    };

    if (entry.goldens.contains("h_action")) parse_matrix(entry.goldens["h_action"], "h", frame.h);
    if (entry.goldens.contains("Q")) parse_matrix(entry.goldens["Q"], "Q", pkg.ricci_op);

    if (entry.goldens.contains("R_xi_table")) {
        bool all_ok = true;
        for (const auto& item : entry.goldens["R_xi_table"]) {
            std::size_t j = item.at("j").get<std::size_t>();
            std::size_t k = item.at("k").get<std::size_t>();
            const auto& comps = item.at("v");
            // goldens use the convention R_std = -R
            const PolyVec& got = pkg.riemann[frame.spec.xi_index][j][k];
            for (std::size_t l = 0; l < frame.dim(); ++l) {
                Polynomial want = parse_expr(comps[l].get<std::string>(), params);
                Polynomial diff = -got[l] - want;
                if (!diff.is_zero()) {
                    record("R_xi[" + std::to_string(j) + "," + std::to_string(k) + "]", false,
                           "component " + std::to_string(l) + ": got " + (-got[l]).to_string() +
                               ", want " + want.to_string(),
                           &diff);
                    all_ok = false;
                    break;
                }
            }
        }
        if (all_ok) record("R_xi table", true, "", nullptr);
    }

    Classification cls = classify_all(frame, conn, pkg, ineqs);
    if (entry.goldens.contains("flags")) {
        auto verdict_of = [&](const std::string& name) -> const Verdict& {
            if (name == "K_paracontact") return cls.K_paracontact;
            if (name == "paraSasakian") return cls.paraSasakian;
            if (name == "eq4") return cls.eq4;
            if (name == "eta_einstein") return cls.eta_einstein;
            if (name == "km_space") return cls.km_space;
            if (name == "H_paracontact") return cls.H_paracontact;
            if (name == "harmonic_map") return cls.harmonic_map;
            if (name == "iht") return cls.iht;
            if (name == "soliton") return cls.soliton;
            throw FrameIOError("unknown golden flag: " + name);
        };
        for (const auto& [name, golden] : entry.goldens["flags"].items()) {
            const Verdict& got = verdict_of(name);
            Status want = status_from_string(golden.at("status").get<std::string>());
            bool ok = got.status == want;
            std::string detail;
            if (!ok)
                detail = "status: got " + to_string(got.status) + ", want " + to_string(want);
            if (ok && want == Status::Conditional && golden.contains("conditions")) {
                std::vector<Polynomial> want_gens;
                for (const auto& c : golden.at("conditions"))
                    want_gens.push_back(parse_expr(c.get<std::string>(), params));
                ConditionSet want_set(params, want_gens, ineqs);
                ok = got.conditions.equivalent(want_set);
                if (!ok) {
                    detail = "conditions differ: got {";
                    for (const auto& s : got.conditions.gen_strings()) detail += s + "; ";
                    detail += "}";
                }
            }
            record("flag " + name, ok, detail, nullptr);
        }
    }

    if (entry.goldens.contains("fitted")) {
        for (const auto& [name, value] : entry.goldens["fitted"].items()) {
            if (value.is_null()) continue;
            if (name == "mu_unconstrained") {
                bool want_flag = value.get<bool>();
                bool ok = cls.km.found && cls.km.mu_unconstrained == want_flag;
                record("fitted mu_unconstrained", ok, ok ? "" : "flag mismatch", nullptr);
                continue;
            }
            Polynomial want = parse_expr(value.get<std::string>(), params);
            Polynomial got(params);
            bool applicable = true;
            if (name == "kappa") {
                applicable = cls.km.found;
                got = cls.km.kappa;
            } else if (name == "mu") {
                applicable = cls.km.found && !cls.km.mu_unconstrained;
                got = cls.km.mu;
            } else if (name == "a") {
                applicable = cls.eta_fit.found;
                got = cls.eta_fit.a;
            } else if (name == "b") {
                applicable = cls.eta_fit.found;
                got = cls.eta_fit.b;
            } else if (name == "lambda") {
                applicable = cls.sol.found;
                got = cls.sol.lambda;
            } else {
                throw FrameIOError("unknown fitted golden: " + name);
            }
            if (!applicable) {
                record("fitted " + name, false, "fit not available", nullptr);
            } else {
                Polynomial diff = got - want;
                record("fitted " + name, diff.is_zero(),
                       diff.is_zero() ? ""
                                      : "got " + got.to_string() + ", want " + want.to_string(),
                       &diff);
            }
        }
    }

    return report;
}

}  // namespace pclab
