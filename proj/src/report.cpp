#include "pclab/report.hpp"

#include <sstream>

namespace pclab {

Analysis analyze_frame(const ParacontactFrame& frame, const std::vector<Polynomial>& inequations) {
    Analysis a{frame, {}, {}, {}, {}};
    a.conn = levi_civita(frame);
    a.pkg = riemann(frame, a.conn);
    a.identities = run_identity_suite(frame, a.conn, a.pkg);
    a.cls = classify_all(frame, a.conn, a.pkg, inequations);
    return a;
}

namespace {

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.status == Status::Conditional) j["conditions"] = v.conditions.gen_strings();
    if (v.status != Status::Holds && !v.witness.empty()) j["witness"] = v.witness;
    return j;
}

}  // namespace

Json validation_to_json(const std::string& label, const SignConvention& conv,
                        const std::vector<Violation>& violations) {
    Json j;
    j["schema"] = 1;
    j["label"] = label;
    j["convention"] = {{"d_eta_sign", conv.d_eta_sign}, {"curvature", SignConvention::curvature}};
    j["validation"] = {{"ok", violations.empty()}};
    Json v = Json::array();
    for (const auto& viol : violations) v.push_back(viol.to_string());
    j["validation"]["violations"] = v;
    return j;
}

Json analysis_to_json(const Analysis& a) {
    Json j = validation_to_json(a.frame.spec.label, a.frame.conv, {});
    j["dim"] = a.frame.dim();
    j["params"] = a.frame.params();

    Json ids = Json::array();
    for (const auto& r : a.identities) {
        Json e;
        e["id"] = r.id;
        e["pass"] = r.pass;
        if (!r.residual.empty()) e["detail"] = r.residual;
        ids.push_back(e);
    }
    j["identities"] = ids;

    Json cls;
    cls["K_paracontact"] = verdict_to_json(a.cls.K_paracontact);
    cls["paraSasakian"] = verdict_to_json(a.cls.paraSasakian);
    cls["eq4"] = verdict_to_json(a.cls.eq4);
    cls["eta_einstein"] = verdict_to_json(a.cls.eta_einstein);
    cls["km_space"] = verdict_to_json(a.cls.km_space);
    cls["H_paracontact"] = verdict_to_json(a.cls.H_paracontact);
    cls["harmonic_map"] = verdict_to_json(a.cls.harmonic_map);
    cls["iht"] = verdict_to_json(a.cls.iht);
    cls["soliton"] = verdict_to_json(a.cls.soliton);

    Json fitted;
    fitted["a"] = a.cls.eta_fit.found ? Json(a.cls.eta_fit.a.to_string()) : Json(nullptr);
    fitted["b"] = a.cls.eta_fit.found ? Json(a.cls.eta_fit.b.to_string()) : Json(nullptr);
    fitted["kappa"] = a.cls.km.found ? Json(a.cls.km.kappa.to_string()) : Json(nullptr);
    if (a.cls.km.found && a.cls.km.mu_unconstrained)
        fitted["mu"] = "unconstrained";
    else
        fitted["mu"] = a.cls.km.found ? Json(a.cls.km.mu.to_string()) : Json(nullptr);
    fitted["lambda"] = a.cls.sol.found ? Json(a.cls.sol.lambda.to_string()) : Json(nullptr);
    if (a.cls.sol.found) fitted["trivial_soliton"] = a.cls.sol.trivial;
    cls["fitted"] = fitted;
    j["classification"] = cls;

    Json matrices;
    auto mat = [&](const PolyMat& m) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m.at(i, k).to_string());
            rows.push_back(row);
        }
        return rows;
    };
    matrices["h"] = mat(a.frame.h);
    matrices["Q"] = mat(a.pkg.ricci_op);
    matrices["ricci"] = mat(a.pkg.ricci);
    j["tensors"] = matrices;
    j["scalar_curvature"] = a.pkg.scalar.to_string();
    return j;
}

std::string poly_matrix_to_text(const PolyMat& m, const std::string& name) {
    std::ostringstream out;
    out << name << " =\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out << "  [ ";
        for (std::size_t k = 0; k < m.dim(); ++k) {
            if (k) out << " | ";
            out << m.at(i, k).to_string();
        }
        out << " ]\n";
    }
    return out.str();
}

std::string analysis_to_text(const Analysis& a) {
    std::ostringstream out;
    out << "frame: " << a.frame.spec.label << "   (dim " << a.frame.dim() << ", n = " << a.frame.n
        << ")\n";
    out << "convention: d_eta_sign = " << (a.frame.conv.d_eta_sign > 0 ? "+1" : "-1")
        << ", curvature " << SignConvention::curvature << "\n";
    if (!a.frame.params().empty()) {
        out << "parameters:";
        for (const auto& p : a.frame.params()) out << " " << p;
        out << "\n";
    }
    out << "validation: ok\n\n";
    out << poly_matrix_to_text(a.frame.h, "h");
    out << poly_matrix_to_text(a.pkg.ricci_op, "Q");
    out << "scalar curvature r = " << a.pkg.scalar.to_string() << "\n\n";

    out << "identities:\n";
    for (const auto& r : a.identities) {
        out << "  " << r.id << ": " << (r.pass ? "pass" : "FAIL");
        if (!r.residual.empty()) out << "  [" << r.residual << "]";
        out << "\n";
    }
    out << "\nclassification:\n";
    auto line = [&](const std::string& name, const Verdict& v) {
        out << "  " << name << ": " << to_string(v.status);
        if (v.status == Status::Conditional) {
            out << " iff {";
            bool first = true;
            for (const auto& s : v.conditions.gen_strings()) {
                if (!first) out << ", ";
                out << s << " = 0";
                first = false;
            }
            out << "}";
        } else if (!v.witness.empty()) {
            out << "  [" << v.witness << "]";
        }
        out << "\n";
    };
    line("K-paracontact", a.cls.K_paracontact);
    line("paraSasakian", a.cls.paraSasakian);
    line("R(X,Y)xi = -(eta(X)Y - eta(Y)X)", a.cls.eq4);
    line("eta-Einstein", a.cls.eta_einstein);
    line("(kappa,mu)-space", a.cls.km_space);
    line("H-paracontact", a.cls.H_paracontact);
    line("harmonic map", a.cls.harmonic_map);
    line("infinitesimal harmonic transformation", a.cls.iht);
    line("Ricci soliton", a.cls.soliton);
    if (a.cls.eta_fit.found)
        out << "  fitted: a = " << a.cls.eta_fit.a.to_string()
            << ", b = " << a.cls.eta_fit.b.to_string() << "\n";
    if (a.cls.km.found) {
        out << "  fitted: kappa = " << a.cls.km.kappa.to_string() << ", mu = "
            << (a.cls.km.mu_unconstrained ? std::string("unconstrained")
                                          : a.cls.km.mu.to_string())
            << "\n";
    }
    if (a.cls.sol.found)
        out << "  fitted: lambda = " << a.cls.sol.lambda.to_string()
            << (a.cls.sol.trivial ? " (trivial: Einstein with Killing xi)" : "") << "\n";
    return out.str();
}

}  // namespace pclab
