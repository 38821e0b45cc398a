#include "pclab/frame.hpp"

#include <algorithm>

namespace pclab {

FrameSpec FrameSpec::substituted(const std::map<std::string, Rational>& assignment) const {
    FrameSpec s = *this;
    for (auto& row : s.brackets)
        for (auto& vec : row)
            for (auto& p : vec) p = p.substitute(assignment);
    return s;
}

std::string Violation::to_string() const {
    std::string s = axiom;
    if (!indices.empty()) {
        s += "(";
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(indices[k]);
        }
        s += ")";
    }
    if (!residual.empty()) s += ": " + residual;
    return s;
}

Polynomial ParacontactFrame::inner(const PolyVec& u, const PolyVec& v) const {
    Polynomial r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            const Rational& gij = g(i, j);
            if (gij.is_zero() || v[j].is_zero()) continue;
            r += (u[i] * v[j]).scaled(gij);
        }
    }
    return r;
}

Polynomial ParacontactFrame::eta_of(const PolyVec& v) const {
    Polynomial r = zero();
    for (std::size_t i = 0; i < dim(); ++i)
        if (!eta[i].is_zero()) r += v[i].scaled(eta[i]);
    return r;
}

PolyVec ParacontactFrame::bracket_of(const PolyVec& u, const PolyVec& v) const {
    PolyVec r = zero_vec();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j].is_zero()) continue;
            Polynomial c = u[i] * v[j];
            const PolyVec& br = bracket(i, j);
            for (std::size_t k = 0; k < dim(); ++k)
                if (!br[k].is_zero()) r[k] += c * br[k];
        }
    }
    return r;
}

std::vector<Violation> jacobi_check(const FrameSpec& spec) {
    std::vector<Violation> out;
    const std::size_t d = spec.dim;
    auto bracket_vec = [&](const PolyVec& u, std::size_t j) {
        PolyVec r = spec.zero_vec();
        for (std::size_t i = 0; i < d; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k)
                if (!spec.brackets[i][j][k].is_zero()) r[k] += u[i] * spec.brackets[i][j][k];
        }
        return r;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                PolyVec sum = bracket_vec(spec.brackets[i][j], k);
                PolyVec t = bracket_vec(spec.brackets[j][k], i);
                PolyVec u = bracket_vec(spec.brackets[k][i], j);
                for (std::size_t m = 0; m < d; ++m) sum[m] += t[m] + u[m];
                if (!is_zero(sum)) {
                    std::string res;
                    for (std::size_t m = 0; m < d; ++m) {
                        if (sum[m].is_zero()) continue;
                        if (!res.empty()) res += "; ";
                        res += "E" + std::to_string(m) + ": " + sum[m].to_string();
                    }
                    out.push_back({"JacobiViolation", {i, j, k}, res});
                }
            }
    return out;
}

PolyMat compute_h(const FrameSpec& spec, const RationalMatrix& phi) {
    const std::size_t d = spec.dim;
    PolyMat ad(d, spec.params);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            ad.at(i, j) = spec.brackets[spec.xi_index][j][i];
    PolyMat phip = PolyMat::from_rational(phi, spec.params);
    PolyMat lie = ad * phip - phip * ad;
    PolyMat h(d, spec.params);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h.at(i, j) = lie.at(i, j).scaled(Rational(1, 2));
    return h;
}

namespace {

void check_zero(std::vector<Violation>& out, const Polynomial& p, const std::string& axiom,
                std::vector<std::size_t> idx) {
    if (!p.is_zero()) out.push_back({axiom, std::move(idx), p.to_string()});
}

// All axioms for a concrete phi. Returns violations (empty == valid frame).
std::vector<Violation> axiom_violations(const FrameSpec& spec, const SignConvention& conv,
                                        const RationalMatrix& phi, PolyMat* h_out) {
    std::vector<Violation> out;
    const std::size_t d = spec.dim;
    const std::size_t xi = spec.xi_index;
    const auto& vars = spec.params;
    auto constant = [&](Rational c) { return Polynomial::constant(vars, std::move(c)); };

    // eta_i = g(xi, E_i)
    std::vector<Rational> eta(d);
    for (std::size_t i = 0; i < d; ++i) eta[i] = spec.metric.at(xi, i);

    // phi xi = 0
    for (std::size_t i = 0; i < d; ++i)
        if (!phi.at(i, xi).is_zero()) {
            out.push_back({"phi-xi", {i}, phi.at(i, xi).to_string()});
            break;
        }

    // phi^2 = I - eta (x) xi
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            Rational v;
            for (std::size_t k = 0; k < d; ++k) v += phi.at(i, k) * phi.at(k, j);
            Rational want = (i == j ? Rational(1) : Rational(0)) -
                            (i == xi ? eta[j] : Rational(0));
            if (v != want) out.push_back({"phi-square", {i, j}, (v - want).to_string()});
        }

    // g(phi X, phi Y) = -g(X,Y) + eta(X) eta(Y)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Rational v;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    v += phi.at(i, a) * phi.at(j, b) * spec.metric.at(i, j);
            Rational want = -spec.metric.at(a, b) + eta[a] * eta[b];
            if (v != want) out.push_back({"phi-metric", {a, b}, (v - want).to_string()});
        }

    // eta(phi X) = 0
    for (std::size_t j = 0; j < d; ++j) {
        Rational v;
        for (std::size_t i = 0; i < d; ++i) v += eta[i] * phi.at(i, j);
        if (!v.is_zero()) out.push_back({"eta-phi", {j}, v.to_string()});
    }

    // d eta(E_a, E_b) = g(E_a, phi E_b), with the left side reducing to
    // -sigma/2 * eta([E_a, E_b]) for left-invariant data.
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Polynomial lhs(vars);
            for (std::size_t k = 0; k < d; ++k)
                if (!eta[k].is_zero()) lhs += spec.brackets[a][b][k].scaled(eta[k]);
            lhs = lhs.scaled(Rational(-conv.d_eta_sign, 2));
            Rational rhs;
            for (std::size_t i = 0; i < d; ++i) rhs += spec.metric.at(a, i) * phi.at(i, b);
            check_zero(out, lhs - constant(rhs), "deta-compatibility", {a, b});
        }

    // Derived h and its structure equations.
    PolyMat h = compute_h(spec, phi);
    PolyMat phip = PolyMat::from_rational(phi, vars);
    PolyMat anti = h * phip + phip * h;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            check_zero(out, anti.at(i, j), "h-phi-anticommute", {i, j});
    for (std::size_t i = 0; i < d; ++i) check_zero(out, h.at(i, xi), "h-xi", {i});
    check_zero(out, h.trace(), "h-traceless", {});
    check_zero(out, (h * phip).trace(), "h-phi-traceless", {});
    // g-self-adjoint: g(hX, Y) = g(X, hY)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Polynomial lhs(vars), rhs(vars);
            for (std::size_t i = 0; i < d; ++i) {
                if (!spec.metric.at(i, b).is_zero()) lhs += h.at(i, a).scaled(spec.metric.at(i, b));
                if (!spec.metric.at(a, i).is_zero()) rhs += h.at(i, b).scaled(spec.metric.at(a, i));
            }
            check_zero(out, lhs - rhs, "h-selfadjoint", {a, b});
        }

    if (out.empty() && h_out != nullptr) *h_out = h;
    return out;
}

std::vector<RationalMatrix> candidate_phis(const FrameSpec& spec) {
    std::vector<RationalMatrix> cands;
    if (spec.phi.has_value()) {
        cands.push_back(*spec.phi);
        return cands;
    }
    const std::size_t d = spec.dim;
    const auto& pairs = spec.pairing;
    if (pairs.empty()) return cands;

    // Every non-xi slot must occur in exactly one pair.
    std::vector<int> seen(d, 0);
    seen[spec.xi_index] = 1;
    for (auto [a, b] : pairs) {
        if (a >= d || b >= d) return {};
        ++seen[a];
        ++seen[b];
    }
    for (std::size_t i = 0; i < d; ++i)
        if (seen[i] != 1) return {};

    std::size_t count = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        RationalMatrix phi(d);
        bool usable = true;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [a, b] = pairs[p];
            Rational s((mask >> p) & 1 ? -1 : 1);
            const Rational& gaa = spec.metric.at(a, a);
            const Rational& gbb = spec.metric.at(b, b);
            if (gaa.is_zero() && gbb.is_zero()) {
                // null pair: phi has eigenvalues +-1 on the pair
                phi.at(a, a) = s;
                phi.at(b, b) = -s;
            } else if (!gaa.is_zero() && !gbb.is_zero()) {
                // pseudo-orthonormal pair: phi swaps the slots
                phi.at(b, a) = s;
                phi.at(a, b) = s;
            } else {
                usable = false;
                break;
            }
        }
        if (usable) cands.push_back(phi);
    }
    return cands;
}

}  // namespace

std::vector<RationalMatrix> infer_phi(const FrameSpec& spec, const SignConvention& conv) {
    std::vector<RationalMatrix> out;
    for (const auto& phi : candidate_phis(spec)) {
        if (axiom_violations(spec, conv, phi, nullptr).empty() && jacobi_check(spec).empty())
            out.push_back(phi);
    }
    return out;
}

ValidationResult validate(const FrameSpec& spec, const SignConvention& conv) {
    ValidationResult result;
    std::vector<Violation>& out = result.violations;
    const std::size_t d = spec.dim;

    if (d < 3 || d % 2 == 0) {
        out.push_back({"dimension", {}, "dim must be odd and >= 3"});
        return result;
    }
    if (spec.metric.dim() != d || spec.brackets.size() != d) {
        out.push_back({"shape", {}, "metric/bracket tables do not match dim"});
        return result;
    }

    if (!spec.metric.is_symmetric()) out.push_back({"metric-symmetric", {}, ""});
    auto ginv = spec.metric.inverse();
    if (!ginv.has_value()) {
        out.push_back({"metric-nondegenerate", {}, "DegenerateMetric"});
        return result;
    }
    if (spec.metric.at(spec.xi_index, spec.xi_index) != Rational(1))
        out.push_back({"unit-xi", {spec.xi_index, spec.xi_index},
                       spec.metric.at(spec.xi_index, spec.xi_index).to_string()});

    // bracket antisymmetry
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!(spec.brackets[i][j][k] + spec.brackets[j][i][k]).is_zero()) {
                    out.push_back({"bracket-antisymmetry", {i, j, k}, ""});
                    i = j = d - 1;
                    k = d;
                    break;
                }

    auto jac = jacobi_check(spec);
    out.insert(out.end(), jac.begin(), jac.end());

    auto cands = candidate_phis(spec);
    if (cands.empty()) {
        out.push_back({"phi", {}, spec.phi ? "missing phi" : "NoConsistentPhi: no usable pairing"});
        return result;
    }

    // If phi was given, report its violations; with a pairing, pick the
    // pattern that validates (and require it to be unique).
    std::vector<Violation> best;
    bool have_best = false;
    RationalMatrix chosen;
    PolyMat h;
    std::size_t passing = 0;
    for (const auto& phi : cands) {
        PolyMat h_try;
        auto v = axiom_violations(spec, conv, phi, &h_try);
        if (v.empty()) {
            ++passing;
            chosen = phi;
            h = h_try;
        } else if (!have_best || v.size() < best.size()) {
            best = v;
            have_best = true;
        }
    }
    if (passing == 0) {
        if (!spec.phi.has_value())
            out.push_back({"phi", {}, "NoConsistentPhi: no sign pattern passes"});
        out.insert(out.end(), best.begin(), best.end());
        return result;
    }
    if (passing > 1) {
        out.push_back({"phi", {}, "ambiguous phi: several sign patterns pass"});
        return result;
    }
    if (!out.empty()) return result;

    ParacontactFrame frame;
    frame.spec = spec;
    frame.spec.phi = chosen;
    frame.conv = conv;
    frame.n = (d - 1) / 2;
    frame.eta.resize(d);
    for (std::size_t i = 0; i < d; ++i) frame.eta[i] = spec.metric.at(spec.xi_index, i);
    frame.ginv = *ginv;
    frame.phi = chosen;
    frame.h = h;
    result.frame = std::move(frame);
    return result;
}

}  // namespace pclab
