#include "pclab/classify.hpp"

#include <algorithm>

namespace pclab {

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Conditional: return "conditional";
    }
    return "?";
}

namespace {

Polynomial squarefree_lite(Polynomial p) {
    while (p.total_degree() >= 2) {
        auto s = p.sqrt_exact();
        if (!s.has_value()) break;
        p = std::move(*s);
    }
    return p.primitive_normalized();
}

}  // namespace

ConditionSet::ConditionSet(std::vector<std::string> vars, std::vector<Polynomial> gens,
                           std::vector<Polynomial> inequations)
    : vars_(std::move(vars)), gens_(std::move(gens)), inequations_(std::move(inequations)) {
    for (auto& q : inequations_) q = squarefree_lite(q.primitive_normalized());
    canonicalize();
}

void ConditionSet::canonicalize() {
    std::vector<Polynomial> canon;
    bool unsat = false;
    for (auto& g : gens_) {
        Polynomial c = squarefree_lite(g.primitive_normalized());
        if (c.is_zero()) continue;
        // On the admissible locus an inequation factor never vanishes, so it
        // can be divided out of a generator.
        bool divided = true;
        while (divided && !c.as_constant().has_value()) {
            divided = false;
            for (const auto& q : inequations_) {
                if (q.as_constant().has_value()) continue;
                if (auto r = c.divide_exact(q)) {
                    c = squarefree_lite(r->primitive_normalized());
                    divided = true;
                    break;
                }
            }
        }
        if (c.as_constant().has_value()) {
            unsat = true;  // a nonzero constant must vanish: impossible
            break;
        }
        canon.push_back(std::move(c));
    }
    if (unsat) {
        gens_ = {Polynomial::constant(vars_, Rational(1))};
        status_ = Status::Fails;
        return;
    }
    // dedupe
    std::sort(canon.begin(), canon.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    // drop generators that are exact multiples of another generator
    std::vector<Polynomial> kept;
    std::stable_sort(canon.begin(), canon.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.total_degree() < b.total_degree();
    });
    for (const auto& g : canon) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (g.divide_exact(k).has_value()) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
    gens_ = std::move(kept);
    status_ = gens_.empty() ? Status::Holds : Status::Conditional;
}

namespace {

bool power_matches(const Polynomial& a, const Polynomial& b) {
    if (a == b) return true;
    for (unsigned k = 2; k <= 4; ++k) {
        if (a.pow(k).primitive_normalized() == b) return true;
        if (b.pow(k).primitive_normalized() == a) return true;
    }
    return false;
}

bool subset_matches(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    for (const auto& g : a) {
        bool found = false;
        for (const auto& h : b)
            if (power_matches(g, h)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool ConditionSet::equivalent(const ConditionSet& other) const {
    if (status_ != other.status_) return false;
    if (status_ != Status::Conditional) return true;
    return subset_matches(gens_, other.gens_) && subset_matches(other.gens_, gens_);
}

bool ConditionSet::satisfied_by(const std::map<std::string, Rational>& assignment) const {
    for (const auto& g : gens_) {
        auto v = g.substitute(assignment).as_constant();
        if (!v.has_value() || !v->is_zero()) return false;
    }
    for (const auto& q : inequations_) {
        auto v = q.substitute(assignment).as_constant();
        if (v.has_value() && v->is_zero()) return false;
    }
    return true;
}

std::vector<std::string> ConditionSet::gen_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
}

namespace {

Verdict verdict_from_gens(const ParacontactFrame& frame, std::vector<Polynomial> gens,
                          const std::vector<Polynomial>& inequations) {
    Verdict v;
    std::string witness;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            witness = g.to_string();
            break;
        }
    v.conditions = ConditionSet(frame.params(), std::move(gens), inequations);
    v.status = v.conditions.status();
    if (v.status != Status::Holds) v.witness = witness;
    return v;
}

void append_vec(std::vector<Polynomial>& gens, const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) gens.push_back(p);
}

PolyVec q_xi(const ParacontactFrame& frame, const CurvaturePackage& pkg) {
    PolyVec v = frame.zero_vec();
    for (std::size_t i = 0; i < frame.dim(); ++i)
        v[i] = pkg.ricci_op.at(i, frame.spec.xi_index);
    return v;
}

}  // namespace

Polynomial tr_h_squared(const ParacontactFrame& frame) {
    return (frame.h * frame.h).trace();
}

PolyMat half_lie_xi_metric(const ParacontactFrame& frame, const Connection& conn) {
    const std::size_t d = frame.dim();
    PolyMat l(d, frame.params());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t xi = frame.spec.xi_index;
            Polynomial v = frame.inner(conn.gamma[i][xi], frame.basis_vec(j)) +
                           frame.inner(frame.basis_vec(i), conn.gamma[j][xi]);
            l.at(i, j) = v.scaled(Rational(1, 2));
        }
    return l;
}

Verdict is_K_paracontact(const ParacontactFrame& frame,
                         const std::vector<Polynomial>& inequations) {
    const std::size_t d = frame.dim();
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!frame.h.at(i, j).is_zero()) gens.push_back(frame.h.at(i, j));
    Verdict v = verdict_from_gens(frame, gens, inequations);

    // Independent crosscheck: h = 0 iff xi is Killing (L_xi g = 0).
    std::vector<Polynomial> killing;
    const std::size_t xi = frame.spec.xi_index;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Polynomial lie = -frame.inner(frame.bracket(xi, i), frame.basis_vec(j)) -
                             frame.inner(frame.basis_vec(i), frame.bracket(xi, j));
            if (!lie.is_zero()) killing.push_back(lie);
        }
    ConditionSet killing_set(frame.params(), std::move(killing), inequations);
    if (!v.conditions.equivalent(killing_set))
        throw EngineError("is_K_paracontact: h = 0 and Killing condition sets differ");
    return v;
}

Verdict is_paraSasakian(const ParacontactFrame& frame, const Connection& conn,
                        const std::vector<Polynomial>& inequations) {
    const std::size_t d = frame.dim();
    auto nphi = nabla_phi_table(frame, conn);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            PolyVec res = nphi[i][j];
            res[frame.spec.xi_index] += Polynomial::constant(frame.params(), frame.g(i, j));
            res[i] -= Polynomial::constant(frame.params(), frame.eta[j]);
            append_vec(gens, res);
        }
    return verdict_from_gens(frame, gens, inequations);
}

Verdict check_eq4(const ParacontactFrame& frame, const CurvaturePackage& pkg,
                  const std::vector<Polynomial>& inequations) {
    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            PolyVec res = pkg.riemann[i][j][xi];
            res[j] += Polynomial::constant(frame.params(), frame.eta[i]);
            res[i] -= Polynomial::constant(frame.params(), frame.eta[j]);
            append_vec(gens, res);
        }
    return verdict_from_gens(frame, gens, inequations);
}

EtaEinsteinFit eta_einstein_fit(const ParacontactFrame& frame, const CurvaturePackage& pkg,
                                const std::vector<Polynomial>& inequations) {
    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    // Q = a I + b eta (x) xi, i.e. Q_{ij} = a d_{ij} + b eta_j d_{i,xi}.
    // Two-unknown rational linear system; solved from an invertible 2x2 pair.
    struct Row {
        Rational ca, cb;
        Polynomial rhs;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational ca = i == j ? Rational(1) : Rational(0);
            Rational cb = i == xi ? frame.eta[j] : Rational(0);
            rows.push_back({ca, cb, pkg.ricci_op.at(i, j)});
        }
    EtaEinsteinFit fit;
    fit.a = frame.zero();
    fit.b = frame.zero();
    bool solved = false;
    for (std::size_t r1 = 0; r1 < rows.size() && !solved; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < rows.size() && !solved; ++r2) {
            Rational det = rows[r1].ca * rows[r2].cb - rows[r2].ca * rows[r1].cb;
            if (det.is_zero()) continue;
            fit.a = (rows[r1].rhs.scaled(rows[r2].cb) - rows[r2].rhs.scaled(rows[r1].cb))
                        .scaled(det.inverse());
            fit.b = (rows[r2].rhs.scaled(rows[r1].ca) - rows[r1].rhs.scaled(rows[r2].ca))
                        .scaled(det.inverse());
            solved = true;
        }
    if (!solved) {
        fit.verdict.status = Status::Fails;
        fit.verdict.witness = "no invertible defining pair";
        return fit;
    }
    std::vector<Polynomial> gens;
    for (const auto& row : rows) {
        Polynomial res = row.rhs - fit.a.scaled(row.ca) - fit.b.scaled(row.cb);
        if (!res.is_zero()) gens.push_back(res);
    }
    fit.verdict = verdict_from_gens(frame, gens, inequations);
    fit.found = fit.verdict.status == Status::Holds;
    return fit;
}

KmFit km_fit(const ParacontactFrame& frame, const CurvaturePackage& pkg) {
    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    const auto& vars = frame.params();

    // R(E_i,E_j)xi = kappa (eta_i E_j - eta_j E_i) + mu (eta_i h E_j - eta_j h E_i)
    struct Row {
        Rational ck;
        Polynomial cm;
        Polynomial rhs;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            for (std::size_t l = 0; l < d; ++l) {
                Rational ck = (l == j ? frame.eta[i] : Rational(0)) -
                              (l == i ? frame.eta[j] : Rational(0));
                Polynomial cm = frame.h.at(l, j).scaled(frame.eta[i]) -
                                frame.h.at(l, i).scaled(frame.eta[j]);
                Polynomial rhs = pkg.riemann[i][j][xi][l];
                if (ck.is_zero() && cm.is_zero() && rhs.is_zero()) continue;
                rows.push_back({ck, std::move(cm), std::move(rhs)});
            }
        }

    KmFit fit;
    for (const auto& row : rows)
        if (row.ck.is_zero() && row.cm.is_zero()) {
            fit.witness = "unbalanced component " + row.rhs.to_string();
            return fit;
        }

    bool h_zero = frame.h.is_zero();
    std::optional<Polynomial> kappa, mu;
    // pure-kappa rows
    for (const auto& row : rows)
        if (!row.ck.is_zero() && row.cm.is_zero()) {
            kappa = row.rhs.scaled(row.ck.inverse());
            break;
        }
    if (h_zero) {
        if (!kappa.has_value()) {
            fit.witness = "no kappa-determining component";
            return fit;
        }
        mu = frame.zero();
        fit.mu_unconstrained = true;
    } else {
        // pure-mu rows, preferring rational coefficients
        for (const auto& row : rows) {
            if (!row.ck.is_zero() || row.cm.is_zero()) continue;
            if (auto c = row.cm.as_constant()) {
                mu = row.rhs.scaled(c->inverse());
                break;
            }
        }
        if (!mu.has_value())
            for (const auto& row : rows) {
                if (!row.ck.is_zero() || row.cm.is_zero()) continue;
                if (auto q = row.rhs.divide_exact(row.cm)) {
                    mu = std::move(*q);
                    break;
                }
            }
        if (kappa.has_value() && !mu.has_value()) {
            for (const auto& row : rows) {
                if (row.ck.is_zero() || row.cm.is_zero()) continue;
                Polynomial rest = row.rhs - kappa->scaled(row.ck);
                if (auto c = row.cm.as_constant()) {
                    mu = rest.scaled(c->inverse());
                    break;
                }
                if (auto q = rest.divide_exact(row.cm)) {
                    mu = std::move(*q);
                    break;
                }
            }
        }
        if (mu.has_value() && !kappa.has_value()) {
            for (const auto& row : rows) {
                if (row.ck.is_zero()) continue;
                kappa = (row.rhs - *mu * row.cm).scaled(row.ck.inverse());
                break;
            }
        }
        if (!kappa.has_value() && !mu.has_value()) {
            // 2x2 elimination over rows whose mu-coefficient is rational
            for (std::size_t r1 = 0; r1 < rows.size() && !kappa.has_value(); ++r1) {
                auto c1 = rows[r1].cm.as_constant();
                if (!c1.has_value() || rows[r1].ck.is_zero()) continue;
                for (std::size_t r2 = r1 + 1; r2 < rows.size(); ++r2) {
                    auto c2 = rows[r2].cm.as_constant();
                    if (!c2.has_value()) continue;
                    Rational det = rows[r1].ck * *c2 - rows[r2].ck * *c1;
                    if (det.is_zero()) continue;
                    kappa = (rows[r1].rhs.scaled(*c2) - rows[r2].rhs.scaled(*c1))
                                .scaled(det.inverse());
                    mu = (rows[r2].rhs.scaled(rows[r1].ck) - rows[r1].rhs.scaled(rows[r2].ck))
                             .scaled(det.inverse());
                    break;
                }
            }
        }
        if (!kappa.has_value() || !mu.has_value()) {
            fit.witness = "nullity coefficients not resolvable";
            return fit;
        }
    }

    for (const auto& row : rows) {
        Polynomial res = row.rhs - kappa->scaled(row.ck) - *mu * row.cm;
        if (!res.is_zero()) {
            fit.witness = "residual " + res.to_string();
            return fit;
        }
    }
    fit.found = true;
    fit.kappa = *kappa;
    fit.mu = *mu;

    // Contracting the nullity condition forces Q xi = 2n kappa xi.
    PolyVec qxi = q_xi(frame, pkg);
    qxi[xi] -= fit.kappa.scaled(Rational(static_cast<long long>(2 * frame.n)));
    if (!is_zero(qxi)) throw EngineError("km_fit: Q xi = 2n kappa xi fails");
    // h^2 = (kappa + 1) phi^2 (phi^2 = I - eta (x) xi).
    PolyMat h2 = frame.h * frame.h;
    Polynomial kp1 = fit.kappa + Polynomial::constant(vars, Rational(1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational phi2 = (i == j ? Rational(1) : Rational(0)) -
                            (i == xi ? frame.eta[j] : Rational(0));
            if (!(h2.at(i, j) - kp1.scaled(phi2)).is_zero())
                throw EngineError("km_fit: h^2 = (kappa+1) phi^2 fails");
        }
    return fit;
}

bool check_kno1(const ParacontactFrame& frame, const CurvaturePackage& pkg,
                const Polynomial& kappa, const Polynomial& mu) {
    Polynomial kp1 = kappa + Polynomial::constant(frame.params(), Rational(1));
    if (kp1.is_zero()) throw PreconditionError("check_kno1: kappa = -1 identically");

    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    PolyMat phih = phi_mat(frame) * frame.h;
    auto gphi = [&](std::size_t a, std::size_t b) {  // g(E_a, phi E_b)
        Rational r;
        for (std::size_t m = 0; m < d; ++m) r += frame.g(a, m) * frame.phi.at(m, b);
        return r;
    };
    auto g_h = [&](std::size_t a, std::size_t b) {  // g(h E_a, E_b)
        Polynomial r = frame.zero();
        for (std::size_t m = 0; m < d; ++m)
            if (!frame.g(m, b).is_zero()) r += frame.h.at(m, a).scaled(frame.g(m, b));
        return r;
    };
    auto g_phih = [&](std::size_t a, std::size_t b) {  // g(E_a, phi h E_b)
        Polynomial r = frame.zero();
        for (std::size_t m = 0; m < d; ++m)
            if (!frame.g(a, m).is_zero()) r += phih.at(m, b).scaled(frame.g(a, m));
        return r;
    };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                // lhs = R(E_i,E_j) h E_k - h R(E_i,E_j) E_k
                PolyVec lhs = frame.zero_vec();
                for (std::size_t m = 0; m < d; ++m) {
                    if (!frame.h.at(m, k).is_zero()) {
                        for (std::size_t l = 0; l < d; ++l)
                            if (!pkg.riemann[i][j][m][l].is_zero())
                                lhs[l] += frame.h.at(m, k) * pkg.riemann[i][j][m][l];
                    }
                }
                PolyVec hr = frame.h.apply(pkg.riemann[i][j][k]);
                lhs = lhs - hr;

                PolyVec rhs = frame.zero_vec();
                // xi-coefficient block
                Polynomial xi_coeff =
                    kappa * (g_h(i, k).scaled(frame.eta[j]) - g_h(j, k).scaled(frame.eta[i])) +
                    mu * kp1 *
                        (Polynomial::constant(frame.params(),
                                              frame.eta[j] * frame.g(i, k) -
                                                  frame.eta[i] * frame.g(j, k)));
                rhs[xi] += xi_coeff;
                // kappa( g(Y,phiZ) phi h X - g(X,phiZ) phi h Y
                //        + g(Z,phi h Y) phi X - g(Z,phi h X) phi Y )
                for (std::size_t l = 0; l < d; ++l) {
                    Polynomial t = phih.at(l, i).scaled(gphi(j, k)) -
                                   phih.at(l, j).scaled(gphi(i, k));
                    t += g_phih(k, j).scaled(frame.phi.at(l, i)) -
                         g_phih(k, i).scaled(frame.phi.at(l, j));
                    rhs[l] += kappa * t;
                }
                // kappa eta(Z)(eta(Y) hX - eta(X) hY)
                //   + mu(kappa+1) eta(Z)(eta(Y)X - eta(X)Y).
                // The eta(Z) h-term carries the kappa factor: without it the
                // identity already fails on flat space (kappa = mu = 0, R = 0,
                // h != 0), so the occasionally-seen bare form is a misprint.
                if (!frame.eta[k].is_zero()) {
                    for (std::size_t l = 0; l < d; ++l) {
                        Polynomial t = frame.h.at(l, i).scaled(frame.eta[j] * frame.eta[k]) -
                                       frame.h.at(l, j).scaled(frame.eta[i] * frame.eta[k]);
                        rhs[l] += kappa * t;
                    }
                    rhs[i] += mu * kp1.scaled(frame.eta[j] * frame.eta[k]);
                    rhs[j] -= mu * kp1.scaled(frame.eta[i] * frame.eta[k]);
                }
                // 2 mu g(X, phi Y) phi h Z
                Rational gij_phi = gphi(i, j);
                if (!gij_phi.is_zero())
                    for (std::size_t l = 0; l < d; ++l)
                        rhs[l] += mu.scaled(gij_phi * Rational(2)) * phih.at(l, k);

                if (!is_zero(lhs - rhs)) return false;
            }
    return true;
}

Verdict is_H_paracontact(const ParacontactFrame& frame, const Connection& conn,
                         const CurvaturePackage& pkg,
                         const std::vector<Polynomial>& inequations) {
    const std::size_t xi = frame.spec.xi_index;
    PolyVec qxi = q_xi(frame, pkg);
    std::vector<Polynomial> gens;
    for (std::size_t l = 0; l < frame.dim(); ++l)
        if (l != xi && !qxi[l].is_zero()) gens.push_back(qxi[l]);
    Verdict v = verdict_from_gens(frame, gens, inequations);

    // Crosscheck against "rough_laplacian(xi) is collinear to xi".
    PolyVec lap = rough_laplacian(frame, conn, frame.basis_vec(xi));
    std::vector<Polynomial> gens2;
    for (std::size_t l = 0; l < frame.dim(); ++l)
        if (l != xi && !lap[l].is_zero()) gens2.push_back(lap[l]);
    ConditionSet collinear(frame.params(), std::move(gens2), inequations);
    if (!v.conditions.equivalent(collinear))
        throw EngineError("is_H_paracontact: Ricci-eigenvector and collinearity sets differ");
    return v;
}

Verdict is_harmonic_map(const ParacontactFrame& frame, const Connection& conn,
                        const CurvaturePackage& pkg,
                        const std::vector<Polynomial>& inequations) {
    Verdict h = is_H_paracontact(frame, conn, pkg, inequations);
    PolyVec tr = harmonic_map_trace(frame, conn, pkg);
    std::vector<Polynomial> gens;
    for (const auto& g : h.conditions.gens()) gens.push_back(g);
    append_vec(gens, tr);
    return verdict_from_gens(frame, gens, inequations);
}

Verdict is_iht(const ParacontactFrame& frame, const Connection& conn,
               const CurvaturePackage& pkg, const std::vector<Polynomial>& inequations) {
    const std::size_t xi = frame.spec.xi_index;
    const Rational two_n(static_cast<long long>(2 * frame.n));

    // 1) Q xi = -2n xi
    PolyVec qxi = q_xi(frame, pkg);
    std::vector<Polynomial> g1;
    {
        PolyVec v = qxi;
        v[xi] += Polynomial::constant(frame.params(), two_n);
        append_vec(g1, v);
    }
    // 2) rough_laplacian(xi) = Q xi
    std::vector<Polynomial> g2;
    {
        PolyVec v = rough_laplacian(frame, conn, frame.basis_vec(xi)) - qxi;
        append_vec(g2, v);
    }
    // 3) H-paracontact and tr h^2 = 0
    Verdict hpara = is_H_paracontact(frame, conn, pkg, inequations);
    std::vector<Polynomial> g3 = hpara.conditions.gens();
    Polynomial trh2 = tr_h_squared(frame);
    if (!trh2.is_zero()) g3.push_back(trh2);

    ConditionSet s1(frame.params(), g1, inequations);
    ConditionSet s2(frame.params(), g2, inequations);
    ConditionSet s3(frame.params(), g3, inequations);
    if (!s1.equivalent(s2) || !s1.equivalent(s3))
        throw EngineError("is_iht: the three equivalent conditions disagree");

    Verdict v;
    v.conditions = s1;
    v.status = s1.status();
    if (v.status != Status::Holds && !s1.gens().empty())
        v.witness = s1.gens().front().to_string();
    return v;
}

SolitonResult soliton_solve(const ParacontactFrame& frame, const Connection& conn,
                            const CurvaturePackage& pkg) {
    const std::size_t d = frame.dim();
    SolitonResult out;
    out.lambda = frame.zero();
    PolyMat s = pkg.ricci + half_lie_xi_metric(frame, conn);

    // lambda from the first nonzero metric entry, then verify everywhere.
    std::optional<Polynomial> lambda;
    for (std::size_t i = 0; i < d && !lambda.has_value(); ++i)
        for (std::size_t j = 0; j < d && !lambda.has_value(); ++j)
            if (!frame.g(i, j).is_zero()) lambda = s.at(i, j).scaled(frame.g(i, j).inverse());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial res = s.at(i, j) - lambda->scaled(frame.g(i, j));
            if (!res.is_zero()) {
                out.witness = "residual at (" + std::to_string(i) + "," + std::to_string(j) +
                              "): " + res.to_string();
                return out;
            }
        }
    out.found = true;
    out.lambda = *lambda;

    Polynomial necessity =
        out.lambda + Polynomial::constant(frame.params(), Rational(static_cast<long long>(2 * frame.n)));
    if (!necessity.is_zero())
        throw EngineError("soliton_solve: lambda != -2n on an identically solvable frame");

    // trivial = Einstein with Killing xi
    bool einstein = true;
    Polynomial c = pkg.ricci.at(frame.spec.xi_index, frame.spec.xi_index);
    for (std::size_t i = 0; i < d && einstein; ++i)
        for (std::size_t j = 0; j < d && einstein; ++j)
            if (!(pkg.ricci.at(i, j) - c.scaled(frame.g(i, j))).is_zero()) einstein = false;
    out.trivial = einstein && frame.h.is_zero();
    return out;
}

bool check_kparacontact_identities(const ParacontactFrame& frame, const Connection& conn,
                                   const CurvaturePackage& pkg) {
    if (!frame.h.is_zero())
        throw PreconditionError("check_kparacontact_identities: h != 0");
    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    auto nphi = nabla_phi_table(frame, conn);
    // R(Y,Z)xi = (nabla_Y phi)Z - (nabla_Z phi)Y
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            PolyVec res = pkg.riemann[j][k][xi] - (nphi[j][k] - nphi[k][j]);
            if (!is_zero(res)) return false;
        }
    // g(R(xi,X)Y, Z) = g((nabla_X phi)Z, Y)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Polynomial lhs = frame.inner(pkg.riemann[xi][i][j], frame.basis_vec(k));
                Polynomial rhs = frame.inner(nphi[i][k], frame.basis_vec(j));
                if (!(lhs - rhs).is_zero()) return false;
            }
    return true;
}

Classification classify_all(const ParacontactFrame& frame, const Connection& conn,
                            const CurvaturePackage& pkg,
                            const std::vector<Polynomial>& inequations) {
    Classification c;
    c.K_paracontact = is_K_paracontact(frame, inequations);
    c.paraSasakian = is_paraSasakian(frame, conn, inequations);
    c.eq4 = check_eq4(frame, pkg, inequations);
    c.eta_fit = eta_einstein_fit(frame, pkg, inequations);
    c.eta_einstein = c.eta_fit.verdict;
    c.km = km_fit(frame, pkg);
    c.km_space.status = c.km.found ? Status::Holds : Status::Fails;
    if (!c.km.found) c.km_space.witness = c.km.witness;
    c.H_paracontact = is_H_paracontact(frame, conn, pkg, inequations);
    c.harmonic_map = is_harmonic_map(frame, conn, pkg, inequations);
    c.iht = is_iht(frame, conn, pkg, inequations);
    c.sol = soliton_solve(frame, conn, pkg);
    c.soliton.status = c.sol.found ? Status::Holds : Status::Fails;
    if (!c.sol.found) c.soliton.witness = c.sol.witness;
    return c;
}

}  // namespace pclab
