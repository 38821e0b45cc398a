#include "pclab/curvature.hpp"

namespace pclab {

PolyVec Connection::nabla_endo(const ParacontactFrame& f, std::size_t i, const PolyMat& t,
                               std::size_t j) const {
    PolyVec tj(f.dim(), f.zero());
    for (std::size_t k = 0; k < f.dim(); ++k) tj[k] = t.at(k, j);
    PolyVec first = nabla(f, i, tj);
    PolyVec second = t.apply(gamma[i][j]);
    return first - second;
}

PolyMat phi_mat(const ParacontactFrame& frame) {
    return PolyMat::from_rational(frame.phi, frame.params());
}

Connection levi_civita(const ParacontactFrame& frame) {
    const std::size_t d = frame.dim();
    const auto& vars = frame.params();

    // A(i,j,k) = g([E_i,E_j], E_k)
    auto A = [&](std::size_t i, std::size_t j, std::size_t k) {
        Polynomial r(vars);
        for (std::size_t m = 0; m < d; ++m) {
            const Rational& gmk = frame.g(m, k);
            if (!gmk.is_zero() && !frame.bracket(i, j)[m].is_zero())
                r += frame.bracket(i, j)[m].scaled(gmk);
        }
        return r;
    };

    Connection conn;
    conn.gamma.assign(d, std::vector<PolyVec>(d, frame.zero_vec()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            // Koszul: 2 g(nabla_{E_i}E_j, E_k) = A(i,j,k) - A(j,k,i) + A(k,i,j)
            PolyVec pair(d, frame.zero());
            for (std::size_t k = 0; k < d; ++k)
                pair[k] = (A(i, j, k) - A(j, k, i) + A(k, i, j)).scaled(Rational(1, 2));
            for (std::size_t l = 0; l < d; ++l) {
                Polynomial comp(vars);
                for (std::size_t k = 0; k < d; ++k) {
                    const Rational& ginv_lk = frame.ginv.at(l, k);
                    if (!ginv_lk.is_zero()) comp += pair[k].scaled(ginv_lk);
                }
                conn.gamma[i][j][l] = comp;
            }
        }

    // Torsion-free: nabla_{E_i}E_j - nabla_{E_j}E_i = [E_i, E_j]
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            PolyVec res = conn.gamma[i][j] - conn.gamma[j][i];
            for (std::size_t k = 0; k < d; ++k) res[k] -= frame.bracket(i, j)[k];
            if (!is_zero(res)) throw EngineError("levi_civita: torsion residual nonzero");
        }
    // Metric: g(nabla_{E_i}E_j, E_k) + g(E_j, nabla_{E_i}E_k) = 0
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Polynomial res = frame.inner(conn.gamma[i][j], frame.basis_vec(k)) +
                                 frame.inner(frame.basis_vec(j), conn.gamma[i][k]);
                if (!res.is_zero()) throw EngineError("levi_civita: metric residual nonzero");
            }
    return conn;
}

CurvaturePackage riemann(const ParacontactFrame& frame, const Connection& conn) {
    const std::size_t d = frame.dim();
    const auto& vars = frame.params();

    CurvaturePackage pkg;
    pkg.riemann.assign(d, std::vector<std::vector<PolyVec>>(d, std::vector<PolyVec>(d)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                PolyVec r = conn.nabla_along(frame, frame.bracket(i, j), frame.basis_vec(k));
                r = r - conn.nabla(frame, i, conn.gamma[j][k]);
                r = r + conn.nabla(frame, j, conn.gamma[i][k]);
                pkg.riemann[i][j][k] = std::move(r);
            }

    // rho(E_j, E_k) = tr( E_i -> R(E_j, E_i)E_k )
    pkg.ricci = PolyMat(d, vars);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Polynomial tr(vars);
            for (std::size_t i = 0; i < d; ++i) tr += pkg.riemann[j][i][k][i];
            pkg.ricci.at(j, k) = tr;
        }

    pkg.ricci_op = PolyMat(d, vars);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial q(vars);
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& ginv_ik = frame.ginv.at(i, k);
                if (!ginv_ik.is_zero()) q += pkg.ricci.at(k, j).scaled(ginv_ik);
            }
            pkg.ricci_op.at(i, j) = q;
        }
    pkg.scalar = pkg.ricci_op.trace();

    // Structural invariants, verified identically in the parameters.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (!is_zero(pkg.riemann[i][j][k] + pkg.riemann[j][i][k]))
                    throw EngineError("riemann: antisymmetry in (X,Y) fails");
                PolyVec bianchi = pkg.riemann[i][j][k] + pkg.riemann[j][k][i] +
                                  pkg.riemann[k][i][j];
                if (!is_zero(bianchi)) throw EngineError("riemann: first Bianchi fails");
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Polynomial low_ijkl = frame.inner(pkg.riemann[i][j][k], frame.basis_vec(l));
                    Polynomial low_ijlk = frame.inner(pkg.riemann[i][j][l], frame.basis_vec(k));
                    if (!(low_ijkl + low_ijlk).is_zero())
                        throw EngineError("riemann: antisymmetry in (Z,W) fails");
                    Polynomial low_klij = frame.inner(pkg.riemann[k][l][i], frame.basis_vec(j));
                    if (!(low_ijkl - low_klij).is_zero())
                        throw EngineError("riemann: pair symmetry fails");
                }
    if (!(pkg.ricci - [&] {
            PolyMat t = pkg.ricci;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) t.at(i, j) = pkg.ricci.at(j, i);
            return t;
        }()).is_zero())
        throw EngineError("riemann: ricci not symmetric");

    // Standard-convention crosscheck: rho from R_std(X,Y) = -R(X,Y) via
    // rho_std(X,Y) = tr(Z -> R_std(Z,X)Y) must coincide with rho.
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Polynomial tr(vars);
            for (std::size_t i = 0; i < d; ++i) tr -= pkg.riemann[i][j][k][i];
            if (!(tr - pkg.ricci.at(j, k)).is_zero())
                throw EngineError("riemann: convention crosscheck fails");
        }
    return pkg;
}

PolyVec rough_laplacian(const ParacontactFrame& frame, const Connection& conn, const PolyVec& v) {
    const std::size_t d = frame.dim();
    PolyVec out = frame.zero_vec();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& gij = frame.ginv.at(i, j);
            if (gij.is_zero()) continue;
            PolyVec term = conn.nabla_along(frame, conn.gamma[i][j], v) -
                           conn.nabla(frame, i, conn.nabla(frame, j, v));
            for (std::size_t k = 0; k < d; ++k)
                if (!term[k].is_zero()) out[k] += term[k].scaled(gij);
        }
    return out;
}

PolyVec divergence_endo(const ParacontactFrame& frame, const Connection& conn, const PolyMat& t) {
    const std::size_t d = frame.dim();
    PolyVec out = frame.zero_vec();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& gij = frame.ginv.at(i, j);
            if (gij.is_zero()) continue;
            PolyVec term = conn.nabla_endo(frame, i, t, j);
            for (std::size_t k = 0; k < d; ++k)
                if (!term[k].is_zero()) out[k] += term[k].scaled(gij);
        }
    return out;
}

std::vector<std::vector<PolyVec>> nabla_phi_table(const ParacontactFrame& frame,
                                                  const Connection& conn) {
    const std::size_t d = frame.dim();
    PolyMat phi = phi_mat(frame);
    std::vector<std::vector<PolyVec>> out(d, std::vector<PolyVec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i][j] = conn.nabla_endo(frame, i, phi, j);
    return out;
}

PolyVec trace_nabla_phi(const ParacontactFrame& frame, const Connection& conn) {
    const std::size_t d = frame.dim();
    PolyMat phi = phi_mat(frame);
    PolyVec out = frame.zero_vec();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& gij = frame.ginv.at(i, j);
            if (gij.is_zero()) continue;
            PolyVec term = conn.nabla_endo(frame, i, phi, j);
            for (std::size_t k = 0; k < d; ++k)
                if (!term[k].is_zero()) out[k] += term[k].scaled(gij);
        }
    return out;
}

PolyVec harmonic_map_trace(const ParacontactFrame& frame, const Connection& conn,
                           const CurvaturePackage& pkg) {
    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    PolyVec out = frame.zero_vec();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& gij = frame.ginv.at(i, j);
            if (gij.is_zero()) continue;
            const PolyVec& nabla_xi = conn.gamma[i][xi];
            PolyVec term = pkg.R_along(frame, nabla_xi, xi, j);
            for (std::size_t k = 0; k < d; ++k)
                if (!term[k].is_zero()) out[k] += term[k].scaled(gij);
        }
    return out;
}

}  // namespace pclab
