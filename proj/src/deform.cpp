#include "pclab/deform.hpp"

namespace pclab {

FrameSpec d_homothety(const ParacontactFrame& frame, const DeformationParams& p) {
    if (p.t.is_zero()) throw std::invalid_argument("d_homothety: t must be nonzero");
    if (p.eps != 1 && p.eps != -1) throw std::invalid_argument("d_homothety: eps must be +-1");
    const std::size_t d = frame.dim();
    const std::size_t xi = frame.spec.xi_index;
    const Rational& t = p.t;
    const Rational eps(p.eps);

    FrameSpec out = frame.spec;
    out.label = frame.spec.label + "_t" + t.to_string() + (p.eps < 0 ? "_eps-1" : "");
    out.phi = frame.phi;  // unchanged on non-xi slots; xi column is zero anyway

    // New frame F_xi = xi / t, F_i = E_i. Old components convert by
    // v_new[xi] = t * v_old[xi], other components unchanged.
    auto convert = [&](const PolyVec& v) {
        PolyVec r = v;
        r[xi] = r[xi].scaled(t);
        return r;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            PolyVec br = frame.bracket(i, j);
            Rational scale(1);
            if (i == xi) scale = scale / t;
            if (j == xi) scale = scale / t;
            br = convert(br);
            for (auto& c : br) c = c.scaled(scale);
            out.brackets[i][j] = br;
        }

    // g_t(F_a, F_b) = t g(F_a,F_b) + eps t(t-1) eta(F_a) eta(F_b) with
    // F_xi = xi/t scaling both slots.
    RationalMatrix gt(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Rational scale(1);
            if (a == xi) scale = scale / t;
            if (b == xi) scale = scale / t;
            Rational base = t * frame.g(a, b) + eps * t * (t - Rational(1)) *
                                                    frame.eta[a] * frame.eta[b];
            gt.at(a, b) = scale * base;
        }
    if (gt.det().is_zero())
        throw DegenerateDeformedMetric("d_homothety: deformed metric is degenerate");
    out.metric = gt;

    // phi_t agrees with phi away from xi; its xi column stays zero and any
    // xi-component of phi outputs converts like the other vectors.
    RationalMatrix phit(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational v = frame.phi.at(i, j);
            if (i == xi) v = v * t;
            if (j == xi) v = Rational(0);
            phit.at(i, j) = v;
        }
    out.phi = phit;
    return out;
}

bool check_deformed_ricci_relation(const ParacontactFrame& orig, const CurvaturePackage& orig_pkg,
                                   const CurvaturePackage& deformed_pkg, const Rational& t) {
    const std::size_t d = orig.dim();
    const std::size_t xi = orig.spec.xi_index;
    for (std::size_t i = 0; i < d; ++i) {
        if (i == xi) continue;
        Polynomial lhs = deformed_pkg.ricci.at(i, xi);
        Polynomial rhs = orig_pkg.ricci.at(i, xi).scaled(t.inverse());
        if (!(lhs - rhs).is_zero()) return false;
    }
    return true;
}

bool check_restricted_curvature_relation(const ParacontactFrame& orig, const Connection& orig_conn,
                                         const CurvaturePackage& orig_pkg,
                                         const CurvaturePackage& deformed_pkg, const Rational& t) {
    const std::size_t d = orig.dim();
    const std::size_t xi = orig.spec.xi_index;
    auto nphi = nabla_phi_table(orig, orig_conn);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == xi || j == xi) continue;
            // Left side in the original frame components: the deformed frame
            // vector F_xi equals xi/t, so v_old[xi] = v_new[xi] / t.
            PolyVec lhs = deformed_pkg.riemann[i][j][xi];
            lhs[xi] = lhs[xi].scaled(t.inverse());
            for (auto& c : lhs) c = c.scaled(t);
            PolyVec rhs = orig_pkg.riemann[i][j][xi];
            Polynomial tm1 = Polynomial::constant(orig.params(), t - Rational(1));
            PolyVec diff = nphi[i][j] - nphi[j][i];
            for (std::size_t l = 0; l < d; ++l) rhs[l] += tm1 * diff[l];
            if (!is_zero(lhs - rhs)) return false;
        }
    return true;
}

}  // namespace pclab
