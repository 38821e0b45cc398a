#pragma once

#include "pclab/curvature.hpp"

namespace pclab {

struct DeformationParams {
    Rational t;       // nonzero
    int eps = +1;     // +1 or -1
};

struct DegenerateDeformedMetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D-homothetic deformation eta_t = t eta, xi_t = xi/t, phi_t = phi,
// g_t = t g + eps t(t-1) eta (x) eta, expressed on the rescaled frame
// {xi/t, unchanged non-xi slots}. Throws on t = 0 or a degenerate result.
FrameSpec d_homothety(const ParacontactFrame& frame, const DeformationParams& p);

// rho_t(X, xi_t) = (1/t) rho(X, xi) for X in ker eta, componentwise.
bool check_deformed_ricci_relation(const ParacontactFrame& orig, const CurvaturePackage& orig_pkg,
                                   const CurvaturePackage& deformed_pkg, const Rational& t);

// t R_t(X,Y) xi_t = R(X,Y) xi + (t-1)((nabla_X phi)Y - (nabla_Y phi)X)
// for X, Y in ker eta.
bool check_restricted_curvature_relation(const ParacontactFrame& orig, const Connection& orig_conn,
                                         const CurvaturePackage& orig_pkg,
                                         const CurvaturePackage& deformed_pkg, const Rational& t);

}  // namespace pclab
