#pragma once

#include "pclab/curvature.hpp"

namespace pclab {

struct IdentityResult {
    std::string id;
    bool pass = false;
    std::string residual;  // empty when pass, otherwise a witness component
};

// Evaluates the structure-equation suite on a validated frame:
//   eq1     nabla xi = -phi + phi h, and nabla_xi phi = 0
//   eq2     (nabla_{phi X} phi)phi Y - (nabla_X phi)Y
//             = 2 g(X,Y) xi - eta(Y)(X - hX + eta(X) xi)
//   eq3     rho(xi,xi) = -2n + tr h^2
//   eq3.1p  tr nabla phi = -2n xi
//   eq3.3   R(X,Y)xi = (nabla_X phi)Y - (nabla_Y phi)X
//             - (nabla_X phi h)Y + (nabla_Y phi h)X
//   eq3.5   rho(X,xi) = -2n eta(X) + g(div(phi h), X)
//   tr0     tr(nabla_X phi) = 0
//   trace   sum_i g^{ij} g((nabla_{E_i} phi)X, E_j) = 2n eta(X)
//   main2   rough_laplacian(xi) + 4n xi + Q xi = 0, and
//             |nabla xi|^2 = -(2n + tr h^2)
//   cd1     tr[R(nabla_. xi, xi) .] = 0 (recorded; a theorem only for the
//             frame classes that claim it)
//   sol     if the soliton equation solves identically, lambda = -2n
std::vector<IdentityResult> run_identity_suite(const ParacontactFrame& frame,
                                               const Connection& conn,
                                               const CurvaturePackage& pkg);

}  // namespace pclab
