#pragma once

#include <stdexcept>

#include "pclab/frame.hpp"

namespace pclab {

// An identity that must hold for every validated frame failed symbolically.
// Reaching this means an engine bug (or an invalid frame slipped through).
struct EngineError : std::logic_error {
    using std::logic_error::logic_error;
};

// Levi-Civita connection in frame components: gamma[i][j] are the components
// of nabla_{E_i} E_j. Torsion-freeness and metric compatibility are verified
// symbolically at construction.
struct Connection {
    std::vector<std::vector<PolyVec>> gamma;

    // nabla_{E_i} V for a constant-coefficient polynomial vector V.
    PolyVec nabla(const ParacontactFrame& f, std::size_t i, const PolyVec& v) const {
        PolyVec r = f.zero_vec();
        for (std::size_t k = 0; k < f.dim(); ++k) {
            if (v[k].is_zero()) continue;
            for (std::size_t l = 0; l < f.dim(); ++l)
                if (!gamma[i][k][l].is_zero()) r[l] += v[k] * gamma[i][k][l];
        }
        return r;
    }

    // nabla_U V with polynomial direction U.
    PolyVec nabla_along(const ParacontactFrame& f, const PolyVec& u, const PolyVec& v) const {
        PolyVec r = f.zero_vec();
        for (std::size_t m = 0; m < f.dim(); ++m) {
            if (u[m].is_zero()) continue;
            PolyVec t = nabla(f, m, v);
            for (std::size_t l = 0; l < f.dim(); ++l)
                if (!t[l].is_zero()) r[l] += u[m] * t[l];
        }
        return r;
    }

    // (nabla_{E_i} T)(E_j) for an endomorphism T with constant components.
    PolyVec nabla_endo(const ParacontactFrame& f, std::size_t i, const PolyMat& t,
                       std::size_t j) const;
};

// Riemann tensor in the convention R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y],
// plus Ricci form, Ricci operator and scalar curvature.
struct CurvaturePackage {
    std::vector<std::vector<std::vector<PolyVec>>> riemann;  // [i][j][k] -> components
    PolyMat ricci;      // rho_{ij}
    PolyMat ricci_op;   // Q = g^{-1} rho
    Polynomial scalar;  // r = tr Q

    const PolyVec& R(std::size_t i, std::size_t j, std::size_t k) const {
        return riemann[i][j][k];
    }
    // R(U, E_j)E_k for polynomial U.
    PolyVec R_along(const ParacontactFrame& f, const PolyVec& u, std::size_t j,
                    std::size_t k) const {
        PolyVec r = f.zero_vec();
        for (std::size_t m = 0; m < f.dim(); ++m) {
            if (u[m].is_zero()) continue;
            for (std::size_t l = 0; l < f.dim(); ++l)
                if (!riemann[m][j][k][l].is_zero()) r[l] += u[m] * riemann[m][j][k][l];
        }
        return r;
    }
};

Connection levi_civita(const ParacontactFrame& frame);
CurvaturePackage riemann(const ParacontactFrame& frame, const Connection& conn);

// Rough Laplacian of a left-invariant field: -tr_g nabla^2 V.
PolyVec rough_laplacian(const ParacontactFrame& frame, const Connection& conn, const PolyVec& v);

// g-trace divergence of an endomorphism field.
PolyVec divergence_endo(const ParacontactFrame& frame, const Connection& conn, const PolyMat& t);

// tr nabla phi as a g-trace; equals -2n xi on every validated frame.
PolyVec trace_nabla_phi(const ParacontactFrame& frame, const Connection& conn);

// The harmonic-map obstruction tr[R(nabla_. xi, xi) .] as a g-trace.
PolyVec harmonic_map_trace(const ParacontactFrame& frame, const Connection& conn,
                           const CurvaturePackage& pkg);

// (nabla_{E_i} phi)E_j table, shared by several identities.
std::vector<std::vector<PolyVec>> nabla_phi_table(const ParacontactFrame& frame,
                                                  const Connection& conn);

// phi and h as polynomial matrices, and phi*h.
PolyMat phi_mat(const ParacontactFrame& frame);

}  // namespace pclab
