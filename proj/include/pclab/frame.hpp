#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pclab/linalg.hpp"

namespace pclab {

// Run-level sign conventions. d_eta_sign is the sigma in
//   d eta(X,Y) = sigma * 1/2 * (X eta(Y) - Y eta(X) - eta([X,Y])),
// which for left-invariant data reduces to -sigma/2 * eta([X,Y]).
// The curvature convention is fixed: R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y].
struct SignConvention {
    int d_eta_sign = +1;
    static constexpr const char* curvature = "R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y]";

    // PCLAB_DETA_SIGN in {+1, -1} overrides the calibrated default.
    static SignConvention from_env() {
        SignConvention c;
        if (const char* s = std::getenv("PCLAB_DETA_SIGN")) {
            std::string v(s);
            if (v == "-1") c.d_eta_sign = -1;
            else if (v == "1" || v == "+1") c.d_eta_sign = +1;
            else throw std::invalid_argument("PCLAB_DETA_SIGN must be +1 or -1");
        }
        return c;
    }
};

// Raw description of a left-invariant almost-paracontact candidate.
// brackets[i][j] holds the components of [E_i, E_j]; the table is stored in
// full and must be antisymmetric.
struct FrameSpec {
    std::string label;
    std::size_t dim = 0;
    std::vector<std::string> params;
    std::vector<std::vector<PolyVec>> brackets;
    RationalMatrix metric;
    std::size_t xi_index = 0;
    std::optional<RationalMatrix> phi;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
    std::vector<std::string> nonzero;  // parameters constrained away from 0

    std::vector<Polynomial> inequations() const {
        std::vector<Polynomial> out;
        for (const auto& name : nonzero) out.push_back(Polynomial::variable(params, name));
        return out;
    }

    Polynomial zero() const { return Polynomial(params); }
    PolyVec zero_vec() const { return poly_vec_zero(dim, params); }

    // Substitutes rational values for parameters in every bracket coefficient.
    FrameSpec substituted(const std::map<std::string, Rational>& assignment) const;
};

struct Violation {
    std::string axiom;         // e.g. "jacobi", "deta-compatibility"
    std::vector<std::size_t> indices;
    std::string residual;      // canonical polynomial, or a short message

    std::string to_string() const;
};

// A FrameSpec that passed every axiom, with the derived tensors attached.
struct ParacontactFrame {
    FrameSpec spec;
    SignConvention conv;
    std::size_t n = 0;                 // dim = 2n+1
    std::vector<Rational> eta;         // eta_i = g(xi, E_i)
    RationalMatrix ginv;
    RationalMatrix phi;                // resolved phi
    PolyMat h;                         // h = (1/2) L_xi phi

    std::size_t dim() const { return spec.dim; }
    const std::vector<std::string>& params() const { return spec.params; }
    const Rational& g(std::size_t i, std::size_t j) const { return spec.metric.at(i, j); }
    const PolyVec& bracket(std::size_t i, std::size_t j) const { return spec.brackets[i][j]; }

    Polynomial zero() const { return Polynomial(spec.params); }
    PolyVec zero_vec() const { return poly_vec_zero(spec.dim, spec.params); }
    PolyVec basis_vec(std::size_t i) const {
        PolyVec v = zero_vec();
        v[i] = Polynomial::constant(spec.params, Rational(1));
        return v;
    }

    // g(u, v) for polynomial vectors.
    Polynomial inner(const PolyVec& u, const PolyVec& v) const;
    // eta(v) = g(xi, v).
    Polynomial eta_of(const PolyVec& v) const;
    // [u, v] extended bilinearly over constant coefficients.
    PolyVec bracket_of(const PolyVec& u, const PolyVec& v) const;
};

struct ValidationResult {
    std::optional<ParacontactFrame> frame;
    std::vector<Violation> violations;
    bool ok() const { return frame.has_value(); }
};

// Cyclic Jacobi residuals; empty iff the bracket table is a Lie algebra.
std::vector<Violation> jacobi_check(const FrameSpec& spec);

// h = (1/2)(ad_xi . phi - phi . ad_xi) for a given phi.
PolyMat compute_h(const FrameSpec& spec, const RationalMatrix& phi);

// Enumerates sign patterns over the pairing and returns every phi passing all
// axioms. For a +1/-1 pair (a,b): phi(E_a)=s E_b, phi(E_b)=s E_a. For a null
// pair (g(a,a)=g(b,b)=0, g(a,b)=1): phi(E_a)=t E_a, phi(E_b)=-t E_b.
std::vector<RationalMatrix> infer_phi(const FrameSpec& spec, const SignConvention& conv);

// Checks every paracontact axiom; on success returns the validated frame with
// eta and h populated, otherwise the full list of violations.
ValidationResult validate(const FrameSpec& spec, const SignConvention& conv);

}  // namespace pclab
