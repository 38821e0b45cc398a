#pragma once

#include <optional>

#include "pclab/curvature.hpp"

namespace pclab {

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Status { Holds, Fails, Conditional };

std::string to_string(Status s);

// A conjunction of polynomial equations "= 0" together with the family's
// inequations "!= 0". Generators are kept canonical: primitive, square-free
// via exact square roots, divisibility-pruned, deduplicated.
class ConditionSet {
public:
    ConditionSet() = default;
    ConditionSet(std::vector<std::string> vars, std::vector<Polynomial> gens,
                 std::vector<Polynomial> inequations = {});

    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& inequations() const { return inequations_; }

    Status status() const { return status_; }

    // Zero-locus equality, decided by canonical-generator matching with a
    // power fallback (p matches q when p == +-q^k or q == +-p^k, k <= 4).
    bool equivalent(const ConditionSet& other) const;

    // True when the assignment satisfies every generator and no inequation.
    bool satisfied_by(const std::map<std::string, Rational>& assignment) const;

    std::vector<std::string> gen_strings() const;

private:
    std::vector<std::string> vars_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> inequations_;
    Status status_ = Status::Holds;

    void canonicalize();
};

struct Verdict {
    Status status = Status::Holds;
    ConditionSet conditions;
    std::string witness;  // a failing component, for reports
};

struct EtaEinsteinFit {
    bool found = false;      // the fit holds identically
    Polynomial a, b;         // solved coefficients (valid also when conditional)
    Verdict verdict;
};

struct KmFit {
    bool found = false;
    bool mu_unconstrained = false;  // h = 0: the mu-part carries no information
    Polynomial kappa, mu;
    std::string witness;
};

struct SolitonResult {
    bool found = false;   // rho + (1/2) L_xi g = lambda g holds identically
    Polynomial lambda;
    bool trivial = false; // Einstein with Killing xi
    std::string witness;
};

struct Classification {
    Verdict K_paracontact;
    Verdict paraSasakian;
    Verdict eq4;
    Verdict eta_einstein;
    Verdict km_space;
    Verdict H_paracontact;
    Verdict harmonic_map;
    Verdict iht;
    Verdict soliton;
    EtaEinsteinFit eta_fit;
    KmFit km;
    SolitonResult sol;
};

Verdict is_K_paracontact(const ParacontactFrame& frame,
                         const std::vector<Polynomial>& inequations = {});
Verdict is_paraSasakian(const ParacontactFrame& frame, const Connection& conn,
                        const std::vector<Polynomial>& inequations = {});
Verdict check_eq4(const ParacontactFrame& frame, const CurvaturePackage& pkg,
                  const std::vector<Polynomial>& inequations = {});
EtaEinsteinFit eta_einstein_fit(const ParacontactFrame& frame, const CurvaturePackage& pkg,
                                const std::vector<Polynomial>& inequations = {});
KmFit km_fit(const ParacontactFrame& frame, const CurvaturePackage& pkg);

// Residual of the curvature/h commutation identity for kappa != -1 spaces.
// Throws PreconditionError when kappa == -1 identically.
bool check_kno1(const ParacontactFrame& frame, const CurvaturePackage& pkg,
                const Polynomial& kappa, const Polynomial& mu);

Verdict is_H_paracontact(const ParacontactFrame& frame, const Connection& conn,
                         const CurvaturePackage& pkg,
                         const std::vector<Polynomial>& inequations = {});
Verdict is_harmonic_map(const ParacontactFrame& frame, const Connection& conn,
                        const CurvaturePackage& pkg,
                        const std::vector<Polynomial>& inequations = {});
Verdict is_iht(const ParacontactFrame& frame, const Connection& conn,
               const CurvaturePackage& pkg, const std::vector<Polynomial>& inequations = {});
SolitonResult soliton_solve(const ParacontactFrame& frame, const Connection& conn,
                            const CurvaturePackage& pkg);

// Both K-paracontact curvature identities; requires h = 0 identically.
bool check_kparacontact_identities(const ParacontactFrame& frame, const Connection& conn,
                                   const CurvaturePackage& pkg);

Classification classify_all(const ParacontactFrame& frame, const Connection& conn,
                            const CurvaturePackage& pkg,
                            const std::vector<Polynomial>& inequations = {});

// tr h^2 with the plain endomorphism trace.
Polynomial tr_h_squared(const ParacontactFrame& frame);

// (1/2) L_xi g as a frame bilinear form.
PolyMat half_lie_xi_metric(const ParacontactFrame& frame, const Connection& conn);

}  // namespace pclab
