#pragma once

#include <map>
#include <string>
#include <vector>

#include "pclab/catalog.hpp"
#include "pclab/report.hpp"

namespace pclab::testing {

// Bracket coefficients keyed by (i, j) -> {k -> expression}.
using BracketSpec = std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, std::string>>;

inline FrameSpec make_spec(std::size_t dim, std::vector<std::string> params,
                           const BracketSpec& brackets, std::vector<long long> metric_diag,
                           std::vector<std::pair<std::size_t, std::size_t>> pairing,
                           const std::string& label = "test") {
    FrameSpec spec;
    spec.label = label;
    spec.dim = dim;
    spec.params = std::move(params);
    spec.xi_index = 0;
    spec.brackets.assign(dim, std::vector<PolyVec>(dim, spec.zero_vec()));
    for (const auto& [ij, comps] : brackets)
        for (const auto& [k, expr] : comps) {
            Polynomial p = parse_expr(expr, spec.params);
            spec.brackets[ij.first][ij.second][k] = p;
            spec.brackets[ij.second][ij.first][k] = -p;
        }
    spec.metric = RationalMatrix(dim);
    for (std::size_t i = 0; i < dim; ++i) spec.metric.at(i, i) = Rational(metric_diag.at(i));
    spec.pairing = std::move(pairing);
    return spec;
}

inline FrameSpec heisenberg_spec() {
    return make_spec(3, {}, {{{1, 2}, {{0, "2"}}}}, {1, 1, -1}, {{1, 2}}, "heisenberg");
}

inline ParacontactFrame must_validate(const FrameSpec& spec) {
    ValidationResult res = validate(spec, SignConvention::from_env());
    if (!res.ok()) {
        std::string msg = "validation failed:";
        for (const auto& v : res.violations) msg += " " + v.to_string();
        throw std::runtime_error(msg);
    }
    return *res.frame;
}

inline Catalog load_catalog() { return Catalog::load(Catalog::default_dir()); }

// Small deterministic rng for random rational instantiations.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed = 0x51ed2701u) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational() { return Rational(range(-7, 7), range(1, 3)); }
};

// Random assignment satisfying the entry's constraints.
inline std::map<std::string, Rational> random_assignment(const CatalogEntry& entry, TestRng& rng) {
    std::map<std::string, Rational> out;
    for (const auto& name : entry.frame.params) {
        bool pm = std::find(entry.pm_one.begin(), entry.pm_one.end(), name) != entry.pm_one.end();
        bool nz = std::find(entry.nonzero.begin(), entry.nonzero.end(), name) != entry.nonzero.end();
        if (pm) {
            out[name] = Rational(rng.range(0, 1) == 0 ? 1 : -1);
        } else {
            Rational v = rng.rational();
            while (nz && v.is_zero()) v = rng.rational();
            out[name] = v;
        }
    }
    return out;
}

}  // namespace pclab::testing
