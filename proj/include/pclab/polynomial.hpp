#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pclab/rational.hpp"

namespace pclab {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct VarMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact multivariate polynomial with rational coefficients over a fixed,
// ordered list of parameter names. Canonical form: no zero coefficients, and
// every exponent of a variable named "eps" is reduced mod 2 (eps^2 = 1).
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    struct LexGreater {
        bool operator()(const Exponents& a, const Exponents& b) const {
            return b < a;  // descending lexicographic
        }
    };
    using TermMap = std::map<Exponents, Rational, LexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, Rational c) {
        Polynomial p(std::move(vars));
        p.add_term(Exponents(p.vars_.size(), 0), std::move(c));
        return p;
    }
    static Polynomial variable(std::vector<std::string> vars, const std::string& name) {
        Polynomial p(std::move(vars));
        Exponents e(p.vars_.size(), 0);
        e.at(p.index_of(name)) = 1;
        p.add_term(e, Rational(1));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() != 1) return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        for (unsigned k : e)
            if (k != 0) return std::nullopt;
        return c;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned k : e) s += k;
            if (s > d) d = s;
        }
        return d;
    }

    void add_term(const Exponents& exps, const Rational& coeff);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Exact partial evaluation; unassigned variables stay symbolic. The
    // variable list is unchanged. Unknown names in the map are an error.
    Polynomial substitute(const std::map<std::string, Rational>& assignment) const;

    // Substitution of polynomials for variables (same variable list on all).
    Polynomial substitute_polys(const std::map<std::string, Polynomial>& assignment) const;

    // Canonical printing; parse(print(p)) == p.
    std::string to_string() const;

    // Content-1, positive-leading-coefficient scalar normalization. Zero maps
    // to zero. Used when comparing condition-set generators.
    Polynomial primitive_normalized() const;

    // Exact polynomial square root, if *this is a perfect square.
    std::optional<Polynomial> sqrt_exact() const;

    // Exact division: returns q with *this == q * d, if it exists.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;

    std::size_t index_of(const std::string& name) const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_same_vars(const Polynomial& o) const {
        if (vars_ != o.vars_) throw VarMismatchError("polynomial variable lists differ");
    }
};

using PolyVec = std::vector<Polynomial>;

enum class PolyOp { add, sub, mul, neg };

// Spec-surface wrapper over the operators.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// Recursive-descent parser for the expression grammar:
//   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
//   factor := base ('^' uint)? ; base := rational | name | '(' expr ')' ;
//   rational := int ('/' uint)? . Whitespace insignificant.
Polynomial parse_expr(std::string_view text, const std::vector<std::string>& vars);

}  // namespace pclab
