#include "pclab/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace pclab {

namespace {
constexpr const char* kInvolutiveName = "eps";  // eps^2 = 1
}

std::size_t Polynomial::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw VarMismatchError("unknown variable name: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
    if (exps.size() != vars_.size()) throw VarMismatchError("exponent arity mismatch");
    if (coeff.is_zero()) return;
    Exponents e = exps;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == kInvolutiveName) e[i] %= 2;
    }
    auto [it, inserted] = terms_.emplace(std::move(e), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(vars_, Rational(1));
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1u) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
        case PolyOp::neg: return -a;
    }
    throw std::logic_error("poly_arith: bad op");
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational>& assignment) const {
    std::vector<std::optional<Rational>> values(vars_.size());
    for (const auto& [name, value] : assignment) values.at(index_of(name)) = value;
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        Exponents rest = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (values[i].has_value() && e[i] != 0) {
                coeff *= values[i]->pow(e[i]);
                rest[i] = 0;
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

Polynomial Polynomial::substitute_polys(const std::map<std::string, Polynomial>& assignment) const {
    std::vector<const Polynomial*> values(vars_.size(), nullptr);
    for (const auto& [name, value] : assignment) {
        value.check_same_vars(*this);
        values.at(index_of(name)) = &value;
    }
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Polynomial term(vars_);
        Exponents rest = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (values[i] != nullptr) rest[i] = 0;
        }
        term.add_term(rest, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (values[i] != nullptr && e[i] != 0) term *= values[i]->pow(e[i]);
        }
        r += term;
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.abs();
        bool neg = c.is_negative();
        std::string vars_part;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars_part.empty()) vars_part += "*";
            vars_part += vars_[i];
            if (e[i] > 1) vars_part += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (vars_part.empty()) {
            body = mag.to_string();
        } else if (mag.is_one()) {
            body = vars_part;
        } else {
            body = mag.to_string() + "*" + vars_part;
        }
        if (first) {
            out = neg ? "-" + body : body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

Polynomial Polynomial::primitive_normalized() const {
    if (terms_.empty()) return *this;
    // Integer coefficients with content 1, positive leading coefficient.
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = BigInt::gcd(num_gcd, c.num());
        den_lcm = den_lcm / BigInt::gcd(den_lcm, c.den()) * c.den();
    }
    Rational scale(den_lcm, num_gcd);
    scale = scale.abs();
    if (terms_.begin()->second.is_negative()) scale = -scale;
    return scaled(scale);
}

std::optional<Polynomial> Polynomial::sqrt_exact() const {
    if (terms_.empty()) return Polynomial(vars_);
    const auto& [le, lc] = *terms_.begin();
    Exponents he(le.size());
    for (std::size_t i = 0; i < le.size(); ++i) {
        if (le[i] % 2 != 0) return std::nullopt;
        he[i] = le[i] / 2;
    }
    Rational hc;
    if (!lc.sqrt_exact(hc)) return std::nullopt;
    Polynomial q(vars_);
    q.add_term(he, hc);
    // Peel leading remainder terms with t = lead(rem) / (2 lead(q)). For a
    // genuine square lead(rem) strictly decreases; bail once it does not.
    Polynomial rem = *this - q * q;
    while (!rem.is_zero()) {
        Exponents prev_lead = rem.terms_.begin()->first;
        const Rational rc = rem.terms_.begin()->second;
        Exponents te(prev_lead.size());
        for (std::size_t i = 0; i < prev_lead.size(); ++i) {
            if (prev_lead[i] < he[i]) return std::nullopt;
            te[i] = prev_lead[i] - he[i];
        }
        Polynomial t(vars_);
        t.add_term(te, rc / (hc * Rational(2)));
        q += t;
        rem = *this - q * q;
        if (!rem.is_zero() && !LexGreater{}(prev_lead, rem.terms_.begin()->first))
            return std::nullopt;
    }
    return q;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    check_same_vars(d);
    if (d.is_zero()) return std::nullopt;
    Polynomial q(vars_);
    Polynomial rem = *this;
    const auto& [de, dc] = *d.terms_.begin();
    // lead(rem) strictly decreases in the term order each round, so the loop
    // terminates; a failed monomial division means d does not divide *this.
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        Exponents te(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            if (re[i] < de[i]) return std::nullopt;
            te[i] = re[i] - de[i];
        }
        Polynomial t(vars_);
        t.add_term(te, rc / dc);
        q += t;
        rem -= t * d;
    }
    return q;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (eat('+')) {
                p += term();
            } else if (eat('-')) {
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p *= factor();
        return p;
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {  // unary minus, below '^'
            ++pos_;
            return -factor();
        }
        Polynomial b = base();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 1000000) throw ParseError(start, "exponent too large");
                ++pos_;
            }
            if (pos_ == start) throw ParseError(pos_, "expected nonnegative integer exponent");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        throw ParseError(pos_, "expected number, name or '('");
    }

    Polynomial rational_literal() {
        BigInt num = integer_digits();
        if (eat('/')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(pos_, "expected positive integer denominator");
            BigInt den = integer_digits();
            if (den.is_zero()) throw ParseError(pos_, "zero denominator");
            return Polynomial::constant(vars_, Rational(num, den));
        }
        return Polynomial::constant(vars_, Rational(num, BigInt(1)));
    }

    BigInt integer_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected digits");
        return BigInt::from_string(text_.substr(start, pos_ - start));
    }

    Polynomial name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string n(text_.substr(start, pos_ - start));
        if (std::find(vars_.begin(), vars_.end(), n) == vars_.end())
            throw ParseError(start, "unknown variable name '" + n + "'");
        return Polynomial::variable(vars_, n);
    }
};

}  // namespace

Polynomial parse_expr(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

}  // namespace pclab
