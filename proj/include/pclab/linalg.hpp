#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pclab/polynomial.hpp"
#include "pclab/rational.hpp"

namespace pclab {

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Square matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t dim() const { return n_; }
    Rational& at(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }
    const Rational& at(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Rational det() const;
    std::optional<RationalMatrix> inverse() const;

    // Exact solve of (*this) x = rhs with polynomial right-hand side.
    // Divisions happen only by rational pivots. Throws on singular matrix.
    PolyVec solve(const PolyVec& rhs) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix dim mismatch");
        RationalMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

// Square matrix of polynomials over a shared variable list. Columns are
// images: (M v)_i = sum_j M(i,j) v_j.
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(std::size_t n, std::vector<std::string> vars)
        : n_(n), vars_(std::move(vars)), a_(n * n, Polynomial(vars_)) {}

    static PolyMat from_rational(const RationalMatrix& m, const std::vector<std::string>& vars) {
        PolyMat r(m.dim(), vars);
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                r.at(i, j) = Polynomial::constant(vars, m.at(i, j));
        return r;
    }

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& vars() const { return vars_; }
    Polynomial& at(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }
    const Polynomial& at(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }

    bool is_zero() const {
        for (const auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }

    Polynomial trace() const {
        Polynomial t(vars_);
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    PolyVec apply(const PolyVec& v) const {
        PolyVec r(n_, Polynomial(vars_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    friend PolyMat operator+(const PolyMat& a, const PolyMat& b) {
        PolyMat r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
        return r;
    }
    friend PolyMat operator-(const PolyMat& a, const PolyMat& b) {
        PolyMat r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
        return r;
    }
    friend PolyMat operator*(const PolyMat& a, const PolyMat& b) {
        PolyMat r(a.n_, a.vars_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    PolyMat operator-() const {
        PolyMat r = *this;
        for (auto& p : r.a_) p = -p;
        return r;
    }

    friend bool operator==(const PolyMat& a, const PolyMat& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::string> vars_;
    std::vector<Polynomial> a_;
};

inline PolyVec poly_vec_zero(std::size_t n, const std::vector<std::string>& vars) {
    return PolyVec(n, Polynomial(vars));
}

inline PolyVec operator+(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline PolyVec operator-(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
inline PolyVec scaled(const PolyVec& v, const Polynomial& c) {
    PolyVec r = v;
    for (auto& p : r) p *= c;
    return r;
}
inline bool is_zero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

}  // namespace pclab
