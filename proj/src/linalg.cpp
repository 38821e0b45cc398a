#include "pclab/linalg.hpp"

namespace pclab {

Rational RationalMatrix::det() const {
    RationalMatrix m = *this;
    Rational d(1);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (std::size_t i = col + 1; i < n_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < n_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    RationalMatrix m = *this;
    RationalMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rational p = m.at(col, col);
        for (std::size_t j = 0; j < n_; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = 0; j < n_; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

PolyVec RationalMatrix::solve(const PolyVec& rhs) const {
    if (rhs.size() != n_) throw std::invalid_argument("solve: rhs size mismatch");
    RationalMatrix m = *this;
    PolyVec b = rhs;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) throw SingularMatrixError("solve: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        Rational p = m.at(col, col);
        for (std::size_t j = 0; j < n_; ++j) m.at(col, j) /= p;
        b[col] = b[col].scaled(p.inverse());
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = 0; j < n_; ++j) m.at(i, j) -= f * m.at(col, j);
            b[i] -= b[col].scaled(f);
        }
    }
    return b;
}

}  // namespace pclab
