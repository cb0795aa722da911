#ifndef TWOCOLOR_MATRIX_HPP
#define TWOCOLOR_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twocolor/rational.hpp"

namespace twocolor {

using RationalVector = std::vector<Rational>;

// Dense matrix of exact rationals. Row operations only; enough for
// rank and nullspace via Gauss-Jordan elimination.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                    std::size_t cols) {
        RationalMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("ragged row");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Rational& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    void append_row(const RationalVector& row) {
        if (row.size() != cols_) throw std::invalid_argument("ragged row");
        entries_.insert(entries_.end(), row.begin(), row.end());
        ++rows_;
    }

    // Stack this matrix on top of other (same column count).
    RationalMatrix stacked(const RationalMatrix& other) const {
        if (other.cols_ != cols_)
            throw std::invalid_argument("column count mismatch");
        RationalMatrix m = *this;
        m.entries_.insert(m.entries_.end(), other.entries_.begin(),
                          other.entries_.end());
        m.rows_ += other.rows_;
        return m;
    }

    RationalVector apply(const RationalVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("size mismatch");
        RationalVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) acc += at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    bool annihilates(const RationalVector& v) const {
        for (const Rational& x : apply(v))
            if (!x.is_zero()) return false;
        return true;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

namespace detail {

struct Rref {
    RationalMatrix matrix;
    std::vector<std::size_t> pivot_cols;
};

inline Rref reduced_row_echelon(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(row, j), m.at(pivot, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& m) {
    return detail::reduced_row_echelon(m).pivot_cols.size();
}

// Basis of {v : m v = 0}, one vector per free column, each normalized so
// its first nonzero entry is 1. Deterministic given the input matrix.
inline std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
    auto rref = detail::reduced_row_echelon(m);
    const auto& pivots = rref.pivot_cols;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(m.cols());
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rref.matrix.at(r, free_col);
        // normalize: first nonzero entry becomes 1
        for (const Rational& x : v) {
            if (!x.is_zero()) {
                Rational inv = Rational(1) / x;
                for (Rational& y : v) y = y * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace twocolor

#endif
