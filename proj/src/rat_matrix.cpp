#include "cobord/rat_matrix.hpp"

namespace cobord {

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

namespace {

// Forward elimination into row echelon form. Returns the pivot columns.
std::vector<size_t> eliminate(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (size_t c = col; c < m.cols(); ++c)
                std::swap(m.at(pivot, c), m.at(row, c));
        for (size_t r = row + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0)
                continue;
            Rational factor = m.at(r, col) / m.at(row, col);
            m.at(r, col) = 0;
            for (size_t c = col + 1; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<Rational> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("solve_linear requires a square matrix");
    if (rhs.size() != m.rows())
        throw DimensionMismatch("right-hand side length does not match matrix");
    size_t n = m.rows();

    RatMatrix aug(n, n + 1);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = rhs[r];
    }

    std::vector<size_t> pivots = eliminate(aug);
    if (pivots.size() != n || pivots.back() != n - 1) {
        // Either a genuinely singular matrix, or the rhs column became a pivot.
        throw SingularMatrix("matrix is rank deficient");
    }

    std::vector<Rational> x(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational acc = aug.at(i, n);
        for (size_t c = i + 1; c < n; ++c)
            acc -= aug.at(i, c) * x[c];
        x[i] = acc / aug.at(i, i);
    }
    return x;
}

size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return eliminate(work).size();
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant requires a square matrix");
    size_t n = m.rows();
    RatMatrix work = m;
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (size_t c = col; c < n; ++c)
                std::swap(work.at(pivot, c), work.at(col, c));
            det = -det;
        }
        det *= work.at(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            if (work.at(r, col) == 0)
                continue;
            Rational factor = work.at(r, col) / work.at(col, col);
            for (size_t c = col; c < n; ++c)
                work.at(r, c) -= factor * work.at(col, c);
        }
    }
    return det;
}

} // namespace cobord
