#ifndef COBORD_RAT_MATRIX_HPP
#define COBORD_RAT_MATRIX_HPP

#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

// Dense matrix of exact rationals. Plain rational Gaussian elimination with
// eager reduction; the matrices in this project stay small.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    RatMatrix transpose() const;

    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Exact solution of m * x = rhs for square nonsingular m.
// Throws DimensionMismatch on shape disagreement, SingularMatrix on rank loss.
std::vector<Rational> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs);

size_t rank(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

} // namespace cobord

#endif
