#ifndef SCPKIT_MATRIX_HPP
#define SCPKIT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "scpkit/rational.hpp"

namespace scpkit {

// Dense rational matrix, row-major. Values are immutable in spirit: all
// algorithms below copy their input and return fresh matrices.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Mat transpose() const;
    Mat submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    void set_block(size_t i0, size_t j0, const Mat& m);

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rat> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rat det(const Mat& m);

// Exact rank by fraction-free elimination with full pivoting.
size_t rank(const Mat& m);

// Exact positive-semidefiniteness of a symmetric matrix, by pivoted
// Schur-complement elimination: a negative diagonal pivot, or a zero diagonal
// entry with a nonzero residual off-diagonal in its row, refutes; otherwise
// eliminate on a positive pivot and recurse.
bool is_psd(const Mat& m);

// Any exact W with a·W = b, provided Ran b ⊆ Ran a (decided by
// rank([a|b]) = rank a); throws RangeError otherwise. W is the
// pivot-variable solution of the reduced system (free variables zero).
Mat solve_in_range(const Mat& a, const Mat& b);

// C := Wᵀ·a·W for any W solving a·W = b. Independent of the choice of W.
Mat flat_complete(const Mat& a, const Mat& b);

// Basis of the right null space, one column vector per free variable of the
// reduced echelon form (free variable set to 1, pivot variables solved).
std::vector<std::vector<Rat>> kernel_basis(const Mat& m);

} // namespace scpkit

#endif // SCPKIT_MATRIX_HPP
