#include "scpkit/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "scpkit/errors.hpp"

namespace scpkit {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("Mat: ragged initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Rat::one();
    return m;
}

bool Mat::is_symmetric() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Mat s(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

void Mat::set_block(size_t i0, size_t j0, const Mat& m) {
    if (i0 + m.rows() > rows_ || j0 + m.cols() > cols_) throw ShapeError("Mat: block out of bounds");
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw ShapeError("Mat: product dimension mismatch");
    Mat c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("Mat: sum dimension mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("Mat: difference dimension mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

Rat det(const Mat& m) {
    if (!m.is_square()) throw ShapeError("det: matrix is not square");
    const size_t n = m.rows();
    if (n == 0) return Rat::one();
    Mat w = m;
    int sign = 1;
    Rat prev = Rat::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && w(piv, k).is_zero()) ++piv;
        if (piv == n) return Rat::zero();
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = Rat::zero();
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

size_t rank(const Mat& m) {
    Mat w = m;
    const size_t rows = w.rows(), cols = w.cols();
    Rat prev = Rat::one();
    size_t r = 0;
    for (; r < std::min(rows, cols); ++r) {
        // Full pivoting: any nonzero entry of the working submatrix will do.
        size_t pi = rows, pj = cols;
        for (size_t i = r; i < rows && pi == rows; ++i)
            for (size_t j = r; j < cols; ++j)
                if (!w(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        if (pi != r)
            for (size_t j = 0; j < cols; ++j) std::swap(w(r, j), w(pi, j));
        if (pj != r)
            for (size_t i = 0; i < rows; ++i) std::swap(w(i, r), w(i, pj));
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = r + 1; j < cols; ++j)
                w(i, j) = (w(i, j) * w(r, r) - w(i, r) * w(r, j)) / prev;
            w(i, r) = Rat::zero();
        }
        prev = w(r, r);
    }
    return r;
}

bool is_psd(const Mat& m) {
    if (!m.is_symmetric()) throw ShapeError("is_psd: matrix is not symmetric");
    Mat w = m;
    std::vector<size_t> active(w.rows());
    std::iota(active.begin(), active.end(), size_t{0});
    while (!active.empty()) {
        size_t pivot = active.size();
        for (size_t ai = 0; ai < active.size(); ++ai) {
            const size_t i = active[ai];
            const int s = w(i, i).sign();
            if (s < 0) return false;
            if (s > 0 && pivot == active.size()) pivot = ai;
        }
        if (pivot == active.size()) {
            // All active diagonal entries vanish; PSD forces the whole block to.
            for (size_t i : active)
                for (size_t j : active)
                    if (!w(i, j).is_zero()) return false;
            return true;
        }
        const size_t p = active[pivot];
        // Rows with zero diagonal must already be zero across the active set.
        for (size_t i : active) {
            if (w(i, i).sign() != 0) continue;
            for (size_t j : active)
                if (!w(i, j).is_zero()) return false;
        }
        const Rat d = w(p, p);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (size_t i : active)
            for (size_t j : active) w(i, j) -= w(i, p) * w(p, j) / d;
    }
    return true;
}

namespace {

// Reduced row echelon form; returns pivot column per pivot row.
std::vector<size_t> rref_in_place(Mat& w) {
    const size_t rows = w.rows(), cols = w.cols();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && w(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) std::swap(w(r, j), w(piv, j));
        const Rat d = w(r, c);
        for (size_t j = c; j < cols; ++j) w(r, j) /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || w(i, c).is_zero()) continue;
            const Rat f = w(i, c);
            for (size_t j = c; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

Mat solve_in_range(const Mat& a, const Mat& b) {
    if (!a.is_symmetric()) throw ShapeError("solve_in_range: matrix is not symmetric");
    if (a.rows() != b.rows()) throw ShapeError("solve_in_range: row counts disagree");
    const size_t n = a.rows(), m = b.cols();
    Mat aug(n, a.cols() + m);
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    Mat w = aug;
    const auto pivot_cols = rref_in_place(w);
    // A pivot landing in the b-part means Ran b ⊄ Ran a.
    for (size_t c : pivot_cols)
        if (c >= a.cols()) throw RangeError("solve_in_range: right-hand side outside the range");
    Mat x(a.cols(), m);
    for (size_t r = 0; r < pivot_cols.size(); ++r)
        for (size_t j = 0; j < m; ++j) x(pivot_cols[r], j) = w(r, a.cols() + j);
    return x;
}

Mat flat_complete(const Mat& a, const Mat& b) {
    const Mat w = solve_in_range(a, b);
    if (!(a * w == b)) throw ConsistencyError("flat_complete: solve residual is nonzero");
    return w.transpose() * b;  // = Wᵀ·a·W since a·W = b
}

std::vector<std::vector<Rat>> kernel_basis(const Mat& m) {
    Mat w = m;
    const auto pivot_cols = rref_in_place(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols());
        v[f] = Rat::one();
        for (size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -w(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace scpkit
