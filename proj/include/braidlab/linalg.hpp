#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidlab/cyclotomic.hpp"

namespace braidlab {

// Dense row-major matrix over cyclotomic numbers.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<std::vector<CycNum>>& rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    CycNum& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const CycNum& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const;
    Matrix transpose() const;
    std::vector<CycNum> column(size_t j) const;
    std::vector<CycNum> row(size_t i) const;
    // All entries rewritten over one common order (speeds up elimination).
    Matrix unified() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycNum& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<CycNum> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
std::vector<CycNum> mat_vec(const Matrix& a, const std::vector<CycNum>& v);

struct RowEchelon {
    Matrix reduced;             // reduced row echelon form
    std::vector<size_t> pivots; // pivot column per nonzero row
    size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination. Columns are processed left to right; the pivot row
// is the first row (top-down) with a nonzero entry in the column.
RowEchelon row_reduce(const Matrix& m);
size_t rank(const Matrix& m);
// Basis of the null space {v : m v = 0}, one vector per free column,
// normalized to 1 at its free column.
std::vector<std::vector<CycNum>> kernel(const Matrix& m);
// One solution of m x = b, or empty optional-like flag via return value.
bool solve(const Matrix& m, const std::vector<CycNum>& b, std::vector<CycNum>& x);
// Rank of a set of vectors (as columns).
size_t rank_of_vectors(const std::vector<std::vector<CycNum>>& vs, size_t dim);

// Incremental echelon basis for growing spans; insert() returns true when
// the vector is independent of those already held.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t dim) : dim_(dim) {}
    bool insert(std::vector<CycNum> v);
    bool contains(std::vector<CycNum> v) const;
    size_t size() const { return basis_.size(); }
    // Reduced vectors; pivot_[i] is the pivot coordinate of basis_[i].
    const std::vector<std::vector<CycNum>>& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivot_; }
    // Subtracts the basis components; the result vanishes at every pivot.
    void reduce(std::vector<CycNum>& v) const;

private:
    size_t dim_;
    std::vector<std::vector<CycNum>> basis_;
    std::vector<size_t> pivot_;
};

} // namespace braidlab
