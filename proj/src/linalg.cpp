#include "braidlab/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace braidlab {

Matrix Matrix::identity(size_t n)
{
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<CycNum>>& rows)
{
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<CycNum> Matrix::column(size_t j) const
{
    std::vector<CycNum> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<CycNum> Matrix::row(size_t i) const
{
    return std::vector<CycNum>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

Matrix Matrix::unified() const
{
    int64_t n = 1;
    for (const auto& x : a_)
        if (!x.is_zero()) n = lcm64(n, x.order());
    Matrix m = *this;
    const CycNum zero(n, {});
    for (auto& x : m.a_) x = x.is_zero() ? zero : x.embed(n);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.c_ != b.r_) throw std::invalid_argument("matrix size mismatch in product");
    Matrix m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
        for (size_t k = 0; k < a.c_; ++k) {
            const CycNum& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.c_; ++j) {
                const CycNum& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch in sum");
    Matrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch in difference");
    Matrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

Matrix operator*(const CycNum& s, const Matrix& a)
{
    Matrix m = a;
    for (auto& x : m.a_)
        if (!x.is_zero()) x = s * x;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const CycNum& x = a(i, j);
            if (x.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

std::vector<CycNum> mat_vec(const Matrix& a, const std::vector<CycNum>& v)
{
    if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<CycNum> r(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!v[j].is_zero() && !a(i, j).is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

RowEchelon row_reduce(const Matrix& input)
{
    RowEchelon out;
    Matrix m = input.unified();
    const size_t R = m.rows(), C = m.cols();
    size_t row = 0;
    for (size_t c = 0; c < C && row < R; ++c) {
        size_t piv = R;
        for (size_t r = row; r < R; ++r)
            if (!m(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        if (piv != row)
            for (size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(row, j));
        CycNum ip = m(row, c).inv();
        for (size_t j = c; j < C; ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * ip;
        for (size_t r = 0; r < R; ++r) {
            if (r == row || m(r, c).is_zero()) continue;
            CycNum f = m(r, c);
            for (size_t j = c; j < C; ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<CycNum>> kernel(const Matrix& m)
{
    RowEchelon e = row_reduce(m);
    const size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (size_t c : e.pivots) is_piv[c] = true;
    std::vector<std::vector<CycNum>> basis;
    for (size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<CycNum> v(C);
        v[f] = CycNum(1);
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const Matrix& m, const std::vector<CycNum>& b, std::vector<CycNum>& x)
{
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return false;
    x.assign(m.cols(), CycNum());
    for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return true;
}

size_t rank_of_vectors(const std::vector<std::vector<CycNum>>& vs, size_t dim)
{
    SpanBuilder sb(dim);
    for (const auto& v : vs) sb.insert(v);
    return sb.size();
}

void SpanBuilder::reduce(std::vector<CycNum>& v) const
{
    for (size_t i = 0; i < basis_.size(); ++i) {
        const CycNum& x = v[pivot_[i]];
        if (x.is_zero()) continue;
        CycNum f = x;
        const auto& b = basis_[i];
        for (size_t k = 0; k < dim_; ++k)
            if (!b[k].is_zero()) v[k] -= f * b[k];
    }
}

bool SpanBuilder::insert(std::vector<CycNum> v)
{
    if (v.size() != dim_) throw std::invalid_argument("span vector size mismatch");
    reduce(v);
    size_t p = dim_;
    for (size_t k = 0; k < dim_; ++k)
        if (!v[k].is_zero()) {
            p = k;
            break;
        }
    if (p == dim_) return false;
    CycNum ip = v[p].inv();
    for (auto& x : v)
        if (!x.is_zero()) x = x * ip;
    // keep the stored basis fully reduced against the new pivot
    for (auto& b : basis_) {
        if (b[p].is_zero()) continue;
        CycNum f = b[p];
        for (size_t k = 0; k < dim_; ++k)
            if (!v[k].is_zero()) b[k] -= f * v[k];
    }
    basis_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
}

bool SpanBuilder::contains(std::vector<CycNum> v) const
{
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace braidlab
