#include "braidlab/graded.hpp"

#include <algorithm>
#include <sstream>

#include "braidlab/errors.hpp"

namespace braidlab {

namespace {

int64_t checked(__int128 v)
{
    if (v > INT64_MAX / 4 || v < INT64_MIN / 4) throw ResourceError("integer overflow in Smith normal form");
    return (int64_t)v;
}

int64_t floordiv(int64_t a, int64_t b)
{
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

RatMat rat_inverse(const RatMat& m)
{
    const size_t n = m.size();
    RatMat a(n, RatVec(2 * n));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw InvalidInput("matrix is not square");
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = Rational(1);
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) throw InvalidInput("degenerate Gram matrix");
        std::swap(a[c], a[piv]);
        Rational ip = Rational(1) / a[c][c];
        for (auto& x : a[c]) x *= ip;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    RatMat inv(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

size_t rat_rank(RatMat a)
{
    size_t row = 0;
    const size_t R = a.size(), C = R ? a[0].size() : 0;
    for (size_t c = 0; c < C && row < R; ++c) {
        size_t piv = R;
        for (size_t r = row; r < R; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        std::swap(a[row], a[piv]);
        for (size_t r = row + 1; r < R; ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[row][c];
            for (size_t j = c; j < C; ++j) a[r][j] -= f * a[row][j];
        }
        ++row;
    }
    return row;
}

} // namespace

bool operator<(const Degree& a, const Degree& b)
{
    if (a.free_part.size() != b.free_part.size()) return a.free_part.size() < b.free_part.size();
    for (size_t i = 0; i < a.free_part.size(); ++i)
        if (a.free_part[i] != b.free_part[i]) return a.free_part[i] < b.free_part[i];
    return a.torsion_part < b.torsion_part;
}

std::string Degree::str() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < free_part.size(); ++i) os << (i ? "," : "") << free_part[i].str();
    if (!torsion_part.empty()) {
        os << ";";
        for (size_t i = 0; i < torsion_part.size(); ++i) os << (i ? "," : "") << torsion_part[i];
    }
    os << ")";
    return os.str();
}

GradingGroup::GradingGroup(int r, std::vector<int64_t> torsion) : free_rank(r), torsion_orders(std::move(torsion))
{
    if (r < 0) throw InvalidInput("free rank must be nonnegative");
    for (int64_t m : torsion_orders)
        if (m < 2) throw InvalidInput("torsion orders must be >= 2 (got " + std::to_string(m) + ")");
}

Degree GradingGroup::zero() const { return Degree{RatVec(free_rank), std::vector<int64_t>(torsion_orders.size(), 0)}; }

Degree GradingGroup::make(RatVec f, std::vector<int64_t> t) const
{
    if (t.empty()) t.assign(torsion_orders.size(), 0);
    if ((int)f.size() != free_rank || t.size() != torsion_orders.size())
        throw InvalidInput("degree has wrong shape for group " + str());
    for (size_t i = 0; i < t.size(); ++i) t[i] = mod64(t[i], torsion_orders[i]);
    return Degree{std::move(f), std::move(t)};
}

void GradingGroup::check(const Degree& d) const
{
    if ((int)d.free_part.size() != free_rank || d.torsion_part.size() != torsion_orders.size())
        throw InvalidInput("degree " + d.str() + " is not in group " + str());
    for (size_t i = 0; i < d.torsion_part.size(); ++i)
        if (d.torsion_part[i] < 0 || d.torsion_part[i] >= torsion_orders[i])
            throw InvalidInput("degree " + d.str() + " has unreduced torsion residue");
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const
{
    check(a);
    check(b);
    Degree r = a;
    for (int i = 0; i < free_rank; ++i) r.free_part[i] += b.free_part[i];
    for (size_t i = 0; i < r.torsion_part.size(); ++i)
        r.torsion_part[i] = mod64(r.torsion_part[i] + b.torsion_part[i], torsion_orders[i]);
    return r;
}

Degree GradingGroup::neg(const Degree& a) const { return scale(a, -1); }

Degree GradingGroup::scale(const Degree& a, int64_t k) const
{
    check(a);
    Degree r = a;
    for (auto& x : r.free_part) x *= Rational(k);
    for (size_t i = 0; i < r.torsion_part.size(); ++i)
        r.torsion_part[i] = mod64(r.torsion_part[i] * k, torsion_orders[i]);
    return r;
}

std::vector<Degree> GradingGroup::elements() const
{
    if (!is_finite()) throw InvalidInput("cannot enumerate an infinite group");
    std::vector<Degree> out;
    std::vector<int64_t> t(torsion_orders.size(), 0);
    while (true) {
        out.push_back(Degree{{}, t});
        size_t i = t.size();
        while (i > 0) {
            --i;
            if (++t[i] < torsion_orders[i]) break;
            t[i] = 0;
            if (i == 0) return out;
        }
        if (t.empty()) return out;
    }
}

std::string GradingGroup::str() const
{
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (int64_t m : torsion_orders) parts.push_back("Z" + std::to_string(m));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

Bicharacter::Bicharacter(GradingGroup g, RatMat exponents) : group_(std::move(g)), a_(std::move(exponents))
{
    const size_t n = group_.ngens();
    if (a_.size() != n) throw InvalidInput("exponent matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : a_)
        if (row.size() != n) throw InvalidInput("exponent matrix must be square");
    const size_t r = group_.free_rank;
    for (size_t t = 0; t < group_.torsion_orders.size(); ++t) {
        Rational m(group_.torsion_orders[t]);
        for (size_t i = 0; i < n; ++i) {
            for (const Rational* v : {&a_[i][r + t], &a_[r + t][i]}) {
                Rational x = m * *v / Rational(2);
                if (!x.is_integer())
                    throw InvalidInput("exponents are not bimultiplicative on torsion generator of order " +
                                       m.str() + " (entry " + v->str() +
                                       "); a bicharacter needs order*a in 2Z, refusing to pick a cocycle");
            }
        }
    }
}

Rational Bicharacter::exponent(const Degree& l, const Degree& m) const
{
    group_.check(l);
    group_.check(m);
    const size_t r = group_.free_rank, n = group_.ngens();
    auto coord = [&](const Degree& d, size_t i) -> Rational {
        return i < r ? d.free_part[i] : Rational(d.torsion_part[i - r]);
    };
    Rational s;
    for (size_t i = 0; i < n; ++i) {
        Rational li = coord(l, i);
        if (li.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (a_[i][j].is_zero()) continue;
            Rational mj = coord(m, j);
            if (!mj.is_zero()) s += li * a_[i][j] * mj;
        }
    }
    return s;
}

CycNum Bicharacter::value(const Degree& l, const Degree& m) const { return CycNum::exp_pi_i(exponent(l, m)); }

CycNum braiding_value(const Bicharacter& b, const Degree& l, const Degree& m) { return b.value(l, m); }
CycNum quadratic_form(const Bicharacter& b, const Degree& l) { return b.value(l, l); }
CycNum monodromy(const Bicharacter& b, const Degree& l, const Degree& m)
{
    return CycNum::exp_pi_i(b.exponent(l, m) + b.exponent(m, l));
}

BraidMatrix braid_matrix(const BraidedObject& x)
{
    BraidMatrix q(x.rank(), std::vector<CycNum>(x.rank()));
    for (size_t i = 0; i < x.rank(); ++i)
        for (size_t j = 0; j < x.rank(); ++j) q[i][j] = braiding_value(x.bichar, x.degrees[i], x.degrees[j]);
    return q;
}

Rational Lattice::pair(const RatVec& x, const RatVec& y) const
{
    Rational s;
    for (size_t i = 0; i < form.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < form.size(); ++j)
            if (!form[i][j].is_zero() && !y[j].is_zero()) s += x[i] * form[i][j] * y[j];
    }
    return s;
}

RatMat Lattice::gram() const
{
    RatMat g(rank(), RatVec(rank()));
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j) g[i][j] = pair(basis[i], basis[j]);
    return g;
}

Lattice make_lattice(RatMat form, RatMat basis)
{
    const size_t r = form.size();
    for (size_t i = 0; i < r; ++i) {
        if (form[i].size() != r) throw InvalidInput("lattice form must be square");
        for (size_t j = 0; j < r; ++j)
            if (form[i][j] != form[j][i]) throw InvalidInput("lattice form must be symmetric");
    }
    for (const auto& b : basis)
        if (b.size() != r) throw InvalidInput("lattice basis vector has wrong length");
    if (rat_rank(basis) != basis.size()) throw InvalidInput("lattice basis vectors are linearly dependent");
    return Lattice{std::move(form), std::move(basis)};
}

Lattice dual_lattice(const Lattice& l)
{
    RatMat ginv = rat_inverse(l.gram());
    RatMat nb(l.rank(), RatVec(l.ambient_dim()));
    for (size_t i = 0; i < l.rank(); ++i)
        for (size_t k = 0; k < l.rank(); ++k) {
            if (ginv[i][k].is_zero()) continue;
            for (size_t j = 0; j < l.ambient_dim(); ++j) nb[i][j] += ginv[i][k] * l.basis[k][j];
        }
    return Lattice{l.form, nb};
}

Rational gram_determinant(const Lattice& l)
{
    RatMat a = l.gram();
    const size_t n = a.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) return Rational();
        if (piv != c) {
            std::swap(a[c], a[piv]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

void require_even(const Lattice& l)
{
    RatMat g = l.gram();
    for (size_t i = 0; i < l.rank(); ++i) {
        for (size_t j = 0; j < l.rank(); ++j)
            if (!g[i][j].is_integer())
                throw InvalidInput("lattice is not integral: (b" + std::to_string(i) + ", b" + std::to_string(j) +
                                   ") = " + g[i][j].str());
        if (!(g[i][i] / Rational(2)).is_integer())
            throw InvalidInput("lattice is not even: basis vector b" + std::to_string(i) + " has square " +
                               g[i][i].str());
    }
}

bool is_even(const Lattice& l)
{
    try {
        require_even(l);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

std::vector<int64_t> SmithForm::diagonal() const
{
    std::vector<int64_t> d;
    for (size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
    return d;
}

SmithForm smith_normal_form(const std::vector<std::vector<int64_t>>& input)
{
    SmithForm s;
    const size_t m = input.size(), n = m ? input[0].size() : 0;
    s.D = input;
    s.U.assign(m, std::vector<int64_t>(m, 0));
    s.V.assign(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < m; ++i) s.U[i][i] = 1;
    for (size_t i = 0; i < n; ++i) s.V[i][i] = 1;
    auto& A = s.D;
    auto row_op = [&](size_t dst, size_t src, int64_t f) { // row_dst += f row_src
        for (size_t j = 0; j < n; ++j) A[dst][j] = checked((__int128)A[dst][j] + (__int128)f * A[src][j]);
        for (size_t j = 0; j < m; ++j) s.U[dst][j] = checked((__int128)s.U[dst][j] + (__int128)f * s.U[src][j]);
    };
    auto col_op = [&](size_t dst, size_t src, int64_t f) { // col_dst += f col_src
        for (size_t i = 0; i < m; ++i) A[i][dst] = checked((__int128)A[i][dst] + (__int128)f * A[i][src]);
        for (size_t i = 0; i < n; ++i) s.V[i][dst] = checked((__int128)s.V[i][dst] + (__int128)f * s.V[i][src]);
    };
    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(A[a], A[b]);
        std::swap(s.U[a], s.U[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
        for (size_t i = 0; i < n; ++i) std::swap(s.V[i][a], s.V[i][b]);
    };
    for (size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // smallest |entry|, leftmost column then topmost row on ties
            size_t pr = m, pc = n;
            int64_t best = 0;
            for (size_t j = t; j < n; ++j)
                for (size_t i = t; i < m; ++i) {
                    int64_t v = A[i][j] < 0 ? -A[i][j] : A[i][j];
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (best == 0) break;
            if (pr != t) swap_rows(pr, t);
            if (pc != t) swap_cols(pc, t);
            bool dirty = false;
            for (size_t i = t + 1; i < m; ++i)
                if (A[i][t] != 0) {
                    row_op(i, t, -floordiv(A[i][t], A[t][t]));
                    if (A[i][t] != 0) dirty = true;
                }
            for (size_t j = t + 1; j < n; ++j)
                if (A[t][j] != 0) {
                    col_op(j, t, -floordiv(A[t][j], A[t][t]));
                    if (A[t][j] != 0) dirty = true;
                }
            if (dirty) continue;
            bool fixed = false;
            for (size_t i = t + 1; i < m && !fixed; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        row_op(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (A[t][t] < 0) {
            for (size_t j = 0; j < n; ++j) A[t][j] = -A[t][j];
            for (size_t j = 0; j < m; ++j) s.U[t][j] = -s.U[t][j];
        }
    }
    return s;
}

DiscriminantForm discriminant_form(const Lattice& l)
{
    require_even(l);
    RatMat g = l.gram();
    const size_t r = l.rank();
    std::vector<std::vector<int64_t>> gi(r, std::vector<int64_t>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) gi[i][j] = g[i][j].num();
    SmithForm snf = smith_normal_form(gi);
    // Uinv columns give the generators in dual-basis coordinates.
    RatMat U(r, RatVec(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) U[i][j] = Rational(snf.U[i][j]);
    RatMat Uinv = rat_inverse(U);
    Lattice dual = dual_lattice(l);
    DiscriminantForm df;
    std::vector<int64_t> orders;
    for (size_t k = 0; k < r; ++k) {
        int64_t d = snf.D[k][k];
        if (d == 0) throw InvalidInput("degenerate Gram matrix");
        if (d == 1) continue;
        orders.push_back(d);
        RatVec v(l.ambient_dim());
        for (size_t i = 0; i < r; ++i) {
            if (Uinv[i][k].is_zero()) continue;
            for (size_t j = 0; j < l.ambient_dim(); ++j) v[j] += Uinv[i][k] * dual.basis[i][j];
        }
        df.generators.push_back(v);
    }
    df.group = GradingGroup(0, orders);
    df.pairing.assign(orders.size(), RatVec(orders.size()));
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = 0; j < orders.size(); ++j) df.pairing[i][j] = l.pair(df.generators[i], df.generators[j]);
    return df;
}

RatVec DiscriminantForm::representative(const Degree& x) const
{
    group.check(x);
    RatVec v(generators.empty() ? 0 : generators[0].size());
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) v[j] += Rational(x.torsion_part[i]) * generators[i][j];
    return v;
}

CycNum DiscriminantForm::braiding(const Degree& x, const Degree& y) const
{
    group.check(x);
    group.check(y);
    Rational s;
    for (size_t i = 0; i < pairing.size(); ++i)
        for (size_t j = 0; j < pairing.size(); ++j)
            s += Rational(x.torsion_part[i]) * pairing[i][j] * Rational(y.torsion_part[j]);
    return CycNum::exp_pi_i(s);
}

CycNum DiscriminantForm::Q(const Degree& x) const { return braiding(x, x); }

CycNum DiscriminantForm::monodromy(const Degree& x, const Degree& y) const { return braiding(x, y) * braiding(y, x); }

Lattice triplet_lattice(int64_t p)
{
    if (p < 1) throw InvalidInput("triplet lattice needs p >= 1");
    return make_lattice({{Rational(2 * p)}}, {{Rational(1)}});
}

} // namespace braidlab
