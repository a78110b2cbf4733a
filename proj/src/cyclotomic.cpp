#include "braidlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "braidlab/errors.hpp"

namespace braidlab {

namespace {

struct CycloTable {
    int64_t n = 1;
    int64_t phi = 1;
    std::vector<int64_t> poly;                  // Phi_n, constant term first
    std::vector<std::vector<int64_t>> pow_basis; // z^j in the power basis, 0 <= j < n
};

std::vector<int64_t> poly_divide_exact(std::vector<int64_t> num, const std::vector<int64_t>& den)
{
    // den monic
    size_t dn = den.size() - 1;
    std::vector<int64_t> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

std::mutex g_table_mutex;
std::map<int64_t, std::unique_ptr<CycloTable>> g_tables;

const CycloTable& table_locked(int64_t n);

const CycloTable& build_table(int64_t n)
{
    auto t = std::make_unique<CycloTable>();
    t->n = n;
    std::vector<int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, table_locked(d).poly);
    t->poly = p;
    t->phi = (int64_t)p.size() - 1;
    const int64_t phi = t->phi;
    t->pow_basis.assign(n, std::vector<int64_t>(phi, 0));
    std::vector<int64_t> v(phi, 0);
    v[0] = 1;
    for (int64_t j = 0; j < n; ++j) {
        t->pow_basis[j] = v;
        // multiply by z and reduce with z^phi = -sum_{k<phi} p_k z^k
        int64_t top = v[phi - 1];
        for (int64_t k = phi - 1; k > 0; --k) v[k] = v[k - 1];
        v[0] = 0;
        if (top != 0)
            for (int64_t k = 0; k < phi; ++k) {
                __int128 nv = (__int128)v[k] - (__int128)top * p[k];
                if (nv > INT64_MAX || nv < INT64_MIN)
                    throw ResourceError("cyclotomic reduction table overflow at order " + std::to_string(n));
                v[k] = (int64_t)nv;
            }
    }
    auto& slot = g_tables[n];
    slot = std::move(t);
    return *slot;
}

const CycloTable& table_locked(int64_t n)
{
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return *it->second;
    return build_table(n);
}

const CycloTable& table(int64_t n)
{
    std::lock_guard<std::mutex> lock(g_table_mutex);
    return table_locked(n);
}

// Reduce raw coefficients (index = power of z, any length) into canonical form.
std::vector<Rational> reduce_raw(int64_t n, const std::vector<Rational>& raw)
{
    const CycloTable& t = table(n);
    std::vector<Rational> out(t.phi);
    for (size_t j = 0; j < raw.size(); ++j) {
        if (raw[j].is_zero()) continue;
        int64_t jj = (int64_t)(j % (size_t)n);
        if (jj < t.phi) {
            out[jj] += raw[j];
            continue;
        }
        const auto& b = t.pow_basis[jj];
        for (int64_t k = 0; k < t.phi; ++k)
            if (b[k] != 0) out[k] += raw[j] * Rational(b[k]);
    }
    return out;
}

// Solve A x = b over Q, A square (column-major as vector of columns). Returns
// false when A is singular.
bool solve_rational(std::vector<std::vector<Rational>> cols, std::vector<Rational> b,
                    std::vector<Rational>& x)
{
    const size_t n = b.size();
    // row-major augmented matrix
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
        a[i][n] = b[i];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) return false;
        std::swap(a[c], a[piv]);
        Rational ip = Rational(1) / a[c][c];
        for (size_t j = c; j <= n; ++j) a[c][j] *= ip;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = c; j <= n; ++j)
                if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
        }
    }
    x.resize(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return true;
}

// Solve a (possibly overdetermined) consistent system; returns false if inconsistent.
bool solve_overdetermined(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& b,
                          std::vector<Rational>& x)
{
    const size_t m = b.size(), n = cols.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
        a[i][n] = b[i];
    }
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t c = 0; c < n && row < m; ++c) {
        size_t piv = m;
        for (size_t r = row; r < m; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == m) continue;
        std::swap(a[row], a[piv]);
        Rational ip = Rational(1) / a[row][c];
        for (size_t j = c; j <= n; ++j) a[row][j] *= ip;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = c; j <= n; ++j)
                if (!a[row][j].is_zero()) a[r][j] -= f * a[row][j];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (!a[r][n].is_zero()) return false;
    x.assign(n, Rational());
    for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = a[i][n];
    return true;
}

} // namespace

int64_t euler_phi(int64_t n)
{
    if (n < 1) throw InvalidInput("euler_phi needs n >= 1");
    int64_t r = n, m = n;
    for (int64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<int64_t>& cyclotomic_poly(int64_t n)
{
    if (n < 1) throw InvalidInput("cyclotomic polynomial needs n >= 1");
    return table(n).poly;
}

CycNum::CycNum(int64_t order, std::vector<Rational> coeffs) : order_(order)
{
    if (order < 1) throw InvalidInput("cyclotomic order must be >= 1");
    c_ = reduce_raw(order, coeffs);
}

CycNum CycNum::root_of_unity(int64_t N, int64_t k)
{
    if (N < 1) throw InvalidInput("root_of_unity: order N must be >= 1 (got " + std::to_string(N) + ")");
    int64_t kk = mod64(k, N);
    const CycloTable& t = table(N);
    CycNum r;
    r.order_ = N;
    r.c_.assign(t.phi, Rational());
    const auto& b = t.pow_basis[kk];
    for (int64_t i = 0; i < t.phi; ++i) r.c_[i] = Rational(b[i]);
    return r;
}

CycNum CycNum::exp_2pi_i(const Rational& t)
{
    int64_t d = t.den();
    return root_of_unity(d, mod64(t.num(), d));
}

bool CycNum::is_zero() const
{
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycNum::is_one() const
{
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycNum::rational_value() const
{
    if (!is_rational()) throw InvalidInput("cyclotomic number is not rational: " + str());
    return c_[0];
}

CycNum CycNum::embed(int64_t M) const
{
    if (M < 1 || M % order_ != 0)
        throw InvalidInput("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                           std::to_string(M) + ")");
    if (M == order_) return *this;
    const int64_t step = M / order_;
    std::vector<Rational> raw(std::max<size_t>(1, (c_.size() - 1) * step + 1));
    for (size_t j = 0; j < c_.size(); ++j) raw[j * step] = c_[j];
    return CycNum(M, std::move(raw));
}

CycNum CycNum::shrink() const
{
    if (order_ == 1) return *this;
    if (is_rational()) return CycNum(c_[0]);
    for (int64_t d = 2; d < order_; ++d) {
        if (order_ % d != 0) continue;
        int64_t ph = euler_phi(d);
        std::vector<std::vector<Rational>> cols;
        for (int64_t i = 0; i < ph; ++i) cols.push_back(root_of_unity(d, i).embed(order_).c_);
        std::vector<Rational> x;
        if (solve_overdetermined(cols, c_, x)) return CycNum(d, x);
    }
    return *this;
}

CycNum CycNum::operator-() const
{
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum operator+(const CycNum& a, const CycNum& b)
{
    if (a.order_ == b.order_) {
        CycNum r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    int64_t m = lcm64(a.order_, b.order_);
    return a.embed(m) + b.embed(m);
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b)
{
    if (a.order_ == 1 || b.order_ == 1) {
        const CycNum& s = a.order_ == 1 ? a : b;
        const CycNum& v = a.order_ == 1 ? b : a;
        const Rational& f = s.c_[0];
        if (f.is_one()) return v;
        CycNum r = v;
        for (auto& x : r.c_) x *= f;
        return r;
    }
    if (a.order_ != b.order_) {
        int64_t m = lcm64(a.order_, b.order_);
        return a.embed(m) * b.embed(m);
    }
    const size_t n = a.c_.size();
    std::vector<Rational> raw(2 * n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j)
            if (!b.c_[j].is_zero()) raw[i + j] += a.c_[i] * b.c_[j];
    }
    CycNum r;
    r.order_ = a.order_;
    r.c_ = reduce_raw(a.order_, raw);
    return r;
}

bool operator==(const CycNum& a, const CycNum& b)
{
    if (a.order_ == b.order_) return a.c_ == b.c_;
    int64_t m = lcm64(a.order_, b.order_);
    return a.embed(m).c_ == b.embed(m).c_;
}

CycNum CycNum::inv() const
{
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    if (is_rational()) return CycNum(Rational(1) / c_[0]);
    // monomial c z^j
    int nz = 0;
    size_t at = 0;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) {
            ++nz;
            at = i;
        }
    if (nz == 1) return root_of_unity(order_, -(int64_t)at) * CycNum(Rational(1) / c_[at]);
    std::vector<std::vector<Rational>> cols;
    for (size_t i = 0; i < c_.size(); ++i) cols.push_back((*this * root_of_unity(order_, (int64_t)i)).c_);
    std::vector<Rational> e(c_.size()), x;
    e[0] = Rational(1);
    if (!solve_rational(cols, e, x)) throw std::logic_error("singular multiplication matrix for nonzero element");
    CycNum r;
    r.order_ = order_;
    r.c_ = x;
    return r;
}

CycNum CycNum::pow(int64_t e) const
{
    if (e < 0) return inv().pow(-e);
    CycNum result(1), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

CycNum CycNum::conj() const
{
    if (order_ <= 2) return *this;
    std::vector<Rational> raw(order_);
    for (size_t j = 0; j < c_.size(); ++j) raw[(order_ - (int64_t)j) % order_] += c_[j];
    return CycNum(order_, raw);
}

std::complex<double> CycNum::numeric() const
{
    std::complex<double> s = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        double ang = 2.0 * std::numbers::pi * (double)j / (double)order_;
        s += c_[j].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::pair<int64_t, int64_t> CycNum::as_root_of_unity() const
{
    auto z = numeric();
    if (std::abs(std::abs(z) - 1.0) > 1e-6) return {0, 0};
    int64_t L = order_ % 2 == 0 ? order_ : 2 * order_;
    double ang = std::arg(z);
    int64_t k = mod64((int64_t)std::llround(ang / (2.0 * std::numbers::pi) * (double)L), L);
    if (root_of_unity(L, k) != *this) return {0, 0};
    if (k == 0) return {1, 0};
    int64_t g = gcd64(k, L);
    return {L / g, k / g};
}

std::string CycNum::poly_str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        Rational v = c_[j];
        if (!first) {
            os << (v.sign() < 0 ? " - " : " + ");
            v = v.abs();
        }
        if (j == 0) {
            os << v.str();
        } else {
            if (v.is_one()) {
            } else if (v == Rational(-1)) {
                os << "-";
            } else {
                os << v.str() << "*";
            }
            os << "z";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {
std::string zeta_name(int64_t m, int64_t k)
{
    if (m == 1) return "1";
    if (k == 1) return "zeta" + std::to_string(m);
    return "zeta(" + std::to_string(m) + ")^" + std::to_string(k);
}
} // namespace

std::string CycNum::str() const
{
    if (is_rational()) return c_[0].str();
    auto [m, k] = as_root_of_unity();
    if (m != 0) return zeta_name(m, k);
    CycNum s = shrink();
    if (s.order() == 1) return s.c_[0].str();
    return "(" + s.poly_str() + ")_" + std::to_string(s.order());
}

std::string CycNum::root_str() const
{
    auto [m, k] = as_root_of_unity();
    if (m != 0) return zeta_name(m, k);
    return str();
}

CycNum q_int(int64_t n, const CycNum& q)
{
    if (n < 0) throw InvalidInput("q_int needs n >= 0");
    CycNum s, p(1);
    for (int64_t j = 0; j < n; ++j) {
        s += p;
        p *= q;
    }
    return s;
}

CycNum q_factorial(int64_t n, const CycNum& q)
{
    CycNum r(1);
    for (int64_t j = 1; j <= n; ++j) r *= q_int(j, q);
    return r;
}

CycNum gauss_binomial(int64_t n, int64_t k, const CycNum& q)
{
    if (n < 0 || k < 0) throw InvalidInput("gauss_binomial needs nonnegative arguments");
    if (k > n) throw InvalidInput("gauss_binomial: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    std::vector<CycNum> qp(k + 1);
    qp[0] = CycNum(1);
    for (int64_t j = 1; j <= k; ++j) qp[j] = qp[j - 1] * q;
    // row[j] holds [m, j] for the current m
    std::vector<CycNum> row(k + 1);
    row[0] = CycNum(1);
    for (int64_t m = 1; m <= n; ++m)
        for (int64_t j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + qp[j] * row[j];
    return row[k];
}

CycNum add(const CycNum& a, const CycNum& b) { return a + b; }
CycNum sub(const CycNum& a, const CycNum& b) { return a - b; }
CycNum mul(const CycNum& a, const CycNum& b) { return a * b; }
CycNum neg(const CycNum& a) { return -a; }
CycNum inv(const CycNum& a) { return a.inv(); }

CycNum parse_cyc(const std::string& in)
{
    std::string s;
    for (char c : in)
        if (c != ' ') s += c;
    if (s.empty()) throw InvalidInput("empty cyclotomic literal");
    bool negate = false;
    std::string t = s;
    if (t[0] == '-' && t.rfind("-zeta", 0) == 0) {
        negate = true;
        t = t.substr(1);
    }
    auto fail = [&]() -> CycNum { throw InvalidInput("malformed cyclotomic literal '" + in + "'"); };
    try {
        if (t.rfind("zeta(", 0) == 0) {
            auto close = t.find(')');
            if (close == std::string::npos) return fail();
            int64_t m = std::stoll(t.substr(5, close - 5));
            int64_t k = 1;
            if (close + 1 < t.size()) {
                if (t[close + 1] != '^') return fail();
                k = std::stoll(t.substr(close + 2));
            }
            CycNum r = CycNum::root_of_unity(m, k);
            return negate ? -r : r;
        }
        if (t.rfind("zeta", 0) == 0) {
            std::string rest = t.substr(4);
            size_t pos = 0;
            int64_t m = std::stoll(rest, &pos);
            int64_t k = 1;
            if (pos < rest.size()) {
                if (rest[pos] != '^') return fail();
                k = std::stoll(rest.substr(pos + 1));
            }
            CycNum r = CycNum::root_of_unity(m, k);
            return negate ? -r : r;
        }
        if (t[0] == '(') {
            auto close = t.rfind(")_");
            if (close == std::string::npos) return fail();
            int64_t N = std::stoll(t.substr(close + 2));
            std::string body = t.substr(1, close - 1);
            // split on +/- at top level (terms "c", "c*z^j", "z", "-z^j")
            std::vector<Rational> raw;
            size_t i = 0;
            while (i < body.size()) {
                size_t j = i + 1;
                while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
                std::string term = body.substr(i, j - i);
                i = j;
                Rational c(1);
                int64_t pw = 0;
                auto zpos = term.find('z');
                std::string cpart = zpos == std::string::npos ? term : term.substr(0, zpos);
                if (zpos != std::string::npos) {
                    std::string zp = term.substr(zpos + 1);
                    pw = zp.empty() ? 1 : std::stoll(zp.substr(1));
                    if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
                    if (cpart.empty() || cpart == "+") cpart = "1";
                    if (cpart == "-") cpart = "-1";
                }
                c = Rational::parse(cpart);
                if ((int64_t)raw.size() <= pw) raw.resize(pw + 1);
                raw[pw] += c;
            }
            CycNum r(N, raw);
            return negate ? -r : r;
        }
        return CycNum(Rational::parse(t));
    } catch (const std::invalid_argument&) {
        return fail();
    } catch (const std::out_of_range&) {
        return fail();
    }
}

} // namespace braidlab
