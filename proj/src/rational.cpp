#include "braidlab/rational.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace braidlab {

namespace {

// Keep small values well inside int64 so negation and i128 products never wrap.
constexpr int64_t kSmallLimit = int64_t(1) << 62;

bool fits_small(__int128 v) { return v < kSmallLimit && v > -kSmallLimit; }

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(__int128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    mpz_class hi = (unsigned long)(uint64_t)(u >> 64);
    mpz_class lo = (unsigned long)(uint64_t)u;
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b)
{
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

int64_t mod64(int64_t a, int64_t m)
{
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Rational::Rational(int64_t n) : n_(n), d_(1)
{
    if (!fits_small(n)) *this = from_mpq(mpq_class(mpz_from_i128(n)));
}

Rational::Rational(int64_t n, int64_t d)
{
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_i128(__int128 n, __int128 d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    Rational r;
    if (fits_small(n) && fits_small(d)) {
        r.n_ = (int64_t)n;
        r.d_ = (int64_t)d;
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class q)
{
    q.canonicalize();
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        long n = q.get_num().get_si();
        long d = q.get_den().get_si();
        if (fits_small(n) && fits_small(d)) {
            r.n_ = n;
            r.d_ = d;
            return r;
        }
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto check_int = [&](const std::string& part) {
        size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) throw std::invalid_argument("malformed rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("malformed rational '" + s + "'");
    };
    auto slash = t.find('/');
    std::string ns = slash == std::string::npos ? t : t.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : t.substr(slash + 1);
    check_int(ns);
    check_int(ds);
    if (!ns.empty() && ns[0] == '+') ns = ns.substr(1);
    if (!ds.empty() && ds[0] == '+') ds = ds.substr(1);
    mpz_class n(ns), d(ds);
    if (d == 0) throw std::domain_error("rational with zero denominator: '" + s + "'");
    return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const
{
    if (big_) return big_->get_den() == 1;
    return d_ == 1;
}

int Rational::sign() const
{
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

int64_t Rational::num() const
{
    if (big_) throw std::overflow_error("rational numerator exceeds int64");
    return n_;
}

int64_t Rational::den() const
{
    if (big_) throw std::overflow_error("rational denominator exceeds int64");
    return d_;
}

mpq_class Rational::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(mpz_from_i128(n_), mpz_from_i128(d_));
}

double Rational::to_double() const
{
    if (big_) return big_->get_d();
    return (double)n_ / (double)d_;
}

std::string Rational::str() const
{
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

int64_t Rational::floor() const
{
    if (big_) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
        if (!f.fits_slong_p()) throw std::overflow_error("floor exceeds int64");
        return f.get_si();
    }
    int64_t q = n_ / d_;
    if (n_ % d_ != 0 && n_ < 0) --q;
    return q;
}

Rational Rational::operator-() const
{
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (b.n_ == 0) return a;
        if (a.n_ == 0) return b;
        if (a.d_ == b.d_) return Rational::from_i128((__int128)a.n_ + b.n_, a.d_);
        return Rational::from_i128((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_,
                                   (__int128)a.d_ * b.d_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 p = (__int128)a.n_ * b.n_;
            if (fits_small(p)) return Rational((int64_t)p);
        }
        return Rational::from_i128((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    if (!a.big_ && !b.big_)
        return Rational::from_i128((__int128)a.n_ * b.d_, (__int128)a.d_ * b.n_);
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace braidlab
