#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/rational.hpp"

namespace braidlab {

// Element of Q(zeta_N), stored as coefficients on 1, z, ..., z^{phi(N)-1}
// after reduction modulo the N-th cyclotomic polynomial. Binary operations on
// operands of different order first embed both into Q(zeta_lcm).
class CycNum {
public:
    CycNum() : order_(1), c_{Rational()} {}
    CycNum(const Rational& r) : order_(1), c_{r} {} // NOLINT
    CycNum(int64_t v) : order_(1), c_{Rational(v)} {} // NOLINT
    CycNum(int64_t order, std::vector<Rational> coeffs); // reduces; coeffs may have any length

    static CycNum root_of_unity(int64_t N, int64_t k);
    // e^{2 pi i t}, t rational
    static CycNum exp_2pi_i(const Rational& t);
    // e^{pi i a}, a rational
    static CycNum exp_pi_i(const Rational& a) { return exp_2pi_i(a / Rational(2)); }

    int64_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const; // throws unless is_rational()

    CycNum embed(int64_t M) const; // M must be a multiple of order()
    // Same value written over the smallest order dividing order() that holds it.
    CycNum shrink() const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum inv() const;
    CycNum pow(int64_t e) const;
    CycNum conj() const; // complex conjugate, z -> z^{-1}

    std::complex<double> numeric() const;

    // If the value is a root of unity, returns (m, k) with value = zeta_m^k,
    // gcd(k, m) = 1 and m minimal; otherwise (0, 0).
    std::pair<int64_t, int64_t> as_root_of_unity() const;

    // "a0 + a1*z + a2*z^2" with z = zeta_N, zero terms dropped.
    std::string poly_str() const;
    // Exact short form: "2/3", "zeta8", "zeta(8)^3", "-zeta(12)^5", or
    // "(poly)_N" for general elements.
    std::string str() const;
    // Like str() but renders every root of unity (including -1) as a zeta power.
    std::string root_str() const;

private:
    int64_t order_;
    std::vector<Rational> c_;
};

int64_t euler_phi(int64_t n);
// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<int64_t>& cyclotomic_poly(int64_t n);

CycNum q_int(int64_t n, const CycNum& q);
CycNum q_factorial(int64_t n, const CycNum& q);
// Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k]; never divides.
CycNum gauss_binomial(int64_t n, int64_t k, const CycNum& q);

CycNum add(const CycNum& a, const CycNum& b);
CycNum sub(const CycNum& a, const CycNum& b);
CycNum mul(const CycNum& a, const CycNum& b);
CycNum neg(const CycNum& a);
CycNum inv(const CycNum& a);

// Parse the exact string forms produced by str()/root_str(): rationals,
// "zetaN", "zeta(N)^k", "-zeta(N)^k", and "(poly)_N".
CycNum parse_cyc(const std::string& s);

} // namespace braidlab
