#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace braidlab {

// Exact rational. Values that fit in int64 numerator/denominator stay on the
// fast path; anything larger is promoted to a shared, immutable mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(int64_t n); // NOLINT: implicit from integers is intended
    Rational(int64_t n, int64_t d);
    explicit Rational(const mpq_class& q);

    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;

    // Numerator and denominator; throw if they do not fit in int64.
    int64_t num() const;
    int64_t den() const;
    mpq_class to_mpq() const;
    double to_double() const;
    std::string str() const;

    // floor division by the integer part, used for modular reductions
    int64_t floor() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    static Rational from_i128(__int128 n, __int128 d);
    static Rational from_mpq(mpq_class q);

    int64_t n_ = 0;
    int64_t d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
// Mathematical modulus, result in [0, m).
int64_t mod64(int64_t a, int64_t m);

} // namespace braidlab
