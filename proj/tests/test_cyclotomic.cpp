#include "doctest.h"

#include <complex>
#include <numbers>
#include <random>

#include "braidlab/cyclotomic.hpp"
#include "braidlab/errors.hpp"

using namespace braidlab;

namespace {

std::complex<double> zeta_c(int64_t n, int64_t k)
{
    double a = 2.0 * std::numbers::pi * (double)k / (double)n;
    return {std::cos(a), std::sin(a)};
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

CycNum random_cyc(std::mt19937& rng, int64_t n)
{
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
    std::vector<Rational> raw(n);
    for (auto& r : raw) r = Rational(coef(rng), den(rng));
    return CycNum(n, raw);
}

// Product formula oracle evaluated in floating point.
std::complex<double> binom_numeric(int n, int k, std::complex<double> q)
{
    auto qi = [&](int m) {
        std::complex<double> s = 0, p = 1;
        for (int j = 0; j < m; ++j) {
            s += p;
            p *= q;
        }
        return s;
    };
    std::complex<double> num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
        num *= qi(n - j);
        den *= qi(j + 1);
    }
    return num / den;
}

} // namespace

TEST_CASE("rational basics")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS(Rational::parse("2/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK(Rational(-7, 2).floor() == -4);
    // overflow promotes to big and comes back down
    Rational big = Rational(int64_t(1) << 40) * Rational(int64_t(1) << 40);
    CHECK(big.str() == "1208925819614629174706176");
    Rational back = big / Rational(int64_t(1) << 40);
    CHECK(back == Rational(int64_t(1) << 40));
    CHECK(back.num() == (int64_t(1) << 40));
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == std::vector<int64_t>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<int64_t>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<int64_t>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 30; ++n) CHECK((int64_t)cyclotomic_poly(n).size() - 1 == euler_phi(n));
}

TEST_CASE("root_of_unity")
{
    CHECK(CycNum::root_of_unity(1, 0).is_one());
    CHECK(CycNum::root_of_unity(2, 1) == CycNum(-1));
    CHECK(CycNum::root_of_unity(4, 2) == CycNum(-1));
    CHECK(close(CycNum::root_of_unity(4, 2).numeric(), zeta_c(4, 1) * zeta_c(4, 1)));
    CHECK(CycNum::root_of_unity(7, 0).is_one());
    CHECK(CycNum::root_of_unity(9, 9).is_one());
    CHECK(CycNum::root_of_unity(12, -1) == CycNum::root_of_unity(12, 11));
    CHECK_THROWS_AS(CycNum::root_of_unity(0, 1), InvalidInput);
    for (int n = 1; n <= 24; ++n)
        for (int k = 0; k < n; ++k) CHECK(close(CycNum::root_of_unity(n, k).numeric(), zeta_c(n, k)));
}

TEST_CASE("q_int")
{
    CHECK(q_int(3, CycNum(1)) == CycNum(3));
    CHECK(q_int(2, CycNum(-1)).is_zero());
    CHECK(q_int(3, CycNum::root_of_unity(3, 1)).is_zero());
    CHECK(q_int(0, CycNum(5)).is_zero());
    CHECK(q_int(1, CycNum(5)).is_one());
}

TEST_CASE("gauss_binomial examples")
{
    CHECK(gauss_binomial(5, 0, CycNum::root_of_unity(7, 2)).is_one());
    CHECK(gauss_binomial(5, 5, CycNum::root_of_unity(7, 2)).is_one());
    CHECK(gauss_binomial(2, 1, CycNum(-1)).is_zero());
    auto i = CycNum::root_of_unity(4, 1);
    CHECK(gauss_binomial(4, 2, i).is_zero());
    // (1+q+q^2)(1+q^2) evaluated at i
    std::complex<double> qi(0, 1);
    CHECK(std::abs((1.0 + qi + qi * qi) * (1.0 + qi * qi)) < 1e-12);
    CHECK_THROWS_AS(gauss_binomial(2, 3, i), InvalidInput);
    CHECK(gauss_binomial(6, 2, CycNum(1)) == CycNum(15));
}

TEST_CASE("gauss_binomial vanishing at zeta_p")
{
    for (int p = 2; p <= 12; ++p)
        for (int k = 1; k < p; ++k) CHECK(gauss_binomial(p, k, CycNum::root_of_unity(p, 1)).is_zero());
}

TEST_CASE("gauss_binomial recursion and product formula")
{
    for (int N : {5, 7, 8, 9, 11, 13}) {
        CycNum q = CycNum::root_of_unity(N, 1);
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k < n; ++k) {
                CHECK(gauss_binomial(n, k, q) ==
                      gauss_binomial(n - 1, k - 1, q) + q.pow(k) * gauss_binomial(n - 1, k, q));
                if (n < N) CHECK(close(gauss_binomial(n, k, q).numeric(), binom_numeric(n, k, zeta_c(N, 1))));
            }
    }
}

TEST_CASE("field arithmetic")
{
    auto i = CycNum::root_of_unity(4, 1);
    CHECK(i * i == CycNum(-1));
    auto w = CycNum::root_of_unity(3, 1);
    CHECK((w + (w * w + CycNum(1))).is_zero());
    CHECK(CycNum(1).inv().is_one());
    CHECK_THROWS(CycNum().inv());
    // mixed orders embed into lcm
    auto z8 = CycNum::root_of_unity(8, 1);
    CHECK(z8 * z8 == i);
    CHECK((z8 * z8).order() == 8);
    CHECK(w * CycNum::root_of_unity(4, 1) == CycNum::root_of_unity(12, 7));
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937 rng(1234);
    for (int n = 1; n <= 24; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
            CHECK(close((a * b).numeric(), a.numeric() * b.numeric()));
            CHECK(close((a + c).numeric(), a.numeric() + c.numeric()));
            CHECK(a.embed(3 * n).embed(6 * n) == a);
            CHECK(a.embed(2 * n).coeffs().size() == (size_t)euler_phi(2 * n));
        }
}

TEST_CASE("rendering and parsing")
{
    CHECK(CycNum(Rational(2, 3)).str() == "2/3");
    CHECK(CycNum::root_of_unity(8, 3).str() == "zeta(8)^3");
    CHECK(CycNum::root_of_unity(8, 1).str() == "zeta8");
    CHECK(CycNum(-1).root_str() == "zeta2");
    CHECK(CycNum(1).root_str() == "1");
    CHECK(CycNum::root_of_unity(16, 2).str() == "zeta8");
    CHECK((-CycNum::root_of_unity(3, 1)).str() == "zeta(6)^5");
    auto x = CycNum::root_of_unity(8, 1) + CycNum(2);
    CHECK(x.str() == "(2 + z)_8");
    CHECK(parse_cyc(x.str()) == x);
    CHECK(parse_cyc("zeta(8)^3") == CycNum::root_of_unity(8, 3));
    CHECK(parse_cyc("zeta8") == CycNum::root_of_unity(8, 1));
    CHECK(parse_cyc("-1/2") == CycNum(Rational(-1, 2)));
    auto y = CycNum(12, {Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7)});
    CHECK(parse_cyc(y.str()) == y);
    CHECK(CycNum::root_of_unity(12, 4).shrink().order() == 3);
}
