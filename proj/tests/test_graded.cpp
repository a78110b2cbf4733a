#include "doctest.h"

#include <complex>
#include <numbers>
#include <random>

#include "braidlab/errors.hpp"
#include "braidlab/graded.hpp"

using namespace braidlab;

namespace {

std::complex<double> e_pi_i(double t) { return std::polar(1.0, std::numbers::pi * t); }
bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

Bicharacter rank1_free(int64_t p) { return Bicharacter(GradingGroup(1, {}), {{Rational(2, p)}}); }

} // namespace

TEST_CASE("grading group arithmetic")
{
    GradingGroup g(1, {4, 2});
    Degree a = g.make({Rational(1, 2)}, {3, 1});
    Degree b = g.make({Rational(-1)}, {2, 1});
    Degree s = g.add(a, b);
    CHECK(s.free_part[0] == Rational(-1, 2));
    CHECK(s.torsion_part == std::vector<int64_t>{1, 0});
    CHECK(g.add(a, g.neg(a)) == g.zero());
    CHECK_THROWS_AS(GradingGroup(0, {1}), InvalidInput);
    CHECK(GradingGroup(0, {4, 2}).elements().size() == 8);
    CHECK(GradingGroup(0, {}).elements().size() == 1);
    CHECK(g.str() == "Z x Z4 x Z2");
}

TEST_CASE("braiding values")
{
    for (int64_t p = 2; p <= 7; ++p) {
        auto b = rank1_free(p);
        Degree am = b.group().make({Rational(1)});
        CHECK(braiding_value(b, am, am) == CycNum::root_of_unity(p, 1));
        CHECK(quadratic_form(b, am) == CycNum::root_of_unity(p, 1));
        CHECK(braiding_value(b, b.group().zero(), am).is_one());
        CHECK(monodromy(b, b.group().zero(), am).is_one());
        // free rank-1, (c a_-, d a_-) -> e^{4 pi i cd/p}
        for (auto [c, d] : {std::pair{Rational(1, 3), Rational(2, 5)}, {Rational(-3, 2), Rational(7)}}) {
            Degree x = b.group().make({c}), y = b.group().make({d});
            double t = 4.0 * c.to_double() * d.to_double() / (double)p;
            CHECK(close(monodromy(b, x, y).numeric(), e_pi_i(t)));
        }
    }
}

TEST_CASE("bicharacter rejects non-bimultiplicative torsion exponents")
{
    // Z_4 with sigma(1,1) = e^{pi i/4} cannot be a bicharacter
    CHECK_THROWS_AS(Bicharacter(GradingGroup(0, {4}), {{Rational(1, 4)}}), InvalidInput);
    // Z_3 with exponent 2/3 is fine
    Bicharacter ok(GradingGroup(0, {3}), {{Rational(2, 3)}});
    Degree one = ok.group().make({}, {1});
    CHECK(ok.value(one, one) == CycNum::root_of_unity(3, 1));
    CHECK(ok.value(ok.group().scale(one, 3), one).is_one());
}

TEST_CASE("bimultiplicativity and symmetric monodromy on samples")
{
    GradingGroup g(2, {3});
    Bicharacter b(g, {{Rational(2, 5), Rational(1, 3), Rational(2, 3)},
                      {Rational(-1, 2), Rational(1), Rational(4, 3)},
                      {Rational(2, 3), Rational(0), Rational(4, 3)}});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rnd = [&]() { return g.make({Rational(d(rng)), Rational(d(rng))}, {d(rng)}); };
    for (int t = 0; t < 50; ++t) {
        Degree x = rnd(), y = rnd(), z = rnd();
        CHECK(b.value(g.add(x, y), z) == b.value(x, z) * b.value(y, z));
        CHECK(b.value(z, g.add(x, y)) == b.value(z, x) * b.value(z, y));
        CHECK(monodromy(b, x, y) == monodromy(b, y, x));
    }
}

TEST_CASE("braid matrices of the named examples")
{
    for (int64_t p = 2; p <= 5; ++p) {
        CycNum q = CycNum::root_of_unity(2 * p, 1);
        BraidedObject sl2{Bicharacter(GradingGroup(1, {}), {{Rational(2, p)}}), {}};
        sl2.degrees.push_back(sl2.bichar.group().make({Rational(1)}));
        CHECK(braid_matrix(sl2)[0][0] == q * q);
        BraidedObject par{Bicharacter(GradingGroup(2, {}), {{Rational(2, p), Rational(-1, p)},
                                                            {Rational(-1, p), Rational(1)}}),
                          {}};
        par.degrees = {par.bichar.group().make({Rational(1), Rational(0)}),
                       par.bichar.group().make({Rational(0), Rational(1)})};
        auto m = braid_matrix(par);
        CHECK(m[0][0] == q * q);
        CHECK(m[0][1] == q.inv());
        CHECK(m[1][0] == q.inv());
        CHECK(m[1][1] == CycNum(-1));
    }
}

TEST_CASE("dual lattices")
{
    Lattice two = make_lattice({{Rational(1)}}, {{Rational(2)}});
    CHECK(dual_lattice(two).basis[0][0] == Rational(1, 2));
    Lattice z = make_lattice({{Rational(1)}}, {{Rational(1)}});
    CHECK(dual_lattice(z).basis[0][0] == Rational(1));
    for (int64_t p = 2; p <= 6; ++p) CHECK(dual_lattice(triplet_lattice(p)).basis[0][0] == Rational(1, 2 * p));
    CHECK_THROWS_AS(dual_lattice(make_lattice({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}},
                                              {{Rational(0), Rational(1)}})),
                    InvalidInput);
    CHECK_THROWS_AS(make_lattice({{Rational(1)}}, {{Rational(1)}, {Rational(2)}}), InvalidInput);
}

TEST_CASE("evenness")
{
    CHECK(is_even(make_lattice({{Rational(1)}}, {{Rational(2)}})));
    CHECK_FALSE(is_even(make_lattice({{Rational(1)}}, {{Rational(1)}})));
    for (int64_t p = 1; p <= 8; ++p) CHECK(is_even(triplet_lattice(p)));
    try {
        require_even(make_lattice({{Rational(2), Rational(0)}, {Rational(0), Rational(3)}},
                                  {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
        CHECK(false);
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("b1") != std::string::npos);
    }
}

TEST_CASE("smith normal form")
{
    auto s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.diagonal() == std::vector<int64_t>{2, 6, 12});
    auto prod = [](const auto& a, const auto& b) {
        std::vector<std::vector<int64_t>> c(a.size(), std::vector<int64_t>(b[0].size(), 0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t k = 0; k < b.size(); ++k)
                for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    std::vector<std::vector<int64_t>> a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    CHECK(prod(prod(s.U, a), s.V) == s.D);
}

TEST_CASE("discriminant form of sqrt(2p)Z against coset enumeration")
{
    for (int64_t p = 2; p <= 6; ++p) {
        auto df = discriminant_form(triplet_lattice(p));
        REQUIRE(df.group.torsion_orders == std::vector<int64_t>{2 * p});
        auto els = df.group.elements();
        for (int64_t k = 0; k < 2 * p; ++k) {
            // coset k/(2p) + Z in the dual lattice, square (k/2p)^2 * 2p
            double sq = (double)(k * k) / (double)(2 * p);
            CHECK(close(df.Q(els[k]).numeric(), e_pi_i(sq)));
            CHECK(df.Q(els[k]) == CycNum::exp_pi_i(Rational(k * k, 2 * p)));
        }
        // sigma(1,1) on representatives is e^{pi i/2p} = zeta_{4p}
        CHECK(df.braiding(els[1], els[1]) == CycNum::root_of_unity(4 * p, 1));
        CHECK(df.monodromy(els[1], els[1]) == CycNum::root_of_unity(2 * p, 1));
    }
    auto uni = discriminant_form(make_lattice({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}},
                                              {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
    CHECK(uni.group.torsion_orders == std::vector<int64_t>{3});
    auto e8ish = discriminant_form(make_lattice({{Rational(2), Rational(-1)}, {Rational(-1), Rational(1)}},
                                                {{Rational(1), Rational(0)}, {Rational(0), Rational(2)}}));
    CHECK(e8ish.group.torsion_orders.size() <= 2);
    Lattice u = make_lattice({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}},
                             {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(discriminant_form(u).group.torsion_orders.empty());
    CHECK_THROWS_AS(discriminant_form(make_lattice({{Rational(1)}}, {{Rational(1)}})), InvalidInput);
}

TEST_CASE("random lattices: double dual and discriminant order")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-3, 3);
    int tested = 0;
    while (tested < 30) {
        size_t r = 1 + tested % 3;
        RatMat form(r, RatVec(r)), basis(r, RatVec(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i; j < r; ++j) {
                int v = d(rng);
                if (i == j) v = 2 * v;
                form[i][j] = form[j][i] = Rational(v);
            }
        for (auto& row : basis)
            for (auto& x : row) x = Rational(d(rng));
        Lattice l;
        try {
            l = make_lattice(form, basis);
        } catch (const InvalidInput&) {
            continue;
        }
        Rational det = gram_determinant(l);
        if (det.is_zero()) continue;
        ++tested;
        CHECK(dual_lattice(dual_lattice(l)).basis == l.basis);
        auto df = discriminant_form(l);
        int64_t order = 1;
        for (int64_t m : df.group.torsion_orders) order *= m;
        CHECK(Rational(order) == det.abs());
        for (size_t i = 0; i + 1 < df.group.torsion_orders.size(); ++i)
            CHECK(df.group.torsion_orders[i + 1] % df.group.torsion_orders[i] == 0);
        // each generator has exact order m_i modulo the lattice and lies in the dual
        for (size_t i = 0; i < df.generators.size(); ++i)
            for (const auto& b : l.basis) CHECK(l.pair(df.generators[i], b).is_integer());
    }
}
