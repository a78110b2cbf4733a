#include "doctest.h"

#include "braidlab/errors.hpp"
#include "braidlab/nichols.hpp"
#include "braidlab/yd.hpp"

using namespace braidlab;

namespace {

Degree deg1(const BraidedObject& x, const Rational& a) { return x.bichar.group().make({a}); }

} // namespace

TEST_CASE("nichols height")
{
    for (int p = 2; p <= 6; ++p) CHECK(nichols_height(preset_rank1(p)) == p);
    CHECK(nichols_height(preset_rank1(6, 2)) == 3);
    CHECK_THROWS_AS(nichols_height(preset_rank1(1)), InvalidInput);
    CHECK_THROWS_AS(nichols_height(preset_parabolic2(3)), InvalidInput);
}

TEST_CASE("Verma YD module and perturbations")
{
    for (int p = 2; p <= 5; ++p) {
        auto x = preset_rank1(p);
        auto v = verma_yd(x);
        CHECK(v.dim() == (size_t)p);
        auto r = yd_check(v);
        CHECK(r.ok);
        CHECK_FALSE(r.witness);
        if (p >= 3) {
            auto bad = make_yd(x, v.degrees, CycNum(-1) * v.action, v.delta[1], "flipped");
            auto rb = yd_check(bad);
            CHECK_FALSE(rb.ok);
            REQUIRE(rb.witness);
            CHECK(rb.witness->find("compatibility") != std::string::npos);
        }
        auto wrong_deg = make_yd(x, std::vector<Degree>(p, deg1(x, 0)), v.action, v.delta[1]);
        CHECK_FALSE(yd_check(wrong_deg).ok);
    }
}

TEST_CASE("trivial YD structure needs trivial monodromy")
{
    auto x = preset_rank1(3);
    // monodromy(lambda, gamma) = exp(4 pi i lambda / 3)
    CHECK(yd_check(trivial_yd(x, deg1(x, 0))).ok);
    CHECK(yd_check(trivial_yd(x, deg1(x, Rational(3, 2)))).ok);
    CHECK_FALSE(yd_check(trivial_yd(x, deg1(x, Rational(1, 2)))).ok);
    CHECK_FALSE(yd_check(trivial_yd(x, deg1(x, Rational(1, 3)))).ok);
}

TEST_CASE("chain structures")
{
    for (int p = 2; p <= 5; ++p) {
        auto x = preset_rank1(p);
        for (auto lam : {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-2, 5)}) {
            auto full = chain_yd(x, deg1(x, lam), p);
            REQUIRE(full);
            CHECK(yd_check(*full).ok);
        }
        CHECK_THROWS_AS(chain_yd(x, deg1(x, 0), p + 1), InvalidInput);
        CHECK_THROWS_AS(chain_yd(x, deg1(x, 0), 0), InvalidInput);
    }
    // short atypical chains: C_{lambda,l} exists iff the coefficient c_l vanishes
    auto x = preset_rank1(4);
    auto c1 = chain_yd(x, deg1(x, 0), 1);
    REQUIRE(c1);
    CHECK(yd_check(*c1).ok);
    CHECK_FALSE(chain_yd(x, deg1(x, Rational(1, 3)), 2));
    int found = 0;
    for (int k = -8; k <= 8; ++k)
        for (int l = 1; l < 4; ++l)
            if (auto m = chain_yd(x, deg1(x, Rational(k, 2)), l)) {
                ++found;
                CHECK(yd_check(*m).ok);
            }
    CHECK(found > 0);
}

TEST_CASE("YD braiding: hand value and inverse")
{
    auto x = preset_rank1(2);
    auto v = verma_yd(x);
    auto t = trivial_yd(x, deg1(x, Rational(1, 3)));
    // basis x^0 (x) w, x^1 (x) w -> w (x) x^0, w (x) x^1: diag(1, sigma(gamma, 1/3))
    Matrix want = Matrix::from_rows({{CycNum(1), CycNum(0)}, {CycNum(0), CycNum::root_of_unity(6, 1)}});
    CHECK(yd_braiding(v, t) == want);
    for (int p = 2; p <= 4; ++p) {
        auto xp = preset_rank1(p);
        auto vp = verma_yd(xp);
        std::vector<YDModule> mods = {vp, *chain_yd(xp, deg1(xp, Rational(1, 3)), p),
                                      trivial_yd(xp, deg1(xp, 0))};
        for (const auto& m : mods)
            for (const auto& n : mods) {
                Matrix c = yd_braiding(m, n), ci = yd_braiding_inverse(m, n);
                CHECK(ci * c == Matrix::identity(c.cols()));
                CHECK(c * ci == Matrix::identity(c.rows()));
            }
    }
}

TEST_CASE("linking relation from the YD condition")
{
    for (int p = 2; p <= 5; ++p) {
        auto r = linking_from_yd(p);
        CHECK(r.ok);
        CHECK_FALSE(r.witness);
        bool saw_fail_expected = false;
        for (const auto& l : r.lines) saw_fail_expected |= l.find("yd fails, linking fails") != std::string::npos;
        CHECK(saw_fail_expected);
    }
    CHECK_THROWS_AS(linking_from_yd(1), InvalidInput);
}

TEST_CASE("lattice helpers")
{
    auto t = triplet_lattice(3);
    CHECK(is_local_over(t, {Rational(-1, 3)}));
    CHECK_FALSE(is_local_over(t, {Rational(1, 12)}));
    CHECK(induce_over(t, {Rational(-1, 3)}) == RatVec{Rational(2, 3)});
    CHECK(induce_over(t, {Rational(7, 3)}) == RatVec{Rational(1, 3)});
    CHECK_THROWS_AS(is_local_over(t, {Rational(1), Rational(2)}), InvalidInput);
    // property: the representative differs by a lattice vector and is reduced
    for (int k = -20; k <= 20; ++k) {
        Rational a(k, 7);
        Rational r = induce_over(t, {a})[0];
        CHECK((a - r).is_integer());
        CHECK(Rational(0) <= r);
        CHECK(r < Rational(1));
    }
    // odd lattice Z^2 with the standard form: even sublattice has index 2
    Lattice z2 = make_lattice({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                              {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK_FALSE(is_even(z2));
    Lattice e = even_sublattice(z2);
    CHECK(is_even(e));
    CHECK(gram_determinant(e) == Rational(4) * gram_determinant(z2));
    CHECK(even_sublattice(t).basis == t.basis);
    CHECK_THROWS_AS(even_sublattice(make_lattice({{Rational(1, 2)}}, {{Rational(1)}})), InvalidInput);
}

TEST_CASE("uprolling presets")
{
    for (int p = 2; p <= 6; ++p) {
        auto s = uproll_triplet(p);
        REQUIRE(s.generators.size() == 1);
        const auto& g = s.generators[0];
        CHECK(s.group == "Z" + std::to_string(2 * p));
        REQUIRE(g.discriminant);
        CHECK(*g.discriminant == 2 * p - 2);
        CHECK(g.local);
        CHECK(g.self_braiding_after == CycNum::root_of_unity(p, 1));
        CHECK(s.monodromies_preserved);
        CHECK(s.self_braidings_preserved);
    }
    for (int p = 2; p <= 3; ++p) {
        auto s = uproll_triplet(p);
        auto d = total_dimension(induced_braid_matrix(s), p + 2, NicholsConfig{12, 5000});
        CHECK(d.finite);
        CHECK(d.value == (size_t)p);
    }
    for (int p = 3; p <= 6; ++p) {
        auto s = uproll_sp(p);
        CHECK(s.generators[0].induced == RatVec{Rational(1), Rational(1)});
        CHECK(s.generators[0].self_braiding_after == CycNum::root_of_unity(p, 1));
        CHECK(s.self_braidings_preserved);
        CHECK(s.monodromies_preserved);
    }
    CHECK_THROWS_AS(uproll_sp(2), InvalidInput);
    for (auto h : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
        auto s = uproll_gl11(h);
        CHECK(s.generators[0].induced == RatVec{Rational(1), Rational(0), Rational(-1)});
        CHECK(s.generators[0].self_braiding_after == CycNum(-1));
        CHECK(s.monodromies_preserved);
    }
    CHECK_THROWS_AS(uproll_gl11(Rational(0)), InvalidInput);
}

TEST_CASE("uprolling rejects non-local lattices")
{
    for (int p = 2; p <= 4; ++p) {
        try {
            uproll_rejected_example(p);
            CHECK(false);
        } catch (const CheckFailure& e) {
            std::string w = e.what();
            CHECK(w.find("gamma_0") != std::string::npos);
            CHECK(w.find("zeta2") != std::string::npos);
        }
    }
    // alpha_+/2 passes the monodromy test
    Bicharacter b(GradingGroup(1, {}), {{Rational(4)}});
    BraidedObject x{b, {b.group().make({Rational(-1, 2)})}};
    CHECK_NOTHROW(uproll(x, make_lattice({{Rational(4)}}, {{Rational(1, 2)}})));
    // form mismatch
    CHECK_THROWS_AS(uproll(x, make_lattice({{Rational(2)}}, {{Rational(1)}})), InvalidInput);
}

TEST_CASE("uproll targets and json")
{
    auto x = uproll_triplet(2).x;
    auto all = uproll(x, triplet_lattice(2), UprollTarget::All);
    CHECK(all.generators[0].induced == RatVec{Rational(1, 2)});
    CHECK(all.group == "Q^1 / R");
    auto js = uproll_json(uproll_triplet(2));
    CHECK(js == "{\"generators\":[{\"degree\":[\"-1/2\"],\"discriminant\":2,\"induced\":[\"1/2\"],"
                "\"induced_self_braiding\":\"zeta2\",\"local\":true,\"self_braiding\":\"zeta2\"}],"
                "\"group\":\"Z4\",\"monodromies_preserved\":true,\"name\":\"triplet p=2\","
                "\"self_braidings_preserved\":true,\"target\":\"local\"}");
}

TEST_CASE("braiding of trivial structures is the base braiding")
{
    for (int p = 2; p <= 5; ++p) {
        auto x = preset_rank1(p);
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b) {
                Degree l = deg1(x, Rational(a, 2 * p)), m = deg1(x, Rational(b, 3));
                auto c = yd_braiding(trivial_yd(x, l), trivial_yd(x, m));
                CHECK(c(0, 0) == x.bichar.value(l, m));
            }
    }
}
