#include "doctest.h"

#include "braidlab/errors.hpp"
#include "braidlab/hopf.hpp"
#include "braidlab/repcat.hpp"

using namespace braidlab;

namespace {

std::vector<std::string> relation_names(const HopfPresentation& u, const std::string& kind = "")
{
    std::vector<std::string> out;
    for (const auto& r : u.relations)
        if (kind.empty() || r.kind == kind) out.push_back(r.name);
    return out;
}

NcPoly word_poly(const HopfPresentation& u, const std::vector<std::string>& letters)
{
    NcMono m;
    for (const auto& l : letters) m.push_back(u.symbol(l));
    return NcPoly{{m, CycNum(1)}};
}

} // namespace

TEST_CASE("unrolled sl2 presentation at p = 2")
{
    auto u = build_uqh_sl2(2);
    CHECK(u.nichols_top == 1);
    std::vector<std::string> expect = {"K K^-1 = 1",     "K x = -x K",     "K x* = -x* K", "H x = 2 x + x H",
                                       "H x* = -2 x* + x* H", "x x = 0", "x* x* = 0",     "x x* + x* x = 1 - K K"};
    CHECK(relation_names(u) == expect);
}

TEST_CASE("finite-order group-likes carry only the order relation")
{
    auto u = build_uq_sl2(3);
    auto cartan = relation_names(u, "cartan");
    REQUIRE(cartan.size() == 1);
    CHECK(cartan[0].find("K K K") != std::string::npos);
    // PBW basis x^a K^b x*^c with a, b, c < p
    CHECK((size_t)(u.nichols_top + 1) * (size_t)u.cartan.grouplikes[0].order * (size_t)(u.nichols_top + 1) == 27u);
}

TEST_CASE("relations are consistent on the sl2 module family")
{
    for (int p : {2, 3}) {
        auto u = build_uqh_sl2(p);
        CHECK(check_relation_consistency(u, sl2_presentation_family(p, false)).ok);
        CHECK(check_antipode(u).ok);
        CHECK(check_counit(u).ok);
        auto uq = build_uq_sl2(p);
        CHECK(check_relation_consistency(uq, sl2_presentation_family(p, true)).ok);
        auto bad = with_linking(uq, LinkingData{CycNum(1), -uq.q[0][0], CycNum(1), CycNum(-2)});
        auto rep = check_relation_consistency(bad, sl2_presentation_family(p, true));
        CHECK_FALSE(rep.ok);
        CHECK(rep.witness.has_value());
    }
}

TEST_CASE("substitution recovers the sl2 commutator")
{
    for (int p : {2, 3, 4}) {
        CHECK(check_sl2_substitution(p));
        CHECK_FALSE(check_sl2_substitution(p, -1));
    }
}

TEST_CASE("normal form is associative on rank-1 words")
{
    for (int p = 2; p <= 4; ++p) {
        auto u = build_uqh_sl2(p);
        std::vector<std::vector<std::string>> words = {
            {"x", "x*"}, {"x*", "x"}, {"K", "x*", "x"}, {"x*", "H", "x", "K^-1"}, {"x*", "x*", "x"}, {"x", "x*", "x*", "x"}};
        for (const auto& a : words)
            for (const auto& b : words) {
                std::vector<std::string> ab = a;
                ab.insert(ab.end(), b.begin(), b.end());
                auto whole = u.normal_form(word_poly(u, ab));
                auto split = u.multiply(u.normal_form(word_poly(u, a)), u.normal_form(word_poly(u, b)));
                CHECK(whole == split);
            }
    }
}

TEST_CASE("super presentation and the reversed linking order")
{
    auto usp = build_usp(3);
    CHECK(relation_names(usp).size() - relation_names(usp, "cartan").size() == 9);
    CHECK(check_coproduct_symbolic(usp).ok);
    CHECK(check_antipode(usp).ok);
    auto reversed = check_coproduct_symbolic(build_usp(3, true));
    CHECK_FALSE(reversed.ok);
    REQUIRE(reversed.witness);
    CHECK(reversed.witness->find("x*") != std::string::npos);
}

TEST_CASE("gl(1|1) change of variables")
{
    auto g = check_gl11_change_of_variables(Rational(1, 3));
    CHECK(g.step_product);
    CHECK_FALSE(g.step_unscaled);
    CHECK(g.step_rescaled);
    CHECK(g.coproduct_x);
    CHECK(g.coproduct_y);
    CHECK(g.x_squared);
    auto u = build_ugl11(Rational(1, 3));
    CHECK(check_coproduct_symbolic(u).ok);
    CHECK(check_antipode(u).ok);
}

TEST_CASE("biproduct and Cartan part")
{
    auto x = preset_rank1(3);
    auto d = nichols_dimensions(braid_matrix(x), 5);
    CartanSpec c;
    c.grouplikes.push_back({"K", 0, {CycNum::root_of_unity(3, 1)}});
    c.primitives.push_back({"H", {Rational(2, 3)}});
    auto b = radford_biproduct(d, x, c);
    CHECK_FALSE(b.has_dual);
    CHECK(relation_names(b, "linking").empty());
    CHECK(check_biproduct_splitting(b));
    CHECK(check_coproduct_symbolic(b).ok);
    CHECK(check_antipode(b).ok);
    CHECK_THROWS_AS(cartan_only(c), InvalidInput);
    auto co = cartan_only(CartanSpec{{{"K", 0, {}}}, {{"H", {}}}});
    CHECK(co.rank() == 0);
    CHECK(check_relation_consistency(co, {}).ok);
}

TEST_CASE("missing realizing group-likes are reported")
{
    auto x = preset_rank1(3);
    CartanSpec c;
    c.primitives.push_back({"H", {Rational(2, 3)}});
    CHECK_THROWS_AS(build_uq(x, c), InvalidInput);
}

TEST_CASE("json round trip")
{
    for (const auto& u : {build_usp(3), build_uqh_sl2(2), build_ugl11(Rational(1, 2))}) {
        auto js = presentation_to_json(u);
        auto back = presentation_from_json(js);
        CHECK(presentation_to_json(back) == js);
        CHECK(relation_names(back) == relation_names(u));
    }
    CHECK_THROWS(presentation_from_json("{\"name\": 3}"));
}
