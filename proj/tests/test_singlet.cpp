#include "doctest.h"

#include "braidlab/errors.hpp"
#include "braidlab/singlet.hpp"

using namespace braidlab;

namespace {

Multiset ms(std::initializer_list<std::pair<const IndecLabel, int>> l) { return Multiset(l); }

} // namespace

TEST_CASE("label parsing and canonical forms")
{
    CHECK(parse_label("M:0,1", 2) == simple_label(0, 1));
    CHECK(parse_label("A", 3) == verma_label(1, 1));
    CHECK(parse_label("F:1/3", 3) == typical_label(Rational(1, 3)));
    // alpha_{1,1} = 0 and alpha_{2,2} = (p - 1)/2
    CHECK(parse_label("F:0", 3) == verma_label(1, 1));
    CHECK(parse_label("F:1", 3) == verma_label(2, 2));
    CHECK(parse_label("F:2,3", 3) == simple_label(2, 3));
    CHECK(parse_label("P:-1,3", 3) == simple_label(-1, 3));
    CHECK(parse_label("Fbar:4,3", 3) == simple_label(4, 3));
    for (int64_t p : {2, 3, 5})
        for (int64_t r = -3; r <= 3; ++r)
            for (int64_t s = 1; s <= p; ++s)
                CHECK(canonical(typical_label(alpha_rs(r, s, p)), p) == canonical(verma_label(r, s), p));
    CHECK_THROWS_AS(parse_label("M:0,4", 3), InvalidInput);
    CHECK_THROWS_AS(parse_label("M:0,0", 3), InvalidInput);
    CHECK_THROWS_AS(parse_label("Q:1,1", 3), InvalidInput);
    CHECK_THROWS_AS(parse_label("M:x,1", 3), InvalidInput);
    CHECK_THROWS_AS(parse_label("M:1", 3), InvalidInput);
    CHECK_THROWS_AS(parse_label("M:1,1", 1), InvalidInput);
}

TEST_CASE("fusion formulas on small labels")
{
    for (int64_t p : {2, 3, 4})
        for (int64_t r = -2; r <= 2; ++r)
            for (int64_t s = 1; s <= p; ++s) {
                auto f = fuse(simple_label(1, 1), simple_label(r, s), p);
                CHECK(f.level == FusionLevel::Module);
                CHECK(f.terms == ms({{simple_label(r, s), 1}}));
            }
    CHECK(fuse(simple_label(0, 1), simple_label(2, 1), 3).terms == ms({{simple_label(1, 1), 1}}));
    CHECK(fuse(simple_label(0, 1), simple_label(0, 1), 2).terms == ms({{simple_label(-1, 1), 1}}));
    // M(1,2) x M(1,2) at p = 3: M(1,1) + M(1,3)
    CHECK(fuse(simple_label(1, 2), simple_label(1, 2), 3).terms == ms({{simple_label(1, 1), 1}, {simple_label(1, 3), 1}}));
    // p = 2: M(1,2) x M(1,2) = P(1,1)
    CHECK(fuse(simple_label(1, 2), simple_label(1, 2), 2).terms == ms({{projective_label(1, 1), 1}}));
    // M x F_lambda: s summands starting at lambda + alpha_{r,s}
    auto t = fuse(simple_label(2, 3), typical_label(Rational(1, 3)), 4);
    CHECK(t.terms == ms({{typical_label(Rational(1, 3) + alpha_rs(2, 3, 4)), 1},
                         {typical_label(Rational(1, 3) + alpha_rs(2, 3, 4) + Rational(1)), 1},
                         {typical_label(Rational(1, 3) + alpha_rs(2, 3, 4) + Rational(2)), 1}}));
    // A x F_mu: p consecutive typicals
    for (int64_t p : {2, 3, 4}) {
        auto a = fuse(verma_label(1, 1), typical_label(Rational(2, 7)), p);
        CHECK(a.level == FusionLevel::Module);
        REQUIRE(a.terms.size() == (size_t)p);
        int64_t l = 0;
        for (const auto& [lab, c] : a.terms) CHECK(lab == typical_label(Rational(2, 7) + Rational(l++)));
    }
    auto k = fuse(projective_label(1, 1), verma_label(0, 1), 3);
    CHECK(k.level == FusionLevel::K0);
    CHECK(fusion_json(fuse(simple_label(0, 1), simple_label(0, 1), 2)) ==
          R"({"level":"module","result":[{"M:-1,1":1}],"rule":"M x M"})");
}

TEST_CASE("empty projective ranges")
{
    // 2p + 1 - s - s' > p: the P block is empty
    for (int64_t p : {3, 4, 5})
        for (int64_t s = 1; s + 1 < p; ++s) {
            auto f = fuse(simple_label(1, 1), simple_label(0, s), p);
            for (const auto& [l, c] : f.terms) CHECK(l.kind != IndecLabel::Projective);
        }
}

TEST_CASE("Grothendieck classes")
{
    CHECK(groth_class(simple_label(3, 2), 4) == ms({{simple_label(3, 2), 1}}));
    CHECK(groth_class(verma_label(0, 1), 3) == ms({{simple_label(0, 1), 1}, {simple_label(1, 2), 1}}));
    CHECK(groth_class(dual_verma_label(0, 1), 3) == ms({{simple_label(0, 1), 1}, {simple_label(1, 2), 1}}));
    CHECK(groth_class(projective_label(1, 1), 3) ==
          ms({{simple_label(1, 1), 2}, {simple_label(0, 2), 1}, {simple_label(2, 2), 1}}));
    CHECK(groth_class(typical_label(Rational(1, 5)), 3) == ms({{typical_label(Rational(1, 5)), 1}}));
    // classes agree with the representation side
    for (int64_t p : {2, 3})
        for (const auto& l : label_window(p, 1)) CHECK(groth_class(l, p) == composition_factors(module_of(l, p)));
}

TEST_CASE("simple currents form a copy of Z")
{
    for (int64_t p : {2, 3, 4})
        for (int64_t r = -5; r <= 5; ++r)
            for (int64_t rp = -5; rp <= 5; ++rp)
                CHECK(fuse(simple_label(r, 1), simple_label(rp, 1), p).terms == ms({{simple_label(r + rp - 1, 1), 1}}));
}

TEST_CASE("ring laws")
{
    for (int64_t p : {2, 3, 4}) {
        auto rep = check_ring_laws(p, 3);
        CHECK_MESSAGE(rep.ok, (rep.witness ? *rep.witness : ""));
        CHECK(rep.lines.size() == 3);
    }
}

TEST_CASE("cross check against the quantum group side")
{
    for (int64_t p : {2, 3}) {
        auto sample = default_cross_sample(p);
        CHECK(sample.size() >= 12);
        auto rep = cross_check(p, sample);
        CHECK_MESSAGE(rep.ok, (rep.witness ? *rep.witness : ""));
        CHECK(rep.checked == sample.size());
    }
    // M x Fbar keeps the chain index r + r' - 1
    auto bad = cross_check(3, {{simple_label(1, 2), dual_verma_label(1, 1)}});
    CHECK(bad.ok);
    CHECK(bad.lines[0].find("Fbar:1,2") != std::string::npos);
}
