#include "doctest.h"

#include "braidlab/errors.hpp"
#include "braidlab/nichols.hpp"

using namespace braidlab;

namespace {

BraidMatrix rank1(const CycNum& q) { return {{q}}; }

BraidMatrix generic2()
{
    // an asymmetric rank-2 braiding with no small relations
    return {{CycNum::root_of_unity(5, 1), CycNum::root_of_unity(3, 1)},
            {CycNum::root_of_unity(4, 1), CycNum::root_of_unity(5, 2)}};
}

std::vector<size_t> hilbert_of(const BraidMatrix& q, int deg)
{
    NicholsConfig cfg;
    cfg.max_degree = std::max(deg, 8);
    return nichols_dimensions(q, deg, cfg).hilbert;
}

} // namespace

TEST_CASE("lex-least reduced words")
{
    CHECK(lex_least_reduced_word({0, 1, 2}).empty());
    CHECK(lex_least_reduced_word({1, 0, 2}) == std::vector<int>{1});
    CHECK(lex_least_reduced_word({2, 1, 0}) == std::vector<int>{1, 2, 1});
    // length equals the number of inversions
    std::vector<int> perm = {3, 0, 4, 1, 2};
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    CHECK((int)lex_least_reduced_word(perm).size() == inv);
}

TEST_CASE("quantum symmetrizer small cases")
{
    CycNum q = CycNum::root_of_unity(5, 2);
    CHECK(quantum_symmetrizer(generic2(), 1) == Matrix::identity(2));
    Matrix s2 = quantum_symmetrizer(rank1(q), 2);
    CHECK(s2.rows() == 1);
    CHECK(s2(0, 0) == CycNum(1) + q);
    // rank 1: S_n = [n]_q!, checked against the product formula
    for (int n = 1; n <= 7; ++n) CHECK(quantum_symmetrizer(rank1(q), n)(0, 0) == q_factorial(n, q));
    for (int p = 2; p <= 7; ++p) {
        CycNum z = CycNum::root_of_unity(p, 1);
        CHECK(quantum_symmetrizer(rank1(z), p)(0, 0).is_zero());
        CHECK(rank(quantum_symmetrizer(rank1(z), p)) == 0);
    }
    // rank 2, n = 2 by hand: S(x0x1) = x0x1 + q01 x1x0
    auto g = generic2();
    Matrix s = quantum_symmetrizer(g, 2);
    // words: x0x0, x0x1, x1x0, x1x1
    CHECK(s(1, 1) == CycNum(1));
    CHECK(s(2, 1) == g[0][1]);
    CHECK(s(1, 2) == g[1][0]);
    CHECK(s(0, 0) == CycNum(1) + g[0][0]);
}

TEST_CASE("symmetrizer cutoff raises a resource error with the size")
{
    NicholsConfig cfg;
    cfg.max_degree = 8;
    BraidMatrix q3(3, std::vector<CycNum>(3, CycNum(1)));
    try {
        quantum_symmetrizer(q3, 9, cfg);
        CHECK(false);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("x") != std::string::npos);
    }
    cfg.max_words = 10;
    CHECK_THROWS_AS(symmetrizer_block_factorized(q3, {2, 2, 1}, cfg), ResourceError);
}

TEST_CASE("permutation sum equals the factorized symmetrizer")
{
    auto g = generic2();
    for (int n = 0; n <= 6; ++n)
        for (int a = 0; a <= n; ++a) {
            Multidegree d = {a, n - a};
            CHECK(symmetrizer_block_permutations(g, d) == symmetrizer_block_factorized(g, d));
        }
    auto f = braid_matrix(preset_parabolic2(3));
    CHECK(symmetrizer_block_permutations(f, {2, 3}) == symmetrizer_block_factorized(f, {2, 3}));
}

TEST_CASE("rank-1 Nichols algebras")
{
    CHECK(hilbert_of(rank1(CycNum::root_of_unity(3, 1)), 4) == std::vector<size_t>{1, 1, 1, 0, 0});
    CHECK(hilbert_of(rank1(CycNum(1)), 4) == std::vector<size_t>{1, 1, 1, 1, 1});
    auto fermion = nichols_dimensions(rank1(CycNum(-1)), 5);
    CHECK(fermion.hilbert == std::vector<size_t>{1, 1, 0, 0, 0, 0});
    CHECK(fermion.finite);
    CHECK(fermion.total() == 2);
    for (int p = 2; p <= 8; ++p) {
        auto h = hilbert_of(braid_matrix(preset_rank1(p)), p + 3);
        for (int n = 0; n <= p + 3; ++n) CHECK(h[n] == (n < p ? 1u : 0u));
        auto t = total_dimension(braid_matrix(preset_rank1(p)), p + 3, NicholsConfig{12, 5000});
        CHECK(t.finite);
        CHECK(t.value == (size_t)p);
    }
    auto inf = total_dimension(rank1(CycNum(1)), 6);
    CHECK_FALSE(inf.finite);
    CHECK(inf.str() == ">= 7");
}

TEST_CASE("rank-2 total dimensions")
{
    auto t = total_dimension(braid_matrix(preset_two_fermions()), 6);
    CHECK(t.finite);
    CHECK(t.value == 4);
    auto a2 = total_dimension(braid_matrix(preset_cartan_a2(2)), 8);
    CHECK(a2.finite);
    CHECK(a2.value == 8);
    // exterior algebra shape of the parabolic example at the odd generator
    auto d = nichols_dimensions(braid_matrix(preset_parabolic2(3)), 6);
    CHECK(d.dim({0, 1}) == 1);
    CHECK(d.dim({0, 2}) == 0);
}

TEST_CASE("two-oracle agreement and generator-order invariance")
{
    std::vector<BraidMatrix> samples = {braid_matrix(preset_cartan_a2(2)), braid_matrix(preset_cartan_a2(3)),
                                        braid_matrix(preset_parabolic2(3)), braid_matrix(preset_two_fermions()),
                                        generic2()};
    for (const auto& q : samples) {
        auto d = nichols_dimensions(q, 6);
        auto s = shuffle_dimensions(q, 6);
        for (const auto& [md, comp] : d.components) CHECK(s.at(md) == comp.dim);
        BraidMatrix swapped = {{q[1][1], q[1][0]}, {q[0][1], q[0][0]}};
        auto e = nichols_dimensions(swapped, 6);
        for (const auto& [md, comp] : d.components) CHECK(e.dim({md[1], md[0]}) == comp.dim);
    }
}

TEST_CASE("relations are the kernel of the symmetrizer")
{
    auto q = braid_matrix(preset_cartan_a2(2));
    auto d = nichols_dimensions(q, 4);
    const auto& c = d.component({2, 0});
    REQUIRE(c.relations.size() == 1); // x0^2 = 0 since q_00 = -1
    CHECK(c.relations[0].begin()->first == Word{0, 0});
    const auto& c21 = d.component({2, 1});
    CHECK(c21.dim + c21.relations.size() == c21.words.size());
}

TEST_CASE("braided coproduct")
{
    CycNum q = CycNum::root_of_unity(5, 1);
    auto d = nichols_dimensions(rank1(q), 4);
    auto t1 = braided_coproduct(d, Word{0}, 0);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].left.empty());
    CHECK(t1[0].coeff.is_one());
    auto mid = braided_coproduct(d, Word{0, 0}, 1);
    REQUIRE(mid.size() == 1);
    CHECK(mid[0].coeff == CycNum(1) + q);
    CHECK(braided_coproduct(d, Word{0, 0}, 2)[0].coeff.is_one());
    // Delta(x^{p-1}) at q = zeta_p: middle coefficients are Gauss binomials, all nonzero
    for (int p = 3; p <= 6; ++p) {
        CycNum z = CycNum::root_of_unity(p, 1);
        auto dp = nichols_dimensions(rank1(z), p - 1);
        Word w(p - 1, 0);
        for (int k = 1; k < p - 1; ++k) {
            auto t = braided_coproduct(dp, w, k);
            REQUIRE(t.size() == 1);
            CHECK(t[0].coeff == gauss_binomial(p - 1, k, z));
            CHECK_FALSE(t[0].coeff.is_zero());
        }
    }
    auto gen = nichols_dimensions(generic2(), 2);
    auto t = braided_coproduct(gen, Word{1}, 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].right.empty());
    CHECK_THROWS_AS(braided_coproduct(gen, Word{0, 0, 1}, 1), InvalidInput);
}

TEST_CASE("bialgebra axiom")
{
    auto d = nichols_dimensions(braid_matrix(preset_rank1(3)), 4);
    CHECK(check_bialgebra_axiom(d, 4).ok);
    // x^2 imposed at a generic q is not a coideal
    BraidMatrix q = rank1(CycNum::root_of_unity(7, 1));
    auto bad = quotient_by_relations(q, {TensorVec{{Word{0, 0}, CycNum(1)}}}, 4);
    auto rep = check_bialgebra_axiom(bad, 4);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.witness);
    CHECK(rep.witness->first == Word{0});
    CHECK(check_bialgebra_axiom(quotient_by_relations(generic2(), {}, 1), 1).ok);
    // x^p imposed at q = zeta_p is a coideal
    auto good = quotient_by_relations(rank1(CycNum::root_of_unity(3, 1)), {TensorVec{{Word{0, 0, 0}, CycNum(1)}}}, 5);
    CHECK(check_bialgebra_axiom(good, 5).ok);
    CHECK(check_bialgebra_axiom(nichols_dimensions(braid_matrix(preset_parabolic2(3)), 5), 5).ok);
}

TEST_CASE("sufficiently unrolled")
{
    auto x = preset_rank1(3);
    auto d = nichols_dimensions(braid_matrix(x), 5);
    auto rep = is_sufficiently_unrolled(x, d);
    CHECK(rep.ok);
    CHECK_FALSE(rep.truncated);
    auto z2 = preset_rank1_torsion(2, 1, 1);
    CHECK(braid_matrix(z2)[0][0] == CycNum(-1));
    auto d2 = nichols_dimensions(braid_matrix(z2), 4);
    auto r2 = is_sufficiently_unrolled(z2, d2);
    CHECK_FALSE(r2.ok);
    REQUIRE(r2.witness);
    CHECK((*r2.witness)[0] == Multidegree{1});
    CHECK((*r2.witness)[1] == Multidegree{1});
    CHECK((*r2.witness)[2] == Multidegree{0});
    BraidedObject empty{Bicharacter(GradingGroup(1, {}), {{Rational(0)}}), {}};
    auto de = nichols_dimensions({}, 3);
    CHECK(is_sufficiently_unrolled(empty, de).ok);
    CHECK(de.hilbert == std::vector<size_t>{1, 0, 0, 0});
}
