#include "doctest.h"

#include "braidlab/errors.hpp"
#include "braidlab/io.hpp"
#include "braidlab/nichols.hpp"

using namespace braidlab;

TEST_CASE("braiding files")
{
    auto x = braided_object_from_json(
        R"({"group": {"free_rank": 1, "torsion": [4]}, "exponents": [["2/3", "0"], ["0", "1/2"]], "degrees": [["1", 3], [0, 1]]})");
    CHECK(x.rank() == 2);
    CHECK(x.degrees[0].torsion_part == std::vector<int64_t>{3});
    auto back = braided_object_from_json(braided_object_to_json(x));
    CHECK(braid_matrix(back) == braid_matrix(x));
    for (int p = 2; p <= 5; ++p) {
        auto r = preset_rank1(p);
        CHECK(braid_matrix_from_json(braided_object_to_json(r)) == braid_matrix(r));
    }
    auto q = braid_matrix_from_json(R"({"q": [["zeta3", "1"], ["-1", "zeta(8)^3"]]})");
    CHECK(q[0][0] == CycNum::root_of_unity(3, 1));
    CHECK(q[1][1] == CycNum::root_of_unity(8, 3));
    CHECK_THROWS_AS(braid_matrix_from_json(R"({"q": [["1", "2"]]})"), InvalidInput);
    CHECK_THROWS_AS(braided_object_from_json("{"), InvalidInput);
    CHECK_THROWS_AS(braided_object_from_json(R"({"group": {"free_rank": 1}, "exponents": [["1"]]})"), InvalidInput);
    CHECK_THROWS_AS(
        braided_object_from_json(R"({"group": {"free_rank": 1}, "exponents": [["1"]], "degrees": [[0.5]]})"),
        InvalidInput);
    CHECK_THROWS_AS(
        braided_object_from_json(R"({"group": {"free_rank": 1}, "exponents": [["1"]], "degrees": [["1", "2"]]})"),
        InvalidInput);
}

TEST_CASE("lattice files")
{
    auto l = lattice_from_json(R"({"form": [["4"]], "basis": [["1"]]})");
    CHECK(l.basis == triplet_lattice(2).basis);
    CHECK(l.form == triplet_lattice(2).form);
    auto back = lattice_from_json(lattice_to_json(dual_lattice(l)));
    CHECK(back.basis == RatMat{{Rational(1, 4)}});
    CHECK_THROWS_AS(lattice_from_json(R"({"form": [["4"]]})"), InvalidInput);
    CHECK_THROWS(lattice_from_json(R"({"form": [["4"]], "basis": [["1", "2"]]})"));
}

TEST_CASE("YD module files")
{
    auto x = preset_rank1(3);
    auto v = verma_yd(x);
    auto back = yd_module_from_json(yd_module_to_json(v));
    CHECK(back.action == v.action);
    CHECK(back.delta.size() == v.delta.size());
    for (size_t j = 0; j < v.delta.size(); ++j) CHECK(back.delta[j] == v.delta[j]);
    CHECK(yd_check(back).ok);
    CHECK_THROWS_AS(read_file("/nonexistent/file.json"), InvalidInput);
}
