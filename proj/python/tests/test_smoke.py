import json

import pytest

import braidlab


def test_cyclotomic_arithmetic():
    z = braidlab.CycNum.root_of_unity(6)
    assert str(z) == "zeta6"
    assert (z.pow(6)).is_one()
    assert str(braidlab.CycNum("zeta(8)^3") * braidlab.CycNum("zeta8")) == "-1"
    assert abs(complex(braidlab.CycNum.root_of_unity(4)) - 1j) < 1e-12
    for p in range(2, 8):
        q = braidlab.CycNum.root_of_unity(p)
        assert all(braidlab.gauss_binomial(p, k, q).is_zero() for k in range(1, p))
    assert str(braidlab.Rational("2/4") + braidlab.Rational(1, 2)) == "1"


def test_nichols():
    assert braidlab.rank1_hilbert(3, 5) == [1, 1, 1, 0, 0, 0]
    braiding = {"group": {"free_rank": 1, "torsion": []}, "exponents": [["2/3"]], "degrees": [["1"]]}
    assert braidlab.nichols_hilbert(json.dumps(braiding), 4) == [1, 1, 1, 0, 0]
    assert braidlab.total_dimension(json.dumps({"q": [["-1", "1"], ["1", "-1"]]}), 6) == "4"


def test_fusion_and_tensor():
    assert braidlab.fuse(2, "M:0,1", "M:0,1") == {"level": "module", "result": [{"M:-1,1": 1}], "rule": "M x M"}
    assert braidlab.fuse(3, "A", "F:1/3")["result"] == [{"F:1/3": 1}, {"F:4/3": 1}, {"F:7/3": 1}]
    assert braidlab.tensor_decomposition(2, "M:1,2", "M:1,2") == {"P:1,1": 1}
    assert braidlab.check_ring_laws(2, 1)
    with pytest.raises(braidlab.InvalidInput):
        braidlab.fuse(2, "Q:1", "M:1,1")


def test_lattice_and_uproll():
    lat = braidlab.triplet_lattice(2)
    assert braidlab.discriminant(lat) == {"group": "Z4", "Q": ["1", "zeta8", "zeta2", "zeta8"]}
    assert braidlab.is_local(lat, ["1/2"])
    assert not braidlab.is_local(lat, ["1/3"])
    for p in range(2, 6):
        gen = braidlab.uproll_triplet(p)["generators"][0]
        assert gen["discriminant"] == 2 * p - 2
    assert braidlab.uproll_gl11("1/3")["generators"][0]["induced_self_braiding"] == "zeta2"
    with pytest.raises(braidlab.CheckFailure):
        braidlab.uproll_rejected_example(2)


def test_yd():
    assert braidlab.linking_from_yd(3)
    module = braidlab.verma_yd(3)
    assert braidlab.yd_check(module)
    module["action"][1][0] = "7"
    assert not braidlab.yd_check(module)


def test_acceptance_subset_runs():
    report = braidlab.acceptance(determinism=False)
    assert report["schema_version"] == 1
    assert [c["id"] for c in report["criteria"]] == list(range(1, 12))
    assert report["unexpected_failures"] == 0
