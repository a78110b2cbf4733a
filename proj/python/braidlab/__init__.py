"""Exact computations for Nichols algebras, quantum groups and singlet fusion."""

import json

from . import _core
from ._core import (
    CheckFailure,
    CycNum,
    InvalidInput,
    Rational,
    ResourceError,
    check_ring_laws,
    gauss_binomial,
    linking_from_yd,
    nichols_hilbert,
    q_factorial,
    rank1_hilbert,
    tensor_decomposition,
    total_dimension,
    uproll_rejected_example,
)

__all__ = [
    "CheckFailure",
    "CycNum",
    "InvalidInput",
    "Rational",
    "ResourceError",
    "acceptance",
    "check_ring_laws",
    "discriminant",
    "fuse",
    "gauss_binomial",
    "is_local",
    "linking_from_yd",
    "nichols_hilbert",
    "q_factorial",
    "rank1_hilbert",
    "tensor_decomposition",
    "total_dimension",
    "triplet_lattice",
    "uproll",
    "uproll_gl11",
    "uproll_rejected_example",
    "uproll_triplet",
    "verma_yd",
    "yd_check",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def fuse(p, a, b):
    """Fusion of two singlet labels, e.g. fuse(2, "M:0,1", "M:0,1")."""
    return json.loads(_core.fusion_json(p, a, b))


def triplet_lattice(p):
    return json.loads(_core.triplet_lattice_json(p))


def discriminant(lattice):
    group, q = _core.discriminant(_dump(lattice))
    return {"group": group, "Q": q}


def is_local(lattice, lam):
    return _core.is_local(_dump(lattice), [str(x) for x in lam])


def uproll(braiding, lattice):
    return json.loads(_core.uproll_json(_dump(braiding), _dump(lattice)))


def uproll_triplet(p):
    return json.loads(_core.uproll_triplet_json(p))


def uproll_gl11(hbar="1/2"):
    return json.loads(_core.uproll_gl11_json(str(hbar)))


def verma_yd(p):
    return json.loads(_core.verma_yd_json(p))


def yd_check(module):
    return _core.yd_check_json(_dump(module))


def acceptance(determinism=False, seed=12345):
    return json.loads(_core.acceptance_json(determinism, seed))
