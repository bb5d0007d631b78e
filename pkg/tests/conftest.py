"""Shared fixtures: the symmetric-group fixture built from an independent
permutation-composition oracle, and the standard structure fleet."""

from __future__ import annotations

import numpy as np
import pytest

import rackwork as rw

# permutations of {1,2,3} as 0-based image tuples; fixed index convention:
# 0=id, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132)
S3_ELEMS = [
    (0, 1, 2),
    (1, 0, 2),
    (2, 1, 0),
    (0, 2, 1),
    (1, 2, 0),
    (2, 0, 1),
]
S3_NAMES = ["id", "(12)", "(13)", "(23)", "(123)", "(132)"]


def compose(p, q):
    """Product pq applies the right factor first."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def s3_mul_table() -> list[list[int]]:
    idx = {p: i for i, p in enumerate(S3_ELEMS)}
    return [[idx[compose(a, b)] for b in S3_ELEMS] for a in S3_ELEMS]


@pytest.fixture(scope="session")
def s3_group() -> rw.GroupTable:
    flat = [v for row in s3_mul_table() for v in row]
    return rw.validate_group(rw.make_op_table(6, flat))


@pytest.fixture(scope="session")
def conj_s3(s3_group) -> rw.Structure:
    return rw.conjugation_rack(s3_group)


@pytest.fixture(scope="session")
def z3_group() -> rw.GroupTable:
    flat = [(a + b) % 3 for a in range(3) for b in range(3)]
    return rw.validate_group(rw.make_op_table(3, flat))


def swap_rack() -> rw.Structure:
    """The non-trivial rack on two elements: ab = 1-b."""
    dot = rw.make_op_table(2, [1, 0, 1, 0])
    return rw.make_structure(dot, rw.derive_diamond(dot), rw.RACK)


@pytest.fixture(scope="session")
def fleet(conj_s3, z3_group) -> list[tuple[str, rw.Structure]]:
    """Named structures every cross-cutting law is tested against."""
    ctx = rw.make_trig_context(conj_s3, 1, 4)
    return [
        ("trivial1", rw.trivial_rack(1)),
        ("trivial2", rw.trivial_rack(2)),
        ("trivial3", rw.trivial_rack(3)),
        ("trivial4", rw.trivial_rack(4)),
        ("swap2", swap_rack()),
        ("conj_z3", rw.conjugation_rack(z3_group)),
        ("conj_s3", conj_s3),
        ("dual_conj_s3", rw.dual_rack(conj_s3)),
        ("trig_derived_s3", rw.trig_derived_rack(ctx)),
        ("bool_impl0", rw.boolean_weak_rack_implication(0)),
        ("bool_impl1", rw.boolean_weak_rack_implication(1)),
        ("bool_impl2", rw.boolean_weak_rack_implication(2)),
        ("bool_latt1", rw.boolean_weak_rack_lattice(1)),
        ("bool_latt2", rw.boolean_weak_rack_lattice(2)),
        ("triv2xtriv3", rw.direct_product(rw.trivial_rack(2), rw.trivial_rack(3))),
        ("box_conj_s3", rw.product_with_dual(conj_s3)),
    ]


@pytest.fixture(scope="session", autouse=True)
def _warmup():
    """Touch the vectorized kernels once so timed acceptance checks do not
    pay numpy first-call overhead."""
    s = rw.trivial_rack(2)
    rw.check_rack_axioms(s)
    rw.check_weak_rack_axioms(s)
    rw.check_qybe(rw.w_map(s))
    rw.check_exp_homomorphism(s, 0)
    ctx = rw.make_trig_context(s, 0, 0)
    rw.check_trig_properties(ctx)
    rw.check_euler_formula(ctx)
    rw.check_hyperbolic_factorization(ctx)
    np.arange(4).reshape(2, 2)[np.zeros((2, 2), dtype=np.int64),
                               np.zeros((2, 2), dtype=np.int64)]
