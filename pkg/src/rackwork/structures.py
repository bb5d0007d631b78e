"""Racks and weak racks: axiom checking and the standard constructions.

A structure is a carrier with two operations, the main one written a.b or ab
and a companion written a<>b ("diamond").  Full racks satisfy

    a(bc) = (ab)(ac),   (ab)<>a = b,   a(b<>a) = b,
    (c<>b)<>a = (c<>a)<>(b<>a),

weak racks keep both self-distributivities but replace the two cancellation
laws by the single compatibility (ab)<>a = a(b<>a).  All checks here are
exhaustive over the finite carrier and report machine-readable witnesses.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import CarrierTooLarge, IndexOutOfRange, KindMismatch, SizeMismatch
from .tables import GroupTable, OpTable, derive_diamond, is_left_invertible

RACK = "rack"
WEAK_RACK = "weak_rack"
UNCHECKED = "unchecked"
KINDS = (RACK, WEAK_RACK, UNCHECKED)

# axiom identifiers, used verbatim in reports
AX_LEFT_DISTRIB = "a(bc) = (ab)(ac)"
AX_CANCEL_OUT = "(ab) diamond a = b"
AX_CANCEL_IN = "a(b diamond a) = b"
AX_RIGHT_DISTRIB = "(c diamond b) diamond a = (c diamond a) diamond (b diamond a)"
AX_WEAK_COMPAT = "(ab) diamond a = a(b diamond a)"

WITNESS_CAP = 32

BOOLEAN_CARRIER_CAP = 256


def max_carrier(default: int) -> int:
    """Carrier cap, raisable (never lowered) via RACKWORK_MAX_N."""
    raw = os.environ.get("RACKWORK_MAX_N")
    if raw is None:
        return default
    try:
        return max(default, int(raw))
    except ValueError:
        return default


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive axiom scan.

    Failures are (axiom id, witness) pairs in lexicographic witness order,
    capped per call; witnesses list the bound variables of the axiom in
    alphabetical order, e.g. (a, b, c) for the triple axioms.
    """

    passed: bool
    failures: list = field(default_factory=list)


def _witnesses(mask: np.ndarray, cap: int) -> list[tuple[int, ...]]:
    bad = np.argwhere(mask)
    return [tuple(int(v) for v in row) for row in bad[:cap]]


_SLAB_LIMIT = 64  # above this, triple scans run one outer index at a time


def _left_distrib_mask(d: np.ndarray) -> np.ndarray:
    n = d.shape[0]
    if n <= _SLAB_LIMIT:
        lhs = d[np.arange(n)[:, None, None], d[None, :, :]]   # a(bc)
        rhs = d[d[:, :, None], d[:, None, :]]                 # (ab)(ac)
        return lhs != rhs
    out = np.empty((n, n, n), dtype=bool)
    for a in range(n):
        row = d[a]
        np.not_equal(row[d], d[row[:, None], row[None, :]], out=out[a])
    return out


def _right_distrib_mask(e: np.ndarray) -> np.ndarray:
    n = e.shape[0]
    if n <= _SLAB_LIMIT:
        a = np.arange(n)[:, None, None]
        b = np.arange(n)[None, :, None]
        c = np.arange(n)[None, None, :]
        return e[e[c, b], a] != e[e[c, a], e[b, a]]
    out = np.empty((n, n, n), dtype=bool)
    et = e.T
    for a in range(n):
        col = e[:, a]
        # [b, c] grids of (c<>b)<>a and (c<>a)<>(b<>a)
        np.not_equal(col[et], e[col[None, :], col[:, None]], out=out[a])
    return out


@dataclass(frozen=True, eq=False)
class Structure:
    """A carrier with a dot table, a diamond table and a kind tag.

    Plain record: the named constructors below (and make_structure) are the
    verifying entry points; a kind of 'rack' or 'weak_rack' obtained from
    them is backed by an exhaustive axiom scan.
    """

    n: int
    dot: OpTable
    diamond: OpTable
    kind: str

    def __post_init__(self):
        if self.dot.n != self.n or self.diamond.n != self.n:
            raise SizeMismatch("dot/diamond tables disagree with carrier size")
        if self.kind not in KINDS:
            raise KindMismatch(f"unknown kind {self.kind!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Structure)
            and self.n == other.n
            and self.dot == other.dot
            and self.diamond == other.diamond
            and self.kind == other.kind
        )


def check_rack_axioms(s: Structure, max_witnesses: int = WITNESS_CAP) -> AxiomReport:
    """Exhaustively test the four full-rack axioms (triple axioms over all
    n^3 triples, cancellation axioms over all n^2 pairs)."""
    n = s.n
    d = s.dot.entries
    e = s.diamond.entries
    rng = np.arange(n)
    failures = []

    failures += [(AX_LEFT_DISTRIB, w)
                 for w in _witnesses(_left_distrib_mask(d), max_witnesses)]

    got = e[d, rng[:, None]]                       # (ab) <> a
    failures += [(AX_CANCEL_OUT, w)
                 for w in _witnesses(got != rng[None, :], max_witnesses)]

    got = d[rng[:, None], e.T]                     # a (b <> a)
    failures += [(AX_CANCEL_IN, w)
                 for w in _witnesses(got != rng[None, :], max_witnesses)]

    failures += [(AX_RIGHT_DISTRIB, w)
                 for w in _witnesses(_right_distrib_mask(e), max_witnesses)]

    return AxiomReport(passed=not failures, failures=failures)


def check_weak_rack_axioms(s: Structure, max_witnesses: int = WITNESS_CAP) -> AxiomReport:
    """Exhaustively test the three weak-rack axioms."""
    n = s.n
    d = s.dot.entries
    e = s.diamond.entries
    rng = np.arange(n)
    failures = []

    failures += [(AX_LEFT_DISTRIB, w)
                 for w in _witnesses(_left_distrib_mask(d), max_witnesses)]

    lhs = e[d, rng[:, None]]                       # (ab) <> a
    rhs = d[rng[:, None], e.T]                     # a (b <> a)
    failures += [(AX_WEAK_COMPAT, w)
                 for w in _witnesses(lhs != rhs, max_witnesses)]

    failures += [(AX_RIGHT_DISTRIB, w)
                 for w in _witnesses(_right_distrib_mask(e), max_witnesses)]

    return AxiomReport(passed=not failures, failures=failures)


def _verify_kind(s: Structure) -> None:
    if s.kind == RACK:
        rep = check_rack_axioms(s, max_witnesses=1)
    elif s.kind == WEAK_RACK:
        rep = check_weak_rack_axioms(s, max_witnesses=1)
    else:
        return
    if not rep.passed:
        axiom, wit = rep.failures[0]
        raise KindMismatch(f"claimed {s.kind} violates {axiom!r} at {wit}")


def make_structure(dot: OpTable, diamond: OpTable, kind: str = UNCHECKED) -> Structure:
    """Assemble a structure; a non-unchecked kind is verified eagerly."""
    s = Structure(dot.n, dot, diamond, kind)
    _verify_kind(s)
    return s


def _from_arrays(dot: np.ndarray, diamond: np.ndarray, kind: str) -> Structure:
    n = dot.shape[0]
    return make_structure(OpTable(n, dot), OpTable(n, diamond), kind)


def conjugation_rack(g: GroupTable) -> Structure:
    """Rack on a group carrier: a.b = a b a^-1 and a<>b = b^-1 a b
    (the left argument conjugated by the right)."""
    m = g.mul.entries
    inv = g.inv
    rng = np.arange(g.n)
    dot = m[m, inv[:, None]]                       # (a b) a^-1
    t = m[inv[None, :], rng[:, None]]              # t[a, b] = b^-1 a
    diamond = m[t, rng[None, :]]                   # (b^-1 a) b
    return _from_arrays(dot, diamond, RACK)


def trivial_rack(n: int) -> Structure:
    """The self-dual rack with ab = b and a<>b = a."""
    if n < 1:
        raise SizeMismatch("carrier size must be positive")
    rng = np.arange(n)
    dot = np.tile(rng, (n, 1))
    diamond = np.repeat(rng, n).reshape(n, n)
    return _from_arrays(dot, diamond, RACK)


def _boolean_carrier(k: int) -> int:
    if k < 0:
        raise SizeMismatch("atom count must be non-negative")
    n = 1 << k
    if n > max_carrier(BOOLEAN_CARRIER_CAP):
        raise CarrierTooLarge(f"carrier 2^{k} = {n} exceeds cap")
    return n


def boolean_weak_rack_implication(k: int) -> Structure:
    """Weak rack on the subsets of k atoms: ab = a -> b, a<>b = a \\ b."""
    n = _boolean_carrier(k)
    mask = n - 1
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    return _from_arrays((~a | b) & mask, a & ~b & mask, WEAK_RACK)


def boolean_weak_rack_lattice(k: int) -> Structure:
    """Weak rack on the subsets of k atoms: ab = a | b, a<>b = a & b."""
    n = _boolean_carrier(k)
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    return _from_arrays(a | b, a & b, WEAK_RACK)


def dual_rack(s: Structure) -> Structure:
    """Opposite structure: new dot (a, b) -> b<>a and new diamond
    (a, b) -> b.a; an involution.  The kind is re-verified on the dual."""
    return _from_arrays(s.diamond.entries.T, s.dot.entries.T, s.kind)


def direct_product(s1: Structure, s2: Structure) -> Structure:
    """Componentwise product on pairs, pair (x, y) encoded as x*n2 + y."""
    if s1.kind != s2.kind:
        raise KindMismatch(f"cannot combine {s1.kind} with {s2.kind}")
    n2 = s2.n
    m = s1.n * n2

    def combine(t1, t2):
        out = t1[:, None, :, None] * n2 + t2[None, :, None, :]
        return np.ascontiguousarray(out.reshape(m, m))

    return _from_arrays(
        combine(s1.dot.entries, s2.dot.entries),
        combine(s1.diamond.entries, s2.diamond.entries),
        s1.kind,
    )


def product_with_dual(s: Structure) -> Structure:
    """Product of a structure with its dual on pairs: the main operation is
    the box product (x,y)(u,v) = (xu, v<>y) and the companion is
    ((x,y),(u,v)) -> (x<>u, vy).  The kind is re-verified on the result."""
    n = s.n
    m = n * n
    d = s.dot.entries
    e = s.diamond.entries

    def combine(t1, t2):
        # component 1 from (x, u), component 2 from (v, y)
        out = t1[:, None, :, None] * n + t2.T[None, :, None, :]
        return np.ascontiguousarray(out.reshape(m, m))

    return _from_arrays(combine(d, e), combine(e, d), s.kind)


def check_morphism(f, s1: Structure, s2: Structure,
                   max_witnesses: int = WITNESS_CAP) -> AxiomReport:
    """Check that f: carrier(s1) -> carrier(s2) respects both operations:
    f(a.b) = f(a).f(b) and f(a<>b) = f(a)<>f(b) over all pairs."""
    F = np.asarray(list(f), dtype=np.int64)
    if F.shape != (s1.n,):
        raise SizeMismatch(f"map must list {s1.n} images, got shape {F.shape}")
    if F.size and (F.min() < 0 or F.max() >= s2.n):
        raise IndexOutOfRange("map image out of range for the target carrier")
    failures = []
    laws = (
        ("f(ab) = f(a)f(b)", s1.dot.entries, s2.dot.entries),
        ("f(a diamond b) = f(a) diamond f(b)",
         s1.diamond.entries, s2.diamond.entries),
    )
    for name, t1, t2 in laws:
        lhs = F[t1]
        rhs = t2[F[:, None], F[None, :]]
        failures += [(name, w) for w in _witnesses(lhs != rhs, max_witnesses)]
    return AxiomReport(passed=not failures, failures=failures)


def derived_diamond_matches(s: Structure) -> bool:
    """In a rack the diamond table is forced by the dot table; check the
    stored table equals the derived one."""
    if not is_left_invertible(s.dot):
        return False
    return derive_diamond(s.dot) == s.diamond
