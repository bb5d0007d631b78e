"""Finite carriers and binary operation tables.

Elements of a carrier of size n are the dense indices 0..n-1.  An operation
table is an n x n integer matrix with t[a, b] = a op b.  Everything here is
immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    IndexOutOfRange,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLeftInvertible,
    SizeMismatch,
)


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr, dtype=np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class OpTable:
    """One binary operation on a finite carrier, as an n x n index table."""

    n: int
    entries: np.ndarray  # shape (n, n), values in [0, n-1], read-only

    def __post_init__(self):
        if self.n < 1:
            raise SizeMismatch(f"carrier size must be positive, got {self.n}")
        ent = _freeze(np.asarray(self.entries))
        if ent.shape != (self.n, self.n):
            raise SizeMismatch(
                f"expected {self.n}x{self.n} table, got shape {ent.shape}"
            )
        if ent.size and (ent.min() < 0 or ent.max() >= self.n):
            raise IndexOutOfRange(
                f"table entries must lie in [0, {self.n - 1}]"
            )
        object.__setattr__(self, "entries", ent)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OpTable)
            and self.n == other.n
            and np.array_equal(self.entries, other.entries)
        )

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def make_op_table(n: int, entries) -> OpTable:
    """Build and validate an OpTable from a flat, row-major list of indices."""
    flat = list(entries)
    if n < 1:
        raise SizeMismatch(f"carrier size must be positive, got {n}")
    if len(flat) != n * n:
        raise SizeMismatch(f"expected {n * n} entries, got {len(flat)}")
    return OpTable(n, np.asarray(flat, dtype=np.int64).reshape(n, n))


def apply(t: OpTable, a: int, b: int) -> int:
    """Evaluate a op b, with bounds checking."""
    if not (0 <= a < t.n and 0 <= b < t.n):
        raise IndexOutOfRange(f"({a},{b}) out of range for carrier size {t.n}")
    return int(t.entries[a, b])


def is_left_invertible(t: OpTable) -> bool:
    """True iff every row of the table is a permutation of the carrier,
    i.e. every left translation x -> a op x is a bijection."""
    return bool(
        (np.sort(t.entries, axis=1) == np.arange(t.n)[None, :]).all()
    )


def derive_diamond(dot: OpTable) -> OpTable:
    """Solve the cancellation laws for the companion operation: b <> a is
    the unique y with a . y = b.  Requires every row of dot to be a
    permutation."""
    if not is_left_invertible(dot):
        raise NotLeftInvertible("some left translation is not a bijection")
    # argsort inverts each row; inv[a, b] = y with dot[a, y] = b, and the
    # companion table is indexed (b, a), hence the transpose.
    inv = np.argsort(dot.entries, axis=1)
    return OpTable(dot.n, inv.T)


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A validated finite group: multiplication table, identity, inverses."""

    n: int
    mul: OpTable
    identity: int
    inv: np.ndarray  # shape (n,), read-only

    def __post_init__(self):
        object.__setattr__(self, "inv", _freeze(np.asarray(self.inv)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupTable)
            and self.n == other.n
            and self.mul == other.mul
            and self.identity == other.identity
            and np.array_equal(self.inv, other.inv)
        )


def validate_group(mul: OpTable) -> GroupTable:
    """Exhaustively check that mul is a group: two-sided identity, an
    inverse for every element, associativity over all triples."""
    n = mul.n
    m = mul.entries
    rng = np.arange(n)

    identity = None
    for e in range(n):
        if np.array_equal(m[e], rng) and np.array_equal(m[:, e], rng):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")

    inv = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        hits = np.flatnonzero(m[a] == identity)
        if hits.size == 0:
            raise NoInverse(a)
        inv[a] = hits[0]

    # (a b) c vs a (b c) over the full cube; first witness in lex order.
    lhs = m[m[:, :, None], rng[None, None, :]]
    rhs = m[rng[:, None, None], m[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise NotAssociative(a, b, c)

    return GroupTable(n, mul, identity, inv)
