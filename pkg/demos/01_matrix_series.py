#!/usr/bin/env python3
"""Sums of matrix powers in closed form: one formula, two classical series.

For a 2x2 matrix A with det(A) = 1, the sum A + A^2 + ... + A^(3^n)
collapses into a product of trace factors times a single power of A.
Feeding in a shear matrix makes that closed form reproduce the arithmetic
series 1 + 2 + ... + N; feeding in diag(2, 1/2) makes it reproduce the
geometric series 2 + 4 + ... .  Everything below is exact rational
arithmetic, and every closed form is replayed against a brute-force sum.
"""

from fractions import Fraction as F

import rackwork as rw
from rackwork import matseries


def show(title):
    print()
    print(f"== {title} ==")


show("arithmetic series, hidden in a shear matrix")
A = rw.mat2(1, 1, 0, 1)
print("A = [[1, 1], [0, 1]],  A^k = [[1, k], [0, 1]]")
res = rw.trace_product_sum(A, 4, with_oracle=True)
print(f"sum of the first 3^4 = 81 powers:")
print(f"  trace factors : {[str(f) for f in res.factors]}")
print(f"  closed form   : {res.scalar} * A^{res.power_exponent}")
print(f"  top-right entry {res.closed_form.b} = 1 + 2 + ... + 81 "
      f"= {81 * 82 // 2}")
print(f"  brute-force sum agrees exactly: {res.oracle_matches}")

show("geometric series, hidden in a diagonal matrix")
B = rw.mat2(2, 0, 0, F(1, 2))
res = rw.trace_product_sum(B, 4, with_oracle=True)
print("B = diag(2, 1/2)")
print(f"  trace factors : {[str(f) for f in res.factors]}")
print(f"  closed form   : (product of factors) * B^{res.power_exponent}")
print(f"  top-left entry  {res.closed_form.a} = 2 + 4 + ... + 2^81")
print(f"  equals 2^82 - 2: {res.closed_form.a == 2**82 - 2}")
print(f"  brute-force sum agrees exactly: {res.oracle_matches}")

show("a sum where the closed form beats naive computation")
C = rw.mat2(1, -2, -1, 3)
print("C = [[1, -2], [-1, 3]], det = 1, trace 4")
res = rw.trace_product_sum(C, 2, with_oracle=True)
print(f"  sum of 9 powers = {res.scalar} * C^5")
fifth = rw.mat_pow(C, 5)
print(f"  C^5 = {fifth.rows()}")
print(f"  closed form equals the 9-term sum: {res.oracle_matches}")
print("  determinant pins every entry of C^5: det(C^5) =",
      rw.det(fifth))
wrong = rw.mat2(153, -418, -208, 571)
print("  a copy with -208 in the lower-left slot has det",
      rw.det(wrong), "and so cannot be a power of C")

show("randomized cross-check")
agree = 0
for seed in range(20):
    M = rw.random_unimodular(seed, 8, 3)
    assert matseries.cayley_hamilton_residual(M) == matseries.ZERO
    for n in (1, 2, 3):
        r = rw.trace_product_sum(M, n, with_oracle=True)
        agree += bool(r.oracle_matches)
print(f"20 random det-1 matrices x levels 1..3: "
      f"{agree}/60 closed forms equal the brute-force sums")
