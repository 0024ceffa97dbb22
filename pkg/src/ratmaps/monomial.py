"""Monomial maps (P^1)^s ⇢ P^s: birationality by an integer lattice test.

The exponent vectors of the forms, with a row of ones appended, form the
(2s+1)×(s+1) integer matrix A.  The map is birational iff for every block i
the system A·γ = e_{2i-1} - e_{2i} has an integer solution.  Solutions come
from a column Hermite normal form.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .linalg import matrix_rank
from .maps import RationalMap


class NotMonomialMap(ValueError):
    pass


class NotDominant(ValueError):
    pass


Matrix = List[List[int]]


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hermite_normal_form(A: Matrix):
    """Column-style Hermite normal form.

    Returns (H, V, U) with A·V = H, V unimodular and U = V^{-1}, so A = H·U.
    H is lower echelon: each pivot is positive and the entries left of a
    pivot lie in [0, pivot).
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    H = [list(r) for r in A]
    V = _identity(cols)
    U = _identity(cols)

    def add_col(dst, src, q):
        # col_dst += q·col_src
        if not q:
            return
        for r in range(rows):
            H[r][dst] += q * H[r][src]
        for r in range(cols):
            V[r][dst] += q * V[r][src]
        U[src] = [a - q * b for a, b in zip(U[src], U[dst])]

    def swap(i, j):
        for r in range(rows):
            H[r][i], H[r][j] = H[r][j], H[r][i]
        for r in range(cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        U[i], U[j] = U[j], U[i]

    def negate(i):
        for r in range(rows):
            H[r][i] = -H[r][i]
        for r in range(cols):
            V[r][i] = -V[r][i]
        U[i] = [-a for a in U[i]]

    k = 0
    pivots = []
    for r in range(rows):
        if k >= cols:
            break
        # gcd-reduce row r over columns k..cols-1 into column k
        while True:
            nz = [c for c in range(k, cols) if H[r][c]]
            if not nz:
                break
            c0 = min(nz, key=lambda c: abs(H[r][c]))
            if c0 != k:
                swap(k, c0)
            done = True
            for c in range(k + 1, cols):
                if H[r][c]:
                    q = H[r][c] // H[r][k]
                    add_col(c, k, -q)
                    if H[r][c]:
                        done = False
            if done:
                break
        if not H[r][k]:
            continue
        if H[r][k] < 0:
            negate(k)
        piv = H[r][k]
        for c in range(k):
            q = H[r][c] // piv
            add_col(c, k, -q)
        pivots.append((r, k))
        k += 1
    return H, V, U


def matmul(A: Matrix, B: Matrix) -> Matrix:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def det_int(M: Matrix) -> int:
    """Exact integer determinant by fraction-free elimination (Bareiss)."""
    n = len(M)
    a = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def is_hnf(H: Matrix) -> bool:
    rows = len(H)
    cols = len(H[0]) if rows else 0
    k = 0
    for r in range(rows):
        if k < cols and H[r][k]:
            if H[r][k] < 0 or any(H[r][c] for c in range(k + 1, cols)):
                return False
            if any(not 0 <= H[r][c] < H[r][k] for c in range(k)):
                return False
            k += 1
        else:
            if any(H[r][c] for c in range(k, cols)):
                return False
    return True


def solve_integer(A: Matrix, b: List[int]) -> Optional[List[int]]:
    """An integer γ with A·γ = b, or None."""
    H, V, _ = hermite_normal_form(A)
    rows = len(H)
    cols = len(H[0]) if rows else 0
    z = [0] * cols
    k = 0
    for r in range(rows):
        partial = sum(H[r][j] * z[j] for j in range(k))
        if k < cols and H[r][k]:
            q, rem = divmod(b[r] - partial, H[r][k])
            if rem:
                return None
            z[k] = q
            k += 1
        elif partial != b[r]:
            return None
    gamma = [sum(V[i][j] * z[j] for j in range(cols)) for i in range(cols)]
    if matmul(A, [[g] for g in gamma]) != [[x] for x in b]:
        return None
    return gamma


def build_exponent_matrix(F: RationalMap) -> Matrix:
    """A = exponent columns of the forms with a final row of ones."""
    R = F.ring
    s = F.s
    if any(len(f.terms) != 1 for f in F.forms):
        raise NotMonomialMap("every form must be a single monomial")
    if R.nblocks != s or any(len(b) != 2 for b in R.blocks):
        raise NotMonomialMap("source must be (P^1)^s with s + 1 forms")
    cols = [list(next(iter(f.terms))) + [1] for f in F.forms]
    return [[cols[j][i] for j in range(s + 1)] for i in range(2 * s + 1)]


def solve_lattice(A: Matrix, i: int) -> Optional[List[int]]:
    """γ with A·γ = e_{2i-1} - e_{2i} (blocks numbered from 1)."""
    n = len(A)
    s = (n - 1) // 2
    if not 1 <= i <= s:
        raise ValueError("block index out of range")
    b = [0] * n
    b[2 * i - 2] = 1
    b[2 * i - 1] = -1
    return solve_integer(A, b)


def is_dominant_monomial(A: Matrix) -> bool:
    return matrix_rank(A) == len(A[0])


def is_birational_monomial(F: RationalMap) -> bool:
    A = build_exponent_matrix(F)
    if not is_dominant_monomial(A):
        raise NotDominant("exponent matrix does not have full column rank")
    return all(solve_lattice(A, i) is not None for i in range(1, F.s + 1))


def lattice_certificates(F: RationalMap):
    A = build_exponent_matrix(F)
    return {i: solve_lattice(A, i) for i in range(1, F.s + 1)}
