"""Sparse exact linear algebra over QQ (mpq) or GF(p).

Vectors are dicts ``key -> nonzero coefficient``; keys only need to be
hashable and totally ordered among themselves.
"""
from __future__ import annotations

from gmpy2 import mpq


def _inv(c, p):
    return pow(c, -1, p) if p else 1 / c


class Echelon:
    """Incremental row echelon form; pivots are the largest key of each row."""

    def __init__(self, p: int = 0, keyfunc=None):
        self.p = p
        self.rows = {}  # pivot -> row (pivot coefficient 1)
        self.keyfunc = keyfunc

    def _pivot(self, v):
        return max(v, key=self.keyfunc) if self.keyfunc else max(v)

    def reduce(self, v: dict) -> dict:
        """Return v reduced against the stored rows (a fresh dict)."""
        p = self.p
        v = dict(v)
        rows = self.rows
        # rows are kept fully reduced, so one pass over the pivots suffices
        for k in [k for k in v if k in rows]:
            c = v.get(k)
            if not c:
                continue
            for kk, a in rows[k].items():
                x = v.get(kk, 0) - c * a
                if p:
                    x %= p
                if x:
                    v[kk] = x
                else:
                    v.pop(kk, None)
        return v

    def add(self, v: dict) -> bool:
        """Insert v; return True if it was independent of the stored rows."""
        v = self.reduce(v)
        if not v:
            return False
        piv = self._pivot(v)
        c = _inv(v[piv], self.p)
        p = self.p
        row = {k: (a * c % p if p else a * c) for k, a in v.items()}
        # keep rows fully reduced against the new pivot
        for k2, r in self.rows.items():
            if piv in r:
                f = r[piv]
                for k, a in row.items():
                    x = r.get(k, 0) - f * a
                    if p:
                        x %= p
                    if x:
                        r[k] = x
                    else:
                        r.pop(k, None)
        self.rows[piv] = row
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank_of(vectors, p: int = 0) -> int:
    e = Echelon(p)
    for v in vectors:
        e.add(v)
    return e.rank


def matrix_rank(rows, p: int = 0) -> int:
    """Rank of a dense matrix (list of lists of field elements)."""
    vecs = []
    for r in rows:
        vecs.append({j: (c % p if p else mpq(c)) for j, c in enumerate(r) if (c % p if p else c)})
    return rank_of(vecs, p)


def solve_mod_p(a, b, p):
    """Solve a·x = b over GF(p) for square or overdetermined a; None if inconsistent.

    Returns one solution (free variables set to 0).
    """
    n = len(a[0]) if a else 0
    m = [list(r) + [bb] for r, bb in zip(a, b)]
    piv_cols = []
    r = 0
    for col in range(n):
        sel = None
        for i in range(r, len(m)):
            if m[i][col] % p:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][n] % p:
            return None
    x = [0] * n
    for i, col in enumerate(piv_cols):
        x[col] = m[i][n]
    return x


def nullspace_mod_p(a, ncols, p):
    """Basis of the right kernel of a (list of rows) over GF(p)."""
    m = [list(r) for r in a]
    piv_cols = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(m)):
            if m[i][col] % p:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = (-m[i][fc]) % p
        basis.append(v)
    return basis
