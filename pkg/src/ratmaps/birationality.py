"""Jacobian dual matrices, ranks over the image, inverse maps, linear syzygies."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .blowup import BigradedIdeal, rees_ideal, syzygy_matrix
from .groebner import GroebnerBasis, Ideal
from .hilbert import Unstabilized, variety_degree_and_dim
from .linalg import Echelon
from .maps import RationalMap
from .ring import Poly, Ring, evaluate_poly, multi_degree


# ------------------------------------------------------------ matrices


def determinant(M: List[List[Poly]], ring: Ring) -> Poly:
    """Determinant by cofactor expansion along the first row (memoized on columns)."""
    n = len(M)
    if n == 0:
        return ring.one
    memo = {}

    def rec(row, cols):
        if row == n:
            return ring.one
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = ring.zero
        sign = 1
        for idx, c in enumerate(cols):
            a = M[row][c]
            if a.terms:
                sub = rec(row + 1, cols[:idx] + cols[idx + 1:])
                if sub.terms:
                    term = a * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return rec(0, tuple(range(n)))


def _nf(f: Poly, G: Optional[GroebnerBasis]) -> Poly:
    return G.reduce(f) if G is not None and G.basis else f


def rank_mod_image(M: List[List[Poly]], b: Optional[Ideal] = None) -> int:
    """Largest t with a t×t minor of M nonzero modulo the prime ideal b."""
    if not M or not M[0]:
        return 0
    ring = M[0][0].ring
    G = b.gb() if b is not None else None
    M = [[_nf(a, G) for a in row] for row in M]
    nr, nc = len(M), len(M[0])
    rank = 0
    for t in range(1, min(nr, nc) + 1):
        found = False
        for rows in itertools.combinations(range(nr), t):
            for cols in itertools.combinations(range(nc), t):
                sub = [[M[i][j] for j in cols] for i in rows]
                if _nf(determinant(sub, ring), G).terms:
                    found = True
                    break
            if found:
                break
        if not found:
            return rank
        rank = t
    return rank


# ------------------------------------------------------------ Jacobian dual


@dataclass
class JacobianDual:
    blocks: List[List[List[Poly]]]      # psi_i as row lists, entries in K[y]
    equations: List[List[Poly]]         # h_{i,j} in A = R[y]
    target: Ring
    capped: bool = False

    def psi(self, i):
        return self.blocks[i]


def _unit(m, i):
    return tuple(1 if k == i else 0 for k in range(m))


def jacobian_dual(rees: BigradedIdeal, F: RationalMap, b: Optional[Ideal] = None) -> JacobianDual:
    """ψ_i from the Rees generators of x-degree e_i, differentiated in block i."""
    A = rees.ring
    m = rees.nx_blocks
    Y = F.target_ring()
    ny = len(F.target_names)
    blocks, eqs = [], []
    for i in range(m):
        hs = [g for g, (xd, _) in zip(rees.gens, rees.bidegrees) if xd == _unit(m, i)]
        hs = _prune_graded(hs, A, F, i, b)
        a, c = A.block_ranges[i]
        rows = []
        for h in hs:
            row = []
            for v in range(a, c):
                dv = h.diff(v)
                row.append(dv.change_ring(Y))
            rows.append(row)
        blocks.append(rows)
        eqs.append(hs)
    return JacobianDual(blocks, eqs, Y, rees.capped)


def _vector(p: Poly):
    return dict(p.terms)


def _prune_graded(hs, A: Ring, F: RationalMap, i, b: Optional[Ideal]):
    """Drop generators lying in the K[y]-span of the others (lower y-degree first)."""
    if len(hs) <= 1:
        return hs
    m = F.m
    yb = m
    ya, yc = A.block_ranges[yb]
    xa, xc = A.block_ranges[i]
    hs = sorted(hs, key=lambda h: (multi_degree(h)[yb], str(h)))
    kept = []
    bgens = [g.change_ring(A) for g in b.gens] if b is not None else []
    for h in hs:
        k = multi_degree(h)[yb]
        ech = Echelon(A.p)
        for g in kept:
            kg = multi_degree(g)[yb]
            for mono in _y_monomials(A, yb, k - kg):
                ech.add(_vector(g.mul_monomial(mono)))
        for bg in bgens:
            kb = multi_degree(bg)[yb]
            if kb > k:
                continue
            for v in range(xa, xc):
                xv = A.var(v)
                for mono in _y_monomials(A, yb, k - kb):
                    ech.add(_vector((bg * xv).mul_monomial(mono)))
        if not ech.contains(_vector(h)):
            kept.append(h)
    return kept


def _y_monomials(A: Ring, yb: int, k: int):
    if k < 0:
        return []
    deg = [0] * A.nblocks
    deg[yb] = k
    return A.monomials_of_degree(tuple(deg))


# ------------------------------------------------------------ analysis


@dataclass
class MapAnalysis:
    image: Ideal
    dim_Y: Optional[int]
    deg_Y: Optional[int]
    ranks: List[int]
    verdict: str                  # birational | not birational | undetermined
    inverse: Optional[List[List[Poly]]] = None
    reason: str = ""
    route: str = "jacobian-dual"
    jd: Optional[JacobianDual] = None

    @property
    def birational(self) -> Optional[bool]:
        if self.verdict == "undetermined":
            return None
        return self.verdict == "birational"


class RankBoundViolation(AssertionError):
    pass


def is_birational_jacdual(F: RationalMap, cap_ydeg: Optional[int] = None, nmax: int = 8) -> MapAnalysis:
    """Birationality through the ranks of the Jacobian dual blocks modulo the image ideal."""
    b = F.image_ideal()
    try:
        dimY, degY = variety_degree_and_dim(b, nmax=max(nmax, len(F.forms) + 2))
    except Unstabilized as exc:
        return MapAnalysis(b, None, None, [], "undetermined", reason=str(exc))
    delta = F.delta
    if dimY != delta:
        return MapAnalysis(b, dimY, degY, [], "not birational",
                           reason="not generically finite onto image of right dimension")
    rees = rees_ideal(F, cap_ydeg)
    jd = jacobian_dual(rees, F, b)
    ranks = [rank_mod_image(jd.psi(i), b) for i in range(F.m)]
    r = F.r
    for i, k in enumerate(ranks):
        if k > r[i]:
            raise RankBoundViolation(f"rank of psi_{i} is {k} > r_{i} = {r[i]}")
    if sum(r) - sum(ranks) < delta - dimY:
        raise RankBoundViolation("rank deficiency inequality violated")
    if all(k == ri for k, ri in zip(ranks, r)):
        inv = extract_inverse(jd, b, r)
        return MapAnalysis(b, dimY, degY, ranks, "birational", inv, jd=jd)
    if jd.capped:
        return MapAnalysis(b, dimY, degY, ranks, "undetermined",
                           reason="y-degree cap reached before full rank", jd=jd)
    return MapAnalysis(b, dimY, degY, ranks, "not birational", reason="Jacobian dual rank deficient", jd=jd)


def extract_inverse(jd: JacobianDual, b: Ideal, r: List[int]) -> List[List[Poly]]:
    """Signed maximal minors of the first r_i-row submatrix of ψ_i of full rank."""
    G = b.gb() if b is not None else None
    Y = jd.target
    out = []
    for i, psi in enumerate(jd.blocks):
        ri = r[i]
        chosen = None
        if ri == 0:
            out.append([Y.one])
            continue
        for rows in itertools.combinations(range(len(psi)), ri):
            sub = [psi[k] for k in rows]
            if rank_mod_image(sub, b) == ri:
                chosen = sub
                break
        if chosen is None:
            raise ValueError(f"no full-rank submatrix in block {i}")
        minors = []
        for j in range(ri + 1):
            cols = [c for c in range(ri + 1) if c != j]
            det = determinant([[row[c] for c in cols] for row in chosen], Y)
            det = _nf(det if j % 2 == 0 else -det, G)
            minors.append(det)
        if all(not g.terms for g in minors):
            raise ValueError("inverse tuple vanishes modulo the image")
        out.append(minors)
    return out


def compose_inverse(F: RationalMap, inverse: List[List[Poly]]):
    """Substitute y = f into each inverse block; returns lists of source polynomials."""
    images = [f for f in F.forms]
    out = []
    for block in inverse:
        Y = block[0].ring
        out.append([evaluate_poly(g, images, F.ring) for g in block])
    return out


def check_inverse(F: RationalMap, inverse) -> bool:
    """g_i(f) = D_i·x_i blockwise with D_i ≠ 0 (modulo the source relations)."""
    comp = compose_inverse(F, inverse)
    G = Ideal(F.ring, []).gb() if F.ring.relations else None
    R = F.ring
    for i, block in enumerate(comp):
        a, c = R.block_ranges[i]
        xs = [R.var(v) for v in range(a, c)]
        if len(block) != len(xs):
            return False
        nonzero = False
        for j in range(len(xs)):
            if _nf(block[j], G).terms:
                nonzero = True
            for k in range(j + 1, len(xs)):
                if _nf(block[j] * xs[k] - block[k] * xs[j], G).terms:
                    return False
        if not nonzero:
            return False
    return True


# ------------------------------------------------------------ linear syzygies


def linear_syzygy_columns(F: RationalMap):
    S = syzygy_matrix(F)
    m = F.m
    units = {_unit(m, i) for i in range(m)}
    return [col for col, deg in zip(S.columns, S.degrees) if tuple(deg) in units]


def linear_syzygy_rank(F: RationalMap) -> int:
    """Rank over the source ring of φ_1, the columns of multi-degree a unit vector."""
    cols = linear_syzygy_columns(F)
    if not cols:
        return 0
    M = [[col[i] for col in cols] for i in range(len(F.forms))]
    rel = Ideal(F.ring, []) if F.ring.relations else None
    return rank_mod_image(M, rel)
