"""Plane maps with a Hilbert-Burch base ideal: μ-invariants and Sylvester forms.

The base ideal I = (f_0, f_1, f_2) ⊂ K[x_0, x_1, x_2] is saturated of
dimension one, so its syzygies form a 3×2 matrix φ with column degrees
μ_1 ≤ μ_2, μ_1 + μ_2 = d.  When μ_1 = 1 the Rees ideal is generated by the
two syzygy forms g_1, g_2 and a chain of Sylvester forms, and the length of
that chain decides birationality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .groebner import Ideal, block_ideal, saturate, syzygies
from .linalg import nullspace_mod_p
from .maps import RationalMap
from .ring import Poly, Ring, multi_degree
from .hilbert import Unstabilized


class NotHilbertBurch(ValueError):
    pass


class WrongShape(ValueError):
    pass


class ChainValidationError(AssertionError):
    pass


@dataclass
class HilbertBurchData:
    phi: List[List[Poly]]            # 3 rows × 2 columns
    mu: Tuple[int, int]
    d: int
    saturated: bool
    ht_I1: int
    forms: List[Poly]
    ring: Ring
    normalized: bool = False

    @property
    def mu1(self):
        return self.mu[0]

    @property
    def mu2(self):
        return self.mu[1]

    def column(self, k):
        return [self.phi[i][k] for i in range(3)]

    def minors(self) -> List[Poly]:
        """(Δ_0, -Δ_1, Δ_2), Δ_i the minor without row i."""
        a = self.phi
        out = []
        for i in range(3):
            r = [j for j in range(3) if j != i]
            det = a[r[0]][0] * a[r[1]][1] - a[r[0]][1] * a[r[1]][0]
            out.append(det if i % 2 == 0 else -det)
        return out

    def I1(self) -> Ideal:
        return Ideal(self.ring, [e for row in self.phi for e in row if e.terms])

    def to_map(self) -> RationalMap:
        return RationalMap(self.ring, self.forms)


def _check_shape(I: Ideal):
    R = I.ring
    if R.nblocks != 1 or R.nvars != 3 or R.relations:
        raise WrongShape("expected three forms in K[x0,x1,x2]")
    gens = list(I.gens)
    if len(gens) != 3:
        raise WrongShape("expected exactly three generators")
    degs = {multi_degree(g) for g in gens}
    if len(degs) != 1:
        raise WrongShape("generators must have one common degree")
    return gens, degs.pop()[0]


def _proportional(a: List[Poly], b: List[Poly]):
    """Constant c with a = c·b, or None."""
    c = None
    R = a[0].ring
    for x, y in zip(a, b):
        if not x.terms and not y.terms:
            continue
        if not x.terms or not y.terms:
            return None
        e, cy = y.leading()
        cx = x.terms.get(e)
        if cx is None:
            return None
        q = cx * R.inv(cy)
        if R.p:
            q %= R.p
        if c is None:
            c = q
        elif c != q:
            return None
        if x != y.scale(q):
            return None
    return c


def hilbert_burch(I: Ideal) -> HilbertBurchData:
    gens, d = _check_shape(I)
    R = I.ring
    S = syzygies(gens)
    if S.ncols != 2:
        raise NotHilbertBurch(f"syzygy module has {S.ncols} generators, not 2")
    cols = list(range(2))
    degs = [S.degrees[k][0] for k in cols]
    if degs[0] > degs[1]:
        cols.reverse()
        degs.reverse()
    phi = [[S.columns[k][i] for k in cols] for i in range(3)]
    if degs[0] + degs[1] != d:
        raise NotHilbertBurch("column degrees do not add up to d")
    hb = HilbertBurchData(phi, (degs[0], degs[1]), d, False, 0, list(gens), R)
    mins = hb.minors()
    if _proportional(gens, mins) is None and not (Ideal(R, mins) == I):
        raise NotHilbertBurch("maximal minors do not regenerate the ideal")
    m = block_ideal(R, 0)
    hb.saturated = saturate(I, m) == I
    hb.ht_I1 = 3 if saturate(hb.I1(), m).is_unit() else 2
    return hb


# ------------------------------------------------------------ normalization


def _linear_coeffs(f: Poly, n: int):
    v = [f.ring.coerce(0)] * n
    for e, c in f.terms.items():
        if sum(e) != 1:
            raise ValueError("not a linear form")
        v[e.index(1)] = c
    return v


def _field_nullvec(rows, p):
    """A nonzero kernel vector of a 3-column matrix over QQ or GF(p)."""
    if p:
        ns = nullspace_mod_p([[int(x) for x in r] for r in rows], 3, p)
        return ns
    from gmpy2 import mpq
    m = [[mpq(x) for x in r] for r in rows]
    piv = []
    r = 0
    for col in range(3):
        sel = next((i for i in range(r, len(m)) if m[i][col]), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(col)
        r += 1
    out = []
    for fc in [c for c in range(3) if c not in piv]:
        v = [mpq(0)] * 3
        v[fc] = mpq(1)
        for i, pc in enumerate(piv):
            v[pc] = -m[i][fc]
        out.append(v)
    return out


def _inverse3(M, R: Ring):
    """Inverse of a 3×3 matrix over the coefficient field of R."""
    p = R.p
    a = [[R.coerce(x) for x in row] + [R.coerce(1 if i == j else 0) for j in range(3)]
         for i, row in enumerate(M)]
    for col in range(3):
        sel = next((i for i in range(col, 3) if a[i][col]), None)
        if sel is None:
            raise ValueError("singular matrix")
        a[col], a[sel] = a[sel], a[col]
        inv = R.inv(a[col][col])
        a[col] = [(x * inv) % p if p else x * inv for x in a[col]]
        for i in range(3):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [((x - f * y) % p if p else x - f * y) for x, y in zip(a[i], a[col])]
    return [row[3:] for row in a]


@dataclass
class Normalization:
    hb: HilbertBurchData
    source_matrix: list      # x = source_matrix · u (old coordinates in terms of new)
    target_matrix: list      # rows of Q, φ' = Q·σ(φ)


def normalize_mu1(hb: HilbertBurchData) -> Normalization:
    """Bring the linear column of φ to (x0, -x1, 0)^T by linear changes of coordinates.

    A row operation Q (a change of target coordinates) kills the third
    entry; then new source coordinates u_0 = l_0, u_1 = -l_1 and a spare
    coordinate variable turn the column into (u_0, -u_1, 0).
    """
    if hb.mu1 != 1:
        raise ValueError("normalization needs μ_1 = 1")
    R = hb.ring
    col = hb.column(0)
    L = [_linear_coeffs(f, 3) if f.terms else [R.coerce(0)] * 3 for f in col]
    # span dimension of the entries
    from .linalg import matrix_rank
    if matrix_rank(L, R.p) != 2:
        raise ValueError("linear forms of the first column do not span a 2-dimensional space")
    # α with Σ α_i l_i = 0: kernel of L^T
    LT = [[L[i][j] for i in range(3)] for j in range(3)]
    ker = _field_nullvec(LT, R.p)
    alpha = [R.coerce(x) for x in ker[0]]
    if not alpha[0] and not alpha[1] and alpha[2]:
        Q = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    else:
        Q = None
        # pick two unit rows completing α to a basis
        for i, j in ((0, 1), (0, 2), (1, 2)):
            cand = [[1 if k == i else 0 for k in range(3)], [1 if k == j else 0 for k in range(3)], alpha]
            try:
                _inverse3(cand, R)
            except ValueError:
                continue
            Q = cand
            break
    Qc = [[R.coerce(x) for x in row] for row in Q]
    newcol = []
    for row in Qc:
        acc = R.zero
        for q, f in zip(row, col):
            if q:
                acc = acc + f.scale(q)
        newcol.append(acc)
    assert not newcol[2].terms
    l0 = _linear_coeffs(newcol[0], 3)
    l1 = [-x for x in _linear_coeffs(newcol[1], 3)]
    Mrows = None
    for k in (2, 1, 0):
        cand = [l0, l1, [1 if t == k else 0 for t in range(3)]]
        try:
            inv = _inverse3(cand, R)
        except ValueError:
            continue
        Mrows = cand
        break
    # x = inv · u
    subs = {}
    for i in range(3):
        terms = {tuple(1 if t == j else 0 for t in range(3)): inv[i][j] for j in range(3)}
        subs[i] = Poly.from_dict(R, terms)
    sig = lambda f: f.subs(subs) if f.terms else f
    phi2 = []
    for i in range(3):
        row = []
        for k in range(2):
            acc = R.zero
            for j in range(3):
                if Qc[i][j]:
                    acc = acc + hb.phi[j][k].scale(Qc[i][j])
            row.append(sig(acc))
        phi2.append(row)
    new = HilbertBurchData(phi2, hb.mu, hb.d, hb.saturated, hb.ht_I1, [], R, True)
    new.forms = new.minors()
    return Normalization(new, inv, Qc)


# ------------------------------------------------------------ Sylvester forms


@dataclass
class SylvesterChain:
    forms: List[Poly]
    bidegrees: List[Tuple[int, int]]
    splittings: List[Tuple[Poly, Poly]]
    g1: Poly
    g2: Poly
    ring: Ring
    terminated_by_zero: bool = False

    @property
    def m(self) -> int:
        return len(self.forms)


def bigraded_ring(R: Ring, names=("y0", "y1", "y2")) -> Ring:
    names = list(names)
    while set(names) & set(R.variables):
        names = [n + "_" for n in names]
    return Ring([list(R.variables), names], R.p)


def syzygy_forms(hb: HilbertBurchData, A: Ring):
    ys = [A.var(v) for v in A.blocks[1]]
    g = []
    for k in range(2):
        acc = A.zero
        for i in range(3):
            e = hb.phi[i][k]
            if e.terms:
                acc = acc + e.change_ring(A) * ys[i]
        g.append(acc)
    return g


def _in_x0x1(F: Poly) -> bool:
    return all(e[0] or e[1] for e in F.terms)


def _split(F: Poly):
    A = F.ring
    p0, p1 = {}, {}
    for e, c in F.terms.items():
        if e[0]:
            p0[(e[0] - 1,) + e[1:]] = c
        else:
            p1[(e[0], e[1] - 1) + e[2:]] = c
    return Poly(A, p0), Poly(A, p1)


def sylvester_chain(hb: HilbertBurchData) -> SylvesterChain:
    """Iterated Sylvester forms F_{i+1} = y0·(F_i)_{x1} + y1·(F_i)_{x0}."""
    R = hb.ring
    A = bigraded_ring(R)
    g1, g2 = syzygy_forms(hb, A)
    y0, y1 = A.var(A.blocks[1][0]), A.var(A.blocks[1][1])
    forms, bidegs, splits = [], [], []
    cur = g2
    zero_end = False
    for _ in range(hb.d):
        if not cur.terms or not _in_x0x1(cur):
            break
        a0, a1 = _split(cur)
        nxt = y0 * a1 + y1 * a0
        if not nxt.terms:
            zero_end = True
            break
        splits.append((a0, a1))
        forms.append(nxt)
        bidegs.append(multi_degree(nxt))
        cur = nxt
    return SylvesterChain(forms, bidegs, splits, g1, g2, A, zero_end)


def rees_equations_mu1(hb: HilbertBurchData, validate: bool = True):
    """{g_1, g_2} ∪ Sylvester chain, checked against the elimination Rees ideal."""
    from .blowup import BigradedIdeal, rees_ideal
    chain = sylvester_chain(hb)
    A = chain.ring
    gens = [chain.g1, chain.g2] + chain.forms
    out = BigradedIdeal(A, gens, [(tuple(multi_degree(g)[:1]), multi_degree(g)[1]) for g in gens], 1)
    if validate:
        F = RationalMap(hb.ring, hb.forms, list(A.blocks[1]))
        rees = rees_ideal(F)
        if rees.ring != A:
            rees = BigradedIdeal(A, [g.change_ring(A) for g in rees.gens], rees.bidegrees, 1)
        if not out.same_ideal(rees):
            raise ChainValidationError("Sylvester equations do not generate the Rees ideal")
    return out


@dataclass
class Mu1Verdict:
    birational: bool
    d: int
    m: Optional[int]
    ht_I1: int
    reason: str


def is_birational_mu1(I) -> Mu1Verdict:
    """Plane map with μ_1 = 1: birational iff ht I_1(φ) = 2 and the chain has length d - 2."""
    if isinstance(I, RationalMap):
        I = I.base_ideal()
    hb = hilbert_burch(I)
    if not hb.saturated:
        raise NotHilbertBurch("base ideal is not saturated")
    if hb.mu1 != 1:
        raise NotHilbertBurch("μ_1 is not 1")
    d = hb.d
    if d <= 2:
        return Mu1Verdict(True, d, None, hb.ht_I1, "deg F <= μ1·μ2 = 1")
    if hb.ht_I1 == 3:
        return Mu1Verdict(False, d, 0, 3, "I_1(φ) is m-primary")
    norm = normalize_mu1(hb)
    chain = sylvester_chain(norm.hb)
    ok = chain.m == d - 2
    return Mu1Verdict(ok, d, chain.m, 2, f"Sylvester chain length {chain.m}, d - 2 = {d - 2}")


def degree_bound_mu(hb: HilbertBurchData):
    """(μ_1·μ_2, lci) where lci means deg(B) = e(B), in which case deg F = μ_1·μ_2."""
    from .degree import base_locus_report
    rep = base_locus_report(hb.to_map())
    if rep.e_B is None:
        raise Unstabilized("multiplicity of the base locus did not stabilize")
    lci = rep.deg_B == rep.e_B
    return hb.mu1 * hb.mu2, lci
