"""Rees and symmetric algebra presentations and saturated fiber tables."""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .groebner import (Ideal, _interreduce_linear, _saturate_variable, eliminate, saturate_irrelevant,
                       syzygies)
from .hilbert import (HilbertData, ambient_dimension, count_standard, graded_dimension,
                      hilbert_fit, leading_monomials, monomial_locus_empty,
                      monomial_locus_length)
from .maps import RationalMap
from .ring import Poly, Ring, multi_degree


@dataclass
class BigradedIdeal:
    """Ideal of A = R[y] with generators and their (x multi-degree, y-degree)."""

    ring: Ring
    gens: List[Poly]
    bidegrees: List[Tuple[Tuple[int, ...], int]]
    nx_blocks: int
    capped: bool = False

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.gens)

    def contains_all(self, other: "BigradedIdeal") -> bool:
        G = self.ideal().gb()
        return all(G.reduce(g).is_zero() for g in other.gens)

    def same_ideal(self, other: "BigradedIdeal") -> bool:
        return self.contains_all(other) and other.contains_all(self)


def rees_ring(F: RationalMap) -> Ring:
    """A = R[y_0..y_s] with the source relations kept on the x blocks."""
    blocks = [list(b) for b in F.ring.blocks] + [list(F.target_names)]
    rel = None
    if F.ring.relations:
        rel = [[] for _ in range(F.m + 1)]
        for r in F.ring.relations:
            rel[F.ring.block_of(min(r.support_vars()))].append(str(r))
    return Ring(blocks, F.ring.p, rel)


def _bidegree(g: Poly, m: int):
    d = multi_degree(g)
    return tuple(d[:m]), d[m]


def rees_ideal(F: RationalMap, cap_ydeg: Optional[int] = None) -> BigradedIdeal:
    """Defining ideal of the Rees algebra: (y_i - t·f_i) + relations, t eliminated."""
    A = rees_ring(F)
    cached = getattr(F, "_rees", None)
    if cached is None:
        tname = "t" if "t" not in A.variables else "t_"
        T = A.without_relations().extend([tname], front=True)
        t = T.var(tname)
        gens = [T.var(y) - t * f.change_ring(T) for y, f in zip(F.target_names, F.forms)]
        gens += [r.change_ring(T) for r in F.ring.relations]
        D = sum(F.degree)
        weights = [1] + [1] * F.ring.nvars + [D + 1] * (F.s + 1)
        E = eliminate(Ideal(T, gens), [0], weights=weights)
        rel_set = {frozenset(r.change_ring(T).terms.items()) for r in F.ring.relations}
        out = [g.change_ring(A) for g in E.gens if frozenset(g.terms.items()) not in rel_set]
        out.sort(key=lambda g: (_bidegree(g, F.m)[1], sum(_bidegree(g, F.m)[0]), str(g)))
        cached = out
        F._rees = cached
    gens = list(cached)
    capped = False
    if cap_ydeg is not None:
        keep = [g for g in gens if _bidegree(g, F.m)[1] <= cap_ydeg]
        capped = len(keep) < len(gens)
        gens = keep
    return BigradedIdeal(A, gens, [_bidegree(g, F.m) for g in gens], F.m, capped)


def syzygy_matrix(F: RationalMap):
    if not hasattr(F, "_syz"):
        F._syz = syzygies([f for f in F.forms])
    return F._syz


def sym_ideal(F: RationalMap) -> BigradedIdeal:
    """I_1((y)·φ): one y-linear generator per syzygy column."""
    A = rees_ring(F)
    S = syzygy_matrix(F)
    ys = [A.var(y) for y in F.target_names]
    gens = []
    for col in S.columns:
        g = A.zero
        for s, y in zip(col, ys):
            if s.terms:
                g = g + s.change_ring(A) * y
        if g.terms:
            gens.append(g)
    return BigradedIdeal(A, gens, [_bidegree(g, F.m) for g in gens], F.m)


def is_linear_type(F: RationalMap, use_plane_test: bool = True) -> bool:
    """Rees ideal equals the symmetric-algebra ideal.

    For plane maps with a saturated Hilbert-Burch ideal the test "I_1(φ) is
    m-primary" is also evaluated and must agree.
    """
    rees = rees_ideal(F)
    sym = sym_ideal(F)
    verdict = sym.contains_all(rees)
    if use_plane_test and F.m == 1 and len(F.r) == 1 and F.r[0] == 2 and F.s == 2 and not F.ring.relations:
        from .plane import NotHilbertBurch, hilbert_burch
        try:
            hb = hilbert_burch(F.base_ideal())
        except (NotHilbertBurch, ValueError):
            hb = None
        if hb is not None and hb.saturated:
            fast = hb.ht_I1 == 3
            if fast != verdict:
                raise AssertionError("linear-type tests disagree")
    return verdict


# ------------------------------------------------ saturation with certificates


class SaturationPlan:
    """Computes graded pieces of (J)^sat for ideals J with the base locus of I.

    If V(I) is empty every saturation is the unit ideal.  Otherwise, for each
    block a linear form ℓ_i with V(I, ℓ_i) = ∅ is searched for.  Such a form
    is a nonzerodivisor modulo (I^n)^sat, so (I^n)^sat = I^n : (ℓ_1⋯ℓ_m)^∞.
    After a linear change of coordinates making each ℓ_i a variable, the
    saturation is a Bayer-Stillman division in a grevlex basis with that
    variable last.  Without such forms the generic block-by-block route is
    used.
    """

    def __init__(self, I: Ideal, seed: int = 0, max_tries: int = 40):
        self.I = I
        self.ring = I.ring
        self.empty = monomial_locus_empty(self.ring, leading_monomials(I))
        self.forms = None
        self.route = "empty" if self.empty else "generic"
        if not self.empty:
            forms = []
            for b in range(self.ring.nblocks):
                l = self._find_form(b, seed, max_tries)
                if l is None:
                    forms = None
                    break
                forms.append(l)
            if forms is not None:
                self.forms = forms
                self.route = "linear-form"
                self._setup_change()

    def _candidates(self, b, seed, max_tries):
        a, c = self.ring.block_ranges[b]
        idx = list(range(a, c))
        out = []
        for i in reversed(idx):
            out.append({i: 1})
        for i in range(len(idx)):
            for j in range(i + 1, len(idx)):
                out.append({idx[i]: 1, idx[j]: 1})
        out.append({i: 1 for i in idx})
        for i in range(len(idx)):
            for j in range(i + 1, len(idx)):
                out.append({idx[i]: 1, idx[j]: -1})
        rng = random.Random(seed * 7919 + b)
        while len(out) < max_tries:
            out.append({i: rng.randint(-9, 9) or 1 for i in idx})
        return out[:max_tries]

    def _find_form(self, b, seed, max_tries):
        R = self.ring
        for cand in self._candidates(b, seed, max_tries):
            l = Poly.from_dict(R, {tuple(1 if k == i else 0 for k in range(R.nvars)): c
                                   for i, c in cand.items()})
            if not l.terms:
                continue
            J = self.I + l
            if monomial_locus_empty(R, leading_monomials(J)):
                return cand
        return None

    def _setup_change(self):
        """Substitution x -> x(u) with u_k = ℓ for one pivot k per block."""
        R = self.ring
        subs = {}
        pivots = []
        for cand in self.forms:
            k = max(cand)  # pivot: last variable of the form
            pivots.append(k)
            ck = R.coerce(cand[k])
            inv = R.inv(ck)
            # x_k = (u_k - Σ_{j≠k} c_j u_j) / c_k
            e = lambda i: tuple(1 if t == i else 0 for t in range(R.nvars))
            terms = {e(k): inv}
            for j, cj in cand.items():
                if j != k:
                    terms[e(j)] = -R.coerce(cj) * inv
            subs[k] = Poly.from_dict(R, terms)
        self.subs = subs
        self.pivots = pivots
        self.trivial = all(len(c) == 1 for c in self.forms)
        if R.relations:
            rel = [[] for _ in range(R.nblocks)]
            for r in R.relations:
                rel[R.block_of(min(r.support_vars()))].append(self._transform(r, R))
            self.tring = Ring([list(b) for b in R.blocks], R.p, rel)
        else:
            self.tring = R

    def _transform(self, f: Poly, ring: Ring) -> Poly:
        if self.trivial:
            return Poly(ring, f.terms)
        g = f.subs(self.subs, f.ring.without_relations() if f.ring.relations else f.ring)
        return Poly(ring, g.terms)

    def saturation_leads(self, J: Ideal):
        """Leading monomials of a basis of J^sat (in transformed coordinates if needed)."""
        R = self.ring
        if self.empty:
            return [(0,) * R.nvars]
        if self.route == "linear-form":
            T = self.tring
            cur = Ideal(T, [self._transform(g, T) for g in J.gens])
            for k in self.pivots:
                cur = _saturate_variable(cur, k)
            return cur.sat_leads
        return leading_monomials(saturate_irrelevant(J))

    @property
    def leads_ring(self) -> Ring:
        """Ring in which :meth:`saturation_leads` are expressed."""
        return self.tring if self.route == "linear-form" else self.ring

    def sat_dimension(self, J: Ideal, c, leads=None) -> int:
        """dim_K [J^sat]_c."""
        R = self.ring
        amb = ambient_dimension(R, c)
        if self.empty:
            return amb
        if leads is None:
            leads = self.saturation_leads(J)
        return amb - count_standard(self.leads_ring, leads, c)

    def saturate(self, J: Ideal) -> Ideal:
        """J^sat in the original coordinates."""
        if self.empty:
            return Ideal(self.ring, [self.ring.one])
        return saturate_irrelevant(J)


@dataclass
class SaturatedFiberData:
    rows: Dict[int, Tuple[int, int]]
    differences: Dict[int, int]
    fit: HilbertData
    sat_fit: Optional[HilbertData]
    route: str
    warnings: List[str] = field(default_factory=list)


class PowerTable:
    """Powers I^n of a base ideal with [I^n]_{n·d} and the leading terms of (I^n)^sat.

    Cached on the map so the fiber table and the base-locus report share
    the saturations.
    """

    def __init__(self, F: RationalMap, seed: int = 0, plan: Optional[SaturationPlan] = None):
        self.F = F
        self.I = F.base_ideal()
        self.plan = plan or SaturationPlan(self.I, seed)
        self.powers = [Ideal(F.ring, [F.ring.one]), Ideal(F.ring, _interreduce_linear(self.I.gens))]
        self.plain = {}
        self.leads = {}

    @classmethod
    def of(cls, F: RationalMap, seed: int = 0) -> "PowerTable":
        cache = getattr(F, "_powers", None)
        if cache is None:
            cache = F._powers = {}
        if seed not in cache:
            cache[seed] = cls(F, seed)
        return cache[seed]

    def power(self, n: int) -> Ideal:
        while len(self.powers) <= n:
            self.powers.append(self.powers[-1] * self.I)
        return self.powers[n]

    def plain_dimension(self, n: int) -> int:
        """dim [I^n]_{n·d}."""
        if n not in self.plain:
            P = self.power(n)
            c = tuple(n * a for a in self.F.degree)
            if self.F.ring.relations:
                self.plain[n] = graded_dimension(P, c, "ideal")
            else:
                # the generators of P are a basis of its lowest piece
                self.plain[n] = len(P.gens)
        return self.plain[n]

    def saturation_leads(self, n: int):
        if n not in self.leads:
            self.leads[n] = self.plan.saturation_leads(self.power(n))
        return self.leads[n]

    def length(self, n: int) -> Optional[int]:
        """Length of the scheme defined by I^n, or None if it is not finite."""
        if self.plan.empty:
            return 0
        if self.plan.route == "linear-form":
            return monomial_locus_length(self.plan.leads_ring, self.saturation_leads(n))
        return monomial_locus_length(self.F.ring, leading_monomials(self.power(n)))

    def sat_dimension(self, n: int) -> int:
        c = tuple(n * a for a in self.F.degree)
        if self.plan.empty:
            return ambient_dimension(self.F.ring, c)
        return self.plan.sat_dimension(None, c, self.saturation_leads(n))


def saturated_fiber_table(F: RationalMap, n_max: int = 8, window: int = 3, seed: int = 0,
                          plan: Optional[SaturationPlan] = None) -> SaturatedFiberData:
    """n -> (dim [I^n]_{n·d}, dim [(I^n)^sat]_{n·d}) for n = 0..n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    table = PowerTable(F, seed, plan) if plan is not None else PowerTable.of(F, seed)
    plan = table.plan
    rows = {0: (1, 1)}
    for n in range(1, n_max + 1):
        plain = table.plain_dimension(n)
        sat = table.sat_dimension(n)
        if sat < plain:
            raise AssertionError("saturation smaller than the ideal")
        rows[n] = (plain, sat)
    diffs = {n: rows[n][1] - rows[n][0] for n in range(1, n_max + 1)}
    delta = F.delta
    fit = hilbert_fit(diffs, delta, window)
    sat_fit = None
    try:
        sat_fit = hilbert_fit({n: rows[n][1] for n in range(1, n_max + 1)}, delta, window)
    except ValueError:
        pass
    warn = []
    if F.ring.relations:
        warn.append("source has relations: saturated fiber data assumes grade(N) >= 2")
    return SaturatedFiberData(rows, diffs, fit, sat_fit, plan.route, warn)
