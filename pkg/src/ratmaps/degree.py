"""Degree of a rational map: limit of the saturated fiber table, the base-point
formula, closed-form bounds, the bi-graded criteria and a fiber-counting oracle.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional

from .blowup import PowerTable, SaturationPlan, is_linear_type, saturated_fiber_table
from .groebner import Ideal, _raw_gb
from .hilbert import (Unstabilized, count_standard, graded_dimension, hilbert_fit,
                      hilbert_table, leading_monomials, monomial_locus_empty,
                      monomial_locus_length, segre_degree, variety_degree_and_dim)
from .maps import RationalMap
from .ring import GREVLEX, Poly, Ring, TermOrder, evaluate_at


class HypothesisError(ValueError):
    """The input does not satisfy the hypotheses of the requested result."""


class InconsistentResult(RuntimeError):
    pass


class NotGenericallyFinite(RuntimeError):
    pass


@dataclass
class BaseLocusReport:
    dim_B: Optional[int]
    deg_B: Optional[int]
    e_B: Optional[Fraction]
    stabilized: Dict[str, bool] = field(default_factory=dict)
    lengths: Dict[int, int] = field(default_factory=dict)


@dataclass
class DegreeReport:
    deg_F: Optional[int]
    method: str
    deg_Y: Optional[int] = None
    dim_Y: Optional[int] = None
    deg_X: Optional[int] = None
    stabilized: bool = True
    consistent: bool = True
    cross_checks: Dict[str, Optional[int]] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.consistent:
            return "inconsistent"
        if self.deg_F is None:
            return "undetermined"
        return "determined"


# ------------------------------------------------------------ shared pieces


def image_data(F: RationalMap, nmax: int = 8):
    b = F.image_ideal()
    return variety_degree_and_dim(b, nmax=max(nmax, len(F.forms) + 2))


def _check_dominant_dim(F: RationalMap, nmax: int):
    dimY, degY = image_data(F, nmax)
    if dimY != F.delta:
        raise HypothesisError(f"image has dimension {dimY}, source has dimension {F.delta}")
    return dimY, degY


def degree_via_limit(F: RationalMap, n_max: int = 8, seed: int = 0, window: int = 3) -> DegreeReport:
    """deg F = 1 + (δ-th difference of dim[(I^n)^sat/I^n]_{n·d}) / deg Y."""
    dimY, degY = _check_dominant_dim(F, n_max)
    delta = F.delta
    table = saturated_fiber_table(F, n_max, window, seed)
    fit = table.fit
    rep = DegreeReport(None, "limit", degY, dimY, None)
    rep.diagnostics.append(f"saturation route: {table.route}")
    if not fit.stabilized:
        rep.stabilized = False
        rep.diagnostics.append("difference column did not stabilize")
        return rep
    if fit.fitted_degree > delta:
        rep.consistent = False
        rep.diagnostics.append("difference column grows faster than n^delta")
        return rep
    lead = fit.leading_delta if fit.fitted_degree == delta else Fraction(0)
    q = 1 + Fraction(lead) / degY
    if q.denominator != 1:
        rep.consistent = False
        rep.diagnostics.append(f"non-integral degree {q}")
        return rep
    rep.deg_F = int(q)
    return rep


def base_locus_dimension(F: RationalMap, n_max: int = 8, window: int = 3) -> Optional[int]:
    """dim B alone (-1 when empty), without the powers of I."""
    R = F.ring
    I = F.base_ideal()
    leads = leading_monomials(I)
    if monomial_locus_empty(R, leads):
        return -1
    if monomial_locus_length(R, leads) is not None:
        return 0
    tab = hilbert_table(I, n_max, direction=F.degree)
    fit = hilbert_fit(tab, F.delta, window)
    return fit.fitted_degree if fit.stabilized else None


def base_locus_report(F: RationalMap, n_max: int = 8, window: int = 3) -> BaseLocusReport:
    """dim, length-degree and multiplicity of the base locus.

    For a finite base locus the lengths of I^n are exact (monomial chart
    counts on the leading-term ideal), and e(B) is the δ-th difference of
    n ↦ length(R/I^n) on the stabilized tail.
    """
    R = F.ring
    I = F.base_ideal()
    leads = leading_monomials(I)
    if monomial_locus_empty(R, leads):
        return BaseLocusReport(-1, 0, 0, {"dim_B": True, "deg_B": True, "e_B": True})
    length = monomial_locus_length(R, leads)
    if length is None:
        tab = hilbert_table(I, n_max, direction=F.degree)
        fit = hilbert_fit(tab, F.delta, window)
        dim = fit.fitted_degree if fit.stabilized else None
        return BaseLocusReport(dim, None, None, {"dim_B": fit.stabilized, "deg_B": False, "e_B": False})
    table = PowerTable.of(F)
    lengths = {1: length}
    for n in range(2, n_max + 1):
        lengths[n] = table.length(n)
    fit = hilbert_fit(lengths, F.delta, window)
    e = None
    if fit.stabilized:
        e = fit.leading_delta if fit.fitted_degree == F.delta else Fraction(0)
        if e.denominator == 1:
            e = int(e)
    return BaseLocusReport(0, length, e, {"dim_B": True, "deg_B": True, "e_B": fit.stabilized}, lengths)


def degree_via_formula(F: RationalMap, n_max: int = 8, base: Optional[BaseLocusReport] = None) -> DegreeReport:
    """deg F = (∏ d_i^{δ_i}·deg X - e(B)) / deg Y for a finite base locus."""
    dimY, degY = _check_dominant_dim(F, n_max)
    base = base or base_locus_report(F, n_max)
    if base.dim_B is None or base.dim_B > 0:
        raise HypothesisError("base locus is not zero-dimensional")
    dims = F.source_dims()
    degX = segre_degree(F.ring)
    prod = 1
    for di, de in zip(F.degree, dims):
        prod *= di ** de
    rep = DegreeReport(None, "formula", degY, dimY, degX)
    if base.e_B is None:
        rep.stabilized = False
        rep.diagnostics.append("multiplicity of the base locus did not stabilize")
        return rep
    q = Fraction(prod * degX - base.e_B, degY)
    if q.denominator != 1 or q < 1:
        rep.consistent = False
        rep.diagnostics.append(f"formula gives {q}")
        return rep
    rep.deg_F = int(q)
    return rep


def degree(F: RationalMap, n_max: int = 8, seed: int = 0, prime: int = 101, trials: int = 5,
           methods=("limit", "formula", "oracle")) -> DegreeReport:
    """Run the requested methods and cross-check them."""
    results = {}
    diags = []
    stab = True
    degY = dimY = degX = None
    for m in methods:
        try:
            if m == "limit":
                r = degree_via_limit(F, n_max, seed)
            elif m == "formula":
                r = degree_via_formula(F, n_max)
            elif m == "oracle":
                results["oracle"] = fiber_oracle(F, prime, trials, seed)
                continue
            else:
                raise ValueError(f"unknown method {m}")
        except HypothesisError as exc:
            diags.append(f"{m}: skipped ({exc})")
            continue
        degY, dimY = r.deg_Y, r.dim_Y
        degX = r.deg_X or degX
        stab = stab and r.stabilized
        results[m] = r.deg_F
        diags.extend(f"{m}: {d}" for d in r.diagnostics)
    vals = {v for v in results.values() if v is not None}
    consistent = len(vals) <= 1
    first = next((results[m] for m in methods if results.get(m) is not None), None)
    rep = DegreeReport(first if consistent else None, "+".join(k for k in results), degY, dimY, degX,
                       stab, consistent, results, diags)
    return rep


# ------------------------------------------------------------ bounds and criteria


def _is_p1p1_to_p2(F: RationalMap):
    R = F.ring
    return R.nblocks == 2 and all(len(b) == 2 for b in R.blocks) and F.s == 2 and not R.relations


def _sat_quotient_dim(F: RationalMap, c=None) -> int:
    I = F.base_ideal()
    c = F.degree if c is None else c
    plan = SaturationPlan(I)
    return plan.sat_dimension(I, c) - graded_dimension(I, c, "ideal")


def bound_p1p1(F: RationalMap) -> int:
    """1 + (d_1 - 1)(d_2 - 1) + dim [I^sat/I]_d for P^1×P^1 ⇢ P^2 with finite base locus."""
    if not _is_p1p1_to_p2(F):
        raise HypothesisError("needs a map P^1 x P^1 -> P^2")
    if base_locus_dimension(F) != 0:
        raise HypothesisError("base locus must be zero-dimensional and nonempty")
    d1, d2 = F.degree
    return 1 + (d1 - 1) * (d2 - 1) + _sat_quotient_dim(F)


def _bigraded_pre(F: RationalMap, shape):
    if not _is_p1p1_to_p2(F):
        raise HypothesisError("needs a map P^1 x P^1 -> P^2")
    if not shape(F.degree):
        raise HypothesisError(f"bidegree {F.degree} not covered")
    if base_locus_dimension(F) != 0:
        raise HypothesisError("base locus must be zero-dimensional and nonempty")
    _check_dominant_dim(F, 8)


def criterion_1n(F: RationalMap) -> bool:
    """Bidegree (1, n): birational iff I_d = [I^sat]_d."""
    _bigraded_pre(F, lambda d: min(d) == 1)
    return _sat_quotient_dim(F) == 0


def criterion_22(F: RationalMap) -> bool:
    """Bidegree (2, 2): birational iff deg(B) = 6 and e(B) = 7."""
    _bigraded_pre(F, lambda d: tuple(d) == (2, 2))
    base = base_locus_report(F)
    if base.e_B is None:
        raise Unstabilized("multiplicity of the base locus did not stabilize")
    return base.deg_B == 6 and base.e_B == 7


def _single_pre(F: RationalMap):
    R = F.ring
    if R.nblocks != 1 or R.relations or F.s != R.nvars - 1:
        raise HypothesisError("needs a map P^r -> P^r")
    dim_B = base_locus_dimension(F)
    if dim_B is None or dim_B > 0:
        raise HypothesisError("needs dim(R/I) <= 1")


def bound_single(F: RationalMap) -> int:
    """1 + C(d-1, r) + dim [I^sat/I]_d + Σ_{i=2}^{r-1} dim [R/I]_{(r+1-i)d-r-1}."""
    _single_pre(F)
    r = F.ring.nvars - 1
    d = F.degree[0]
    I = F.base_ideal()
    total = 1 + comb(d - 1, r) + _sat_quotient_dim(F)
    for i in range(2, r):
        c = (r + 1 - i) * d - r - 1
        if c >= 0:
            total += graded_dimension(I, (c,))
    return total


def p2_formula(F: RationalMap, n_max: int = 8, seed: int = 0) -> DegreeReport:
    """(d-1)(d-2)/2 + dim [I^sat/I]_d + 1 for linear-type plane maps with d <= 3."""
    R = F.ring
    if R.nblocks != 1 or R.nvars != 3 or F.s != 2 or R.relations:
        raise HypothesisError("needs a plane map P^2 -> P^2")
    d = F.degree[0]
    if d > 3:
        raise HypothesisError("formula needs d <= 3")
    if base_locus_dimension(F, n_max) != 0:
        raise HypothesisError("needs dim(R/I) = 1")
    if not is_linear_type(F):
        raise HypothesisError("base ideal is not of linear type")
    val = (d - 1) * (d - 2) // 2 + _sat_quotient_dim(F) + 1
    rep = DegreeReport(val, "formula-plane")
    try:
        lim = degree_via_limit(F, n_max, seed)
        rep.cross_checks["limit"] = lim.deg_F
        if lim.deg_F is not None and lim.deg_F != val:
            rep.consistent = False
    except HypothesisError as exc:
        rep.diagnostics.append(str(exc))
    return rep


def j_multiplicity(J: Ideal, d: int, n_max: int = 8) -> int:
    """j(J) = d·deg(G)·deg K[J_d] for J generated in degree d with maximal analytic spread."""
    R = J.ring
    if R.nblocks != 1:
        raise HypothesisError("needs a single-graded ring")
    from .groebner import _interreduce_linear
    from .ring import multi_degree
    gens = _interreduce_linear(list(J.gens))
    if any(multi_degree(g) != (d,) for g in gens):
        raise HypothesisError(f"ideal is not generated in degree {d}")
    if len(gens) < 2:
        raise HypothesisError("analytic spread is not maximal")
    G = RationalMap(R, gens)
    dimY, degY = image_data(G, n_max)
    if dimY != G.delta:
        raise HypothesisError("analytic spread is not maximal")
    rep = degree_via_limit(G, n_max)
    if rep.deg_F is None:
        raise Unstabilized("degree of the associated map did not stabilize")
    return d * rep.deg_F * degY


# ------------------------------------------------------------ fiber oracle


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, x in enumerate(b):
            a[i + k] = (a[i + k] - c * x) % p
        _poly_trim(a)
    return q, a


def _poly_gcd(a, b, p):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _poly_deriv(a, p):
    return _poly_trim([(i * a[i]) % p for i in range(1, len(a))])


def _radical_degree(f, p) -> int:
    """Number of distinct roots of f over the algebraic closure of GF(p)."""
    f = _poly_trim(list(f))
    if len(f) <= 1:
        return 0
    df = _poly_deriv(f, p)
    if not df:
        # f(x) = g(x^p): same roots as g
        g = [f[i] for i in range(0, len(f), p)]
        return _radical_degree(g, p)
    g = _poly_gcd(f, df, p)
    sq, _ = _poly_divmod(f, g, p)
    # sq has the distinct roots of f that are not p-fold; roots of multiplicity
    # divisible by p survive only in g and are handled recursively
    n = len(_poly_trim(sq)) - 1
    rest = g
    # roots of g that are not roots of sq
    while True:
        h = _poly_gcd(rest, sq, p)
        if len(h) <= 1:
            break
        rest, _ = _poly_divmod(rest, h, p)
    return n + _radical_degree(rest, p)


class _Quotient:
    """Finite-dimensional GF(p)-algebra K[x]/J given by a Groebner basis."""

    def __init__(self, basis, nvars, order, p):
        from .groebner import _Engine
        self.eng = _Engine(nvars, order.key, p)
        for b in basis:
            self.eng.elems.append(self.eng.make_elem(b, 0))
        self.eng.alive = list(range(len(basis)))
        self.p = p
        self.n = nvars

    def nf(self, poly):
        return self.eng.reduce(dict(poly))

    def mul(self, a, b):
        p = self.p
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return self.nf({e: c for e, c in out.items() if c})


def _minpoly(Q: _Quotient, ell: dict, p: int, bound: int):
    """Minimal polynomial of multiplication by ell on the quotient (Krylov)."""
    from .linalg import Echelon
    one = {(0,) * Q.n: 1}
    # monomial coordinates pivot before the tag coordinates that record ℓ^k
    ech = Echelon(p, keyfunc=lambda key: (key[0] == "m", key[1]))
    cur = Q.nf(one)
    for k in range(bound + 2):
        v = {("m", e): c for e, c in cur.items()}
        v[("t", -k)] = 1  # tag coordinate (smaller than monomials)
        red = ech.reduce(v)
        if not any(key[0] == "m" for key in red):
            # red is a relation among tags: Σ c_j ℓ^j = 0
            coeffs = [0] * (k + 1)
            for key, c in red.items():
                coeffs[-key[1]] = c % p
            return _poly_trim(coeffs)
        ech.add(red)
        cur = Q.mul(cur, ell)
    raise NotGenericallyFinite("quotient is not finite-dimensional")


def _random_point(F: RationalMap, rng: random.Random, p: int, tries: int = 200):
    """A GF(p)-point of the source (respecting relations) with f(a) ≠ 0."""
    R = F.ring
    for _ in range(tries):
        pt = []
        ok = True
        for bi, (a, c) in enumerate(R.block_ranges):
            rels = [r for r in R.relations if R.block_of(min(r.support_vars())) == bi]
            if not rels:
                v = [rng.randrange(1, p) for _ in range(c - a)]
                if not any(v):
                    ok = False
                    break
                pt.extend(v)
            else:
                v = _point_on_subvariety(R, bi, rels, rng, p)
                if v is None:
                    ok = False
                    break
                pt.extend(v)
        if not ok:
            continue
        img = [evaluate_at(f, pt) for f in F.forms]
        if any(img):
            return pt, img
    raise RuntimeError("could not find a point off the base locus")


def _point_on_subvariety(R: Ring, bi: int, rels, rng, p):
    """Random GF(p)-point of the block subvariety via a random linear section."""
    a, c = R.block_ranges[bi]
    names = list(R.blocks[bi])
    B = Ring([names], p)
    eqs = [Poly.from_dict(B, {e[a:c]: v for e, v in r.terms.items()}) for r in rels]
    J = Ideal(B, eqs)
    dim, _ = variety_degree_and_dim(J)
    n = c - a
    for _ in range(30):
        gens = list(eqs)
        # dim random hyperplanes and a random affine chart
        for _k in range(dim):
            gens.append(Poly.from_dict(B, {tuple(1 if t == j else 0 for t in range(n)): rng.randrange(p)
                                           for j in range(n)}))
        chart = Poly.from_dict(B, {tuple(1 if t == j else 0 for t in range(n)): rng.randrange(p)
                                   for j in range(n)})
        gens.append(chart - B.one)
        pt = _rational_point(gens, n, p, rng)
        if pt is not None:
            return pt
    return None


def _rational_point(gens, n, p, rng):
    """Some GF(p)-point of a zero-dimensional affine system, or None."""
    polys = [dict(g.terms) for g in gens]
    fixed = {}
    for var in range(n):
        raw = _raw_gb(polys, n, GREVLEX, p)
        leads = [max(b, key=GREVLEX.key) for b in raw]
        if any(not any(l) for l in leads) or not _finite(leads, n):
            return None
        Q = _Quotient(raw, n, GREVLEX, p)
        ell = {tuple(1 if t == var else 0 for t in range(n)): 1}
        mp = _minpoly(Q, ell, p, _std_count(leads, n))
        roots = [x for x in range(p) if _eval_uni(mp, x, p) == 0]
        if not roots:
            return None
        r0 = rng.choice(roots)
        fixed[var] = r0
        e = tuple(1 if t == var else 0 for t in range(n))
        polys = raw + [{e: 1, (0,) * n: (-r0) % p}]
    return [fixed[i] for i in range(n)]


def _eval_uni(f, x, p):
    v = 0
    for c in reversed(f):
        v = (v * x + c) % p
    return v


def _finite(leads, n):
    return all(any(l[i] and all(not l[j] for j in range(n) if j != i) for l in leads) for i in range(n))


def _std_count(leads, n):
    import itertools
    bounds = [min(l[i] for l in leads if l[i] and all(not l[j] for j in range(n) if j != i))
              for i in range(n)]
    cnt = 0
    for m in itertools.product(*[range(b) for b in bounds]):
        if not any(all(a <= b for a, b in zip(l, m)) for l in leads):
            cnt += 1
    return cnt


def fiber_points(F: RationalMap, point, p: int, rng: random.Random, projections: int = 3,
                 with_length: bool = False):
    """Number of geometric points in the fiber through ``point`` (off the base locus).

    With ``with_length`` also returns the length of the fiber scheme; the
    two differ exactly when the fiber is not reduced.
    """
    R = F.ring
    img = [evaluate_at(f, point) for f in F.forms]
    k = next(i for i, v in enumerate(img) if v)
    wname = "w"
    while wname in R.variables:
        wname += "_"
    A = Ring([list(R.variables) + [wname]], p)
    n = A.nvars
    fs = [Poly.from_dict(A, {e + (0,): c for e, c in f.terms.items()}) for f in F.forms]
    gens = []
    for i in range(len(fs)):
        if i != k:
            g = fs[i].scale(img[k]) - fs[k].scale(img[i])
            if g.terms:
                gens.append(g)
    for r in R.relations:
        gens.append(Poly.from_dict(A, {e + (0,): c for e, c in r.terms.items()}))
    # one random affine chart per block
    for a, c in R.block_ranges:
        chart = {}
        for j in range(a, c):
            chart[tuple(1 if t == j else 0 for t in range(n))] = rng.randrange(1, p)
        gens.append(Poly.from_dict(A, chart) - A.one)
    w = A.var(wname)
    gens.append(A.one - w * fs[k])
    raw = _raw_gb([dict(g.terms) for g in gens], n, GREVLEX, p)
    leads = [max(b, key=GREVLEX.key) for b in raw]
    if any(not any(l) for l in leads):
        return (0, 0) if with_length else 0
    if not _finite(leads, n):
        raise NotGenericallyFinite("fiber is not zero-dimensional")
    bound = _std_count(leads, n)
    Q = _Quotient(raw, n, GREVLEX, p)
    best = 0
    for _ in range(projections):
        ell = {}
        for j in range(n):
            ell[tuple(1 if t == j else 0 for t in range(n))] = rng.randrange(p)
        ell = {e: c for e, c in ell.items() if c}
        mp = _minpoly(Q, Q.nf(ell), p, bound)
        best = max(best, _radical_degree(mp, p))
        if best == bound:
            break
    return (best, bound) if with_length else best


def fiber_oracle(F: RationalMap, p: int = 101, trials: int = 5, seed: int = 0, details: bool = False):
    """Modal number of points in random fibers over GF(p).

    Fibers that are not reduced sit over the branch locus and are
    resampled (up to 4·trials times); over a small prime this happens for a
    noticeable share of the points.
    """
    if F.ring.p:
        # already over a finite field: count there
        p, G = F.ring.p, F
    else:
        G = F.reduce_mod(p)
    rng = random.Random(seed)
    counts = []
    degenerate = []
    misses = 0
    while len(counts) < trials:
        pt, _ = _random_point(G, rng, p)
        try:
            distinct, length = fiber_points(G, pt, p, rng, with_length=True)
        except NotGenericallyFinite:
            # a point on a contracted subvariety; a generic one is finite
            misses += 1
            if misses > 2 * trials + 5:
                raise
            continue
        if distinct < length and len(degenerate) < 4 * trials:
            # non-reduced fiber: the image lies on the branch locus, resample
            degenerate.append(distinct)
            continue
        counts.append(distinct)
    tally = Counter(counts)
    top = max(tally.values())
    mode = max(c for c, k in tally.items() if k == top)
    if details:
        return mode, counts
    return mode
