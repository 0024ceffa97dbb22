"""Random instance families used by the test corpora and the demos.

Everything is seeded through an explicit ``random.Random``.  Most families
live over GF(p) so that the fiber oracle can run in the same field.
"""
from __future__ import annotations

import random
from typing import List, Optional, Sequence

from .linalg import nullspace_mod_p
from .maps import RationalMap
from .ring import Poly, Ring, evaluate_at


def plane_ring(p: int = 101, names=("x0", "x1", "x2")) -> Ring:
    return Ring([list(names)], p)


def p1p1_ring(p: int = 101) -> Ring:
    return Ring([["s0", "s1"], ["t0", "t1"]], p)


def jacobian_full_rank(F: RationalMap, rng: random.Random) -> bool:
    """Jacobian of the forms has rank s+1 at a random point.

    Full rank at one point implies the forms are algebraically independent
    (in any characteristic), so the map is dominant onto P^s.
    """
    from .linalg import matrix_rank
    R = F.ring
    pt = [rng.randrange(1, R.p) if R.p else rng.randint(1, 97) for _ in range(R.nvars)]
    J = [[evaluate_at(f.diff(v), pt) for v in range(R.nvars)] for f in F.forms]
    return matrix_rank(J, R.p) == len(F.forms)


def random_form(R: Ring, deg, rng: random.Random, density: float = 1.0, coeff_range=None) -> Poly:
    """Random form of multi-degree ``deg`` (nonzero)."""
    if isinstance(deg, int):
        deg = (deg,)
    mons = R.monomials_of_degree(tuple(deg))
    while True:
        terms = {}
        for m in mons:
            if rng.random() <= density:
                c = rng.randrange(R.p) if R.p and coeff_range is None else rng.randint(*(coeff_range or (-5, 5)))
                if c:
                    terms[m] = c
        f = Poly.from_dict(R, terms)
        if f.terms:
            return f


def minors_map(phi: List[List[Poly]]) -> RationalMap:
    """Signed 2×2 minors of a 3×2 matrix, ordered so that (f)·φ = 0."""
    R = phi[0][0].ring if phi[0][0].terms else phi[1][0].ring
    (a0, b0), (a1, b1), (a2, b2) = phi
    f0 = a1 * b2 - a2 * b1
    f1 = a2 * b0 - a0 * b2
    f2 = a0 * b1 - a1 * b0
    return RationalMap(R, [f0, f1, f2])


def linear_change(R: Ring, rng: random.Random):
    """Random invertible substitution x -> M·x on a single-block ring."""
    n = R.nvars
    from .linalg import matrix_rank
    while True:
        M = [[rng.randrange(R.p) for _ in range(n)] for _ in range(n)]
        if matrix_rank(M, R.p) == n:
            break
    subs = {}
    for i in range(n):
        subs[i] = Poly.from_dict(R, {tuple(1 if t == j else 0 for t in range(n)): M[i][j] for j in range(n)})
    return subs


def apply_change(F: RationalMap, subs) -> RationalMap:
    return RationalMap(F.ring, [f.subs(subs, F.ring) for f in F.forms], F.target_names)


def _in_x0x1_form(R: Ring, deg: int, rng):
    """Random form of degree ``deg`` lying in (x0, x1)."""
    x0, x1 = R.var(0), R.var(1)
    return x0 * random_form(R, deg - 1, rng) + x1 * random_form(R, deg - 1, rng)


def _binary_form(R: Ring, deg: int, rng):
    """Random form of degree ``deg`` in x0, x1 only."""
    while True:
        f = Poly.from_dict(R, {(a, deg - a, 0): rng.randrange(R.p) for a in range(deg + 1)})
        if f.terms:
            return f


def jonquieres_map(d: int, rng: random.Random, p: int = 101) -> RationalMap:
    """(x0·g, x1·g, x2·a + b) with g, a binary of degree d-1 and b binary of degree d."""
    R = plane_ring(p)
    x0, x1, x2 = R.var(0), R.var(1), R.var(2)
    g = _binary_form(R, d - 1, rng)
    a = _binary_form(R, d - 1, rng)
    b = _binary_form(R, d, rng)
    return RationalMap(R, [x0 * g, x1 * g, x2 * a + b])


def random_mu1_plane(d: int, rng: random.Random, family: str = "mixed", p: int = 101,
                     change: bool = True, tries: int = 50) -> RationalMap:
    """Plane map of degree d whose base ideal has a linear syzygy.

    family: "generic" (I_1(φ) of height 3), "height2" (second column in
    (x0, x1)), "jonquieres" (forms (x0·g, x1·g, x2·a + b)), or
    "mixed" to pick one at random.
    """
    R = plane_ring(p)
    x0, x1 = R.var(0), R.var(1)
    if family == "mixed":
        family = rng.choice(["generic", "height2", "jonquieres"])
    for _ in range(tries):
        if family == "generic":
            col = [random_form(R, d - 1, rng) for _ in range(3)]
        elif family == "height2":
            col = [_in_x0x1_form(R, d - 1, rng) for _ in range(3)]
        elif family == "jonquieres":
            F = jonquieres_map(d, rng, p)
            if not _is_hb(F):
                continue
            return apply_change(F, linear_change(R, rng)) if change else F
        else:
            raise ValueError(f"unknown family {family}")
        phi = [[x0, col[0]], [-x1, col[1]], [R.zero, col[2]]]
        try:
            F = minors_map(phi)
        except Exception:
            continue
        if any(not f.terms for f in F.forms) or not _is_hb(F):
            continue
        if change:
            F = apply_change(F, linear_change(R, rng))
        return F
    raise RuntimeError("no admissible instance found")


def _is_hb(F: RationalMap) -> bool:
    from .plane import NotHilbertBurch, WrongShape, hilbert_burch
    try:
        hb = hilbert_burch(F.base_ideal())
    except (NotHilbertBurch, WrongShape, ValueError):
        return False
    return hb.saturated and hb.mu1 == 1 and hb.d == F.degree[0]


def random_linear_type_plane(mu, rng: random.Random, p: int = 101, tries: int = 50) -> RationalMap:
    """Plane map from a random 3×2 Hilbert-Burch matrix with column degrees mu.

    Accepted only if the minors have no common factor and I_1(φ) is
    primary to the maximal ideal, so the base ideal is of linear type.
    """
    from .plane import hilbert_burch
    R = plane_ring(p)
    for _ in range(tries):
        phi = [[random_form(R, mu[0], rng), random_form(R, mu[1], rng)] for _ in range(3)]
        F = minors_map(phi)
        if any(not f.terms for f in F.forms):
            continue
        try:
            hb = hilbert_burch(F.base_ideal())
        except Exception:
            continue
        if hb.saturated and hb.ht_I1 == 3 and sorted((hb.mu1, hb.mu2)) == sorted(mu):
            return F
    raise RuntimeError("no admissible instance found")


def random_perturbed_map(rng: random.Random, d: int = 2, p: int = 101, nterms: int = 2,
                         tries: int = 50) -> RationalMap:
    """Plane map: random monomials plus a binomial perturbation.

    Accepted when the forms are algebraically independent (dominant) and
    the base locus is finite.
    """
    from .degree import base_locus_dimension
    R = plane_ring(p)
    mons = R.monomials_of_degree((d,))
    for _ in range(tries):
        forms = []
        for _k in range(3):
            f = R.monomial(rng.choice(mons)).scale(rng.randrange(1, p))
            for _j in range(rng.randint(0, nterms)):
                f = f + R.monomial(rng.choice(mons)).scale(rng.randrange(1, p))
            forms.append(f)
        if any(not f.terms for f in forms):
            continue
        F = RationalMap(R, forms)
        try:
            if not jacobian_full_rank(F, rng):
                continue
            dim_B = base_locus_dimension(F)
        except Exception:
            continue
        if dim_B is not None and dim_B <= 0:
            return F
    raise RuntimeError("no admissible instance found")


# ------------------------------------------------------------ linear systems


def _eval_row(mons, point, p):
    row = []
    for m in mons:
        v = 1
        for a, e in zip(point, m):
            v = v * pow(a, e, p) % p
        row.append(v)
    return row


def _deriv_rows(mons, point, p):
    """Rows for the vanishing of all first partial derivatives at ``point``."""
    rows = []
    n = len(point)
    for i in range(n):
        row = []
        for m in mons:
            if not m[i]:
                row.append(0)
                continue
            v = m[i] % p
            for j, (a, e) in enumerate(zip(point, m)):
                v = v * pow(a, e - (1 if j == i else 0), p) % p
            row.append(v)
        rows.append(row)
    return rows


def forms_through(R: Ring, deg, simple=(), double=(), count: int = 3, rng: Optional[random.Random] = None):
    """Random forms of multi-degree ``deg`` through given points (double points: singular)."""
    rng = rng or random.Random(0)
    p = R.p
    mons = R.monomials_of_degree(tuple(deg))
    rows = []
    for pt in simple:
        rows.append(_eval_row(mons, pt, p))
    for pt in double:
        rows.extend(_deriv_rows(mons, pt, p))
        rows.append(_eval_row(mons, pt, p))
    basis = nullspace_mod_p(rows, len(mons), p) if rows else [
        [1 if i == j else 0 for i in range(len(mons))] for j in range(len(mons))]
    if len(basis) < count:
        raise ValueError("linear system too small")
    out = []
    for _ in range(count):
        coeffs = [0] * len(mons)
        for v in basis:
            c = rng.randrange(p)
            coeffs = [(a + c * b) % p for a, b in zip(coeffs, v)]
        out.append(Poly.from_dict(R, dict(zip(mons, coeffs))))
    return out


def random_point(R: Ring, rng: random.Random):
    return [rng.randrange(1, R.p) for _ in range(R.nvars)]


def random_p1p1_map(bidegree, npoints: int, rng: random.Random, p: int = 101, double: int = 0,
                    tries: int = 50) -> RationalMap:
    """P^1×P^1 ⇢ P^2 of the given bidegree through random points.

    Accepted when dominant with a finite nonempty base locus.
    """
    from .degree import base_locus_dimension
    R = p1p1_ring(p)
    for _ in range(tries):
        pts = [random_point(R, rng) for _ in range(npoints)]
        dbl = [random_point(R, rng) for _ in range(double)]
        try:
            forms = forms_through(R, tuple(bidegree), pts, dbl, 3, rng)
        except ValueError:
            raise
        if any(not f.terms for f in forms):
            continue
        F = RationalMap(R, forms)
        try:
            if not jacobian_full_rank(F, rng):
                continue
            if base_locus_dimension(F) != 0:
                continue
        except Exception:
            continue
        return F
    raise RuntimeError("no admissible instance found")


def random_plane_through_points(d: int, npoints: int, rng: random.Random, p: int = 101,
                                double: int = 0, tries: int = 50) -> RationalMap:
    """P^2 ⇢ P^2 by forms of degree d through random points (finite base locus)."""
    from .degree import base_locus_dimension
    R = plane_ring(p)
    for _ in range(tries):
        pts = [random_point(R, rng) for _ in range(npoints)]
        dbl = [random_point(R, rng) for _ in range(double)]
        forms = forms_through(R, (d,), pts, dbl, 3, rng)
        if any(not f.terms for f in forms):
            continue
        F = RationalMap(R, forms)
        try:
            if not jacobian_full_rank(F, rng):
                continue
            if base_locus_dimension(F) not in (-1, 0):
                continue
        except Exception:
            continue
        return F
    raise RuntimeError("no admissible instance found")


def evaluate_map(F: RationalMap, point: Sequence[int]):
    return [evaluate_at(f, point) for f in F.forms]
