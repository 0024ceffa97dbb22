"""Multi-graded Hilbert functions by counting standard monomials.

Everything here goes through the leading-term ideal of a Groebner basis:
dim_K [R/I]_c is the number of monomials of multi-degree c outside LT(I).
Hilbert polynomials are recovered by finite differences with a
stabilization window, and the result carries an explicit ``stabilized`` flag.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence

from .groebner import Ideal, _divides
from .ring import GREVLEX, Ring


class Unstabilized(RuntimeError):
    """A finite-difference fit did not settle within the sampled range."""


@dataclass
class HilbertData:
    samples: Dict[int, int]
    fitted_degree: Optional[int]
    leading_delta: Optional[Fraction]
    stabilized: bool
    window: int = 3

    @property
    def leading_coefficient(self) -> Optional[Fraction]:
        if self.leading_delta is None:
            return None
        return Fraction(self.leading_delta) / factorial(self.fitted_degree)

    @property
    def multiplicity(self):
        """δ̂!·(leading coefficient), i.e. the stabilized δ̂-th difference."""
        return self.leading_delta


def leading_monomials(I: Ideal, order=GREVLEX):
    return [g.lm(order) for g in I.gb(order).basis]


def _minimal_monomials(mons):
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(_divides(a, m) for a in out):
            out.append(m)
    return out


def count_standard(ring: Ring, leads, c) -> int:
    """Number of monomials of multi-degree c not divisible by any of ``leads``."""
    if isinstance(c, int):
        c = (c,)
    if any(x < 0 for x in c):
        return 0
    leads = [l for l in leads if ring.multi_degree_of(l) <= tuple(c) or True]
    n = 0
    for m in ring.monomials_of_degree(c):
        for l in leads:
            if _divides(l, m):
                break
        else:
            n += 1
    return n


def graded_dimension(I: Ideal, c, part: str = "quotient") -> int:
    """dim_K [R/I]_c (``part='quotient'``) or dim_K [I]_c (``part='ideal'``)."""
    ring = I.ring
    if isinstance(c, int):
        c = (c,)
    c = tuple(c)
    if len(c) != ring.nblocks:
        raise ValueError("multi-degree length must equal the number of blocks")
    q = count_standard(ring, leading_monomials(I), c)
    if part == "quotient":
        return q
    if part == "ideal":
        # relations are part of the ambient ring: [I]_c inside [K[x]/a]_c
        if ring.relations:
            amb = count_standard(ring, leading_monomials(Ideal(ring, [])), c)
            return amb - q
        return ring.dim_of_degree(c) - q
    raise ValueError("part must be 'quotient' or 'ideal'")


def ambient_dimension(ring: Ring, c) -> int:
    """dim_K of the degree-c piece of the (possibly quotient) source ring."""
    if ring.relations:
        return count_standard(ring, leading_monomials(Ideal(ring, [])), c)
    return ring.dim_of_degree(c if not isinstance(c, int) else (c,))


def _differences(values: List[int]):
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


def hilbert_fit(samples, max_degree: int, window: int = 3) -> HilbertData:
    """Fit a polynomial in n to a table of dimensions by finite differences.

    ``samples`` is a dict n -> value over consecutive integers (or a list read
    as n = 1, 2, ...).  The fitted degree is the smallest δ̂ ≤ max_degree
    whose δ̂-th differences are constant on the last ``window`` entries.
    """
    if not isinstance(samples, dict):
        samples = {i + 1: v for i, v in enumerate(samples)}
    keys = sorted(samples)
    if keys != list(range(keys[0], keys[0] + len(keys))):
        raise ValueError("samples must be indexed by consecutive integers")
    if len(keys) < max_degree + 2:
        raise ValueError(f"need at least {max_degree + 2} samples, got {len(keys)}")
    vals = [samples[k] for k in keys]
    rows = _differences(vals)
    for d in range(max_degree + 1):
        row = rows[d]
        if len(row) < window:
            break
        tail = row[-window:]
        if all(x == tail[0] for x in tail):
            return HilbertData(dict(samples), d, Fraction(tail[0]), True, window)
    return HilbertData(dict(samples), None, None, False, window)


def hilbert_table(I: Ideal, nmax: int = 8, nmin: int = 1, direction=None) -> Dict[int, int]:
    """n -> dim_K [R/I]_{n·direction} (direction defaults to (1,…,1))."""
    ring = I.ring
    direction = tuple(direction) if direction is not None else (1,) * ring.nblocks
    leads = leading_monomials(I)
    return {n: count_standard(ring, leads, tuple(n * a for a in direction)) for n in range(nmin, nmax + 1)}


def variety_degree_and_dim(b: Ideal, nmax: int = 8, window: int = 3):
    """(projective dimension, degree) of the variety of a homogeneous ideal in one block."""
    ring = b.ring
    if ring.nblocks != 1:
        raise ValueError("expected a single-block ring")
    if b.is_unit():
        return (-1, 0)
    table = hilbert_table(b, nmax)
    fit = hilbert_fit(table, ring.nvars - 1, window)
    if not fit.stabilized:
        raise Unstabilized(f"Hilbert function of the image did not stabilize for n <= {nmax}")
    if fit.leading_delta == 0:
        return (-1, 0)
    return (fit.fitted_degree, int(fit.leading_delta))


def segre_degree(source: Ring, degrees: Optional[Sequence[int]] = None,
                 dims: Optional[Sequence[int]] = None) -> int:
    """Degree of X_1×…×X_m in its Segre embedding: δ!/(δ_1!…δ_m!)·∏ deg X_i."""
    m = source.nblocks
    if dims is None or degrees is None:
        cd, cg = block_dims_and_degrees(source)
        dims = cd if dims is None else dims
        degrees = cg if degrees is None else degrees
    delta = sum(dims)
    out = factorial(delta)
    for d in dims:
        out //= factorial(d)
    for g in degrees:
        out *= g
    return out


def block_dims_and_degrees(source: Ring):
    """(dims, degrees) of the factors X_i; full projective spaces give (r_i, 1)."""
    dims, degs = [], []
    for bi, blk in enumerate(source.blocks):
        a, c = source.block_ranges[bi]
        rels = [r for r in source.relations if r.support_vars() and min(r.support_vars()) >= a
                and max(r.support_vars()) < c]
        if not rels:
            dims.append(len(blk) - 1)
            degs.append(1)
            continue
        Rb = Ring([list(blk)], source.p)
        J = Ideal(Rb, [r.change_ring(Rb) for r in rels])
        d, g = variety_degree_and_dim(J, nmax=max(8, 2 * len(blk) + 4))
        dims.append(d)
        degs.append(g)
    return dims, degs


# ------------------------------------------------ zero-dimensional monomial loci


def _coordinate_points(ring: Ring):
    return itertools.product(*[range(a, b) for a, b in ring.block_ranges])


def monomial_locus_empty(ring: Ring, leads) -> bool:
    """V(M) = ∅ in the product of projective spaces for the monomial ideal M.

    A torus-invariant closed set is empty iff it misses every coordinate
    point; the point with x_{i,a_i} = 1 (others 0) lies outside V(M) iff some
    generator only uses the chosen variables.
    """
    for choice in _coordinate_points(ring):
        allowed = set(choice)
        if not any(all(i in allowed for i, a in enumerate(l) if a) for l in leads):
            return False
    return True


def _chart(ring: Ring, leads, choice):
    """Dehomogenize M by setting the chosen variables to 1."""
    rest = [i for i in range(ring.nvars) if i not in set(choice)]
    out = _minimal_monomials([tuple(l[i] for i in rest) for l in leads])
    return rest, out


def _affine_standard_count(nv: int, leads) -> Optional[int]:
    """Number of standard monomials of a monomial ideal in nv variables (None if infinite)."""
    if nv == 0:
        return 0 if any(True for _ in leads) else 1
    if any(not any(l) for l in leads):
        return 0
    bounds = []
    for i in range(nv):
        pure = [l[i] for l in leads if l[i] and all(not l[j] for j in range(nv) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for m in itertools.product(*[range(b) for b in bounds]):
        if not any(_divides(l, m) for l in leads):
            count += 1
    return count


def monomial_locus_length(ring: Ring, leads) -> Optional[int]:
    """Length of the scheme of a monomial ideal whose locus is finite; None otherwise.

    For large multi-degrees each standard monomial sits on exactly one
    coordinate ray, so the constant Hilbert polynomial is the sum over the
    coordinate charts of the affine standard-monomial counts.
    """
    total = 0
    leads = _minimal_monomials(leads)
    for choice in _coordinate_points(ring):
        rest, loc = _chart(ring, leads, choice)
        # the chart only sees points of the chart that are not in smaller charts:
        # count monomials of the chart ideal with zero exponent on nothing else
        n = _affine_standard_count(len(rest), loc)
        if n is None:
            return None
        total += n
    return total
