"""Buchberger's algorithm and the ideal toolbox built on it.

The engine works on raw ``dict`` polynomials (exponent tuple -> coefficient)
and a sort key.  Pairs are chosen by the sugar strategy and pruned with the
Gebauer-Moeller criteria; every remainder is fully tail reduced.  Module
computations (syzygies) reuse the same engine: position markers are extra
variables and S-pairs between different positions are skipped.
"""
from __future__ import annotations

import heapq
import itertools
from bisect import bisect_left
from operator import add, le, sub
from typing import Dict, List, Optional, Sequence

from .linalg import Echelon
from .ring import GREVLEX, Monomial, Poly, Ring, RingError, TermOrder, multi_degree


class IdealError(ValueError):
    pass


# ---------------------------------------------------------------- raw engine


class _Elem:
    __slots__ = ("lead", "tail", "sugar", "pos")

    def __init__(self, lead, tail, sugar, pos):
        self.lead = lead
        self.tail = tail
        self.sugar = sugar
        self.pos = pos


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(map(le, a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Engine:
    """One Buchberger run over a fixed key, characteristic and weighting."""

    def __init__(self, nvars, key, p, weights=None, positions=None):
        self.n = nvars
        self.key = key
        self.p = p
        self.w = weights
        self.positions = positions  # (start, stop) of position-marker variables
        self._nk = {}
        self.elems: List[_Elem] = []
        self.alive: List[int] = []
        self.pairs = {}
        self._hit = {}
        self._miss = {}

    def nkey(self, m):
        v = self._nk.get(m)
        if v is None:
            v = tuple(-x for x in self.key(m))
            self._nk[m] = v
        return v

    def wdeg(self, m):
        if self.w is None:
            return sum(m)
        return sum(a * b for a, b in zip(m, self.w))

    def pos_of(self, m):
        if self.positions is None:
            return None
        a, b = self.positions
        for i in range(a, b):
            if m[i]:
                return i
        return None

    def reduce(self, acc: Dict[Monomial, object], divisors=None):
        """Fully reduce ``acc`` (consumed) against the alive elements."""
        p = self.p
        elems = self.elems
        cached = divisors is None
        if cached:
            find = self._find_divisor
        else:
            divs = [elems[i] for i in divisors]
        nk = self.nkey
        heap = [(nk(m), m) for m in acc]
        heapq.heapify(heap)
        rem = {}
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            _, m = pop(heap)
            c = acc.pop(m, None)
            if c is None:
                continue
            if cached:
                g = find(m)
                if g is None:
                    rem[m] = c
                    continue
            else:
                for g in divs:
                    if _divides(g.lead, m):
                        break
                else:
                    rem[m] = c
                    continue
            u = tuple(map(sub, m, g.lead))
            for e, gc in g.tail:
                mono = tuple(map(add, u, e))
                v = acc.get(mono)
                if v is None:
                    v = -c * gc
                    if p:
                        v %= p
                    if v:
                        acc[mono] = v
                        push(heap, (nk(mono), mono))
                else:
                    v = v - c * gc
                    if p:
                        v %= p
                    if v:
                        acc[mono] = v
                    else:
                        del acc[mono]
        return rem

    def _find_divisor(self, m):
        # every element ever added stays a valid reducer, so hits are kept;
        # a miss only has to be rechecked against elements added later
        g = self._hit.get(m)
        if g is not None:
            return g
        start = self._miss.get(m, 0)
        elems = self.elems
        alive = self.alive
        for k in alive[bisect_left(alive, start):]:
            G = elems[k]
            if _divides(G.lead, m):
                self._hit[m] = G
                return G
        self._miss[m] = len(elems)
        return None

    def make_elem(self, poly: dict, sugar) -> _Elem:
        lead = max(poly, key=self.key)
        c = poly[lead]
        p = self.p
        inv = pow(c, -1, p) if p else 1 / c
        tail = [(e, (v * inv % p) if p else v * inv) for e, v in poly.items() if e != lead]
        tail.sort(key=lambda t: self.key(t[0]), reverse=True)
        return _Elem(lead, tail, sugar, self.pos_of(lead))

    def spoly(self, i, j):
        gi, gj = self.elems[i], self.elems[j]
        lcm = _lcm(gi.lead, gj.lead)
        ui = tuple(map(sub, lcm, gi.lead))
        uj = tuple(map(sub, lcm, gj.lead))
        p = self.p
        acc = {}
        for e, c in gi.tail:
            acc[tuple(map(add, ui, e))] = c
        for e, c in gj.tail:
            m = tuple(map(add, uj, e))
            v = acc.get(m, 0) - c
            if p:
                v %= p
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        sugar = max(gi.sugar + self.wdeg(ui), gj.sugar + self.wdeg(uj))
        return acc, sugar

    def update(self, h: int):
        """Gebauer-Moeller update with the new element index h."""
        elems = self.elems
        H = elems[h]
        lh = H.lead
        cand = []
        for g in self.alive:
            G = elems[g]
            if self.positions is not None and G.pos != H.pos:
                continue
            cand.append((g, _lcm(G.lead, lh)))
        # criterion M / F on the new pairs
        kept = []
        for idx, (g, l) in enumerate(cand):
            cop = _coprime(elems[g].lead, lh)
            if cop:
                kept.append((g, l, True))
                continue
            dominated = False
            for g2, l2 in cand[idx + 1:]:
                if _divides(l2, l):
                    dominated = True
                    break
            if not dominated:
                for g2, l2, _ in kept:
                    if _divides(l2, l):
                        dominated = True
                        break
            if not dominated:
                kept.append((g, l, False))
        # criterion B on the old pairs
        newpairs = {}
        for (i, j), (s, l) in self.pairs.items():
            if _divides(lh, l) and _lcm(elems[i].lead, lh) != l and _lcm(elems[j].lead, lh) != l:
                continue
            newpairs[(i, j)] = (s, l)
        for g, l, cop in kept:
            if cop:
                continue
            G = elems[g]
            sugar = max(G.sugar + self.wdeg(tuple(map(sub, l, G.lead))),
                        H.sugar + self.wdeg(tuple(map(sub, l, lh))))
            newpairs[(g, h)] = (sugar, l)
        self.pairs = newpairs
        self.alive = [g for g in self.alive if not _divides(lh, elems[g].lead)] + [h]

    def add_poly(self, poly: dict, sugar):
        r = self.reduce(poly)
        if not r:
            return
        self.elems.append(self.make_elem(r, sugar))
        self.update(len(self.elems) - 1)

    def run(self, polys: Sequence[dict]):
        inputs = [dict(f) for f in polys if f]
        inputs.sort(key=lambda f: (self.wdeg(max(f, key=self.key)), self.key(max(f, key=self.key))))
        for f in inputs:
            self.add_poly(f, max(self.wdeg(m) for m in f))
        while self.pairs:
            pair = min(self.pairs, key=lambda ij: (self.pairs[ij][0], self.key(self.pairs[ij][1]), ij))
            del self.pairs[pair]
            s, sugar = self.spoly(*pair)
            if s:
                self.add_poly(s, sugar)
        return self.reduced()

    def reduced(self):
        """Interreduce the alive elements; return monic dict polynomials sorted by lead."""
        elems = self.elems
        alive = sorted(self.alive, key=lambda i: self.key(elems[i].lead))
        out = []
        for i in alive:
            g = elems[i]
            tail = dict(g.tail)
            # a tail term is smaller than its own lead, so g itself never divides it
            red = self.reduce(tail) if tail else {}
            one = 1 if self.p else _ONE
            poly = {g.lead: one}
            poly.update(red)
            out.append(poly)
        return out


from gmpy2 import mpq as _mpq  # noqa: E402

_ONE = _mpq(1)


def _raw_gb(polys, nvars, order: TermOrder, p, weights=None, positions=None):
    eng = _Engine(nvars, order.key, p, weights, positions)
    return eng.run(polys)


def _raw_nf(poly: dict, basis: List[dict], order: TermOrder, p):
    eng = _Engine(len(next(iter(poly))) if poly else 0, order.key, p)
    for b in basis:
        eng.elems.append(eng.make_elem(b, 0))
    eng.alive = list(range(len(basis)))
    return eng.reduce(dict(poly))


# ---------------------------------------------------------------- ideals


class Ideal:
    """Ideal of ``ring`` generated by ``gens`` (zero generators dropped).

    If the ring has block relations, they are part of every Groebner basis,
    so the ideal is really its preimage in the polynomial ring.
    """

    def __init__(self, ring: Ring, gens=()):
        from .ring import parse_polynomial
        out = []
        for g in gens:
            if not isinstance(g, Poly):
                g = parse_polynomial(g, ring)
            elif g.ring is not ring and g.ring != ring:
                raise RingError("generator in a different ring")
            if g.terms:
                out.append(Poly(ring, g.terms) if g.ring is not ring else g)
        self.ring = ring
        self.gens = tuple(out)
        self._gb = {}

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def all_gens(self):
        return self.gens + tuple(self.ring.relations)

    def gb(self, order: TermOrder = GREVLEX) -> "GroebnerBasis":
        g = self._gb.get(order)
        if g is None:
            g = buchberger(self, order)
            self._gb[order] = g
        return g

    def reduced_gens(self, order: TermOrder = GREVLEX):
        return list(self.gb(order).basis)

    def contains(self, f) -> bool:
        if not isinstance(f, Poly):
            from .ring import parse_polynomial
            f = parse_polynomial(f, self.ring)
        return self.gb().reduce(f).is_zero()

    __contains__ = contains

    def is_zero(self) -> bool:
        return not self.gb().basis

    def is_unit(self) -> bool:
        return any(g.is_constant() and g.terms for g in self.gb().basis)

    def issubset(self, other: "Ideal") -> bool:
        G = other.gb()
        return all(G.reduce(g).is_zero() for g in self.all_gens())

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        a = {frozenset(g.terms.items()) for g in self.gb().basis}
        b = {frozenset(g.terms.items()) for g in other.gb().basis}
        return a == b

    def __hash__(self):
        return hash(frozenset(frozenset(g.terms.items()) for g in self.gb().basis))

    def __add__(self, other):
        if isinstance(other, Poly):
            return Ideal(self.ring, self.gens + (other,))
        return Ideal(self.ring, self.gens + tuple(other.gens))

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Ideal(self.ring, [g * other for g in self.gens])
        return Ideal(self.ring, _interreduce_linear([a * b for a in self.gens for b in other.gens]))

    def power(self, n: int) -> "Ideal":
        """I^n from generator products with linear interreduction per degree."""
        if n < 0:
            raise IdealError("negative power")
        if n == 0:
            return Ideal(self.ring, [self.ring.one])
        cur = list(_interreduce_linear(self.gens))
        base = cur
        for _ in range(n - 1):
            cur = _interreduce_linear([a * b for a in cur for b in base])
        return Ideal(self.ring, cur)

    __pow__ = power

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.all_gens())

    def map(self, func) -> "Ideal":
        return Ideal(self.ring, [func(g) for g in self.gens])


def _interreduce_linear(polys):
    """A basis of the K-span of ``polys``, grouped by multi-degree when homogeneous."""
    polys = [f for f in polys if f.terms]
    if not polys:
        return []
    ring = polys[0].ring
    groups = {}
    for f in polys:
        try:
            d = multi_degree(f)
        except Exception:
            d = None
        groups.setdefault(d, []).append(f)
    out = []
    for d in sorted(groups, key=lambda x: (x is None, x)):
        grp = groups[d]
        if d is None:
            out.extend(grp)
            continue
        ech = Echelon(ring.p, keyfunc=GREVLEX.key)
        for f in grp:
            ech.add(f.terms)
        rows = sorted(ech.rows.items(), key=lambda kv: GREVLEX.key(kv[0]), reverse=True)
        out.extend(Poly(ring, dict(r)) for _, r in rows)
    return out


class GroebnerBasis:
    """Reduced Groebner basis of ``source`` w.r.t. ``order`` (leading coefficients 1)."""

    def __init__(self, source: Ideal, order: TermOrder, basis):
        self.source = source
        self.order = order
        self.basis = tuple(basis)
        self.ring = source.ring

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.basis]}, {self.order})"

    def leading_monomials(self):
        return [g.lm(self.order) for g in self.basis]

    def reduce(self, f: Poly) -> Poly:
        if f.ring is not self.ring and f.ring != self.ring:
            raise RingError("ring mismatch")
        if not f.terms or not self.basis:
            return Poly(self.ring, dict(f.terms))
        r = _raw_nf(f.terms, [g.terms for g in self.basis], self.order, self.ring.p)
        return Poly(self.ring, r)

    normal_form = reduce

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def spair_check(self) -> bool:
        """Every S-polynomial of basis pairs reduces to zero (exhaustive)."""
        ring = self.ring
        eng = _Engine(ring.nvars, self.order.key, ring.p)
        for b in self.basis:
            eng.elems.append(eng.make_elem(dict(b.terms), 0))
        eng.alive = list(range(len(self.basis)))
        for i, j in itertools.combinations(range(len(self.basis)), 2):
            s, _ = eng.spoly(i, j)
            if s and eng.reduce(s):
                return False
        return True

    def is_reduced(self) -> bool:
        leads = self.leading_monomials()
        for i, g in enumerate(self.basis):
            if g.leading(self.order)[1] != 1:
                return False
            for j, l in enumerate(leads):
                if i != j and any(_divides(l, e) for e in g.terms):
                    return False
        return True


def buchberger(I: Ideal, order: TermOrder = GREVLEX, weights=None) -> GroebnerBasis:
    """Reduced Groebner basis of I (relations of the ring included)."""
    ring = I.ring
    polys = [dict(g.terms) for g in I.all_gens()]
    if weights is None and order.weights is not None and order.perm is None and len(order.weights) == ring.nvars:
        weights = order.weights
    raw = _raw_gb(polys, ring.nvars, order, ring.p, weights)
    return GroebnerBasis(I, order, [Poly(ring, r) for r in raw])


def normal_form(f: Poly, G: GroebnerBasis) -> Poly:
    return G.reduce(f)


# ---------------------------------------------------------------- helpers


def _fresh_name(ring: Ring, base: str) -> str:
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}_{k}"
    return name


def divide_exact(f: Poly, g: Poly) -> Poly:
    """Exact quotient f / g; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ring = f.ring
    lg, cg = g.leading()
    inv = ring.inv(cg)
    q = {}
    r = f
    while r.terms:
        lr, cr = r.leading()
        if not _divides(lg, lr):
            raise IdealError("polynomial division is not exact")
        u = tuple(map(sub, lr, lg))
        c = cr * inv
        if ring.p:
            c %= ring.p
        q[u] = c
        r = r - g.mul_monomial(u, c)
    return Poly(ring, q)


def _homogeneous_weights(polys, nvars):
    """Standard grading check: return True if every poly is homogeneous in total degree."""
    for f in polys:
        if len({sum(e) for e in f.terms}) > 1:
            return False
    return True


# ---------------------------------------------------------------- elimination


def eliminate(I: Ideal, drop_vars, weights=None, target: Optional[Ring] = None) -> Ideal:
    """Generators of I ∩ K[remaining variables] via an elimination order.

    ``weights`` (indexed like the ring variables) is used inside both groups
    of the block order; choosing weights that make the input homogeneous
    keeps the computation graded.  If ``target`` is given the result is moved
    into that ring (it must contain the remaining variables).
    """
    ring = I.ring
    drop = [ring.index(v) if isinstance(v, str) else v for v in drop_vars]
    drop_set = set(drop)
    if not drop:
        G = I.gb()
        res = list(G.basis)
    else:
        keep = [i for i in range(ring.nvars) if i not in drop_set]
        perm = sorted(drop) + keep
        w = None if weights is None else [weights[i] for i in perm]
        order = TermOrder.elimination(len(drop), weights=w, perm=perm)
        polys = [dict(g.terms) for g in I.all_gens()]
        sugar_w = list(weights) if weights is not None else None
        raw = _raw_gb(polys, ring.nvars, order, ring.p, sugar_w)
        res = [Poly(ring, r) for r in raw if not any(e[i] for e in r for i in drop)]
    if target is not None:
        res = [g.change_ring(target) for g in res]
        return Ideal(target, res)
    return Ideal(ring, res)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via t·I + (1-t)·J and elimination of t."""
    ring = I.ring
    if J.ring != ring:
        raise RingError("ring mismatch")
    if not I.gens and not ring.relations:
        return Ideal(ring, [])
    tname = _fresh_name(ring, "t")
    R2 = ring.extend([tname], front=True)
    t = R2.var(tname)
    gens = [t * g.change_ring(R2) for g in I.all_gens()]
    gens += [(R2.one - t) * g.change_ring(R2) for g in J.all_gens()]
    weights = [0] + [1] * ring.nvars
    E = eliminate(Ideal(R2, gens), [0], weights=weights, target=ring)
    out = Ideal(ring, [g for g in E.gens if not _is_relation(g, ring)])
    return out


def _is_relation(g, ring):
    return any(g == r for r in ring.relations)


def quotient_by_element(I: Ideal, g: Poly) -> Ideal:
    """(I : g) computed as (I ∩ (g)) / g."""
    if g.is_zero():
        raise IdealError("colon by the zero ideal")
    ring = I.ring
    K = intersect(I, Ideal(ring, [g]))
    gens = []
    for h in K.gens:
        gens.append(divide_exact(h, g))
    if ring.relations:
        # elements of the intersection may only be divisible modulo the relations
        pass
    return Ideal(ring, gens)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = ∩ over generators g of J of (I : g)."""
    ring = I.ring
    gj = [g for g in J.gens]
    if not gj:
        raise IdealError("colon by the zero ideal")
    out = None
    for g in gj:
        Q = _colon_element(I, g)
        out = Q if out is None else intersect(out, Q)
    return out


def _colon_element(I: Ideal, g: Poly) -> Ideal:
    ring = I.ring
    if not ring.relations:
        return quotient_by_element(I, g)
    # modulo relations: intersection in the quotient ring lifts to (I + a) ∩ (g) + a
    R0 = ring.without_relations()
    base = Ideal(R0, [h.change_ring(R0) for h in I.all_gens()])
    K = intersect(base, Ideal(R0, [g.change_ring(R0)]))
    g0 = g.change_ring(R0)
    gens = [divide_exact(h, g0).change_ring(ring) for h in K.gens]
    return Ideal(ring, gens)


def _saturate_variable(I: Ideal, i: int) -> Ideal:
    """I : x_i^∞ for homogeneous I by dividing a grevlex basis with x_i last."""
    ring = I.ring
    perm = [j for j in range(ring.nvars) if j != i] + [i]
    order = TermOrder.grevlex(perm=perm)
    G = I.gb(order)
    gens = []
    for g in G.basis:
        k = min(e[i] for e in g.terms)
        if k:
            u = [0] * ring.nvars
            u[i] = k
            g = Poly(ring, {tuple(a - b for a, b in zip(e, u)): c for e, c in g.terms.items()})
        gens.append(g)
    out = Ideal(ring, [h for h in gens if not _is_relation(h, ring)])
    # the divided basis is a Groebner basis of the saturation for ``order``
    out.sat_leads = [g.lm(order) for g in gens if g.terms]
    return out


def saturate_by_element(I: Ideal, g: Poly, method: str = "auto") -> Ideal:
    """I : g^∞."""
    ring = I.ring
    if g.is_zero():
        raise IdealError("saturation by the zero ideal")
    if g.is_constant():
        return I
    allg = I.all_gens()
    homog = _homogeneous_weights(allg, ring.nvars)
    if method == "auto" and g.is_monomial() and homog:
        (e,) = g.terms
        out = I
        for i, a in enumerate(e):
            if a:
                out = _saturate_variable(out, i)
        return out
    if method in ("auto", "colon"):
        cur = I
        while True:
            nxt = _colon_element(cur, g)
            if nxt.issubset(cur):
                return cur
            cur = nxt
    if method == "rabinowitsch":
        return rabinowitsch(I, g)
    raise IdealError(f"unknown saturation method {method!r}")


def rabinowitsch(I: Ideal, g: Poly) -> Ideal:
    """I : g^∞ as (I + (1 - w·g)) ∩ K[x]."""
    ring = I.ring
    wname = _fresh_name(ring, "w")
    R0 = ring.without_relations()
    R2 = R0.extend([wname], front=True)
    w = R2.var(wname)
    gens = [h.change_ring(R2) for h in I.all_gens()]
    gens.append(R2.one - w * g.change_ring(R2))
    E = eliminate(Ideal(R2, gens), [0], target=R0)
    return Ideal(ring, [h.change_ring(ring) for h in E.gens if not _is_relation(h.change_ring(ring), ring)])


def saturate(I: Ideal, J: Ideal, method: str = "auto") -> Ideal:
    """I : J^∞.

    ``auto`` uses ∩_g (I : g^∞) over the generators g of J, with the
    divide-by-the-last-variable shortcut for monomial g and homogeneous I.
    ``colon`` iterates I ⊆ (I:J) ⊆ (I:J²) ⊆ … until it stabilizes.
    ``rabinowitsch`` uses a tag variable per generator.
    """
    ring = I.ring
    if not J.gens:
        raise IdealError("saturation by the zero ideal")
    if method == "colon":
        cur = I
        while True:
            nxt = colon(cur, J)
            if nxt.issubset(cur):
                return cur
            cur = nxt
    out = None
    for g in J.gens:
        S = saturate_by_element(I, g, "rabinowitsch" if method == "rabinowitsch" else "auto")
        out = S if out is None else intersect(out, S)
    return Ideal(ring, out.gb().basis)


def block_ideal(ring: Ring, b: int) -> Ideal:
    a, c = ring.block_ranges[b]
    return Ideal(ring, [ring.var(i) for i in range(a, c)])


def irrelevant_ideal(ring: Ring) -> Ideal:
    """N = m_1 ··· m_m."""
    out = block_ideal(ring, 0)
    for b in range(1, ring.nblocks):
        out = out * block_ideal(ring, b)
    return out


def saturate_irrelevant(I: Ideal, method: str = "auto") -> Ideal:
    """I^sat = I : N^∞, as successive saturations by each block ideal m_i."""
    out = I
    for b in range(I.ring.nblocks):
        out = saturate(out, block_ideal(I.ring, b), method)
    return out


# ---------------------------------------------------------------- ring maps


def ring_map_kernel(forms: Sequence[Poly], source_relations=None, names=None) -> Ideal:
    """Kernel b ⊂ K[y_0..y_s] of y_i ↦ f_i (modulo the source relations)."""
    if not forms:
        raise IdealError("no forms")
    ring = forms[0].ring
    degs = {multi_degree(f) for f in forms if f.terms}
    if len(degs) > 1:
        raise IdealError("forms must share a multi-degree")
    s = len(forms) - 1
    if names is None:
        names = [f"y{i}" for i in range(s + 1)]
    for nm in names:
        if nm in ring.variables:
            raise RingError(f"target variable {nm} clashes with a source variable")
    R0 = ring.without_relations()
    A = R0.extend(list(names))
    Y = Ring([list(names)], ring.p)
    D = sum(degs.pop()) if degs else 1
    gens = [A.var(names[i]) - f.change_ring(A) for i, f in enumerate(forms)]
    rels = list(source_relations.gens) if isinstance(source_relations, Ideal) else list(source_relations or [])
    rels += list(ring.relations)
    gens += [r.change_ring(A) for r in rels]
    weights = [1] * R0.nvars + [D] * (s + 1)
    return eliminate(Ideal(A, gens), list(range(R0.nvars)), weights=weights, target=Y)


# ---------------------------------------------------------------- syzygies


class SyzygyMatrix:
    """Minimal generators of the syzygies of ``forms``.

    ``columns[k][j]`` is the j-th entry of the k-th column; every column
    satisfies Σ_j columns[k][j]·forms[j] = 0 (modulo the ring relations).
    ``twists[k]`` is the multi-degree of Σ_j s_j f_j before cancellation;
    ``degrees[k]`` subtracts the common degree of the forms when they share one.
    """

    def __init__(self, forms, columns, twists):
        self.forms = list(forms)
        self.columns = [list(c) for c in columns]
        self.twists = [tuple(t) for t in twists]
        fd = {multi_degree(f) for f in self.forms}
        if len(fd) == 1:
            d = fd.pop()
            self.degrees = [tuple(a - b for a, b in zip(t, d)) for t in self.twists]
        else:
            self.degrees = list(self.twists)

    @property
    def ncols(self):
        return len(self.columns)

    @property
    def nrows(self):
        return len(self.forms)

    def entry(self, i, k):
        return self.columns[k][i]

    def rows(self):
        return [[c[i] for c in self.columns] for i in range(self.nrows)]

    def check(self) -> bool:
        ring = self.forms[0].ring
        G = Ideal(ring, []).gb() if ring.relations else None
        for col in self.columns:
            tot = ring.zero
            for s, f in zip(col, self.forms):
                tot = tot + s * f
            if G is not None:
                tot = G.reduce(tot)
            if tot.terms:
                return False
        return True

    def __repr__(self):
        return f"SyzygyMatrix({self.nrows}x{self.ncols}, degrees={self.degrees})"


def _degree_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def syzygies(forms: Sequence[Poly]) -> SyzygyMatrix:
    """Minimal homogeneous generators of the first syzygy module of ``forms``."""
    forms = list(forms)
    if not forms:
        raise IdealError("empty input")
    ring = forms[0].ring
    for f in forms:
        if not f.terms:
            raise IdealError("zero form")
    fdeg = [multi_degree(f) for f in forms]
    k = len(forms)
    n = ring.nvars
    R0 = ring.without_relations()
    # module elements live in R[e0, e1..ek]; e0 is eliminated
    names = [_fresh_name(ring, f"_e{j}") for j in range(k + 1)]
    E = R0.extend(*[[nm] for nm in names])
    N = E.nvars
    gens = []
    for j, f in enumerate(forms):
        gens.append(dict((f.change_ring(E) * E.var(names[0]) + E.var(names[j + 1])).terms))
    for r in ring.relations:
        gens.append(dict((r.change_ring(E) * E.var(names[0])).terms))
    # order: e0 first (eliminated), then weighted grevlex with deg e_j = 1 + deg f_j
    perm = [n] + list(range(n)) + list(range(n + 1, N))
    wperm = [1] + [1] * n + [1 + sum(d) for d in fdeg]
    order = TermOrder.elimination(1, weights=wperm, perm=perm)
    sugar_w = [1] * n + [1] + [1 + sum(d) for d in fdeg]
    raw = _raw_gb(gens, N, order, ring.p, sugar_w, positions=(n, N))
    cols = []
    for r in raw:
        if any(e[n] for e in r):
            continue
        col = [dict() for _ in range(k)]
        for e, c in r.items():
            j = next(i for i in range(n + 1, N) if e[i]) - n - 1
            col[j][e[:n]] = c
        cols.append([Poly(ring, t) for t in col])
    return _minimalize(ring, forms, fdeg, cols)


def _column_twist(col, fdeg, ring):
    for s, d in zip(col, fdeg):
        if s.terms:
            return tuple(a + b for a, b in zip(multi_degree(s), d))
    return None


def _minimalize(ring, forms, fdeg, cols):
    G = Ideal(ring, []).gb() if ring.relations else None
    items = []
    for col in cols:
        if G is not None:
            col = [G.reduce(s) for s in col]
        if all(not s.terms for s in col):
            continue
        tw = _column_twist(col, fdeg, ring)
        items.append((tw, col))

    def colkey(item):
        tw, col = item
        txt = tuple(str(s) for s in col)
        return (sum(tw), tw, txt)

    items.sort(key=colkey)
    kept = []
    for tw, col in items:
        if _in_graded_span(ring, fdeg, tw, col, kept):
            continue
        kept.append((tw, col))
    return SyzygyMatrix(forms, [c for _, c in kept], [t for t, _ in kept])


def _vec(col):
    v = {}
    for j, s in enumerate(col):
        for e, c in s.terms.items():
            v[(j, e)] = c
    return v


def _in_graded_span(ring, fdeg, tw, col, kept) -> bool:
    """Is ``col`` a K-combination of monomial multiples of kept columns (plus relation multiples)?"""
    ech = Echelon(ring.p)
    for tw2, col2 in kept:
        diff = _degree_sub(tw, tw2)
        if any(x < 0 for x in diff):
            continue
        for m in ring.monomials_of_degree(diff):
            ech.add(_vec([s.mul_monomial(m) for s in col2]))
    if ring.relations:
        for r in ring.relations:
            rd = multi_degree(r)
            for j, d in enumerate(fdeg):
                diff = _degree_sub(_degree_sub(tw, d), rd)
                if any(x < 0 for x in diff):
                    continue
                for m in ring.monomials_of_degree(diff):
                    entry = [ring.zero] * len(fdeg)
                    entry[j] = r.mul_monomial(m)
                    ech.add(_vec(entry))
    return ech.contains(_vec(col))
