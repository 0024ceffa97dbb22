"""Sparse multivariate polynomials over QQ or GF(p) with a block multi-grading.

A :class:`Ring` is a list of variable blocks (one block per projective factor),
an optional list of relations per block and a coefficient field.  Polynomials
store a dict ``exponent tuple -> coefficient``.  Rational coefficients are
``gmpy2.mpq``; prime field coefficients are ints in ``[0, p)``.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple

import gmpy2
from gmpy2 import mpq

Monomial = Tuple[int, ...]

RESERVED_NAMES = ("t", "w")


class RingError(ValueError):
    pass


class ParseError(RingError):
    pass


class NotHomogeneous(RingError):
    pass


class ZeroPolynomial(RingError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p))


# ---------------------------------------------------------------- orders


class TermOrder:
    """A monomial order given by a sort key on exponent tuples.

    Larger key means larger monomial.  Supported kinds:

    * ``grevlex`` (degree, then reverse lexicographic on the last variable)
    * ``lex``
    * ``elim`` with ``split=k``: the first ``k`` variables are eliminated;
      each of the two groups is compared by (weighted) grevlex
    * ``weighted``: weight vector first, then the ``tie`` order

    An optional ``perm`` lists variable indices in priority order; the key is
    applied to the permuted exponent vector.  This is how arbitrary variable
    sets are eliminated and how a chosen variable is moved to the last slot.
    """

    __slots__ = ("kind", "split", "weights", "tie", "perm", "_key")

    def __init__(self, kind="grevlex", split=None, weights=None, tie="grevlex", perm=None):
        if kind not in ("grevlex", "lex", "elim", "weighted"):
            raise RingError(f"unknown order kind {kind!r}")
        if kind == "elim" and split is None:
            raise RingError("elimination order needs a split index")
        if kind == "weighted" and weights is None:
            raise RingError("weighted order needs weights")
        self.kind = kind
        self.split = split
        self.weights = tuple(weights) if weights is not None else None
        self.tie = tie
        self.perm = tuple(perm) if perm is not None else None
        self._key = self._build_key()

    @classmethod
    def grevlex(cls, perm=None):
        return cls("grevlex", perm=perm)

    @classmethod
    def lex(cls, perm=None):
        return cls("lex", perm=perm)

    @classmethod
    def elimination(cls, split, weights=None, perm=None):
        return cls("elim", split=split, weights=weights, perm=perm)

    @classmethod
    def weighted(cls, weights, tie="grevlex", perm=None):
        return cls("weighted", weights=weights, tie=tie, perm=perm)

    def _build_key(self):
        perm = self.perm
        w = self.weights

        def wgrevlex(e, ws):
            if ws is None:
                return (sum(e),) + tuple(-a for a in reversed(e))
            s = 0
            for a, b in zip(e, ws):
                s += a * b
            # the plain degree breaks ties so zero weights stay well-ordered
            return (s, sum(e)) + tuple(-a for a in reversed(e))

        if self.kind == "grevlex":
            def key(e):
                return wgrevlex(e, None)
        elif self.kind == "lex":
            def key(e):
                return e
        elif self.kind == "elim":
            k = self.split

            def key(e):
                if w is None:
                    return wgrevlex(e[:k], None) + wgrevlex(e[k:], None)
                return wgrevlex(e[:k], w[:k]) + wgrevlex(e[k:], w[k:])
        else:
            tie = self.tie

            def key(e):
                s = 0
                for a, b in zip(e, w):
                    s += a * b
                return (s,) + (wgrevlex(e, None) if tie == "grevlex" else tuple(e))

        if perm is None:
            return key
        return lambda e: key(tuple(e[i] for i in perm))

    def key(self, e: Monomial):
        return self._key(e)

    def __eq__(self, other):
        return (isinstance(other, TermOrder) and
                (self.kind, self.split, self.weights, self.tie, self.perm) ==
                (other.kind, other.split, other.weights, other.tie, other.perm))

    def __hash__(self):
        return hash((self.kind, self.split, self.weights, self.tie, self.perm))

    def __repr__(self):
        parts = [self.kind]
        if self.split is not None:
            parts.append(f"split={self.split}")
        if self.weights is not None:
            parts.append(f"weights={self.weights}")
        if self.perm is not None:
            parts.append(f"perm={self.perm}")
        return "TermOrder(" + ", ".join(parts) + ")"


GREVLEX = TermOrder.grevlex()


def compare_monomials(u: Sequence[int], v: Sequence[int], order: TermOrder = GREVLEX) -> int:
    """Return 1 if u > v, -1 if u < v, 0 if equal."""
    if len(u) != len(v):
        raise RingError("exponent vectors of different length")
    ku, kv = order.key(tuple(u)), order.key(tuple(v))
    return (ku > kv) - (ku < kv)


# ---------------------------------------------------------------- rings


class Ring:
    """Polynomial ring K[x_1 | ... | x_m] graded by variable blocks.

    ``blocks`` is a list of lists of variable names.  ``characteristic`` is 0
    for QQ or a prime p for GF(p).  ``relations`` optionally holds, for each
    block, a list of generator strings of the defining ideal of the factor.
    """

    def __init__(self, blocks, characteristic: int = 0, relations=None):
        if isinstance(blocks[0], str):
            blocks = [blocks]
        self.blocks = tuple(tuple(b) for b in blocks)
        names = [v for b in self.blocks for v in b]
        if len(set(names)) != len(names):
            raise RingError("variable names must be pairwise distinct")
        for v in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise RingError(f"bad variable name {v!r}")
        if characteristic and not _is_prime(characteristic):
            raise RingError(f"{characteristic} is not prime")
        self.characteristic = int(characteristic)
        self.p = self.characteristic
        self.variables = tuple(names)
        self.nvars = len(names)
        self._index = {v: i for i, v in enumerate(names)}
        offs = []
        k = 0
        for b in self.blocks:
            offs.append((k, k + len(b)))
            k += len(b)
        self.block_ranges = tuple(offs)
        self._var_block = tuple(bi for bi, (a, b) in enumerate(offs) for _ in range(a, b))
        self._relation_text = None
        self._relations = ()
        if relations:
            rel = [list(r) for r in relations]
            if len(rel) != len(self.blocks):
                raise RingError("one relation list per block is required")
            self._relation_text = tuple(tuple(r) for r in rel)
            polys = []
            for bi, gens in enumerate(rel):
                for g in gens:
                    f = g if isinstance(g, Poly) else parse_polynomial(g, self)
                    if f.is_zero():
                        continue
                    a, b = self.block_ranges[bi]
                    for e in f.terms:
                        if any(e[i] for i in range(self.nvars) if not a <= i < b):
                            raise RingError("relation uses variables outside its block")
                    polys.append(f)
            self._relations = tuple(polys)

    # -- descriptors
    @property
    def nblocks(self) -> int:
        return len(self.blocks)

    @property
    def relations(self):
        """Relation generators as polynomials (possibly empty)."""
        return self._relations

    @property
    def field(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"unknown variable {name!r}") from None

    def block_of(self, i: int) -> int:
        return self._var_block[i]

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.blocks == other.blocks and
                self.p == other.p and self._relations_key() == other._relations_key())

    def _relations_key(self):
        return tuple(frozenset(f.terms.items()) for f in self._relations)

    def __hash__(self):
        return hash((self.blocks, self.p))

    def __repr__(self):
        bl = " | ".join(",".join(b) for b in self.blocks)
        return f"Ring([{bl}], {self.field})"

    def without_relations(self) -> "Ring":
        if not self._relations:
            return self
        return Ring(self.blocks, self.p)

    def with_relations(self, relations) -> "Ring":
        return Ring(self.blocks, self.p, relations)

    def extend(self, *new_blocks, front=False) -> "Ring":
        """New ring with extra blocks appended (or prepended); relations dropped."""
        nb = [list(b) for b in new_blocks]
        blocks = nb + [list(b) for b in self.blocks] if front else [list(b) for b in self.blocks] + nb
        return Ring(blocks, self.p)

    # -- coefficients
    def coerce(self, c):
        """Convert an int / Fraction / mpq / string into a field element."""
        p = self.p
        if p:
            if isinstance(c, (Fraction,)) or type(c).__name__ == "mpq":
                num, den = int(c.numerator), int(c.denominator)
                if den % p == 0:
                    raise ZeroDivisionError("denominator divisible by the characteristic")
                return num * pow(den, -1, p) % p
            return int(c) % p
        if isinstance(c, Fraction):
            return mpq(c.numerator, c.denominator)
        return mpq(c)

    def inv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / c

    # -- constructors
    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.coerce(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name) -> "Poly":
        i = name if isinstance(name, int) else self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.coerce(1)})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e, c=1) -> "Poly":
        c = self.coerce(c)
        return Poly(self, {tuple(e): c} if c else {})

    def __call__(self, text) -> "Poly":
        return parse_polynomial(text, self)

    # -- grading
    def multi_degree_of(self, e: Monomial) -> Tuple[int, ...]:
        return tuple(sum(e[a:b]) for a, b in self.block_ranges)

    def monomials_of_degree(self, c) -> list:
        """All exponent tuples of multi-degree ``c`` (a tuple or an int for one block)."""
        if isinstance(c, int):
            c = (c,)
        c = tuple(c)
        if len(c) != self.nblocks:
            raise RingError("multi-degree length must equal the number of blocks")
        parts = [_compositions(d, b - a) for d, (a, b) in zip(c, self.block_ranges)]
        return [tuple(itertools.chain.from_iterable(t)) for t in itertools.product(*parts)]

    def dim_of_degree(self, c) -> int:
        if isinstance(c, int):
            c = (c,)
        out = 1
        for d, (a, b) in zip(c, self.block_ranges):
            if d < 0:
                return 0
            n = b - a
            out *= _binom(d + n - 1, n - 1)
        return out


def _binom(n, k):
    if k < 0 or n < k:
        return 0
    return int(gmpy2.comb(n, k))


@lru_cache(maxsize=None)
def _compositions(d: int, n: int):
    """Exponent tuples of length n and total degree d, in lex-descending order."""
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in _compositions(d - a, n - 1):
            out.append((a,) + rest)
    return tuple(out)


# ---------------------------------------------------------------- polynomials


class Poly:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Dict[Monomial, object]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_dict(cls, ring: Ring, data) -> "Poly":
        """Build from a mapping with arbitrary coefficient types; zeros dropped."""
        t = {}
        for e, c in data.items():
            e = tuple(int(a) for a in e)
            if len(e) != ring.nvars or any(a < 0 for a in e):
                raise RingError("bad exponent vector")
            c = ring.coerce(c)
            if c:
                c = ring.coerce(t.get(e, 0)) + c
                if ring.p:
                    c %= ring.p
                if c:
                    t[e] = c
                else:
                    t.pop(e, None)
        return cls(ring, t)

    # -- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name) -> int:
        i = name if isinstance(name, int) else self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def support_vars(self) -> set:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def leading(self, order: TermOrder = GREVLEX):
        """(exponent, coefficient) of the leading term."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def lm(self, order: TermOrder = GREVLEX) -> Monomial:
        return self.leading(order)[0]

    def sorted_terms(self, order: TermOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.ring.coerce(0))

    # -- arithmetic
    def _check(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "mpq":
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        if p:
            return Poly(self.ring, {e: (p - c) for e, c in self.terms.items()})
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        get = t.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        if p:
            t = {e: c % p for e, c in t.items() if c % p}
        else:
            t = {e: c for e, c in t.items() if c}
        return Poly(self.ring, t)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = self.ring.coerce(c) if not isinstance(c, int) or self.ring.p == 0 else c % self.ring.p
        if self.ring.p:
            p = self.ring.p
            return Poly(self.ring, {e: v * c % p for e, v in self.terms.items() if v * c % p})
        if not c:
            return self.ring.zero
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_monomial(self, m: Monomial, c=None) -> "Poly":
        t = {tuple(x + y for x, y in zip(e, m)): v for e, v in self.terms.items()}
        out = Poly(self.ring, t)
        return out.scale(c) if c is not None else out

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise RingError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self, order: TermOrder = GREVLEX) -> "Poly":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.inv(c))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "mpq":
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- calculus and substitution
    def diff(self, name) -> "Poly":
        i = name if isinstance(name, int) else self.ring.index(name)
        p = self.ring.p
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                v = c * e[i]
                if p:
                    v %= p
                if v:
                    f = list(e)
                    f[i] -= 1
                    t[tuple(f)] = v
        return Poly(self.ring, t)

    def subs(self, values: dict, ring: Ring = None) -> "Poly":
        """Substitute polynomials (or constants) for variables.

        ``values`` maps variable names or indices to Poly/constants of the
        target ring (``ring`` or self.ring).  Unlisted variables are kept and
        must exist in the target ring.
        """
        target = ring or self.ring
        src = self.ring
        images = []
        for i, v in enumerate(src.variables):
            val = values.get(v, values.get(i))
            if val is None:
                images.append(target.var(v))
            elif isinstance(val, Poly):
                images.append(val)
            else:
                images.append(target.const(val))
        return evaluate_poly(self, images, target)

    def change_ring(self, ring: Ring) -> "Poly":
        """Move into a ring that contains all variables actually used (by name)."""
        idx = []
        used = self.support_vars()
        for i, v in enumerate(self.ring.variables):
            if v in ring._index:
                idx.append(ring._index[v])
            elif i in used:
                raise RingError(f"variable {v} missing in target ring")
            else:
                idx.append(None)
        n = ring.nvars
        t = {}
        for e, c in self.terms.items():
            f = [0] * n
            for i, a in enumerate(e):
                if a:
                    f[idx[i]] = a
            t[tuple(f)] = ring.coerce(c) if ring.p != self.ring.p else c
        return Poly.from_dict(ring, t) if ring.p != self.ring.p else Poly(ring, t)

    def multi_degree(self):
        return multi_degree(self)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {self.ring.multi_degree_of(e) for e in self.terms}
        return len(degs) == 1

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_polynomial(self)


def evaluate_poly(f: Poly, images, target: Ring) -> Poly:
    """Substitute ``images[i]`` for the i-th variable of f (Horner-free, cached powers)."""
    cache = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] if k == 1 else power(i, k - 1) * images[i]
        return cache[key]

    out = target.zero
    acc: dict = {}
    p = target.p
    for e, c in f.terms.items():
        term = target.const(c) if target.p != f.ring.p else Poly(target, {(0,) * target.nvars: c})
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        for m, v in term.terms.items():
            acc[m] = acc.get(m, 0) + v
    if p:
        acc = {m: v % p for m, v in acc.items() if v % p}
    else:
        acc = {m: v for m, v in acc.items() if v}
    out = Poly(target, acc)
    return out


def evaluate_at(f: Poly, point: Sequence) -> object:
    """Evaluate f at a point given as field elements (ints mod p or mpq)."""
    p = f.ring.p
    total = 0
    for e, c in f.terms.items():
        v = c
        for x, a in zip(point, e):
            if a:
                v = v * (pow(x, a, p) if p else x ** a)
                if p:
                    v %= p
        total += v
    return total % p if p else total


def multi_degree(f: Poly) -> Tuple[int, ...]:
    """Common block-degree vector of all terms of f."""
    if not f.terms:
        raise ZeroPolynomial("zero polynomial has no multi-degree")
    degs = {f.ring.multi_degree_of(e) for e in f.terms}
    if len(degs) != 1:
        raise NotHomogeneous(f"{f} is not multi-homogeneous")
    return degs.pop()


# ---------------------------------------------------------------- printing


def _coeff_str(c, p):
    if p:
        c = int(c)
        if c > p // 2:
            c -= p
        return str(c)
    return str(c)


def format_polynomial(f: Poly, order: TermOrder = GREVLEX) -> str:
    """Canonical text: descending grevlex terms, '+'/'-' separators."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    p = f.ring.p
    pieces = []
    for e, c in f.sorted_terms(order):
        s = _coeff_str(c, p)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mon = "*".join(names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a)
        if mon:
            body = mon if s == "1" else f"{s}*{mon}"
        else:
            body = s
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^/()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, ring):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            kind, val = self.peek()
            raise ParseError(f"unexpected token {val!r} (implicit multiplication is not allowed)")
        return v

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if (kind, val) in (("op", "+"), ("op", "-")):
            self.take()
            sign = -1 if val == "-" else 1
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self):
        v = self.power()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                v = v * self.power()
            elif t == ("op", "/"):
                self.take()
                d = self.power()
                if not d.is_constant() or d.is_zero():
                    raise ParseError("division only by nonzero constants")
                v = v.scale(self.ring.inv(next(iter(d.terms.values()))))
            else:
                return v

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind == "op" and val == "-":
                raise ParseError("negative exponent")
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer literal")
            return base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}")
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        if (kind, val) == ("op", "-"):
            return -self.power()
        if val is None:
            raise ParseError("unexpected end of input")
        raise ParseError(f"unexpected token {val!r}")


def parse_polynomial(text: str, ring: Ring) -> Poly:
    """Parse ``text`` with integers, variables, + - * ^ and parentheses.

    Division by a nonzero integer constant is accepted so that printed
    rational coefficients round-trip.
    """
    if isinstance(text, Poly):
        return text
    return _Parser(_tokenize(str(text)), ring).parse()


def parse_polynomials(texts: Iterable[str], ring: Ring):
    return [parse_polynomial(t, ring) for t in texts]
