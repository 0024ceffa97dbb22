"""Rational maps given by forms of a common multi-degree."""
from __future__ import annotations

from typing import Optional, Sequence

from .groebner import Ideal
from .ring import Poly, Ring, RingError, multi_degree, parse_polynomial


class MapError(ValueError):
    pass


class RationalMap:
    """F = (f_0 : … : f_s) from X_1×…×X_m (inside a product of projective spaces) to P^s."""

    def __init__(self, ring: Ring, forms: Sequence, target_names: Optional[Sequence[str]] = None):
        fs = [f if isinstance(f, Poly) else parse_polynomial(f, ring) for f in forms]
        if len(fs) < 2:
            raise MapError("a rational map needs at least two forms")
        nz = [f for f in fs if f.terms]
        if not nz:
            raise MapError("all forms are zero")
        degs = {multi_degree(f) for f in nz}
        if len(degs) != 1:
            raise MapError("forms must share one multi-degree")
        self.ring = ring
        self.forms = fs
        self.degree = degs.pop()
        if target_names is None:
            target_names = [f"y{i}" for i in range(len(fs))]
        if len(target_names) != len(fs):
            raise MapError("one target name per form")
        clash = set(target_names) & set(ring.variables)
        if clash:
            raise RingError(f"target names clash with source variables: {sorted(clash)}")
        self.target_names = list(target_names)

    @classmethod
    def from_strings(cls, blocks, forms, characteristic=0, relations=None):
        return cls(Ring(blocks, characteristic, relations), forms)

    # -- shape
    @property
    def s(self) -> int:
        return len(self.forms) - 1

    @property
    def m(self) -> int:
        return self.ring.nblocks

    @property
    def r(self):
        """Ambient projective dimensions r_i."""
        return [len(b) - 1 for b in self.ring.blocks]

    @property
    def d(self):
        return self.degree

    def source_dims(self):
        from .hilbert import block_dims_and_degrees
        if not self.ring.relations:
            return self.r
        return block_dims_and_degrees(self.ring)[0]

    @property
    def delta(self) -> int:
        return sum(self.source_dims())

    def base_ideal(self) -> Ideal:
        return Ideal(self.ring, [f for f in self.forms if f.terms])

    def is_monomial(self) -> bool:
        return all(len(f.terms) == 1 for f in self.forms)

    def target_ring(self) -> Ring:
        return Ring([self.target_names], self.ring.p)

    def image_ideal(self) -> Ideal:
        from .groebner import ring_map_kernel
        if not hasattr(self, "_image"):
            self._image = ring_map_kernel(self.forms, None, self.target_names)
        return self._image

    def evaluate(self, point):
        from .ring import evaluate_at
        return [evaluate_at(f, point) for f in self.forms]

    def reduce_mod(self, p: int) -> "RationalMap":
        """The same map with coefficients reduced modulo p."""
        rel = None
        if self.ring.relations:
            rel = [[str(r) for r in self.ring.relations if self._block_of_relation(r) == b]
                   for b in range(self.m)]
        R = Ring([list(b) for b in self.ring.blocks], p, rel)
        return RationalMap(R, [Poly.from_dict(R, f.terms) for f in self.forms], self.target_names)

    def _block_of_relation(self, r):
        i = min(r.support_vars())
        return self.ring.block_of(i)

    def __repr__(self):
        return f"RationalMap({self.ring}, [{', '.join(str(f) for f in self.forms)}])"
