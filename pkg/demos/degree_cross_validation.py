"""Three independent ways to compute the degree of a rational map.

limit:   multiplicity of the saturated special fiber ring over deg Y
formula: d^δ·deg X = deg Y·deg F + e(B) when the base locus is finite
oracle:  count preimages of a random point over GF(101)
"""
import time

from ratmaps import RationalMap, Ring
from ratmaps.degree import base_locus_report, degree_via_formula, degree_via_limit, fiber_oracle

R = Ring([["x0", "x1", "x2"]])
CASES = {
    "identity": ["x0", "x1", "x2"],
    "Cremona": ["x1*x2", "x0*x2", "x0*x1"],
    "squares": ["x0^2", "x1^2", "x2^2"],
    "cubes": ["x0^3", "x1^3", "x2^3"],
    "cubic with a linear syzygy": ["-x0^2*x1", "-x0^3", "x2*(x0^2 + x1^2)"],
}

print(f"{'map':30} {'limit':>6} {'formula':>8} {'oracle':>7} {'e(B)':>5} {'time':>7}")
for name, forms in CASES.items():
    t = time.perf_counter()
    F = RationalMap(R, forms)
    lim = degree_via_limit(F).deg_F
    base = base_locus_report(F)
    form = degree_via_formula(F, base=base).deg_F
    orc = fiber_oracle(F.reduce_mod(101))
    print(f"{name:30} {lim:>6} {form:>8} {orc:>7} {base.e_B:>5} {time.perf_counter() - t:>6.2f}s")
