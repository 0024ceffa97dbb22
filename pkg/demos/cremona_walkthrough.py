"""The quadratic Cremona involution, end to end.

(x0 : x1 : x2) -> (x1*x2 : x0*x2 : x0*x1) blows up the three coordinate
points and contracts the lines joining them. It is its own inverse.
"""
from ratmaps import RationalMap, Ring, is_birational_jacdual, rees_ideal, sym_ideal, syzygies
from ratmaps.degree import base_locus_report, degree

R = Ring([["x0", "x1", "x2"]])
F = RationalMap(R, ["x1*x2", "x0*x2", "x0*x1"])
print("map:", F)

S = syzygies(F.forms)
print("\nsyzygies of the forms (columns):")
for col, deg in zip(S.columns, S.degrees):
    print("  ", [str(c) for c in col], "degree", deg)

rees, sym = rees_ideal(F), sym_ideal(F)
print("\nRees ideal generators:")
for g, b in zip(rees.gens, rees.bidegrees):
    print("  ", g, "bidegree", b)
print("linear type (Rees = Sym):", rees.same_ideal(sym))

a = is_birational_jacdual(F)
print("\nJacobian dual ranks:", a.ranks, "->", a.verdict)
print("inverse:", [str(g) for g in a.inverse[0]])

b = base_locus_report(F)
print("\nbase locus: dim", b.dim_B, " deg", b.deg_B, " e", b.e_B)
r = degree(F)
print("degree:", r.deg_F, "methods", r.cross_checks)
print("check: d^2 * deg X = deg Y * deg F + e(B):", 4 * r.deg_X, "=", r.deg_Y * r.deg_F + b.e_B)
