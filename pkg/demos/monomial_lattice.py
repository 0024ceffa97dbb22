"""Birationality of a monomial map by integer linear algebra.

For (x10*x20 : x11*x20 : x11*x21) on P^1 x P^1 the map is birational iff
each block's lattice system A·γ = e_{i,0} - e_{i,1} has an integer
solution. Hermite normal form decides this.
"""
from ratmaps import RationalMap, Ring, hermite_normal_form, is_birational_jacdual, saturate_irrelevant
from ratmaps.monomial import build_exponent_matrix, lattice_certificates, solve_lattice

R = Ring([["x10", "x11"], ["x20", "x21"]])
F = RationalMap(R, ["x10*x20", "x11*x20", "x11*x21"])
A = build_exponent_matrix(F)
print("exponent matrix (last row all ones):")
for row in A:
    print("  ", row)

H, V, U = hermite_normal_form(A)
print("\nHermite normal form H = A·V:")
for row in H:
    print("  ", row)

for i in (1, 2):
    print(f"block {i}: γ =", solve_lattice(A, i))
print("certificates:", lattice_certificates(F))
print("Jacobian dual agrees:", is_birational_jacdual(F).verdict)

print("\nsaturated base ideal:", [str(g) for g in saturate_irrelevant(F.base_ideal()).gb().basis])

G = RationalMap(R, ["x10^2*x20^2", "x11^2*x20^2", "x11^2*x21^2"])
print("\nsquaring every exponent: block 1 solution", solve_lattice(build_exponent_matrix(G), 1),
      "-> not birational")
