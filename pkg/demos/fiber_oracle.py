"""The finite-field fiber oracle in detail.

Pick a random source point a over GF(p), solve F(x) = F(a) away from the
base locus and count the solutions. The modal count over several trials
is the degree.
"""
from ratmaps import RationalMap, Ring
from ratmaps.degree import fiber_oracle

R = Ring([["x0", "x1", "x2"]], 101)
for forms in (["x0^2", "x1^2", "x2^2"], ["x0^3", "x1^3", "x2^3"],
              ["x1*x2", "x0*x2", "x0*x1"], ["x0^2 + x1*x2", "x1^2", "x2^2 + x0*x1"]):
    F = RationalMap(R, forms)
    deg, info = fiber_oracle(F, trials=5, seed=1, details=True)
    print(f"{str(forms):40} degree {deg}  {info}")
