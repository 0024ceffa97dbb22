"""Rees equations of a plane map whose base ideal has a linear syzygy.

Hilbert-Burch gives the 3x2 syzygy matrix; the linear column yields g1,
the other column g2. Splitting along (x0, x1) and taking determinants
produces the chain F1, F2, ... The map is birational exactly when the
chain reaches length d - 2.
"""
from ratmaps import Ideal, Ring, hilbert_burch, is_birational_mu1, normalize_mu1, sylvester_chain
from ratmaps import rees_equations_mu1
from ratmaps.degree import fiber_oracle
from ratmaps.maps import RationalMap

R = Ring([["x0", "x1", "x2"]])
forms = ["-x0^2*x1", "-x0^3", "x2*(x0^2 + x1^2)"]
hb = normalize_mu1(hilbert_burch(Ideal(R, forms))).hb
print("μ =", hb.mu, " d =", hb.d, " ht I1(φ) =", hb.ht_I1)
print("φ =")
for row in hb.phi:
    print("  ", [str(e) for e in row])

chain = sylvester_chain(hb)
print("\ng1 =", chain.g1)
print("g2 =", chain.g2)
for i, (f, b) in enumerate(zip(chain.forms, chain.bidegrees), start=1):
    print(f"F{i} = {f}   bidegree {b}")
print(f"chain length m = {chain.m} (d - 2 = {hb.d - 2})")

eqs = rees_equations_mu1(hb)
print("\nRees ideal generated by g1, g2 and the chain; bidegrees", eqs.bidegrees)
v = is_birational_mu1(Ideal(R, forms))
print("birational:", v.birational, " oracle degree:", fiber_oracle(RationalMap(R, forms).reduce_mod(101)))
