"""Maps Ext^i(R/a^[k], R) -> Ext^i(R/a^[2k], R) along bracket powers.

Square-free ideals give injective maps in every degree; an ideal with an
embedded component does not.
"""
from moncoh import PolynomialRingSpec, minimalize, bracket_power
from moncoh.cohomology import ext_chain_map, ext_table, ha_table
from moncoh.lab import check_injectivity_chain

R3 = PolynomialRingSpec(3)
tri = minimalize([(1, 1, 0), (1, 0, 1), (0, 1, 1)], R3)   # three points in P^2
print(tri, "->", bracket_power(tri, 2))

f = ext_chain_map(tri, 1, 2, 2)
for chamber, mat in f.entries():
    if mat.cols:
        print(chamber.describe(), mat.tolist())

for v in check_injectivity_chain(tri, 2, t_max=1):
    print(v.instance["t"], v.instance["i"], v.result)

# (x^2, xy) = (x) cap (x^2, y): Ext^2 is nonzero but H^2_a(R) = 0
R2 = PolynomialRingSpec(2)
a = minimalize([(2, 0), (1, 1)], R2)
print(ext_table(a, 2).pretty())
print("H^2_a zero:", ha_table(a, 2).is_zero())
for v in check_injectivity_chain(a, 2, t_max=0):
    if v.result == "fails":
        print("i =", v.instance["i"], "witness", v.witness, "guaranteed:", v.guaranteed)
