"""Graded pieces of Ext, local cohomology and Tor for a few small ideals."""
from moncoh import PolynomialRingSpec, minimalize
from moncoh.cohomology import ext_table, ha_table, hm_table, tor_table, compare_tables, local_duality_mismatches

R = PolynomialRingSpec(2)
m = minimalize([(1, 0), (0, 1)], R)   # (x, y)
xy = minimalize([(1, 1)], R)          # (xy)

# R/(x,y) = K sits in degree 0, so Ext^2 is a single K in degree (-1,-1)
print(ext_table(m, 2).pretty())
print(hm_table(m, 0).pretty())

# the hypersurface xy: H^1_m lives on the two negative rays and at the origin
print(hm_table(xy, 1).pretty())
print(ha_table(xy, 1).pretty())

# Ext and H_m are dual to each other: alpha <-> -alpha-1
for i in range(3):
    print(i, compare_tables(ext_table(xy, i), hm_table(xy, 2 - i), "duality"))
print("duality mismatches:", local_duality_mismatches(xy))

# Tor of the dual module against R/(x)
x = minimalize([(1, 0)], R)
print(tor_table(m, x, 0).pretty())

# machine-readable form
print(ext_table(m, 2).to_json()["chambers"][:2])
