"""Coefficients in R/b break injectivity even for (x^2, y^2).

H^2_m(R/(x)) is zero because R/(x) has dimension 1, yet Ext^2(R/(x^2, y^2), R/(x))
is not, so Ext^2(R/a_t, R/(x)) cannot inject into the limit.
"""
from moncoh import PolynomialRingSpec, minimalize
from moncoh.cohomology import ext_table, hm_table, tor_table, compare_tables
from moncoh.lab import check_example_3_2, check_ext_tor

R = PolynomialRingSpec(2)
x = minimalize([(1, 0)], R)
a = minimalize([(2, 0), (0, 2)], R)

print(hm_table(x, 2).is_zero())
print(ext_table(a, 2, coeff=x).pretty())

# the same numbers through Tor of the dual module
for i in range(3):
    print(i, compare_tables(ext_table(a, i, coeff=x), tor_table(a, x, 2 - i)))
print(check_ext_tor(a, x).result)

for d in (2, 3):
    v = check_example_3_2(d, t=1)
    print(d, v.result, v.witness)
