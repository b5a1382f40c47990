"""The action x_i -> x_i^k on H^j_m(R/a) and the vanishing criterion.

The action is tracked on a chamber graph: each chamber points to the chamber
of k times its representative.
"""
from moncoh import PolynomialRingSpec, SimplicialComplex, minimalize
from moncoh.lab import phi_action, check_vanishing_criterion, check_vanishing_equivalence

R1 = PolynomialRingSpec(1)
x2 = minimalize([(2,)], R1)

act = phi_action(x2, 2, 0)
for ix in act.grid.indices():
    c = act.grid.chamber(ix)
    print(c.describe(), "dim", act.dims[ix], "->", act.grid.chamber(act.edges[ix]).describe(),
          act.matrices[ix].tolist())
# 1 is fixed, x goes to x^2 = 0, so no power of the action is zero and H^1_(x^2) != 0
print("cycles:", act.cycles(), "nilpotency:", act.nilpotency_index())
for v in check_vanishing_criterion(x2, 2):
    print(v.to_json())

# square-free case, computed from the complex
pts = SimplicialComplex.from_facets(3, [[0], [1], [2]])
v = check_vanishing_equivalence(pts)
print(v.result, v.instance["nonvanishing"])

R3 = PolynomialRingSpec(3)
a = minimalize([(2, 1, 0), (0, 1, 1)], R3)
for v in check_vanishing_criterion(a, 2):
    print(v.instance["i"], v.instance["nilpotency_index"], v.instance["ha_vanishes"], v.result)
