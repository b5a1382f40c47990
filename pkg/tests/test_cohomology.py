import json

import pytest
from hypothesis import given, strategies as st

from moncoh import (
    InputError, MonomialIdeal, PolynomialRingSpec, SimplicialComplex, all_complexes, bracket_power,
    minimalize, radical, stanley_reisner,
)
from moncoh.cohomology import (
    compare_tables, depth, ext_chain_map, ext_table, ext_tables, ha_stabilization, ha_table, ha_tables,
    hm_table, hm_tables, hochster_table, local_duality_mismatches, reduced_cohomology, tor_table,
)

from conftest import alphas, ideals

R1 = PolynomialRingSpec(1)
R2 = PolynomialRingSpec(2)
R3 = PolynomialRingSpec(3)
M2 = minimalize([(1, 0), (0, 1)], R2)
XY = minimalize([(1, 1)], R2)
TRI = minimalize([(1, 1, 0), (1, 0, 1), (0, 1, 1)], R3)


def nonzero(table):
    return [(c.intervals, n) for c, n in table.nonzero()]


def test_ext_top_of_maximal_ideal():
    assert nonzero(ext_table(M2, 2)) == [(((-1, -1), (-1, -1)), 1)]
    assert ext_table(M2, 0).is_zero() and ext_table(M2, 1).is_zero()


def test_ext_zero_vanishes_for_proper_ideals():
    for a in (M2, XY, TRI, minimalize([(2, 0), (1, 1)], R2)):
        assert ext_table(a, 0).is_zero()


def test_ext_of_principal_is_shifted_quotient():
    t = ext_table(XY, 1)
    for alpha in [(-1, -1), (-1, 0), (-1, 5), (3, -1), (0, 0), (-2, -1), (0, -2)]:
        shifted = (alpha[0] + 1, alpha[1] + 1)
        expected = int(min(shifted) >= 0 and not XY.contains(shifted))
        assert t.dim_at(alpha) == expected


def test_ext_one_variable_square():
    assert nonzero(ext_table(minimalize([(2,)], R1), 1)) == [(((-2, -1),), 1)]


def test_hm_of_residue_field():
    assert nonzero(hm_table(M2, 0)) == [(((0, 0), (0, 0)), 1)]


def test_hm_of_hypersurface():
    t = hm_table(XY, 1)
    assert t.dim_at((0, 0)) == 1
    assert t.dim_at((-3, 0)) == 1 and t.dim_at((0, -3)) == 1
    assert t.dim_at((-1, -1)) == 0
    assert hm_table(XY, 0).is_zero() and hm_table(XY, 2).is_zero()


def test_hm_unit_ideal_is_zero():
    unit = minimalize([(0, 0)], R2)
    assert all(hm_table(unit, j).is_zero() for j in range(3))


def test_ha_maximal_ideal():
    assert nonzero(ha_table(M2, 2)) == [(((None, -1), (None, -1)), 1)]
    assert ha_table(M2, 0).is_zero() and ha_table(M2, 1).is_zero()


def test_ha_triangle():
    assert not ha_table(TRI, 2).is_zero()
    assert ha_table(TRI, 3).is_zero()


def test_ha_zero_ideal_is_torsion_free_part():
    zero = MonomialIdeal.from_generators(R2, [])
    h0 = ha_table(zero, 0)
    assert h0.dim_at((0, 0)) == 1 and h0.dim_at((4, 1)) == 1 and h0.dim_at((-1, 0)) == 0
    assert ha_table(zero, 1).is_zero()


def test_depth_values():
    assert depth(M2) == 2
    assert depth(TRI) == 2
    assert depth(XY) == 1
    assert depth(minimalize([(0, 0)], R2)) is None


def test_hochster_two_points():
    pts = SimplicialComplex.from_facets(2, [[0], [1]])
    assert reduced_cohomology(pts) == {-1: 0, 0: 1}
    t = hochster_table(pts, 1)
    assert t.dim_at((0, 0)) == 1 and t.dim_at((-2, 0)) == 1
    assert t.dim_at((-1, -1)) == 0
    assert compare_tables(t, hm_table(stanley_reisner(pts), 1)) == []


def test_tor_examples():
    x = minimalize([(1, 0)], R2)
    assert nonzero(tor_table(M2, x, 0)) == [(((-1, -1), (-1, -1)), 1)]
    zero = MonomialIdeal.from_generators(R2, [])
    assert compare_tables(tor_table(M2, zero, 0), ext_table(M2, 2)) == []
    assert tor_table(M2, zero, 1).is_zero() and tor_table(M2, zero, 2).is_zero()


def test_tor_needs_m_primary():
    with pytest.raises(InputError):
        tor_table(XY, M2, 0)


def test_ext_tor_identity_small():
    a = minimalize([(2, 0), (0, 1)], R2)
    b = minimalize([(0, 1)], R2)
    for i in range(3):
        assert compare_tables(ext_table(a, i, coeff=b), tor_table(a, b, 2 - i)) == []


def test_chain_map_injective_examples():
    assert ext_chain_map(minimalize([(1,)], R1), 1, 2, 1).non_injective() == []
    assert ext_chain_map(M2, 1, 2, 2).non_injective() == []
    assert ext_chain_map(TRI, 1, 2, 2).non_injective() == []


def test_non_squarefree_map_can_fail_injectivity():
    # (x^2, xy) has an embedded m-primary component: Ext^2 = K at (-2, -1) while H^2_a(R) = 0
    a = minimalize([(2, 0), (1, 1)], R2)
    assert nonzero(ext_table(a, 2)) == [(((-2, -2), (-1, -1)), 1)]
    assert ha_table(a, 2).is_zero()
    bad = ext_chain_map(a, 1, 2, 2).non_injective()
    assert [c.rep for c, _ in bad] == [(-2, -1)]
    assert ext_chain_map(a, 1, 2, 1).non_injective() == []


@pytest.mark.parametrize("a,i", [(M2, 2), (XY, 1), (TRI, 2)])
def test_stabilization_immediate_for_squarefree(a, i):
    s = ha_stabilization(a, i)
    assert s.stabilized and s.T == (1,) * a.num_vars
    assert s.map is not None


def test_stabilization_triangle_window_three():
    s = ha_stabilization(TRI, 2, window=3)
    assert s.stabilized and s.window == 3


def test_table_json_shape():
    obj = ext_table(M2, 2).to_json()
    assert obj["kind"] == "Ext" and obj["i"] == 2
    assert {"intervals", "rep", "dim"} == set(obj["chambers"][0])
    assert obj["chambers"][0]["intervals"][0][0] is None
    assert json.loads(json.dumps(obj)) == obj


def test_pretty_table():
    text = ext_table(M2, 2).pretty()
    assert "a1=-1, a2=-1" in text


def test_hochster_matches_cech_three_vertices():
    for delta in all_complexes(3):
        a = stanley_reisner(delta)
        for j in range(4):
            assert compare_tables(hochster_table(delta, j), hm_table(a, j)) == []


# -- properties -------------------------------------------------------------------


@given(ideals(max_vars=3, max_exp=3))
def test_local_duality(b):
    assert local_duality_mismatches(b) == []


@given(ideals(max_vars=3, max_exp=3))
def test_radical_invariance(a):
    r = radical(a)
    for i in range(a.num_vars + 1):
        assert compare_tables(ha_table(a, i), ha_table(r, i)) == []


@given(ideals(max_vars=3), st.integers(2, 3))
def test_radical_invariance_under_bracket(a, k):
    assert radical(bracket_power(a, k)) == radical(a)


@given(ideals(max_vars=3, max_exp=2), alphas(3))
def test_ha_depends_on_sign_pattern(a, alpha):
    alpha = alpha[:a.num_vars]
    signs = tuple(-1 if x < 0 else 0 for x in alpha)
    for i in range(a.num_vars + 1):
        assert ha_table(a, i).dim_at(alpha) == ha_table(a, i).dim_at(signs)


@given(ideals(max_vars=3, max_exp=2, max_gens=4))
def test_vanishing_ranges(a):
    d = a.num_vars
    for i, t in ha_tables(a).items():
        if i > d or i > len(a.generators):
            assert t.is_zero()
    for j, t in hm_tables(a).items():
        if j > d:
            assert t.is_zero()


@given(ideals(max_vars=2, max_exp=2, max_gens=3))
def test_chain_maps_functorial(a):
    d = a.num_vars
    for i in range(d + 1):
        f12 = ext_chain_map(a, 1, 2, i)
        f24 = ext_chain_map(a, 2, 4, i)
        f14 = ext_chain_map(a, 1, 4, i)
        grid = f14.grid.refine(f12.grid, f24.grid)
        for ch in grid.chambers():
            assert f24.matrix_at(ch.rep) @ f12.matrix_at(ch.rep) == f14.matrix_at(ch.rep)


@given(ideals(max_vars=3, max_exp=2))
def test_depth_is_first_nonvanishing(a):
    dp = depth(a)
    if dp is None:
        return
    tables = ext_tables(a)
    assert not tables[dp].is_zero()
    assert all(tables[i].is_zero() for i in range(dp) if i in tables)
    assert dp <= max(1, len(a.generators)) or a.is_zero()
