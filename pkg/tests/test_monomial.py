import itertools
import json

import pytest
from hypothesis import given, strategies as st

from moncoh import (
    InputError, MonomialIdeal, PolynomialRingSpec, SimplicialComplex, alexander_dual, all_complexes,
    bracket_power, complex_of, ideal_from_json, is_squarefree, minimalize, radical, stanley_reisner,
)
from moncoh.monomial import divides, lcm

from conftest import complexes, ideals

R2 = PolynomialRingSpec(2)
R3 = PolynomialRingSpec(3)


def brute_faces(delta):
    n = delta.vertex_count
    return {frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(n), r) if delta.contains(s)}


def brute_alexander(delta):
    # faces of the dual: complements of non-faces
    n = delta.vertex_count
    everything = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(n), r)]
    faces = brute_faces(delta)
    return {frozenset(range(n)) - s for s in everything if s not in faces}


def test_minimal_generators_are_sorted_and_reduced():
    a = minimalize([(1, 1), (2, 1), (0, 3), (1, 1)], R2)
    assert a.generators == ((0, 3), (1, 1))
    assert str(a) == "(x2^3, x1*x2)"


def test_zero_and_unit_ideals():
    zero = MonomialIdeal.from_generators(R2, [])
    unit = minimalize([(0, 0), (1, 0)], R2)
    assert zero.is_zero() and not zero.is_unit()
    assert unit.is_unit() and unit.generators == ((0, 0),)
    assert unit.contains((5, 7)) and not zero.contains((0, 0))


def test_membership():
    a = minimalize([(2, 0), (0, 1)], R2)
    assert a.contains((3, 0)) and a.contains((1, 1))
    assert not a.contains((1, 0))


def test_lcm_divides():
    assert lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)
    assert divides((1, 0), (1, 4)) and not divides((2, 0), (1, 4))


def test_bracket_power_example():
    a = minimalize([(1, 1, 0), (0, 1, 1)], R3)
    assert bracket_power(a, 3).generators == ((0, 3, 3), (3, 3, 0))
    assert bracket_power(a, (1, 2, 3)).generators == ((0, 2, 3), (1, 2, 0))


def test_m_primary():
    assert minimalize([(2, 0), (1, 1), (0, 3)], R2).is_m_primary()
    assert not minimalize([(1, 1)], R2).is_m_primary()


def test_json_roundtrip():
    a = minimalize([(2, 0), (0, 1)], R2)
    assert ideal_from_json(a.dumps()) == a
    assert ideal_from_json(json.loads(a.dumps())) == a


@pytest.mark.parametrize("text", [
    "{not json",
    "[1, 2]",
    '{"num_vars": 2, "field_char": 0}',
    '{"num_vars": 2, "field_char": 0, "generators": [[1, 0, 0]]}',
    '{"num_vars": 2, "field_char": 0, "generators": [[-1, 0]]}',
    '{"num_vars": 2, "field_char": 6, "generators": [[1, 0]]}',
    '{"num_vars": "two", "field_char": 0, "generators": []}',
])
def test_malformed_json_rejected(text):
    with pytest.raises(InputError):
        ideal_from_json(text)


def test_radical_and_squarefree():
    a = minimalize([(2, 0, 1), (0, 3, 0)], R3)
    assert radical(a).generators == ((0, 1, 0), (1, 0, 1))
    assert not is_squarefree(a) and is_squarefree(radical(a))


def test_complex_counts_match_dedekind_numbers():
    # Dedekind numbers 6, 20, 168 count antichains including the empty one (the void complex)
    assert [len(all_complexes(n)) for n in (2, 3, 4)] == [5, 19, 167]


def test_stanley_reisner_triangle_boundary():
    tri = SimplicialComplex.from_facets(3, [[0, 1], [1, 2], [0, 2]])
    assert stanley_reisner(tri).generators == ((1, 1, 1),)
    assert complex_of(stanley_reisner(tri)) == tri


def test_stanley_reisner_isolated_points():
    pts = SimplicialComplex.from_facets(3, [[0], [1], [2]])
    assert stanley_reisner(pts).generators == ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def test_alexander_dual_small_cases():
    tri = SimplicialComplex.from_facets(3, [[0, 1], [1, 2], [0, 2]])
    assert alexander_dual(tri).sorted_facets() == [[]]
    pts = SimplicialComplex.from_facets(3, [[0], [1], [2]])
    assert alexander_dual(pts) == pts
    path = SimplicialComplex.from_facets(3, [[0, 1], [1, 2]])
    assert alexander_dual(path).sorted_facets() == [[1]]


def test_alexander_dual_rejects_simplex():
    with pytest.raises(InputError):
        alexander_dual(SimplicialComplex.simplex(3))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alexander_dual_brute_force(n):
    for delta in all_complexes(n):
        if not delta.is_proper():
            continue
        assert brute_faces(alexander_dual(delta)) == brute_alexander(delta)


def test_link():
    delta = SimplicialComplex.from_facets(4, [[0, 1, 2], [2, 3]])
    assert delta.link([2]).sorted_facets() == [[3], [0, 1]]
    assert delta.link([0, 3]).is_void()


def test_vertex_out_of_range():
    with pytest.raises(InputError):
        SimplicialComplex.from_facets(2, [[0, 2]])


# -- properties -----------------------------------------------------------------


@given(ideals(), st.integers(1, 3), st.integers(1, 3))
def test_bracket_power_composes(a, k, l):
    assert bracket_power(bracket_power(a, k), l) == bracket_power(a, k * l)


@given(ideals(max_gens=5))
def test_minimalize_idempotent_and_permutation_invariant(a):
    assert minimalize(a.generators, a.ring) == a
    assert minimalize(list(reversed(a.generators)), a.ring) == a
    for g, h in itertools.permutations(a.generators, 2):
        assert not divides(g, h)


@given(complexes())
def test_stanley_reisner_inverse(delta):
    if delta.is_void():
        return
    assert complex_of(stanley_reisner(delta)) == delta


@given(complexes(max_vertices=5))
def test_alexander_dual_involution(delta):
    if delta.is_proper() and alexander_dual(delta).is_proper():
        assert alexander_dual(alexander_dual(delta)) == delta


@given(ideals())
def test_radical_idempotent(a):
    assert radical(radical(a)) == radical(a)
    assert all(radical(a).contains(g) for g in a.generators)


def test_field_char_defaults_to_zero():
    assert ideal_from_json('{"num_vars": 2, "generators": [[1, 0]]}').ring.field_char == 0
