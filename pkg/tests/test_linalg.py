from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moncoh import (
    ChainMap, ComplexError, ExactMatrix, FieldSpec, FiniteComplex, InputError,
    cohomology_dim, image_basis, induced_map_on_cohomology, induced_rank, kernel_basis, rank, solve,
)
from moncoh.complexes import strand_at, dual_complex, taylor_complex
from moncoh import PolynomialRingSpec, minimalize

Q = FieldSpec(0)
F2 = FieldSpec(2)
F5 = FieldSpec(5)


def M(rows, fld=Q):
    return ExactMatrix.from_rows(fld, rows)


def test_identity_rank_and_kernel():
    i3 = ExactMatrix.identity(Q, 3)
    assert rank(i3) == 3
    assert kernel_basis(i3).cols == 0


def test_zero_matrix_kernel_is_everything():
    z = ExactMatrix.zeros(Q, 2, 3)
    assert rank(z) == 0
    assert kernel_basis(z) == ExactMatrix.identity(Q, 3)


def test_proportional_rows():
    m = M([[1, 2], [2, 4]])
    assert rank(m) == 1
    k = kernel_basis(m)
    assert k.cols == 1
    # spanned by (2, -1) up to scaling
    v = k.columns()[0]
    assert v[0] == -2 * v[1]


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(M(rows)) == 2
    assert rank(M(rows, F2)) == 1


def test_rationals_stay_exact():
    m = M([[Fraction(1, 3), Fraction(1, 6)], [1, Fraction(1, 2)]])
    assert rank(m) == 1
    x = solve(M([[3, 1], [1, 2]]), [1, 0])
    assert x == (Fraction(2, 5), Fraction(-1, 5))


def test_solve_inconsistent():
    assert solve(M([[1, 1], [2, 2]]), [1, 3]) is None


def test_gfp_inverse():
    assert F5.inv(2) == 3
    with pytest.raises(InputError):
        FieldSpec(4)


def test_image_basis_dimension():
    m = M([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert image_basis(m).cols == 2


def test_identity_complex_is_acyclic():
    c = FiniteComplex(Q, (1, 1), (M([[1]]),))
    assert c.cohomology_dims() == {0: 0, 1: 0}


def test_lone_term():
    c = FiniteComplex(Q, (1,), (), start=3)
    assert cohomology_dim(c, 3) == 1
    assert cohomology_dim(c, 2) == 0


def test_dual_koszul_strand():
    # Hom(Koszul(x, y), R) at degree (-1, -1): only the top summand survives
    R2 = PolynomialRingSpec(2)
    m = minimalize([(1, 0), (0, 1)], R2)
    s = strand_at(dual_complex(taylor_complex(m)), (-1, -1))
    assert s.complex.dims == (0, 0, 1)
    assert s.complex.cohomology_dims() == {0: 0, 1: 0, 2: 1}


def test_koszul_strand_at_top_degree():
    # Koszul(x, y) in degree (1, 1): K <- K^2 <- K, exact
    R2 = PolynomialRingSpec(2)
    m = minimalize([(1, 0), (0, 1)], R2)
    s = strand_at(taylor_complex(m), (1, 1))
    assert sorted(s.complex.dims) == [1, 1, 2]
    assert set(s.complex.cohomology_dims().values()) == {0}


def test_bad_complex_shapes_rejected():
    with pytest.raises(ComplexError):
        FiniteComplex(Q, (1, 2), (M([[1]]),))


def test_d_squared_violation_detected():
    c = FiniteComplex(Q, (1, 1, 1), (M([[1]]), M([[1]])))
    with pytest.raises(ComplexError):
        c.check()


def test_induced_identity_and_zero():
    c = FiniteComplex(Q, (2, 1), (M([[1, 0]]),))
    ident = ChainMap(c, c, {0: ExactMatrix.identity(Q, 2), 1: ExactMatrix.identity(Q, 1)})
    assert induced_map_on_cohomology(ident, 0) == ExactMatrix.identity(Q, 1)
    zero = ChainMap(c, c, {})
    assert induced_map_on_cohomology(zero, 0).is_zero()


def test_non_commuting_square_rejected():
    c = FiniteComplex(Q, (1, 1), (M([[1]]),))
    bad = ChainMap(c, c, {0: M([[1]]), 1: M([[0]])})
    with pytest.raises(InputError, match="spot 0"):
        induced_map_on_cohomology(bad, 0)


def test_principal_comparison_map():
    # Ext^1(R/(x), R) -> Ext^1(R/(x^2), R) at degree -1 in K[x]
    from moncoh.cohomology import ext_chain_map
    R1 = PolynomialRingSpec(1)
    m = ext_chain_map(minimalize([(1,)], R1), 1, 2, 1)
    mat = m.matrix_at((-1,))
    assert mat.shape == (1, 1) and not mat.is_zero()


def test_homotopic_maps_induce_same_map():
    # C: K -> K^2 with H^1 = K; f = id and g = id + dh + hd for h = (2, 3): C^1 -> C^0
    c = FiniteComplex(Q, (1, 2), (M([[1], [0]]),))
    f = ChainMap(c, c, {0: M([[1]]), 1: ExactMatrix.identity(Q, 2)})
    g = ChainMap(c, c, {0: M([[3]]), 1: M([[3, 3], [0, 1]])})
    g.check()
    assert induced_map_on_cohomology(f, 1) == induced_map_on_cohomology(g, 1)
    assert induced_rank(g, 1) == 1 and induced_rank(g, 0) == 0


# -- properties -------------------------------------------------------------------

primes = st.sampled_from([0, 2, 3, 5, 7])


@st.composite
def matrices(draw, max_dim=5):
    p = draw(primes)
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    return ExactMatrix.from_rows(FieldSpec(p), rows, cols=c)


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_kernel_annihilates_and_rank_nullity(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert rank(m) + k.cols == m.cols
    assert rank(k) == k.cols


@given(matrices())
def test_solve_on_image(m):
    rhs = m.apply([1] * m.cols)
    x = solve(m, rhs)
    assert x is not None and m.apply(x) == rhs


@given(matrices(), st.randoms())
def test_permutation_invariance(m, rnd):
    rows = list(m.data)
    rnd.shuffle(rows)
    perm = list(range(m.cols))
    rnd.shuffle(perm)
    shuffled = ExactMatrix.from_rows(m.field, [[r[j] for j in perm] for r in rows], cols=m.cols)
    assert rank(shuffled) == rank(m)


@given(matrices(max_dim=4))
def test_euler_characteristic(m):
    # two-term complex K^cols -> K^rows
    c = FiniteComplex(m.field, (m.cols, m.rows), (m,))
    h = c.cohomology_dims()
    assert h[0] - h[1] == c.euler_characteristic()
