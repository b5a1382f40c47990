"""Multigraded dimension tables for Ext, local cohomology and Tor.

Every table is a function from a :class:`ChamberGrid` to dimensions. Strand
cohomology only depends on which summands survive, so results are memoized on
survivor patterns; this is what keeps corpus sweeps cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .complexes import (
    CechComplexSpec,
    Chamber,
    ChamberGrid,
    GradedChainMap,
    GradedFreeComplex,
    cech_strand_from_survivors,
    cech_survivors,
    chamber_grid,
    comparison_chain_map,
    dual_chain_map,
    dual_complex,
    strand_chain_map,
    strand_from_survivors,
    survivors_at,
    taylor_complex,
    tensor_product,
)
from .linalg import ExactMatrix, FieldSpec, FiniteComplex, induced_map_on_cohomology, rank
from .monomial import (
    InputError,
    MonomialIdeal,
    SimplicialComplex,
    _as_vector,
    bracket_power,
    stanley_reisner,
)

KINDS = ("Ext", "Hm", "Ha", "Tor", "Hochster")


@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions of one graded module, constant on the chambers of ``grid``."""

    kind: str
    index: int
    grid: ChamberGrid
    dims: dict = field(repr=False)
    label: str = ""

    def dim_at(self, alpha) -> int:
        return self.dims[self.grid.index_of(alpha)]

    def entries(self) -> list:
        return [(self.grid.chamber(ix), self.dims[ix]) for ix in self.grid.indices()]

    def nonzero(self) -> list:
        return [(c, n) for c, n in self.entries() if n]

    def is_zero(self) -> bool:
        return not any(self.dims.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "i": self.index,
            "label": self.label,
            "chambers": [dict(c.to_json(), dim=n) for c, n in self.entries()],
        }

    def pretty(self, show_zero: bool = False) -> str:
        lines = [f"{self.kind}^{self.index} {self.label}".rstrip()]
        rows = self.entries() if show_zero else self.nonzero()
        if not rows:
            lines.append("  (zero in every chamber)")
        for c, n in rows:
            lines.append(f"  dim {n:>3}   {c.describe()}")
        return "\n".join(lines)


@dataclass(frozen=True)
class GradedModuleMap:
    """Per-chamber matrices of a degree-preserving map between two tables."""

    source: CohomologyTable
    target: CohomologyTable
    grid: ChamberGrid
    matrices: dict = field(repr=False)

    def matrix_at(self, alpha) -> ExactMatrix:
        return self.matrices[self.grid.index_of(alpha)]

    def entries(self) -> list:
        return [(self.grid.chamber(ix), self.matrices[ix]) for ix in self.grid.indices()]

    def is_injective_at(self, alpha) -> bool:
        m = self.matrix_at(alpha)
        return rank(m) == m.cols

    def non_injective(self) -> list:
        return [(c, m) for c, m in self.entries() if rank(m) != m.cols]

    def non_surjective(self) -> list:
        return [(c, m) for c, m in self.entries() if rank(m) != m.rows]


# -- strand evaluation with memoization -------------------------------------


def _free_dims(c: GradedFreeComplex, grid: ChamberGrid, coeff=None) -> dict:
    """``{chamber index: {spot: dim}}`` for a free complex."""
    memo = {}
    out = {}
    for ix in grid.indices():
        alpha = grid.chamber(ix).rep
        surv = survivors_at(c, alpha, coeff)
        if surv not in memo:
            memo[surv] = strand_from_survivors(c, alpha, surv).complex.cohomology_dims()
        out[ix] = memo[surv]
    return out


def _cech_dims(spec: CechComplexSpec, grid: ChamberGrid) -> dict:
    supports = spec.supports()
    memo = {}
    out = {}
    for ix in grid.indices():
        alpha = grid.chamber(ix).rep
        surv = cech_survivors(spec, alpha, supports)
        if surv not in memo:
            memo[surv] = cech_strand_from_survivors(spec, alpha, surv).complex.cohomology_dims()
        out[ix] = memo[surv]
    return out


def _split(kind, grid, dims_by_chamber, indices, label, reindex=lambda i: i) -> dict:
    return {
        i: CohomologyTable(kind, i, grid,
                           {ix: dims.get(reindex(i), 0) for ix, dims in dims_by_chamber.items()}, label)
        for i in indices
    }


# -- Ext ----------------------------------------------------------------------


@lru_cache(maxsize=4096)
def ext_tables(b: MonomialIdeal, coeff: MonomialIdeal | None = None) -> dict:
    """All ``Ext^i(R/b, R)`` (or ``Ext^i(R/b, R/coeff)``) tables from dual Taylor strands."""
    dual = dual_complex(taylor_complex(b))
    grid = chamber_grid(dual, coeff=coeff)
    dims = _free_dims(dual, grid, coeff)
    label = f"(R/{b}, R)" if coeff is None else f"(R/{b}, R/{coeff})"
    top = max(dual.length, b.num_vars)
    return _split("Ext", grid, dims, range(top + 1), label)


def ext_table(b: MonomialIdeal, i: int, coeff: MonomialIdeal | None = None) -> CohomologyTable:
    tables = ext_tables(b, coeff)
    if i in tables:
        return tables[i]
    grid = next(iter(tables.values())).grid
    return CohomologyTable("Ext", i, grid, {ix: 0 for ix in grid.indices()}, tables[0].label)


# -- local cohomology -------------------------------------------------------------


@lru_cache(maxsize=4096)
def hm_tables(b: MonomialIdeal) -> dict:
    """``H^j_m(R/b)`` via the Cech complex on the variables with coefficients R/b."""
    spec = CechComplexSpec.on_variables(b)
    grid = chamber_grid(spec)
    return _split("Hm", grid, _cech_dims(spec, grid), range(b.num_vars + 1), f"(R/{b})")


def hm_table(b: MonomialIdeal, j: int) -> CohomologyTable:
    return _get(hm_tables(b), j, "Hm")


@lru_cache(maxsize=4096)
def ha_tables(a: MonomialIdeal) -> dict:
    """``H^i_a(R)`` via the Cech complex on the generators of ``a``.

    Only the sign pattern of a degree matters, so the grid has 2^d chambers.
    The zero ideal gives ``H^0 = R``; the unit ideal gives zero.
    """
    spec = CechComplexSpec.on_generators(a)
    grid = chamber_grid(spec)
    top = max(len(a.generators), a.num_vars)
    return _split("Ha", grid, _cech_dims(spec, grid), range(top + 1), f"{a}")


def ha_table(a: MonomialIdeal, i: int) -> CohomologyTable:
    return _get(ha_tables(a), i, "Ha")


def _get(tables, i, kind):
    if i in tables:
        return tables[i]
    t0 = next(iter(tables.values()))
    return CohomologyTable(kind, i, t0.grid, {ix: 0 for ix in t0.grid.indices()}, t0.label)


# -- Tor ----------------------------------------------------------------------------


@lru_cache(maxsize=1024)
def tor_tables(a: MonomialIdeal, b: MonomialIdeal) -> dict:
    """``Tor_j(Ext^d(R/a, R), R/b)`` for m-primary ``a``.

    The dual Taylor complex of ``a`` has cohomology only in degree d, so its
    tensor product with the Taylor resolution of R/b computes the derived
    tensor product; ``Tor_j`` sits in cohomological degree ``d - j``.
    """
    if not a.is_m_primary():
        raise InputError(f"{a} is not m-primary")
    d = a.num_vars
    total = tensor_product(dual_complex(taylor_complex(a)), taylor_complex(b))
    grid = chamber_grid(total)
    dims = _free_dims(total, grid)
    return _split("Tor", grid, dims, range(d + 1), f"(Ext^{d}(R/{a}, R), R/{b})", reindex=lambda j: d - j)


def tor_table(a: MonomialIdeal, b: MonomialIdeal, j: int) -> CohomologyTable:
    return _get(tor_tables(a, b), j, "Tor")


# -- depth ------------------------------------------------------------------------


def depth(a: MonomialIdeal):
    """Least ``i`` with ``Ext^i(R/a, R) != 0``; ``None`` for the unit ideal."""
    for i, t in sorted(ext_tables(a).items()):
        if not t.is_zero():
            return i
    return None


# -- Hochster's formula -----------------------------------------------------------


def reduced_cohomology(delta: SimplicialComplex, field_char: int = 0) -> dict:
    """``{k: dim H~^k(delta)}`` from the augmented simplicial cochain complex.

    The complex ``{empty}`` has ``H~^{-1} = K``; the void complex is acyclic.
    """
    if delta.is_void():
        return {}
    fld = FieldSpec(field_char)
    faces = delta.faces()
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    top = max(by_dim)
    index = {k: {f: n for n, f in enumerate(v)} for k, v in by_dim.items()}
    maps = []
    for k in range(-1, top):
        src, tgt = by_dim[k], by_dim[k + 1]
        data = [[0] * len(src) for _ in tgt]
        for r, f in enumerate(tgt):
            for pos in range(len(f)):
                g = f[:pos] + f[pos + 1:]
                data[r][index[k][g]] = fld((-1) ** pos)
        maps.append(ExactMatrix(fld, len(tgt), len(src), tuple(tuple(x) for x in data)))
    c = FiniteComplex(fld, tuple(len(by_dim[k]) for k in range(-1, top + 1)), tuple(maps), start=-1)
    return c.cohomology_dims()


@lru_cache(maxsize=4096)
def hochster_tables(delta: SimplicialComplex, field_char: int = 0) -> dict:
    """``H^j_m(K[delta])`` from reduced cohomology of links.

    In degree ``alpha`` the piece vanishes unless ``alpha <= 0`` and the negative
    support ``F`` is a face; then it is ``H~^{j-|F|-1}(lk F)``.
    """
    n = delta.vertex_count
    grid = ChamberGrid([{0, 1}] * n)
    dims = {}
    for ix in grid.indices():
        alpha = grid.chamber(ix).rep
        if any(x > 0 for x in alpha):
            dims[ix] = {}
            continue
        F = frozenset(i for i, x in enumerate(alpha) if x < 0)
        if not delta.contains(F):
            dims[ix] = {}
            continue
        h = reduced_cohomology(delta.link(F), field_char)
        dims[ix] = {k + len(F) + 1: v for k, v in h.items()}
    return _split("Hochster", grid, dims, range(n + 1), f"(K[{delta}])")


def hochster_table(delta: SimplicialComplex, j: int, field_char: int = 0) -> CohomologyTable:
    return _get(hochster_tables(delta, field_char), j, "Hochster")


# -- maps between Ext modules ----------------------------------------------------


@lru_cache(maxsize=1024)
def ext_chain_maps(a: MonomialIdeal, k: tuple, k2: tuple) -> dict:
    """``Ext^i(R/a^[k], R) -> Ext^i(R/a^[k2], R)`` for every i, per chamber.

    Induced by the natural surjection ``R/a^[k2] -> R/a^[k]`` through the dual of
    :func:`comparison_chain_map`.
    """
    d = a.num_vars
    k, k2 = _as_vector(k, d), _as_vector(k2, d)
    f = dual_chain_map(comparison_chain_map(a, k, k2))
    grid = chamber_grid(f)
    src_tables = ext_tables(bracket_power(a, k))
    tgt_tables = ext_tables(bracket_power(a, k2))
    spots = sorted(src_tables)
    memo = {}
    mats = {i: {} for i in spots}
    for ix in grid.indices():
        alpha = grid.chamber(ix).rep
        ss = survivors_at(f.source, alpha)
        ts = survivors_at(f.target, alpha)
        key = (ss, ts)
        if key not in memo:
            src = strand_from_survivors(f.source, alpha, ss)
            tgt = strand_from_survivors(f.target, alpha, ts)
            cm = strand_chain_map(f, alpha, source=src, target=tgt)
            cm.check()
            memo[key] = {i: induced_map_on_cohomology(cm, i, check=False) for i in spots}
        for i in spots:
            mats[i][ix] = memo[key][i]
    return {i: GradedModuleMap(src_tables[i], tgt_tables[i], grid, mats[i]) for i in spots}


def ext_chain_map(a: MonomialIdeal, k, k2, i: int) -> GradedModuleMap:
    d = a.num_vars
    maps = ext_chain_maps(a, _as_vector(k, d), _as_vector(k2, d))
    if i in maps:
        return maps[i]
    m = next(iter(maps.values()))
    fld = FieldSpec(a.ring.field_char)
    zero = {ix: ExactMatrix.zeros(fld, 0, 0) for ix in m.grid.indices()}
    return GradedModuleMap(ext_table(bracket_power(a, k), i), ext_table(bracket_power(a, k2), i), m.grid, zero)


@lru_cache(maxsize=1024)
def hm_surjection_maps(a: MonomialIdeal, k: tuple, k2: tuple) -> dict:
    """``H^j_m(R/a^[k2]) -> H^j_m(R/a^[k])`` induced by the natural surjection.

    Computed on Cech strands over the variables: each surviving summand of the
    source maps with coefficient 1 onto the same summand of the target.
    """
    from .complexes import cech_chain_map

    d = a.num_vars
    k, k2 = _as_vector(k, d), _as_vector(k2, d)
    big = CechComplexSpec.on_variables(bracket_power(a, k2))
    small = CechComplexSpec.on_variables(bracket_power(a, k))
    grid = chamber_grid(big, small)
    sup = big.supports()
    memo = {}
    mats = {j: {} for j in range(d + 1)}
    for ix in grid.indices():
        alpha = grid.chamber(ix).rep
        ss, ts = cech_survivors(big, alpha, sup), cech_survivors(small, alpha, sup)
        if (ss, ts) not in memo:
            cm = cech_chain_map(cech_strand_from_survivors(big, alpha, ss),
                                cech_strand_from_survivors(small, alpha, ts))
            cm.check()
            memo[(ss, ts)] = {j: induced_map_on_cohomology(cm, j, check=False) for j in range(d + 1)}
        for j in range(d + 1):
            mats[j][ix] = memo[(ss, ts)][j]
    src, tgt = hm_tables(bracket_power(a, k2)), hm_tables(bracket_power(a, k))
    return {j: GradedModuleMap(src[j], tgt[j], grid, mats[j]) for j in range(d + 1)}


# -- stabilization ---------------------------------------------------------------


@dataclass(frozen=True)
class Stabilization:
    """Outcome of :func:`ha_stabilization`; ``stabilized`` is False when the
    doubling bound ran out, in which case ``T`` is the last exponent tried."""

    stabilized: bool
    T: tuple
    window: int
    index: int
    map: GradedModuleMap | None
    chambers: tuple  # window chambers on which the verdicts were checked
    reason: str = ""


def window_chambers(grid: ChamberGrid, w: int) -> list:
    """Chambers of ``grid`` refined by the box ``[-w, w]^d`` that lie in the box."""
    box = ChamberGrid([{-w, w + 1}] * grid.num_vars)
    fine = grid.refine(box)
    out = []
    for c in fine.chambers():
        if all(lo is not None and hi is not None and -w <= lo and hi <= w for lo, hi in c.intervals):
            out.append(c)
    return out


def ha_stabilization(a: MonomialIdeal, i: int, k=None, window: int | None = None,
                     max_doublings: int = 8) -> Stabilization:
    """Find ``T`` (doubling from ``k``) at which ``Ext^i(R/a^[T], R)`` agrees with
    ``H^i_a(R)`` on the window ``[-w, w]^d`` and the next comparison map is an
    isomorphism there; return the map ``Ext^i(R/a^[k], R) -> Ext^i(R/a^[T], R)``.

    The default window is ``w = max(1, largest exponent of a)``. All verdicts are
    exact but only on the window.
    """
    d = a.num_vars
    k = _as_vector(k if k is not None else 1, d)
    w = window if window is not None else max(1, a.max_exponent())
    ha = ha_table(a, i)
    T = k
    for _ in range(max_doublings + 1):
        T2 = tuple(2 * x for x in T)
        ext_T = ext_table(bracket_power(a, T), i)
        step = ext_chain_map(a, T, T2, i)
        grid = ext_T.grid.refine(ha.grid, step.grid)
        chambers = window_chambers(grid, w)
        ok = all(ext_T.dim_at(c.rep) == ha.dim_at(c.rep) for c in chambers)
        if ok:
            for c in chambers:
                m = step.matrix_at(c.rep)
                if not (m.rows == m.cols and rank(m) == m.cols):
                    ok = False
                    break
        if ok:
            composite = ext_chain_map(a, k, T, i)
            grid = composite.grid.refine(ext_T.grid, ha.grid)
            return Stabilization(True, T, w, i, composite, tuple(window_chambers(grid, w)))
        T = T2
    return Stabilization(False, T, w, i, None, (), reason=f"no stabilization within {max_doublings} doublings")


# -- table comparison -------------------------------------------------------------


def compare_tables(left: CohomologyTable, right: CohomologyTable, transform: str = "identity", k=None) -> list:
    """Chamber representatives where ``dim left(alpha) != dim right(f(alpha))``.

    ``transform`` is ``"identity"``, ``"duality"`` (``f(alpha) = -alpha - 1``) or
    ``"floor"`` (``f(alpha) = floor(alpha / k)``). The comparison runs on the
    common refinement, so it covers all of Z^d.
    """
    f, pulled = _transform(transform, right.grid, k)
    grid = left.grid.refine(pulled)
    bad = []
    for c in grid.chambers():
        if left.dim_at(c.rep) != right.dim_at(f(c.rep)):
            bad.append(c.rep)
    return bad


def _transform(name: str, grid: ChamberGrid, k) -> tuple:
    if name == "identity":
        return (lambda a: a), grid
    if name == "duality":
        # beta = -alpha-1 in [t_j, t_{j+1}-1]  <=>  alpha in [-t_{j+1}, -t_j - 1]
        pulled = ChamberGrid([{-t for t in ts} for ts in grid.thresholds])
        return (lambda a: tuple(-x - 1 for x in a)), pulled
    if name == "floor":
        k = tuple(k)
        pulled = ChamberGrid([{kk * t for t in ts} for ts, kk in zip(grid.thresholds, k)])
        return (lambda a: tuple(x // kk for x, kk in zip(a, k))), pulled
    raise ValueError(f"unknown transform {name!r}")


def local_duality_mismatches(b: MonomialIdeal) -> list:
    """``(i, alpha)`` pairs violating ``dim Ext^i(R/b,R)_alpha = dim H^{d-i}_m(R/b)_{-alpha-1}``."""
    d = b.num_vars
    out = []
    for i in range(d + 1):
        for alpha in compare_tables(ext_table(b, i), hm_table(b, d - i), "duality"):
            out.append((i, alpha))
    # Ext beyond d must vanish (Taylor complexes can be longer than d)
    for i, t in ext_tables(b).items():
        if i > d and not t.is_zero():
            out.append((i, None))
    return out
