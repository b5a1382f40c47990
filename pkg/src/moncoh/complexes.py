"""Multigraded free complexes, Cech complexes and their degree strands.

A free summand ``R(-b)`` is recorded by its twist ``b``; a differential is a
:class:`MonomialMatrix` of signed monomials whose exponents bridge the twists.
Evaluating a complex in a single multidegree ``alpha`` gives a :class:`Strand`,
a finite complex over the coefficient field. :class:`ChamberGrid` cuts Z^d into
finitely many boxes on which every strand is constant.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linalg import ChainMap, ComplexError, ExactMatrix, FieldSpec, FiniteComplex
from .monomial import (
    InputError,
    MonomialIdeal,
    PolynomialRingSpec,
    _as_vector,
    bracket_power,
    divides,
    lcm,
    lcm_all,
    scale,
    support,
)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialMatrix:
    """Sparse matrix of signed monomials: ``entries`` is a sorted tuple of
    ``((row, col), coefficient, exponent)``."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def build(cls, rows: int, cols: int, entries: Iterable):
        return cls(rows, cols, tuple(sorted(((tuple(rc), int(c), tuple(e)) for rc, c, e in entries))))

    def transpose(self) -> "MonomialMatrix":
        return MonomialMatrix.build(self.cols, self.rows, (((c, r), x, e) for (r, c), x, e in self.entries))

    def scaled(self, k) -> "MonomialMatrix":
        return MonomialMatrix(self.rows, self.cols, tuple((rc, x, scale(e, k)) for rc, x, e in self.entries))

    def __matmul__(self, other: "MonomialMatrix") -> dict:
        """Polynomial product as ``{(row, col): {exponent: coefficient}}`` (zeros dropped)."""
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (r, c), x, e in other.entries:
            by_row.setdefault(r, []).append((c, x, e))
        out = {}
        for (r, m), x, e in self.entries:
            for c, y, f in by_row.get(m, ()):
                poly = out.setdefault((r, c), {})
                key = _add(e, f)
                poly[key] = poly.get(key, 0) + x * y
        return {rc: {k: v for k, v in poly.items() if v} for rc, poly in out.items()
                if any(poly.values())}

    def to_dense(self) -> list:
        """Rows of ``None`` or ``(coefficient, exponent)``; handy for display."""
        out = [[None] * self.cols for _ in range(self.rows)]
        for (r, c), x, e in self.entries:
            out[r][c] = (x, e)
        return out


@dataclass(frozen=True)
class GradedFreeComplex:
    """Bounded complex of multigraded free modules.

    ``twists[n]`` lists the twists of the term at position ``n``. For a
    homological complex position ``n`` is homological degree ``start + n`` and
    ``maps[n]`` goes from position ``n+1`` to ``n``; for a cohomological one
    position ``n`` is cohomological degree ``start + n`` and ``maps[n]`` goes from
    ``n`` to ``n+1``. ``labels`` is bookkeeping (e.g. generator subsets) and does
    not take part in equality.
    """

    ring: PolynomialRingSpec
    twists: tuple
    maps: tuple
    homological: bool = False
    start: int = 0
    labels: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.maps) != max(len(self.twists) - 1, 0):
            raise ComplexError("need one map between consecutive terms")
        for n, m in enumerate(self.maps):
            src, tgt = self._ends(n)
            if (m.rows, m.cols) != (len(self.twists[tgt]), len(self.twists[src])):
                raise ComplexError(f"map {n} has the wrong shape")
            for (r, c), _, e in m.entries:
                if e != _sub(self.twists[src][c], self.twists[tgt][r]):
                    raise ComplexError(f"entry {(r, c)} of map {n} is not of degree 0")

    def _ends(self, n: int):
        return (n + 1, n) if self.homological else (n, n + 1)

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    def degree_of(self, n: int) -> int:
        return self.start + n

    def ranks(self) -> list:
        return [len(t) for t in self.twists]

    def check_d_squared(self):
        """Raise :class:`ComplexError` unless consecutive maps compose to zero."""
        for n in range(len(self.maps) - 1):
            if self.homological:
                prod = self.maps[n] @ self.maps[n + 1]
            else:
                prod = self.maps[n + 1] @ self.maps[n]
            if prod:
                raise ComplexError(f"maps {n} and {n + 1} do not compose to zero")

    def all_twists(self):
        for t in self.twists:
            yield from t


@dataclass(frozen=True)
class GradedChainMap:
    """Degree-0 map between two free complexes of the same shape and direction;
    ``components[n]`` acts at position ``n``."""

    source: GradedFreeComplex
    target: GradedFreeComplex
    components: tuple

    def check(self):
        """Every square commutes as a polynomial-matrix identity."""
        s, t = self.source, self.target
        if s.homological != t.homological or s.start != t.start or len(s.twists) != len(t.twists):
            raise InputError("chain map between complexes of different shapes")
        for n, f in enumerate(self.components):
            for (r, c), _, e in f.entries:
                if e != _sub(s.twists[n][c], t.twists[n][r]):
                    raise ComplexError(f"component {n} entry {(r, c)} is not of degree 0")
        for n in range(len(s.maps)):
            src, tgt = s._ends(n)
            left = self.components[tgt] @ s.maps[n]
            right = t.maps[n] @ self.components[src]
            if left != right:
                raise InputError(f"chain map does not commute with the differentials at map {n}")

    def compose(self, other: "GradedChainMap") -> "GradedChainMap":
        """``self`` after ``other``."""
        comps = []
        for n, (f, g) in enumerate(zip(self.components, other.components)):
            prod = f @ g
            entries = []
            for rc, poly in prod.items():
                for e, x in poly.items():
                    entries.append((rc, x, e))
            comps.append(MonomialMatrix.build(f.rows, g.cols, entries))
        return GradedChainMap(other.source, self.target, tuple(comps))


# -- constructions ------------------------------------------------------------


def _subsets_of_size(r: int, i: int):
    return list(itertools.combinations(range(r), i))


def taylor_complex(a: MonomialIdeal, gens: Sequence | None = None) -> GradedFreeComplex:
    """Taylor resolution of R/a on the canonical generator order.

    Position ``i`` holds one summand per ``i``-subset ``S`` twisted by lcm_S;
    ``d(e_S) = sum_j sign * (lcm_S / lcm_{S - j}) e_{S - j}`` with sign
    ``(-1)^(position of j in S)``. The zero ideal gives ``R`` alone; the unit
    ideal gives the split complex ``R <- R``.
    """
    d = a.num_vars
    gens = list(a.generators if gens is None else gens)
    r = len(gens)
    subsets = [_subsets_of_size(r, i) for i in range(r + 1)]
    lcms = {S: lcm_all((gens[j] for j in S), d) for level in subsets for S in level}
    index = [{S: n for n, S in enumerate(level)} for level in subsets]
    twists = tuple(tuple(lcms[S] for S in level) for level in subsets)
    maps = []
    for i in range(1, r + 1):
        entries = []
        for col, S in enumerate(subsets[i]):
            for pos, j in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                entries.append(((index[i - 1][T], col), (-1) ** pos, _sub(lcms[S], lcms[T])))
        maps.append(MonomialMatrix.build(len(subsets[i - 1]), len(subsets[i]), entries))
    return GradedFreeComplex(a.ring, twists, tuple(maps), homological=True, start=0,
                             labels=tuple(tuple(level) for level in subsets))


def dual_complex(c: GradedFreeComplex) -> GradedFreeComplex:
    """Hom(-, R): negated twists, transposed maps, direction flipped."""
    twists = tuple(tuple(tuple(-x for x in t) for t in level) for level in c.twists)
    maps = tuple(m.transpose() for m in c.maps)
    return GradedFreeComplex(c.ring, twists, maps, homological=not c.homological,
                             start=c.start, labels=c.labels)


def dual_chain_map(f: GradedChainMap) -> GradedChainMap:
    """Hom(f, R), a map from the dual of the target to the dual of the source."""
    comps = tuple(m.transpose() for m in f.components)
    return GradedChainMap(dual_complex(f.target), dual_complex(f.source), comps)


def frobenius_functor(c: GradedFreeComplex, k) -> GradedFreeComplex:
    """Base change along x_i -> x_i^{k_i}: scale every twist and entry exponent."""
    k = _as_vector(k, c.ring.num_vars)
    twists = tuple(tuple(scale(t, k) for t in level) for level in c.twists)
    maps = tuple(m.scaled(k) for m in c.maps)
    return GradedFreeComplex(c.ring, twists, maps, c.homological, c.start, c.labels)


def comparison_chain_map(a: MonomialIdeal, k, k2) -> GradedChainMap:
    """Lift of R/a^[k2] -> R/a^[k] to Taylor(a^[k2]) -> Taylor(a^[k]).

    On ``e_S`` it multiplies by ``lcm_S(a^[k2]) / lcm_S(a^[k])``.
    """
    d = a.num_vars
    k = _as_vector(k, d)
    k2 = _as_vector(k2, d)
    if not divides(k, k2):
        raise InputError(f"need k <= k' componentwise, got {list(k)} and {list(k2)}")
    src = taylor_complex(bracket_power(a, k2))
    tgt = taylor_complex(bracket_power(a, k))
    comps = []
    for ts, tt in zip(src.twists, tgt.twists):
        comps.append(MonomialMatrix.build(len(tt), len(ts),
                                          (((n, n), 1, _sub(x, y)) for n, (x, y) in enumerate(zip(ts, tt)))))
    return GradedChainMap(src, tgt, tuple(comps))


def tensor_product(c1: GradedFreeComplex, c2: GradedFreeComplex) -> GradedFreeComplex:
    """Total complex of ``c1 (x) c2`` in cohomological indexing.

    Homological inputs are read cohomologically (degree n -> -n). Sign rule:
    ``d(u (x) v) = du (x) v + (-1)^p u (x) dv`` for ``u`` in degree ``p``.
    """
    c1, c2 = _cohomological(c1), _cohomological(c2)
    ring = c1.ring
    lo = c1.start + c2.start
    hi = c1.start + c1.length + c2.start + c2.length
    basis = {}
    twists = []
    labels = []
    for deg in range(lo, hi + 1):
        level = []
        for p in range(c1.start, c1.start + len(c1.twists)):
            q = deg - p
            if not c2.start <= q < c2.start + len(c2.twists):
                continue
            for i, t1 in enumerate(c1.twists[p - c1.start]):
                for j, t2 in enumerate(c2.twists[q - c2.start]):
                    basis[(p, i, q, j)] = (deg, len(level))
                    level.append(_add(t1, t2))
                    labels.append(None)
        twists.append(tuple(level))
    entries = [[] for _ in range(hi - lo)]
    for (p, i, q, j), (deg, col) in basis.items():
        n = deg - lo
        if n == hi - lo:
            continue
        if p - c1.start < len(c1.maps):
            for (r, c), x, e in c1.maps[p - c1.start].entries:
                if c == i:
                    row = basis[(p + 1, r, q, j)][1]
                    entries[n].append(((row, col), x, e))
        if q - c2.start < len(c2.maps):
            sign = -1 if p % 2 else 1
            for (r, c), x, e in c2.maps[q - c2.start].entries:
                if c == j:
                    row = basis[(p, i, q + 1, r)][1]
                    entries[n].append(((row, col), sign * x, e))
    maps = tuple(MonomialMatrix.build(len(twists[n + 1]), len(twists[n]), entries[n])
                 for n in range(hi - lo))
    return GradedFreeComplex(ring, tuple(twists), maps, homological=False, start=lo)


def _cohomological(c: GradedFreeComplex) -> GradedFreeComplex:
    if not c.homological:
        return c
    L = len(c.twists)
    twists = tuple(reversed(c.twists))
    maps = tuple(reversed(c.maps))
    labels = tuple(reversed(c.labels)) if c.labels else None
    return GradedFreeComplex(c.ring, twists, maps, homological=False, start=-(c.start + L - 1), labels=labels)


# -- Cech complexes -----------------------------------------------------------


@dataclass(frozen=True)
class CechComplexSpec:
    """Cech complex of ``R/coeff`` on the localizing monomials ``localizers``.

    Term ``j`` has one summand ``(R/coeff)_{m_S}`` per ``j``-subset ``S``.
    """

    ring: PolynomialRingSpec
    localizers: tuple
    coeff: MonomialIdeal

    @classmethod
    def on_generators(cls, a: MonomialIdeal, coeff: MonomialIdeal | None = None):
        coeff = coeff if coeff is not None else MonomialIdeal(a.ring, ())
        return cls(a.ring, a.generators, coeff)

    @classmethod
    def on_variables(cls, coeff: MonomialIdeal):
        ring = coeff.ring
        return cls(ring, tuple(ring.variable(i) for i in range(ring.num_vars)), coeff)

    @property
    def subsets(self) -> list:
        r = len(self.localizers)
        return [_subsets_of_size(r, j) for j in range(r + 1)]

    def supports(self) -> list:
        out = []
        for level in self.subsets:
            out.append([frozenset().union(*(support(self.localizers[s]) for s in S)) for S in level])
        return out


def cech_survives(alpha, unit_support: frozenset, coeff: MonomialIdeal) -> bool:
    """Is ``(R/coeff)`` localized at a monomial with support ``unit_support``
    nonzero in degree ``alpha``?"""
    outside = [i for i in range(len(alpha)) if i not in unit_support]
    if any(alpha[i] < 0 for i in outside):
        return False
    return not any(all(g[i] <= alpha[i] for i in outside) for g in coeff.generators)


# -- strands ------------------------------------------------------------------


@dataclass(frozen=True)
class Strand:
    """Degree-``alpha`` slice of a graded complex.

    ``survivors[n]`` lists, per cohomological spot ``complex.start + n``, the
    indices of the summands of the parent complex that are nonzero at ``alpha``.
    """

    alpha: tuple
    complex: FiniteComplex
    survivors: tuple

    def cohomology_dims(self) -> dict:
        return self.complex.cohomology_dims()


def _free_survives(alpha, twist, coeff: MonomialIdeal | None) -> bool:
    rest = _sub(alpha, twist)
    if any(x < 0 for x in rest):
        return False
    return coeff is None or not coeff.contains(rest)


def _restrict(m: MonomialMatrix, rows: Sequence[int], cols: Sequence[int], fld: FieldSpec) -> ExactMatrix:
    rpos = {r: n for n, r in enumerate(rows)}
    cpos = {c: n for n, c in enumerate(cols)}
    data = [[0] * len(cols) for _ in rows]
    for (r, c), x, _ in m.entries:
        if r in rpos and c in cpos:
            data[rpos[r]][cpos[c]] = fld(x)
    return ExactMatrix(fld, len(rows), len(cols), tuple(tuple(r) for r in data))


def survivors_at(c: GradedFreeComplex, alpha, coeff: MonomialIdeal | None = None) -> tuple:
    """Indices of surviving summands per position (storage order)."""
    return tuple(tuple(j for j, t in enumerate(level) if _free_survives(alpha, t, coeff))
                 for level in c.twists)


def strand_from_survivors(c: GradedFreeComplex, alpha, surv: tuple) -> Strand:
    fld = FieldSpec(c.ring.field_char)
    L = len(c.twists)
    order = list(range(L))
    if c.homological:
        order.reverse()
        start = -(c.start + L - 1)
    else:
        start = c.start
    dims = tuple(len(surv[n]) for n in order)
    maps = []
    for m in range(L - 1):
        src, tgt = order[m], order[m + 1]
        mm = c.maps[tgt] if c.homological else c.maps[src]
        maps.append(_restrict(mm, surv[tgt], surv[src], fld))
    fc = FiniteComplex(fld, dims, tuple(maps), start)
    return Strand(tuple(alpha), fc, tuple(surv[n] for n in order))


def strand_at(c: GradedFreeComplex, alpha, coeff: MonomialIdeal | None = None) -> Strand:
    """Strand of ``c`` (optionally tensored with ``R/coeff``) at ``alpha``.

    Summand ``R(-b)`` survives iff ``alpha >= b`` and ``x^(alpha-b)`` is not in
    ``coeff``; entries between survivors keep their scalar coefficient.
    """
    alpha = tuple(alpha)
    return strand_from_survivors(c, alpha, survivors_at(c, alpha, coeff))


def strand_chain_map(f: GradedChainMap, alpha, coeff: MonomialIdeal | None = None,
                     source: Strand | None = None, target: Strand | None = None) -> ChainMap:
    """Restriction of a graded chain map to the strands at ``alpha``."""
    source = source or strand_at(f.source, alpha, coeff)
    target = target or strand_at(f.target, alpha, coeff)
    fld = source.complex.field
    L = len(f.source.twists)
    comps = {}
    for n in range(L):
        spot = -(f.source.start + n) if f.source.homological else f.source.start + n
        idx = spot - source.complex.start
        comps[spot] = _restrict(f.components[n], target.survivors[idx], source.survivors[idx], fld)
    return ChainMap(source.complex, target.complex, comps)


def cech_survivors(spec: CechComplexSpec, alpha, supports=None) -> tuple:
    supports = supports or spec.supports()
    return tuple(tuple(n for n, U in enumerate(level) if cech_survives(alpha, U, spec.coeff))
                 for level in supports)


def cech_strand_from_survivors(spec: CechComplexSpec, alpha, surv: tuple) -> Strand:
    fld = FieldSpec(spec.ring.field_char)
    subsets = spec.subsets
    maps = []
    for j in range(len(subsets) - 1):
        tgt_index = {S: n for n, S in enumerate(subsets[j + 1])}
        rpos = {n: i for i, n in enumerate(surv[j + 1])}
        data = [[0] * len(surv[j]) for _ in surv[j + 1]]
        for col, n in enumerate(surv[j]):
            S = subsets[j][n]
            for s in range(len(spec.localizers)):
                if s in S:
                    continue
                T = tuple(sorted(S + (s,)))
                row = rpos.get(tgt_index[T])
                if row is not None:
                    data[row][col] = fld((-1) ** T.index(s))
        maps.append(ExactMatrix(fld, len(surv[j + 1]), len(surv[j]), tuple(tuple(r) for r in data)))
    fc = FiniteComplex(fld, tuple(len(s) for s in surv), tuple(maps), 0)
    return Strand(tuple(alpha), fc, surv)


def cech_strand(spec: CechComplexSpec, alpha) -> Strand:
    """Strand of the Cech complex at ``alpha``: the summand at ``S`` survives iff
    ``alpha_i >= 0`` off ``supp(m_S)`` and no generator of the coefficient ideal
    lies below ``alpha`` off ``supp(m_S)``."""
    alpha = tuple(alpha)
    return cech_strand_from_survivors(spec, alpha, cech_survivors(spec, alpha))


def cech_chain_map(src: Strand, tgt: Strand, coefficient=1) -> ChainMap:
    """Map of Cech strands sending each surviving summand ``S`` to the summand ``S``
    of ``tgt`` (zero where it does not survive). Both strands must come from
    Cech complexes on the same localizers."""
    fld = src.complex.field
    comps = {}
    for j, (s, t) in enumerate(zip(src.survivors, tgt.survivors)):
        tpos = {n: i for i, n in enumerate(t)}
        data = [[0] * len(s) for _ in t]
        for col, n in enumerate(s):
            if n in tpos:
                data[tpos[n]][col] = fld(coefficient)
        comps[j] = ExactMatrix(fld, len(t), len(s), tuple(tuple(r) for r in data))
    return ChainMap(src.complex, tgt.complex, comps)


# -- chambers -----------------------------------------------------------------


@dataclass(frozen=True)
class Chamber:
    """Product of integer intervals; ``None`` marks an unbounded end."""

    intervals: tuple
    rep: tuple

    def contains(self, alpha) -> bool:
        for (lo, hi), a in zip(self.intervals, alpha):
            if lo is not None and a < lo:
                return False
            if hi is not None and a > hi:
                return False
        return True

    def is_bounded(self) -> bool:
        return all(lo is not None and hi is not None for lo, hi in self.intervals)

    def describe(self) -> str:
        parts = []
        for i, (lo, hi) in enumerate(self.intervals):
            name = f"a{i + 1}"
            if lo is None and hi is None:
                parts.append(f"{name} any")
            elif lo is None:
                parts.append(f"{name}<={hi}")
            elif hi is None:
                parts.append(f"{name}>={lo}")
            elif lo == hi:
                parts.append(f"{name}={lo}")
            else:
                parts.append(f"{lo}<={name}<={hi}")
        return ", ".join(parts)

    def to_json(self) -> dict:
        return {"intervals": [list(iv) for iv in self.intervals], "rep": list(self.rep)}


def _least_abs(lo, hi) -> int:
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return 0
    if lo is not None and lo > 0:
        return lo
    return hi


class ChamberGrid:
    """Chambers cut out by per-coordinate threshold sets.

    Along coordinate ``i`` with sorted thresholds ``t_0 < ... < t_n`` the cells
    are ``(-inf, t_0 - 1]``, ``[t_j, t_{j+1} - 1]`` and ``[t_n, inf)``, so every
    predicate of the form ``alpha_i >= t`` with ``t`` a threshold is constant on
    each cell.
    """

    def __init__(self, thresholds: Sequence[Iterable[int]], fine: bool = False):
        ts = []
        for t in thresholds:
            t = set(t) | {0}
            if fine:
                t = set(range(min(t), max(t) + 1))
            ts.append(tuple(sorted(t)))
        self.thresholds = tuple(ts)

    @property
    def num_vars(self) -> int:
        return len(self.thresholds)

    def cell_interval(self, i: int, j: int):
        t = self.thresholds[i]
        lo = None if j == 0 else t[j - 1]
        hi = None if j == len(t) else t[j] - 1
        return lo, hi

    def index_of(self, alpha) -> tuple:
        return tuple(bisect.bisect_right(t, a) for t, a in zip(self.thresholds, alpha))

    def chamber(self, index) -> Chamber:
        ivs = tuple(self.cell_interval(i, j) for i, j in enumerate(index))
        return Chamber(ivs, tuple(_least_abs(lo, hi) for lo, hi in ivs))

    def indices(self):
        return itertools.product(*(range(len(t) + 1) for t in self.thresholds))

    def chambers(self) -> list:
        return [self.chamber(ix) for ix in self.indices()]

    def __len__(self):
        n = 1
        for t in self.thresholds:
            n *= len(t) + 1
        return n

    def refine(self, *others: "ChamberGrid") -> "ChamberGrid":
        ts = [set(t) for t in self.thresholds]
        for o in others:
            for s, t in zip(ts, o.thresholds):
                s.update(t)
        return ChamberGrid(ts)

    def __eq__(self, other):
        return isinstance(other, ChamberGrid) and self.thresholds == other.thresholds

    def __repr__(self):
        return f"ChamberGrid({[list(t) for t in self.thresholds]})"


def thresholds_of(obj, coeff: MonomialIdeal | None = None) -> list:
    """Per-coordinate thresholds at which the strand predicates of ``obj`` can change.

    ``obj`` is a :class:`GradedFreeComplex` (optionally reduced mod ``coeff``),
    a :class:`GradedChainMap`, or a :class:`CechComplexSpec`.
    """
    if isinstance(obj, GradedChainMap):
        a = thresholds_of(obj.source, coeff)
        b = thresholds_of(obj.target, coeff)
        return [x | y for x, y in zip(a, b)]
    if isinstance(obj, CechComplexSpec):
        ts = [{0} for _ in range(obj.ring.num_vars)]
        for g in obj.coeff.generators:
            for i, x in enumerate(g):
                ts[i].add(x)
        return ts
    d = obj.ring.num_vars
    ts = [{0} for _ in range(d)]
    gens = coeff.generators if coeff is not None else ()
    for t in obj.all_twists():
        for i, x in enumerate(t):
            ts[i].add(x)
            for g in gens:
                ts[i].add(x + g[i])
    return ts


def chamber_decomposition(*objs, coeff: MonomialIdeal | None = None, fine: bool = False) -> list:
    """Chambers on which every strand predicate of every input is constant."""
    return chamber_grid(*objs, coeff=coeff, fine=fine).chambers()


def chamber_grid(*objs, coeff: MonomialIdeal | None = None, fine: bool = False) -> ChamberGrid:
    if not objs:
        raise InputError("chamber_grid needs at least one complex")
    ts = None
    for o in objs:
        t = thresholds_of(o, coeff)
        ts = t if ts is None else [x | y for x, y in zip(ts, t)]
    return ChamberGrid(ts, fine=fine)
