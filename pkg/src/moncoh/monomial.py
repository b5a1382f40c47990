"""Exponent vectors, monomial ideals, bracket powers and Stanley-Reisner data.

Monomials are plain tuples of nonnegative ints (exponent vectors). Vertices of
simplicial complexes are 0-based: vertex ``i`` corresponds to variable ``x_{i+1}``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Exponent = tuple  # tuple[int, ...]


class InputError(ValueError):
    """Raised for malformed or inconsistent user input."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PolynomialRingSpec:
    """K[x_1..x_d] with K = Q (``field_char=0``) or GF(p)."""

    num_vars: int
    field_char: int = 0

    def __post_init__(self):
        if not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise InputError(f"num_vars must be a positive integer, got {self.num_vars!r}")
        if self.field_char != 0 and not _is_prime(self.field_char):
            raise InputError(f"field_char must be 0 or prime, got {self.field_char!r}")

    @property
    def ones(self) -> Exponent:
        return (1,) * self.num_vars

    @property
    def zero(self) -> Exponent:
        return (0,) * self.num_vars

    def variable(self, i: int) -> Exponent:
        e = [0] * self.num_vars
        e[i] = 1
        return tuple(e)


# -- exponent-vector arithmetic ---------------------------------------------


def lcm(m: Exponent, n: Exponent) -> Exponent:
    return tuple(max(a, b) for a, b in zip(m, n))


def lcm_all(ms: Iterable[Exponent], d: int) -> Exponent:
    out = (0,) * d
    for m in ms:
        out = lcm(out, m)
    return out


def divides(m: Exponent, n: Exponent) -> bool:
    """True when x^m divides x^n."""
    return all(a <= b for a, b in zip(m, n))


def support(m: Exponent) -> frozenset:
    return frozenset(i for i, a in enumerate(m) if a > 0)


def scale(m: Exponent, k: Sequence[int]) -> Exponent:
    return tuple(a * b for a, b in zip(m, k))


def monomial_str(m: Exponent) -> str:
    parts = []
    for i, a in enumerate(m):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts) or "1"


# -- ideals -----------------------------------------------------------------


def _minimal(gens: Iterable[Exponent]) -> tuple:
    gens = sorted(set(gens))
    keep = []
    for g in gens:
        if not any(divides(h, g) for h in gens if h != g):
            keep.append(g)
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators in lex order.

    The zero ideal has no generators, the unit ideal is generated by ``(0,..,0)``.
    Use :func:`minimalize` (or :meth:`from_generators`) rather than the raw
    constructor unless the generators are already canonical.
    """

    ring: PolynomialRingSpec
    generators: tuple

    @classmethod
    def from_generators(cls, ring: PolynomialRingSpec, gens: Iterable[Sequence[int]]):
        return minimalize(gens, ring)

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.generators == (self.ring.zero,)

    def contains(self, m: Exponent) -> bool:
        return any(divides(g, m) for g in self.generators)

    def max_exponent(self) -> int:
        return max((max(g) for g in self.generators), default=0)

    def is_m_primary(self) -> bool:
        """Radical equals the maximal ideal: every variable has a pure power in the ideal."""
        d = self.num_vars
        if self.is_unit():
            return False
        pure = {next(iter(support(g))) for g in self.generators if len(support(g)) == 1}
        return pure == set(range(d))

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.generators) + ")"

    def to_json(self) -> dict:
        return {
            "num_vars": self.ring.num_vars,
            "field_char": self.ring.field_char,
            "generators": [list(g) for g in self.generators],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def minimalize(gens: Iterable[Sequence[int]], ring: PolynomialRingSpec | None = None) -> MonomialIdeal:
    """Prune a generating set to its divisibility antichain.

    ``ring`` may be omitted when ``gens`` is nonempty; the variable count is then
    taken from the first generator (characteristic 0).
    """
    gens = [tuple(int(a) for a in g) for g in gens]
    if ring is None:
        if not gens:
            raise InputError("cannot infer the ring of an empty generator set")
        ring = PolynomialRingSpec(len(gens[0]))
    for g in gens:
        if len(g) != ring.num_vars:
            raise InputError(f"exponent vector {list(g)} has length {len(g)}, expected {ring.num_vars}")
        if any(a < 0 for a in g):
            raise InputError(f"negative exponent in {list(g)}")
    return MonomialIdeal(ring, _minimal(gens))


def ideal_from_json(obj) -> MonomialIdeal:
    """Parse the ideal JSON format; accepts a dict or a JSON string."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed ideal JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("ideal JSON must be an object")
    missing = {"num_vars", "generators"} - set(obj)
    if missing:
        raise InputError(f"ideal JSON missing keys: {sorted(missing)}")
    for key in ("num_vars", "field_char"):
        if key in obj and not isinstance(obj[key], int):
            raise InputError(f"ideal JSON field {key!r} must be an integer")
    ring = PolynomialRingSpec(obj["num_vars"], obj.get("field_char", 0))
    gens = obj["generators"]
    if not isinstance(gens, list) or not all(
        isinstance(g, list) and all(isinstance(a, int) for a in g) for g in gens
    ):
        raise InputError("generators must be a list of integer lists")
    return minimalize(gens, ring)


def bracket_power(a: MonomialIdeal, k) -> MonomialIdeal:
    """Image of ``a`` under x_i -> x_i^{k_i}; ``k`` may be an int or a vector."""
    k = _as_vector(k, a.num_vars)
    # componentwise rescaling preserves divisibility and lex order, so the
    # rescaled antichain is already canonical
    return MonomialIdeal(a.ring, tuple(scale(g, k) for g in a.generators))


def _as_vector(k, d: int) -> tuple:
    if isinstance(k, int):
        k = (k,) * d
    k = tuple(int(x) for x in k)
    if len(k) != d:
        raise InputError(f"exponent vector {list(k)} has length {len(k)}, expected {d}")
    if any(x < 1 for x in k):
        raise InputError(f"bracket exponents must be >= 1, got {list(k)}")
    return k


def radical(a: MonomialIdeal) -> MonomialIdeal:
    gens = [tuple(min(x, 1) for x in g) for g in a.generators]
    return MonomialIdeal(a.ring, _minimal(gens))


def is_squarefree(a: MonomialIdeal) -> bool:
    return all(x <= 1 for g in a.generators for x in g)


# -- simplicial complexes ---------------------------------------------------


def _antichain_max(sets: Iterable[frozenset]) -> frozenset:
    sets = set(sets)
    return frozenset(s for s in sets if not any(s < t for t in sets))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on vertices ``0..vertex_count-1`` given by its facets.

    ``facets == frozenset()`` is the void complex; ``{frozenset()}`` is the
    complex whose only face is the empty set.
    """

    vertex_count: int
    facets: frozenset

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InputError("vertex_count must be positive")
        facets = frozenset(frozenset(f) for f in self.facets)
        for f in facets:
            if any(v < 0 or v >= self.vertex_count for v in f):
                raise InputError(f"facet {sorted(f)} uses a vertex outside 0..{self.vertex_count - 1}")
        object.__setattr__(self, "facets", _antichain_max(facets))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]):
        return cls(n, frozenset(frozenset(f) for f in facets))

    @classmethod
    def simplex(cls, n: int):
        return cls(n, frozenset([frozenset(range(n))]))

    def is_void(self) -> bool:
        return not self.facets

    def is_simplex(self) -> bool:
        return self.facets == {frozenset(range(self.vertex_count))}

    def is_proper(self) -> bool:
        return not self.is_void() and not self.is_simplex()

    def contains(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> list:
        """All faces, sorted by size then lexicographically."""
        out = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                out.update(frozenset(c) for c in itertools.combinations(sorted(f), r))
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def link(self, face) -> "SimplicialComplex":
        face = frozenset(face)
        facets = [f - face for f in self.facets if face <= f]
        return SimplicialComplex(self.vertex_count, frozenset(facets))

    def sorted_facets(self) -> list:
        return sorted((sorted(f) for f in self.facets), key=lambda s: (len(s), s))

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(str(v + 1) for v in f) + "}" for f in self.sorted_facets()) + "}"


def _subsets(n: int):
    for r in range(n + 1):
        for c in itertools.combinations(range(n), r):
            yield frozenset(c)


def _indicator(face: Iterable[int], n: int) -> Exponent:
    e = [0] * n
    for v in face:
        e[v] = 1
    return tuple(e)


def stanley_reisner(delta: SimplicialComplex, field_char: int = 0) -> MonomialIdeal:
    """Ideal generated by the minimal non-faces of ``delta``."""
    n = delta.vertex_count
    ring = PolynomialRingSpec(n, field_char)
    nonfaces = [s for s in _subsets(n) if not delta.contains(s)]
    minimal = [s for s in nonfaces if not any(t < s for t in nonfaces)]
    return minimalize([_indicator(s, n) for s in minimal], ring)


def complex_of(a: MonomialIdeal) -> SimplicialComplex:
    """Inverse of :func:`stanley_reisner` on square-free proper ideals."""
    if not is_squarefree(a):
        raise InputError(f"{a} is not square-free")
    if a.is_unit():
        raise InputError("the unit ideal has no Stanley-Reisner complex")
    n = a.num_vars
    faces = [s for s in _subsets(n) if not a.contains(_indicator(s, n))]
    return SimplicialComplex(n, _antichain_max(faces))


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """Complements of the non-faces."""
    if not delta.is_proper():
        raise InputError("Alexander duality needs a complex that is neither void nor the full simplex")
    n = delta.vertex_count
    full = frozenset(range(n))
    faces = [full - s for s in _subsets(n) if not delta.contains(s)]
    return SimplicialComplex(n, _antichain_max(faces))


def all_complexes(n: int) -> list:
    """Every non-void simplicial complex on ``n`` labeled vertices, each once.

    Complexes are enumerated as antichains of subsets of ``{0..n-1}``; the
    order is deterministic.
    """
    subsets = sorted(_subsets(n), key=lambda s: (len(s), sorted(s)))
    out = []

    def extend(start, chosen):
        if chosen:
            out.append(SimplicialComplex(n, frozenset(chosen)))
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if any(s <= c or c <= s for c in chosen):
                continue
            extend(idx + 1, chosen + [s])

    extend(0, [])
    return out
