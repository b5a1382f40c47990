"""Exact dense linear algebra over Q and GF(p), plus finite cochain complexes.

Matrices are small (a few hundred rows at most), so everything is plain Python
lists with :class:`fractions.Fraction` in characteristic 0 and reduced ints mod p
otherwise. Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .monomial import InputError, _is_prime


class ComplexError(RuntimeError):
    """A constructed complex or chain map violates d*d = 0 or commutation."""


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise InputError(f"characteristic must be 0 or prime, got {self.characteristic}")

    def __call__(self, x):
        p = self.characteristic
        if p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else x
        return int(x)

    def inv(self, x):
        p = self.characteristic
        if p:
            return pow(x, -1, p)
        return Fraction(1) / x


# -- elimination kernels ----------------------------------------------------


def _rref(rows: list, ncols: int, p: int, full: bool = True):
    """Row reduce ``rows`` in place; returns the pivot columns.

    With ``full=False`` only the forward pass runs (enough for rank).
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if p:
            inv = pow(prow[c], -1, p)
            if inv != 1:
                prow = [x * inv % p for x in prow]
            rows[r] = prow
            targets = range(nrows) if full else range(r + 1, nrows)
            for i in targets:
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    row = rows[i]
                    rows[i] = [(x - f * y) % p for x, y in zip(row, prow)]
        else:
            pv = prow[c]
            if pv != 1:
                prow = [x / pv if x else x for x in map(Fraction, prow)]
            rows[r] = prow
            targets = range(nrows) if full else range(r + 1, nrows)
            for i in targets:
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    row = rows[i]
                    rows[i] = [x - f * y if y else x for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
    return pivots


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix with exact entries; ``data`` is a tuple of row tuples."""

    field: FieldSpec
    rows: int
    cols: int
    data: tuple = field(repr=False)

    @classmethod
    def from_rows(cls, fld: FieldSpec, rows: Sequence[Sequence], cols: int | None = None):
        rows = [tuple(fld(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise InputError("ragged matrix rows")
        return cls(fld, len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, fld: FieldSpec, rows: int, cols: int):
        return cls(fld, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, fld: FieldSpec, n: int):
        return cls(fld, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, fld: FieldSpec, columns: Sequence[Sequence], rows: int):
        data = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(fld, rows, len(columns), data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def columns(self) -> list:
        return [tuple(r[j] for r in self.data) for j in range(self.cols)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.characteristic
        cols = other.columns()
        out = []
        for r in self.data:
            row = []
            for c in cols:
                s = sum(x * y for x, y in zip(r, c) if x and y)
                row.append(s % p if p else s)
            out.append(tuple(row))
        return ExactMatrix(self.field, self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        p = self.field.characteristic
        out = []
        for r in self.data:
            s = sum(x * y for x, y in zip(r, v) if x and y)
            out.append(s % p if p else s)
        return tuple(out)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return ExactMatrix(self.field, self.rows, self.cols + other.cols,
                           tuple(a + b for a, b in zip(self.data, other.data)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for ra, rb in zip(self.data, other.data) for x, y in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def tolist(self) -> list:
        return [[self.field(x) for x in r] for r in self.data]


def rank(m: ExactMatrix) -> int:
    if not m.rows or not m.cols:
        return 0
    rows = [list(r) for r in m.data]
    return len(_rref(rows, m.cols, m.field.characteristic, full=False))


def rref(m: ExactMatrix):
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in m.data]
    piv = _rref(rows, m.cols, m.field.characteristic)
    return ExactMatrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in rows)), piv


def kernel_basis(m: ExactMatrix) -> ExactMatrix:
    """Columns spanning the null space, one per free column of the RREF.

    Basis vector ``j`` has a 1 in the j-th free coordinate and zeros in the other
    free coordinates, so the basis is in column-echelon form.
    """
    p = m.field.characteristic
    n = m.cols
    if not m.rows:
        return ExactMatrix.identity(m.field, n)
    rows = [list(r) for r in m.data]
    piv = _rref(rows, n, p)
    pivset = set(piv)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(piv):
            x = rows[r][f]
            if x:
                v[c] = (-x) % p if p else m.field(-x)
        basis.append(tuple(v))
    return ExactMatrix.from_columns(m.field, basis, n)


def image_basis(m: ExactMatrix) -> ExactMatrix:
    """Columns spanning the column space, in reduced echelon form."""
    if not m.rows or not m.cols:
        return ExactMatrix(m.field, m.rows, 0, tuple(() for _ in range(m.rows)))
    rows = [list(c) for c in m.columns()]
    piv = _rref(rows, m.rows, m.field.characteristic)
    return ExactMatrix.from_columns(m.field, [tuple(rows[i]) for i in range(len(piv))], m.rows)


def solve(a: ExactMatrix, b: Sequence):
    """A solution x of a @ x = b, or None when inconsistent."""
    p = a.field.characteristic
    rows = [list(r) + [a.field(y)] for r, y in zip(a.data, b)]
    piv = _rref(rows, a.cols + 1, p)
    if piv and piv[-1] == a.cols:
        return None
    x = [0] * a.cols
    for r, c in enumerate(piv):
        x[c] = a.field(rows[r][-1])
    return tuple(x)


# -- finite complexes -------------------------------------------------------


@dataclass(frozen=True)
class FiniteComplex:
    """Cochain complex of finite-dimensional spaces.

    ``dims[n]`` is the dimension at cohomological spot ``start + n`` and
    ``maps[n]`` (shape ``dims[n+1] x dims[n]``) is the differential leaving it.
    """

    field: FieldSpec
    dims: tuple
    maps: tuple
    start: int = 0

    def __post_init__(self):
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ComplexError("need one map between each pair of consecutive terms")
        for n, m in enumerate(self.maps):
            if m.shape != (self.dims[n + 1], self.dims[n]):
                raise ComplexError(f"map {self.start + n} has shape {m.shape}, expected "
                                   f"{(self.dims[n + 1], self.dims[n])}")

    @property
    def spots(self) -> range:
        return range(self.start, self.start + len(self.dims))

    def dim(self, i: int) -> int:
        n = i - self.start
        return self.dims[n] if 0 <= n < len(self.dims) else 0

    def differential(self, i: int) -> ExactMatrix:
        """Map from spot i to spot i+1 (zero matrices outside the stored range)."""
        n = i - self.start
        if 0 <= n < len(self.maps):
            return self.maps[n]
        return ExactMatrix.zeros(self.field, self.dim(i + 1), self.dim(i))

    def check(self):
        for n in range(len(self.maps) - 1):
            if not (self.maps[n + 1] @ self.maps[n]).is_zero():
                raise ComplexError(f"d^{self.start + n + 1} d^{self.start + n} != 0")

    def euler_characteristic(self) -> int:
        return sum((-1) ** (self.start + n) * x for n, x in enumerate(self.dims))

    def cohomology_dims(self) -> dict:
        ranks = {i: rank(self.differential(i)) for i in self.spots}
        return {i: self.dim(i) - ranks[i] - ranks.get(i - 1, 0) for i in self.spots}

    def is_zero(self) -> bool:
        return not any(self.dims)


def cohomology_dim(c: FiniteComplex, i: int) -> int:
    if not c.dim(i):
        return 0
    return c.dim(i) - rank(c.differential(i)) - rank(c.differential(i - 1))


def cohomology_basis(c: FiniteComplex, i: int):
    """Cycle representatives of a basis of H^i and the boundary basis.

    Representatives are the kernel-basis vectors (column-echelon) that are not in
    the span of the boundaries and earlier representatives, scanned in order.
    """
    z = kernel_basis(c.differential(i))
    b = image_basis(c.differential(i - 1))
    p = c.field.characteristic
    n = c.dim(i)
    ech = _Echelon(n, p)
    for col in b.columns():
        ech.add(col)
    reps = [v for v in z.columns() if ech.add(v)]
    return reps, b


class _Echelon:
    """Incrementally maintained row-echelon basis of a subspace of K^n."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.rows = {}  # pivot column -> normalized vector

    def reduce(self, v):
        p = self.p
        v = list(v)
        for c in sorted(self.rows):
            x = v[c]
            if x:
                r = self.rows[c]
                if p:
                    v = [(a - x * b) % p for a, b in zip(v, r)]
                else:
                    v = [a - x * b if b else a for a, b in zip(v, r)]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        for c, x in enumerate(v):
            if x:
                if self.p:
                    inv = pow(x, -1, self.p)
                    v = [a * inv % self.p for a in v]
                else:
                    v = [Fraction(a) / x for a in v]
                # keep stored rows reduced against the new pivot
                for k, r in self.rows.items():
                    y = r[c]
                    if y:
                        if self.p:
                            self.rows[k] = [(a - y * b) % self.p for a, b in zip(r, v)]
                        else:
                            self.rows[k] = [a - y * b for a, b in zip(r, v)]
                self.rows[c] = v
                return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ChainMap:
    """Degree-preserving map of finite complexes; ``components[i]`` acts at spot i."""

    source: FiniteComplex
    target: FiniteComplex
    components: dict

    def component(self, i: int) -> ExactMatrix:
        if i in self.components:
            return self.components[i]
        return ExactMatrix.zeros(self.source.field, self.target.dim(i), self.source.dim(i))

    def check(self):
        spots = set(self.source.spots) | set(self.target.spots)
        for i in spots:
            f = self.component(i)
            if f.shape != (self.target.dim(i), self.source.dim(i)):
                raise InputError(f"chain map component at {i} has shape {f.shape}")
        for i in spots:
            left = self.component(i + 1) @ self.source.differential(i)
            right = self.target.differential(i) @ self.component(i)
            if left != right:
                raise InputError(f"chain map does not commute with differentials at spot {i}")

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self`` after ``other``."""
        spots = set(other.source.spots) | set(self.target.spots)
        return ChainMap(other.source, self.target,
                        {i: self.component(i) @ other.component(i) for i in spots})


def induced_map_on_cohomology(f: ChainMap, i: int, check: bool = True) -> ExactMatrix:
    """Matrix of H^i(f) in the bases from :func:`cohomology_basis`."""
    if check:
        f.check()
    fld = f.source.field
    src_reps, _ = cohomology_basis(f.source, i)
    tgt_reps, tgt_b = cohomology_basis(f.target, i)
    n_t = f.target.dim(i)
    frame = ExactMatrix.from_columns(fld, list(tgt_b.columns()) + tgt_reps, n_t)
    nb = tgt_b.cols
    comp = f.component(i)
    cols = []
    for v in src_reps:
        x = solve(frame, comp.apply(v))
        if x is None:
            raise ComplexError("image of a cycle is not a cycle")
        cols.append(x[nb:])
    return ExactMatrix.from_columns(fld, cols, len(tgt_reps))


def induced_rank(f: ChainMap, i: int) -> int:
    """rank H^i(f), computed from ranks only (no basis bookkeeping)."""
    z = kernel_basis(f.source.differential(i))
    if not z.cols:
        return 0
    bt = f.target.differential(i - 1)
    img = f.component(i) @ z
    return rank(img.hstack(bt)) - rank(bt)
