"""Executable checks of injectivity, purity and vanishing statements on
concrete monomial ideals.

Every check returns :class:`Verdict` objects. ``result`` is one of
``holds``, ``fails``, ``window-limited`` (holds on the stated finite window),
``not-applicable`` or ``unstabilized``; a failure always carries a witness.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import (
    compare_tables,
    depth,
    ext_chain_maps,
    ext_table,
    ha_stabilization,
    ha_table,
    hm_surjection_maps,
    hm_table,
    hm_tables,
    hochster_table,
    tor_table,
)
from .complexes import (
    CechComplexSpec,
    ChamberGrid,
    cech_chain_map,
    cech_strand_from_survivors,
    cech_survivors,
    chamber_grid,
    frobenius_functor,
    taylor_complex,
)
from .linalg import ExactMatrix, cohomology_basis, induced_map_on_cohomology, kernel_basis, rank
from .monomial import (
    InputError,
    MonomialIdeal,
    PolynomialRingSpec,
    SimplicialComplex,
    _as_vector,
    bracket_power,
    is_squarefree,
    minimalize,
    scale,
    stanley_reisner,
)

PASSING = ("holds", "window-limited")


class HypothesisWarning(UserWarning):
    """A check ran outside the hypotheses of the statement it tests."""


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, frozenset):
        return sorted(x)
    return x


@dataclass(frozen=True)
class Verdict:
    claim: str
    instance: dict
    result: str
    witness: dict | None = None
    window: dict | None = None
    guaranteed: bool = field(default=True, compare=False)

    @property
    def ok(self) -> bool:
        return self.result in PASSING

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "instance": _jsonable(self.instance),
            "result": self.result,
            "witness": _jsonable(self.witness) if self.witness is not None else None,
            "window": _jsonable(self.window) if self.window is not None else None,
        }


@dataclass(frozen=True)
class PowerEndomorphism:
    """x_i -> x_i^{k_i}, iterated ``t`` times."""

    k: tuple
    t: int = 1

    @classmethod
    def uniform(cls, k: int, d: int, t: int = 1):
        return cls((k,) * d, t)

    @property
    def exponent(self) -> tuple:
        return tuple(x ** self.t for x in self.k)

    @property
    def cofinal(self) -> bool:
        return all(x >= 2 for x in self.k)

    def power(self, t: int) -> tuple:
        return tuple(x ** t for x in self.k)


def _endo(phi, d: int) -> PowerEndomorphism:
    if isinstance(phi, PowerEndomorphism):
        _as_vector(phi.k, d)
        return phi
    return PowerEndomorphism(_as_vector(phi, d))


def _ideal_info(a: MonomialIdeal) -> dict:
    return a.to_json()


# -- injectivity along bracket powers ---------------------------------------------


def check_injectivity_chain(a: MonomialIdeal, phi, t_max: int = 1, i_range=None) -> list:
    """Injectivity of ``Ext^i(R/a^[k^t], R) -> Ext^i(R/a^[k^(t+1)], R)`` on every chamber.

    Guaranteed for square-free ``a`` with a cofinal power map; otherwise the
    verdicts are exploratory.
    """
    d = a.num_vars
    phi = _endo(phi, d)
    guaranteed = is_squarefree(a) and phi.cofinal
    if not phi.cofinal:
        warnings.warn(f"k={list(phi.k)} is not cofinal; the chain a^[k^t] need not be cofinal",
                      HypothesisWarning, stacklevel=2)
    i_range = range(d + 1) if i_range is None else i_range
    out = []
    for t in range(t_max + 1):
        maps = ext_chain_maps(a, phi.power(t), phi.power(t + 1))
        for i in i_range:
            inst = {"ideal": _ideal_info(a), "k": list(phi.k), "t": t, "i": i}
            if not phi.cofinal:
                inst["warnings"] = ["hypothesis violated: k not cofinal"]
            bad = maps[i].non_injective() if i in maps else []
            if bad:
                chamber, m = bad[0]
                kern = kernel_basis(m).columns()[0]
                witness = {"chamber": chamber.to_json(), "kernel_vector": list(kern)}
                out.append(Verdict("ext-chain-injectivity", inst, "fails", witness, guaranteed=guaranteed))
            else:
                out.append(Verdict("ext-chain-injectivity", inst, "holds", guaranteed=guaranteed))
    return out


def dual_surjectivity_disagreements(a: MonomialIdeal, k, k2) -> list:
    """Chambers where injectivity of the Ext map at ``alpha`` differs from
    surjectivity of the local-cohomology map at ``-alpha-1``."""
    d = a.num_vars
    k, k2 = _as_vector(k, d), _as_vector(k2, d)
    ext_maps = ext_chain_maps(a, k, k2)
    hm_maps = hm_surjection_maps(a, k, k2)
    out = []
    for i in range(d + 1):
        e, h = ext_maps.get(i), hm_maps[d - i]
        if e is None:
            continue
        pulled = ChamberGrid([{-t for t in ts} for ts in h.grid.thresholds])
        for c in e.grid.refine(pulled).chambers():
            m = e.matrix_at(c.rep)
            n = h.matrix_at(tuple(-x - 1 for x in c.rep))
            inj = rank(m) == m.cols
            surj = rank(n) == n.rows
            if inj != surj:
                out.append((i, c.rep))
    return out


# -- depth ------------------------------------------------------------------------


def check_depth_injectivity(a: MonomialIdeal, window: int | None = None, max_doublings: int = 8) -> Verdict:
    """At ``i = depth(a)`` the map into the stabilized table is injective on the window."""
    i = depth(a)
    inst = {"ideal": _ideal_info(a), "depth": i}
    if i is None:
        return Verdict("depth-injectivity", inst, "holds", witness=None)
    stab = ha_stabilization(a, i, window=window, max_doublings=max_doublings)
    win = {"box": [-stab.window, stab.window], "T": list(stab.T)}
    if not stab.stabilized:
        return Verdict("depth-injectivity", inst, "unstabilized", {"reason": stab.reason}, win)
    for c in stab.chambers:
        m = stab.map.matrix_at(c.rep)
        if rank(m) != m.cols:
            kern = kernel_basis(m).columns()[0]
            return Verdict("depth-injectivity", inst, "fails",
                           {"chamber": c.to_json(), "kernel_vector": list(kern)}, win)
    return Verdict("depth-injectivity", inst, "window-limited", None, win)


# -- purity ---------------------------------------------------------------------------


def _default_window(a: MonomialIdeal, phi: PowerEndomorphism) -> int:
    return 1 + max(phi.k) * (a.max_exponent() + 1)


def check_purity_splitting(a: MonomialIdeal, phi, window: int | None = None) -> Verdict:
    """Check that sigma (x^(k*b) -> x^b, other monomials -> 0) splits the
    induced map of R/a on the box ``[0, w]^d``.

    Both ``sigma(phibar(m)) = m`` and ``sigma(phibar(x_i) * m) = x_i * sigma(m)``
    are checked for every standard monomial ``m`` in the box; the second
    identity for variables gives it for all monomials.
    """
    d = a.num_vars
    phi = _endo(phi, d)
    k = phi.exponent
    inst = {"ideal": _ideal_info(a), "k": list(phi.k)}
    if not is_squarefree(a):
        return Verdict("purity-splitting", inst, "not-applicable",
                       {"reason": "the monomial splitting needs a square-free ideal"}, guaranteed=False)
    w = window if window is not None else _default_window(a, phi)
    win = {"box": [0, w]}

    def sigma(g):
        if any(x % kk for x, kk in zip(g, k)):
            return None
        b = tuple(x // kk for x, kk in zip(g, k))
        return None if a.contains(b) or a.contains(g) else b

    for e in itertools.product(range(w + 1), repeat=d):
        if a.contains(e):
            continue
        img = scale(e, k)
        if a.contains(img) or sigma(img) != e:
            return Verdict("purity-splitting", inst, "fails", {"monomial": list(e), "kind": "section"}, win)
        for i in range(d):
            xi = tuple(int(j == i) for j in range(d))
            prod = tuple(x + y for x, y in zip(scale(xi, k), e))
            left = None if a.contains(prod) else sigma(prod)
            s = sigma(e)
            right = None if s is None else tuple(x + y for x, y in zip(xi, s))
            if right is not None and a.contains(right):
                right = None
            if left != right:
                return Verdict("purity-splitting", inst, "fails",
                               {"monomial": list(e), "variable": i, "kind": "linearity"}, win)
    return Verdict("purity-splitting", inst, "window-limited", None, win)


# -- the induced action on H_m -----------------------------------------------------


@dataclass(frozen=True)
class ActionOnTable:
    """The action on ``H^j_m(R/a)`` on a scaling-stable chamber grid.

    ``edges[c]`` is the chamber containing ``k * rep(c)`` and ``matrices[c]`` the
    action from the piece at ``c`` to the piece at ``edges[c]``.
    """

    j: int
    k: tuple
    grid: ChamberGrid
    dims: dict
    edges: dict
    matrices: dict

    def is_injective(self) -> bool:
        return all(rank(m) == m.cols for m in self.matrices.values())

    def iterate(self, ix, n: int) -> ExactMatrix:
        """Matrix of the n-th iterate starting at chamber ``ix``."""
        m = ExactMatrix.identity(next(iter(self.matrices.values())).field, self.dims[ix])
        cur = ix
        for _ in range(n):
            m = self.matrices[cur] @ m
            cur = self.edges[cur]
        return m

    def cycles(self) -> list:
        seen = set()
        out = []
        for ix in self.grid.indices():
            path = []
            cur = ix
            while cur not in seen and cur not in path:
                path.append(cur)
                cur = self.edges[cur]
            if cur in path:
                out.append(tuple(path[path.index(cur):]))
            seen.update(path)
        return out

    def transient_depth(self) -> int:
        on_cycle = {c for cyc in self.cycles() for c in cyc}
        longest = 0
        for ix in self.grid.indices():
            n, cur = 0, ix
            while cur not in on_cycle:
                cur = self.edges[cur]
                n += 1
            longest = max(longest, n)
        return longest

    def nilpotency_index(self):
        """Least ``n`` with a zero n-th iterate, or ``None`` if no iterate vanishes."""
        cyc = self.cycles()
        ell = max(len(c) for c in cyc)
        D = max((self.dims[c] for cy in cyc for c in cy), default=0)
        bound = self.transient_depth() + ell * (D + 1)
        for n in range(bound + 1):
            if all(self.iterate(ix, n).is_zero() for ix in self.grid.indices()):
                return n
        return None


def action_grid(a: MonomialIdeal) -> ChamberGrid:
    """Fine grid (singletons between the thresholds) so that scaling by any
    k >= 1 maps every chamber into a single chamber."""
    return chamber_grid(CechComplexSpec.on_variables(a), fine=True)


def phi_action(a: MonomialIdeal, phi, j: int) -> ActionOnTable:
    """Strand-level action on ``H^j_m(R/a)``: the Cech summand at ``(S, alpha)``
    goes to the summand at ``(S, k*alpha)`` with coefficient 1."""
    d = a.num_vars
    phi = _endo(phi, d)
    k = phi.exponent
    spec = CechComplexSpec.on_variables(a)
    sup = spec.supports()
    grid = action_grid(a)
    dims, edges, mats = {}, {}, {}
    memo = {}
    for ix in grid.indices():
        alpha = grid.chamber(ix).rep
        beta = scale(alpha, k)
        edges[ix] = grid.index_of(beta)
        s_src = cech_survivors(spec, alpha, sup)
        s_tgt = cech_survivors(spec, beta, sup)
        key = (s_src, s_tgt)
        if key not in memo:
            src = cech_strand_from_survivors(spec, alpha, s_src)
            tgt = cech_strand_from_survivors(spec, beta, s_tgt)
            cm = cech_chain_map(src, tgt)
            cm.check()
            memo[key] = induced_map_on_cohomology(cm, j, check=False)
        mats[ix] = memo[key]
        dims[ix] = mats[ix].cols
    return ActionOnTable(j, k, grid, dims, edges, mats)


def check_rspan_surjectivity(a: MonomialIdeal, phi, j: int, window: int | None = None) -> Verdict:
    """Every piece of ``H^j_m(R/a)`` in the box ``[-w, w]^d`` is spanned by
    ``x^(alpha - k*beta) * phibar(H_beta)`` over ``beta`` in the box."""
    d = a.num_vars
    phi = _endo(phi, d)
    k = phi.exponent
    w = window if window is not None else _default_window(a, phi)
    if w < 0:
        # beta = 0 always qualifies, so only an empty box has no admissible beta
        raise InputError(f"window {w} is empty; need w >= 0")
    spec = CechComplexSpec.on_variables(a)
    sup = spec.supports()
    inst = {"ideal": _ideal_info(a), "k": list(phi.k), "j": j}
    win = {"box": [-w, w]}
    box = list(itertools.product(range(-w, w + 1), repeat=d))
    surv = {p: cech_survivors(spec, p, sup) for p in box}
    cycles = {}

    def reps(p):
        if surv[p] not in cycles:
            st = cech_strand_from_survivors(spec, p, surv[p])
            r, _ = cohomology_basis(st.complex, j)
            cycles[surv[p]] = (st, r)
        return cycles[surv[p]]

    for alpha in box:
        st_a, reps_a = reps(alpha)
        h = len(reps_a)
        if not h:
            continue
        _, bnd = cohomology_basis(st_a.complex, j)
        ranges = [range(-w, min(w, ai // ki) + 1) for ai, ki in zip(alpha, k)]
        seen = set()
        cols = list(bnd.columns())
        for beta in itertools.product(*ranges):
            if surv[beta] in seen:
                continue
            seen.add(surv[beta])
            st_b, reps_b = reps(beta)
            if not reps_b:
                continue
            comp = cech_chain_map(st_b, st_a).component(j)
            cols.extend(comp.apply(v) for v in reps_b)
        fld = st_a.complex.field
        n = st_a.complex.dim(j)
        span = rank(ExactMatrix.from_columns(fld, cols, n)) - bnd.cols if cols else 0
        if span != h:
            return Verdict("rspan-surjectivity", inst, "fails",
                           {"alpha": list(alpha), "dim": h, "spanned": span}, win)
    return Verdict("rspan-surjectivity", inst, "window-limited", None, win)


# -- vanishing ------------------------------------------------------------------


def check_vanishing_criterion(a: MonomialIdeal, phi=2) -> list:
    """For each i: ``H^i_a(R) = 0`` iff some iterate of the action on
    ``H^(d-i)_m(R/a)`` is zero (chamber automaton)."""
    d = a.num_vars
    phi = _endo(phi, d)
    if not phi.cofinal:
        warnings.warn("non-cofinal power map", HypothesisWarning, stacklevel=2)
    out = []
    for i in range(d + 1):
        action = phi_action(a, phi, d - i)
        nil = action.nilpotency_index()
        vanishes = ha_table(a, i).is_zero()
        inst = {"ideal": _ideal_info(a), "k": list(phi.k), "i": i,
                "nilpotency_index": nil, "ha_vanishes": vanishes}
        if (nil is not None) == vanishes:
            out.append(Verdict("vanishing-criterion", inst, "holds", guaranteed=phi.cofinal))
        else:
            if vanishes:
                ix = next(ix for ix in action.grid.indices() if action.dims[ix])
                wit = {"chamber": action.grid.chamber(ix).to_json(), "note": "action never becomes zero"}
            else:
                c, n = ha_table(a, i).nonzero()[0]
                wit = {"chamber": c.to_json(), "ha_dim": n, "note": "action is nilpotent"}
            out.append(Verdict("vanishing-criterion", inst, "fails", wit, guaranteed=phi.cofinal))
    return out


def check_vanishing_equivalence(delta: SimplicialComplex, field_char: int = 0) -> Verdict:
    """``H^i_a(S) = 0`` iff ``H^(d-i)_m(S/a) = 0`` for the Stanley-Reisner ideal,
    with the right side confirmed by Hochster's formula."""
    a = stanley_reisner(delta, field_char)
    d = a.num_vars
    inst = {"complex": delta.sorted_facets(), "ideal": _ideal_info(a)}
    pattern = []
    for i in range(d + 1):
        ha0 = ha_table(a, i).is_zero()
        hm = hm_table(a, d - i)
        hm0 = hm.is_zero()
        hoch = compare_tables(hm, hochster_table(delta, d - i, field_char))
        pattern.append([i, not ha0, not hm0])
        if hoch:
            return Verdict("vanishing-equivalence", inst, "fails",
                           {"i": i, "note": "Hochster and Cech disagree", "alpha": list(hoch[0])})
        if ha0 != hm0:
            return Verdict("vanishing-equivalence", inst, "fails",
                           {"i": i, "ha_zero": ha0, "hm_zero": hm0})
    inst["nonvanishing"] = [[i, d - i] for i, x, _ in pattern if x]
    return Verdict("vanishing-equivalence", inst, "holds")


# -- Ext/Tor and the functor -------------------------------------------------------


def check_ext_tor(a: MonomialIdeal, b: MonomialIdeal, i: int | None = None) -> Verdict:
    """``dim Ext^i(R/a, R/b) = dim Tor_(d-i)(Ext^d(R/a, R), R/b)`` on every chamber."""
    if not a.is_m_primary():
        raise InputError(f"{a} is not m-primary")
    d = a.num_vars
    inst = {"ideal": _ideal_info(a), "coefficients": _ideal_info(b)}
    indices = range(d + 1) if i is None else [i]
    for n in indices:
        bad = compare_tables(ext_table(a, n, coeff=b), tor_table(a, b, d - n))
        if bad:
            alpha = bad[0]
            return Verdict("ext-tor", dict(inst, i=n), "fails",
                           {"alpha": list(alpha), "ext": ext_table(a, n, coeff=b).dim_at(alpha),
                            "tor": tor_table(a, b, d - n).dim_at(alpha)})
    if i is not None:
        inst["i"] = i
    return Verdict("ext-tor", inst, "holds")


def check_example_3_2(d: int, t: int = 1, field_char: int = 0) -> Verdict:
    """``H^d_m(R/(x_1)) = 0`` while ``Ext^d(R/a_t, R/(x_1)) != 0`` for
    ``a_t = (x_1^(2t), ..., x_d^(2t))``: the map cannot be injective."""
    if d < 1:
        raise InputError("d must be at least 1")
    ring = PolynomialRingSpec(d, field_char)
    x1 = minimalize([ring.variable(0)], ring)
    a = minimalize([tuple(2 * t * v for v in ring.variable(i)) for i in range(d)], ring)
    hm = hm_table(x1, d)
    ext = ext_table(a, d, coeff=x1)
    inst = {"d": d, "t": t, "ideal": _ideal_info(a), "hm_zero": hm.is_zero(), "ext_zero": ext.is_zero()}
    if hm.is_zero() and not ext.is_zero():
        c, n = ext.nonzero()[0]
        return Verdict("example-non-injective", inst, "holds", {"ext_chamber": c.to_json(), "dim": n})
    return Verdict("example-non-injective", inst, "fails", None)


def check_phi_ext_iso(a: MonomialIdeal, k, i: int | None = None) -> Verdict:
    """Phi(Taylor(a)) equals Taylor(a^[k]) and
    ``dim Ext^i(R/a^[k], R)_alpha = dim Ext^i(R/a, R)_(floor(alpha/k))``."""
    d = a.num_vars
    k = _as_vector(k, d)
    inst = {"ideal": _ideal_info(a), "k": list(k)}
    phi_t = frobenius_functor(taylor_complex(a), k)
    big = bracket_power(a, k)
    if phi_t != taylor_complex(big):
        return Verdict("phi-ext-iso", inst, "fails", {"note": "Phi(Taylor(a)) != Taylor(a^[k])"})
    indices = range(d + 1) if i is None else [i]
    for n in indices:
        bad = compare_tables(ext_table(big, n), ext_table(a, n), "floor", k)
        if bad:
            return Verdict("phi-ext-iso", dict(inst, i=n), "fails", {"alpha": list(bad[0])})
    if i is not None:
        inst["i"] = i
    return Verdict("phi-ext-iso", inst, "holds")
