"""Test corpora: every square-free ideal on n variables, or seeded random ideals."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .monomial import InputError, MonomialIdeal, PolynomialRingSpec, all_complexes, is_squarefree, minimalize, stanley_reisner

MODES = ("all-squarefree", "random-monomial", "random-non-squarefree", "random-m-primary")


@dataclass(frozen=True)
class CorpusSpec:
    num_vars: int
    mode: str = "all-squarefree"
    exponent_bound: int = 2
    count: int = 50
    seed: int = 0
    field_char: int = 0
    max_generators: int = 5

    def __post_init__(self):
        if not 1 <= self.num_vars <= 5:
            raise InputError("corpus num_vars must be between 1 and 5")
        if self.mode not in MODES:
            raise InputError(f"unknown corpus mode {self.mode!r}; choose from {', '.join(MODES)}")
        if self.exponent_bound < 1:
            raise InputError("exponent bound must be positive")


def squarefree_corpus(n: int, field_char: int = 0) -> list:
    """Stanley-Reisner ideals of all non-void complexes on n labeled vertices."""
    return [stanley_reisner(delta, field_char) for delta in all_complexes(n)]


def random_ideal(rng: random.Random, d: int, bound: int, max_gens: int, field_char: int = 0) -> MonomialIdeal:
    ring = PolynomialRingSpec(d, field_char)
    while True:
        ngens = rng.randint(1 if d == 1 else 2, max_gens)
        gens = [tuple(rng.randint(0, bound) for _ in range(d)) for _ in range(ngens)]
        a = minimalize(gens, ring)
        if not a.is_unit() and len(a.generators) >= min(d, 2):
            return a


def random_corpus(count: int, max_vars: int, bound: int, seed: int, *, max_gens: int = 5,
                  kind: str = "random-monomial", field_char: int = 0) -> list:
    """``count`` random proper ideals in 1..max_vars variables, reproducible from ``seed``.

    ``kind`` restricts to non-square-free ideals or m-primary ideals (pure powers
    of every variable plus random extra generators).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        # weight toward more variables; one-variable ideals are nearly trivial
        d = rng.choices(range(1, max_vars + 1), weights=range(1, max_vars + 1))[0]
        if kind == "random-m-primary":
            ring = PolynomialRingSpec(d, field_char)
            powers = [rng.randint(1, bound) for _ in range(d)]
            pure = [tuple(e * v for v in ring.variable(i)) for i, e in enumerate(powers)]
            n_extra = rng.randint(1, max(1, max_gens - d))
            # below the pure powers, so extras are not swallowed by them
            extra = [tuple(rng.randint(0, e - 1) for e in powers) for _ in range(n_extra)]
            a = minimalize(pure + extra, ring)
            if a.is_unit():
                continue
        else:
            a = random_ideal(rng, d, bound, max_gens, field_char)
            if kind == "random-non-squarefree" and is_squarefree(a):
                continue
        out.append(a)
    return out


def build_corpus(spec: CorpusSpec) -> list:
    if spec.mode == "all-squarefree":
        return squarefree_corpus(spec.num_vars, spec.field_char)
    return random_corpus(spec.count, spec.num_vars, spec.exponent_bound, spec.seed,
                         max_gens=spec.max_generators, kind=spec.mode, field_char=spec.field_char)


def write_corpus(ideals: list, directory) -> list:
    """One ``ideal_NNNN.json`` per ideal; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for n, a in enumerate(ideals):
        path = directory / f"ideal_{n:04d}.json"
        path.write_text(json.dumps(a.to_json()) + "\n")
        paths.append(path)
    return paths
