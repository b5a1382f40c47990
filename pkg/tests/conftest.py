import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

from moncoh import PolynomialRingSpec, SimplicialComplex, minimalize

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def ideals(draw, max_vars=3, max_exp=2, max_gens=4, squarefree=False, proper=True):
    d = draw(st.integers(1, max_vars))
    top = 1 if squarefree else max_exp
    gens = draw(st.lists(st.tuples(*[st.integers(0, top)] * d), min_size=1, max_size=max_gens))
    a = minimalize(gens, PolynomialRingSpec(d))
    if proper and a.is_unit():
        a = minimalize([tuple(1 for _ in range(d))], a.ring)
    return a


@st.composite
def complexes(draw, max_vertices=4):
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(st.frozensets(st.integers(0, n - 1), max_size=n), min_size=1, max_size=5))
    return SimplicialComplex.from_facets(n, facets)


@st.composite
def alphas(draw, d, lo=-4, hi=4):
    return tuple(draw(st.integers(lo, hi)) for _ in range(d))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[name])
