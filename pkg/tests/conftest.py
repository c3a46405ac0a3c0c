import random

import pytest
from hypothesis import strategies as st

from arcmodel.arcs import NEG_INF, Arc
from arcmodel.kernels import available_backends

ENDPOINTS = st.one_of(st.just(NEG_INF), st.integers(-6, 6))


@st.composite
def arcs(draw, lo=-6, hi=6, minus_inf=True):
    pts = st.integers(lo, hi)
    if minus_inf:
        pts = st.one_of(st.just(NEG_INF), pts)
    a = draw(pts)
    b = draw(st.integers(lo, hi).filter(lambda b: a is NEG_INF or b > a))
    return Arc(a, b)


def arc_sets(max_size=6, **kw):
    return st.frozensets(arcs(**kw), max_size=max_size)


def random_arcs(rng: random.Random, lo: int, hi: int, k: int, minus_inf: bool = True) -> list[Arc]:
    pts = ([NEG_INF] if minus_inf else []) + list(range(lo, hi + 1))
    out = []
    for _ in range(k):
        a, b = sorted(rng.sample(pts, 2))
        out.append(Arc(a, b))
    return out


@pytest.fixture(params=sorted(available_backends()))
def backend(request):
    return available_backends()[request.param]


@pytest.fixture
def A():
    """Shorthand arc constructor accepting ``None`` for -inf."""
    return lambda a, b: Arc(NEG_INF if a is None else a, b)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        name, ok, detail = RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {name}: {detail}")
