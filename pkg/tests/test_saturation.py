import pytest
from hypothesis import given, settings

from arcmodel.arcs import NEG_INF, Arc, ArcSet
from arcmodel.errors import NotSaturated, ResourceLimit
from arcmodel.hom import cone, ext_dim, fiber, hom_dim
from arcmodel.saturation import (
    SaturatedArcSet,
    enumerate_saturated,
    is_saturated,
    is_twist_stable,
    join,
    meet,
    saturate,
)

from _oracles import brute_saturated_sets, catalan, naive_saturate
from conftest import arc_sets

N = NEG_INF
SIX = {Arc(a, b) for a in range(4) for b in range(4) if a < b}


def arcs(*pairs):
    return {Arc(a, b) for a, b in pairs}


@pytest.mark.parametrize(
    "s, want",
    [
        (arcs((0, 2), (1, 3)), False),
        (arcs((0, 1), (1, 2), (0, 2)), True),
        (set(), True),
        (arcs((N, 2), (0, 2)), False),  # needs (-inf, 0)
        (arcs((N, 2), (0, 2), (N, 0)), True),
    ],
)
def test_is_saturated(s, want):
    assert is_saturated(s) is want


@pytest.mark.parametrize(
    "f, want",
    [
        (arcs((0, 2), (1, 3)), SIX),
        (arcs((0, 1)), arcs((0, 1))),
        (arcs((0, 1), (1, 2)), arcs((0, 1), (1, 2), (0, 2))),
        (arcs((0, 1), (2, 3)), arcs((0, 1), (2, 3))),
    ],
)
def test_saturate(f, want):
    assert saturate(f) == want


def test_saturated_constructor_checks():
    with pytest.raises(NotSaturated):
        SaturatedArcSet(arcs((0, 2), (1, 3)))
    assert SaturatedArcSet(SIX) == SIX


def test_meet_join():
    s6 = saturate(SIX)
    assert meet(s6, saturate(arcs((0, 1)))) == arcs((0, 1))
    assert meet(saturate(arcs((0, 1))), saturate(arcs((1, 2)))) == set()
    left, right = saturate(arcs((0, 2), (1, 3))), saturate(arcs((1, 3), (2, 4)))
    assert meet(left, right) == arcs((1, 2), (2, 3), (1, 3))
    assert join(saturate(arcs((0, 1))), saturate(arcs((1, 2)))) == arcs((0, 1), (1, 2), (0, 2))
    assert join(s6, SaturatedArcSet()) == s6
    assert join(saturate(arcs((0, 2))), saturate(arcs((1, 3)))) == SIX


def test_enumerate_small():
    assert enumerate_saturated([0]) == [SaturatedArcSet()]
    assert enumerate_saturated([0, 1]) == [SaturatedArcSet(), SaturatedArcSet(arcs((0, 1)))]
    assert len(enumerate_saturated([0, 1, 2])) == 5


@pytest.mark.parametrize("pts", [[0, 1, 2, 3], [N, 0, 1, 2], [-3, 0, 7, 9, 11]])
def test_enumerate_matches_brute_force(pts):
    got = enumerate_saturated(pts)
    assert {frozenset(s) for s in got} == brute_saturated_sets(pts)
    assert len(got) == len({frozenset(s) for s in got})


@pytest.mark.parametrize("n", range(1, 7))
def test_filter_and_bijection_agree(n):
    pts = list(range(n))
    assert enumerate_saturated(pts, method="filter") == enumerate_saturated(pts, method="bijection")
    assert len(enumerate_saturated(pts)) == catalan(n)


def test_enumerate_sorted_and_capped():
    out = enumerate_saturated(range(4))
    keys = [s.sort_key() for s in out]
    assert keys == sorted(keys)
    with pytest.raises(ResourceLimit):
        enumerate_saturated(range(9))
    assert len(enumerate_saturated(range(9), cap=9)) == catalan(9)


def test_twist_stable_examples():
    assert is_twist_stable(SaturatedArcSet(), 1)
    assert not is_twist_stable(saturate(arcs((0, 1))), 1)
    assert is_twist_stable(saturate(SIX), 0)


@given(arc_sets(max_size=5), arc_sets(max_size=5))
@settings(max_examples=200)
def test_closure_operator(f, g):
    sf = saturate(f)
    assert sf == naive_saturate(f)
    assert set(f) <= sf.arcs
    assert saturate(sf) == sf
    assert set(sf.endpoints()) <= {x for u in f for x in u}
    assert sf.is_finite_type() or not ArcSet(f).is_finite_type()
    if set(f) <= set(g):
        assert sf <= saturate(g)


@given(arc_sets(max_size=4))
@settings(max_examples=200)
def test_cone_and_fiber_closure(f):
    s = saturate(f)
    for u in s:
        for v in s:
            if hom_dim(u, v):
                assert all(x.arc in s for x in cone(u, v))
            if ext_dim(u, v):
                assert all(x.arc in s for x in fiber(u, v))
