"""Acceptance criteria 1-9.  Every check is exact (no tolerances).

Run ``pytest tests/test_acceptance.py`` for one PASS/FAIL line per
criterion in the terminal summary, or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import io as _io
import os
import random
import subprocess
import sys
from pathlib import Path

import pytest

from arcmodel import io
from arcmodel.arcs import NEG_INF, Arc
from arcmodel.cli import run
from arcmodel.dualities import reflect, shift_delta, twist
from arcmodel.exceptional import ExceptionalSequence, endo_quiver, exceptional_sequence
from arcmodel.hom import cone, ext_dim, fiber, hom_dim, rhom_dim
from arcmodel.ncp import alpha, ncp_join, ncp_meet, phi
from arcmodel.oracle import oracle_direct_hom_dim, oracle_ext_dim, oracle_hom_dim
from arcmodel.saturation import enumerate_saturated, is_twist_stable, join, meet, saturate
from arcmodel.verify import arcs_in_range

sys.path.insert(0, str(Path(__file__).parent))
from _oracles import brute_noncrossing_partitions, catalan, naive_saturate  # noqa: E402

pytestmark = pytest.mark.acceptance

RESULTS: dict[int, tuple[str, bool, str]] = {}


def record(n: int, name: str, failures: list, detail: str = "") -> None:
    ok = not failures
    RESULTS[n] = (name, ok, detail if ok else f"{len(failures)} failure(s), first: {failures[0]}")
    print(f"criterion {n} [{name}]: {'PASS' if ok else 'FAIL'} {RESULTS[n][2]}")
    assert ok, RESULTS[n][2]


def random_finite_set(rng: random.Random, lo: int, hi: int, max_arcs: int = 6, minus_inf: bool = True):
    pts = ([NEG_INF] if minus_inf else []) + list(range(lo, hi + 1))
    return [Arc(*sorted(rng.sample(pts, 2))) for _ in range(rng.randint(0, max_arcs))]


def small_saturated_sets():
    """Every saturated set whose endpoints lie in a set of at most 5 points."""
    out = set()
    for pts in ([0, 1, 2, 3, 4], [NEG_INF, 0, 1, 2, 3]):
        out.update(enumerate_saturated(pts))
    return sorted(out, key=lambda s: s.sort_key())


RANGE = arcs_in_range(-4, 4)


def test_c1_oracle_equivalence():
    assert len(RANGE) == 45
    bad = []
    for u in RANGE:
        for v in RANGE:
            h, e = hom_dim(u, v), ext_dim(u, v)
            got = (oracle_hom_dim(u, v, 6), oracle_direct_hom_dim(u, v, 6), oracle_ext_dim(u, v, 6))
            if got != (h, h, e):
                bad.append((str(u), str(v), (h, h, e), got))
    record(1, "oracle equivalence", bad, f"{len(RANGE) ** 2} ordered pairs, 0 mismatches")


def test_c2_catalan_counts():
    bad = []
    expected = [1, 2, 5, 14, 42, 132]
    for n in range(1, 7):
        pts = list(range(n))
        for with_inf in (False, True):
            p = pts + ([NEG_INF] if with_inf else [])
            got = enumerate_saturated(p)
            want = catalan(n + 1) if with_inf else expected[n - 1]
            brute = brute_noncrossing_partitions(p)
            if len(got) != want or len(brute) != want:
                bad.append((n, with_inf, len(got), len(brute), want))
            blocks = {frozenset(frozenset(b) for b in phi(s).blocks) for s in got}
            if blocks != set(brute):
                bad.append((n, with_inf, "partition sets differ"))
    record(2, "Catalan counts", bad, "n=1..6 -> 1,2,5,14,42,132; with -inf -> 2,5,14,42,132,429")


def test_c3_alpha_phi():
    rng = random.Random(20261017)
    bad = []
    exhaustive = small_saturated_sets()
    randoms = [saturate(random_finite_set(rng, -6, 6)) for _ in range(500)]
    for s in exhaustive + randoms:
        p = phi(s)
        if alpha(p) != s or phi(alpha(p)) != p:
            bad.append(("round trip", s))
    pairs = [(s, t) for s in exhaustive for t in exhaustive if s.endpoints() and t.endpoints()]
    pairs += list(zip(randoms, randoms[1:] + randoms[:1]))
    for s, t in pairs:
        p, q = phi(s), phi(t)
        if phi(meet(s, t)) != ncp_meet(p, q) or phi(join(s, t)) != ncp_join(p, q):
            bad.append(("phi hom", s, t))
        if alpha(ncp_meet(p, q)) != meet(s, t) or alpha(ncp_join(p, q)) != join(s, t):
            bad.append(("alpha hom", s, t))
    record(3, "alpha/phi inversion + lattice homomorphism", bad,
           f"{len(exhaustive)} exhaustive + 500 random sets, {len(pairs)} pairs")


def test_c4_closure_laws():
    rng = random.Random(4)
    bad = []
    for _ in range(1000):
        f = random_finite_set(rng, -6, 6)
        g = f + random_finite_set(rng, -6, 6, max_arcs=3)
        sf = saturate(f)
        if not set(f) <= sf.arcs:
            bad.append(("extensive", f))
        if saturate(sf) != sf:
            bad.append(("idempotent", f))
        if not sf <= saturate(g):
            bad.append(("monotone", f, g))
        if sf != naive_saturate(f):
            bad.append(("naive closure", f))
    for _ in range(1000):
        s, t, w = (saturate(random_finite_set(rng, -6, 6)) for _ in range(3))
        checks = [
            meet(s, t) == meet(t, s),
            join(s, t) == join(t, s),
            meet(meet(s, t), w) == meet(s, meet(t, w)),
            join(join(s, t), w) == join(s, join(t, w)),
            meet(s, join(s, t)) == s,
            join(s, meet(s, t)) == s,
            meet(s, s) == s and join(s, s) == s,
        ]
        if not all(checks):
            bad.append(("lattice", s, t, w, checks))
    record(4, "closure-operator and lattice laws", bad, "1000 random sets, 1000 random triples")


def test_c5_cone_fiber_closure():
    rng = random.Random(5)
    bad = []
    n_cones = n_fibers = 0
    for _ in range(1000):
        s = saturate(random_finite_set(rng, -6, 6))
        for u in s:
            for v in s:
                if hom_dim(u, v):
                    n_cones += 1
                    if any(x.arc not in s for x in cone(u, v)):
                        bad.append(("cone", s, u, v))
                if ext_dim(u, v):
                    n_fibers += 1
                    if any(x.arc not in s for x in fiber(u, v)):
                        bad.append(("fiber", s, u, v))
    record(5, "cone/fiber closure", bad, f"{n_cones} cones, {n_fibers} fibers checked")


def test_c6_exceptional_collections():
    rng = random.Random(6)
    bad = []
    for _ in range(500):
        f = random_finite_set(rng, -5, 5)
        seq = exceptional_sequence(f).arcs
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if rhom_dim(seq[j], seq[i], 0) or rhom_dim(seq[j], seq[i], 1):
                    bad.append(("backward RHom", f, seq[i], seq[j]))
                if ext_dim(seq[i], seq[j]):
                    bad.append(("not strong", f, seq[i], seq[j]))
        if saturate(seq) != saturate(f):
            bad.append(("generation", f))
        chains = endo_quiver(ExceptionalSequence(seq)).chains
        if sorted(u for c in chains for u in c) != sorted(seq):
            bad.append(("chains do not partition", f))
        for c in chains:
            if any(u.left != c[0].left for u in c) or any(c[k].right >= c[k + 1].right for k in range(len(c) - 1)):
                bad.append(("chain shape", f, c))
            for i in range(len(c)):
                for j in range(i + 1, len(c)):
                    if hom_dim(c[i], c[j]) != 1:
                        bad.append(("within-chain hom", f, c[i], c[j]))
        for x, cx in enumerate(chains):
            for y, cy in enumerate(chains):
                if x != y and any(hom_dim(u, v) or ext_dim(u, v) for u in cx for v in cy):
                    bad.append(("across-chain", f, cx, cy))
    record(6, "exceptional collections", bad, "500 random sets over [-5,5]")


def test_c7_duality_and_twist():
    bad = []
    for j in (-3, 0, 4):
        for u in RANGE:
            for v in RANGE:
                for n in (-1, 0, 1, 2):
                    rhs = rhom_dim(reflect(v, j), reflect(u, j), n + shift_delta(v) - shift_delta(u))
                    if rhom_dim(u, v, n) != rhs:
                        bad.append(("duality", j, str(u), str(v), n))
    for i in (-2, 1, 5):
        for u in RANGE:
            for v in RANGE:
                for n in (-1, 0, 1, 2):
                    if rhom_dim(u, v, n) != rhom_dim(twist(u, i), twist(v, i), n):
                        bad.append(("twist", i, str(u), str(v), n))
    for u in RANGE:
        for j in (-3, 0, 4):
            if reflect(u, j) != twist(reflect(u, 0), j) or reflect(reflect(u, j), j) != u:
                bad.append(("reflection law", str(u), j))
    record(7, "duality exchange and twist equivariance", bad, "2025 pairs x j in {-3,0,4} x i in {-2,1,5}")


def test_c8_twist_rigidity():
    bad = []
    sets = small_saturated_sets()
    for s in sets:
        for i in (-5, -3, -2, -1, 1, 2, 3, 5):
            if is_twist_stable(s, i) != (len(s) == 0):
                bad.append((s, i))
    record(8, "finite twist-rigidity", bad, f"{len(sets)} saturated sets")


def _run_cli(argv, stdin_text=None):
    old_in, old_out = sys.stdin, sys.stdout
    sys.stdin = _io.StringIO(stdin_text or "")
    sys.stdout = buf = _io.StringIO()
    try:
        code = run(argv)
    finally:
        sys.stdin, sys.stdout = old_in, old_out
    return code, buf.getvalue()


def test_c9_cli():
    bad = []
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "arcmodel.cli", "verify", "--range", "-4..4", "--window", "8"],
        capture_output=True, text=True, env=env,
    )
    if proc.returncode != 0 or "mismatches (direct oracle): 0" not in proc.stdout:
        bad.append(("verify", proc.returncode, proc.stdout[-300:], proc.stderr[-300:]))
    rng = random.Random(9)
    samples = [saturate(random_finite_set(rng, -6, 6)) for _ in range(100)]
    for s in samples:
        text = io.dumps(io.arcset_to_json(s)) + "\n"
        c1, mid = _run_cli(["to-ncp"], text)
        c2, back = _run_cli(["from-ncp"], mid)
        if (c1, c2) != (0, 0) or back != text:
            bad.append(("round trip", text, mid, back))
        c3, again = _run_cli(["to-ncp"], text)
        if again != mid:
            bad.append(("determinism", text))
    # and once through a real shell pipe
    text = io.dumps(io.arcset_to_json(samples[0]))
    cmd = f"{sys.executable} -m arcmodel.cli to-ncp | {sys.executable} -m arcmodel.cli from-ncp"
    proc = subprocess.run(cmd, shell=True, input=text + "\n", capture_output=True, text=True)
    if proc.returncode != 0 or proc.stdout != text + "\n":
        bad.append(("shell pipe", proc.stdout, proc.stderr))
    record(9, "CLI verify + to-ncp|from-ncp round trip", bad, "verify exit 0; 100 round trips byte-identical")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
