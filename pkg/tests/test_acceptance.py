"""Acceptance suite: one test per shipped guarantee, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
Every criterion is checked at its stated tolerance; randomized criteria use
fixed seeds, so the run is reproducible bit for bit.
"""

import functools
import random

from matorder import (EXACT, FLOAT, Matrix, RunConfig, dagger_isotone,
                      diamond_predecessor, diamond_via_dagger_minus,
                      hartwig_spindelbock, is_bidagger, leq_diamond,
                      leq_left_star, leq_minus, leq_right_star, leq_space,
                      leq_star, matrices_equal, moore_penrose, predecessor_mp,
                      projector_range, random_idempotent, recover_idempotent,
                      reverse_order_law, run_property)
from matorder.sampling import random_base_matrix

SEED = 2026


def _report(num: int, desc: str, ok: bool):
    print("%s criterion %02d: %s" % ("PASS" if ok else "FAIL", num, desc))
    assert ok, "criterion %02d failed: %s" % (num, desc)


def test_criterion_01_nilpotent_below_invertible():
    a = Matrix.exact([[0, 1], [0, 0]])
    b = Matrix.exact([[1, 1], [0, 1]])
    ok = (leq_diamond(a, b).verdict
          and not leq_minus(a, b).verdict
          and leq_space(a, b).verdict)
    _report(1, "nilpotent below invertible: diamond and space, not minus", ok)


def test_criterion_02_minus_without_diamond():
    a = Matrix.exact([[0, 1], [0, 0]])
    b = Matrix.exact([[1, 0], [-1, 1]])
    ok = leq_minus(a, b).verdict and not leq_diamond(a, b).verdict
    _report(2, "rank-split pair: minus holds, diamond fails", ok)


def test_criterion_03_projector_transfer_is_one_way():
    a = Matrix.exact([[1, 1], [0, 0]])
    b = Matrix.identity(2)
    pa = projector_range(a)
    ok = (pa == Matrix.exact([[1, 0], [0, 0]])
          and leq_star(pa, projector_range(b)).verdict
          and not leq_star(a, b).verdict)
    _report(3, "star passes to range projectors but not back", ok)


def test_criterion_04_diamond_without_one_sided_star():
    a = Matrix.exact([[1, 0], [0, 0]])
    b = Matrix.exact([[1, 1], [1, -1]])
    ok = (leq_diamond(a, b).verdict
          and not leq_left_star(a, b).verdict
          and not leq_right_star(a, b).verdict)
    _report(4, "diamond pair failing both one-sided star orders", ok)


def test_criterion_05_implication_chains_exact():
    cfg = RunConfig(backend=EXACT, seed=SEED, trials=1000, dim_max=5)
    res = run_property(cfg, "implication-chains")
    _report(5, "order implications on 1000 random exact pairs, dims <= 5",
            res.trials == 1000 and res.failures == 0)


def test_criterion_06_diamond_routes_agree():
    f = run_property(RunConfig(backend=FLOAT, seed=SEED, trials=500,
                               dim_max=5, tol=1e-9), "diamond-routes-agree")
    e = run_property(RunConfig(backend=EXACT, seed=SEED, trials=200,
                               dim_max=4), "diamond-routes-agree")
    ok = f.failures == 0 and e.failures == 0 and f.trials + e.trials >= 500
    _report(6, "four diamond characterizations agree on 700 mixed pairs", ok)


@functools.lru_cache(maxsize=1)
def _constructor_instances():
    out = []
    for i in range(200):
        rng = random.Random("%d:constructors:%d" % (SEED, i))
        n = rng.randint(2, 5)
        r = rng.randint(1, n)
        b = random_base_matrix(n, r, rng)
        t = random_idempotent(r, rng.randint(0, r), rng)
        out.append((b, t))
    return tuple(out)


def test_criterion_07_constructor_soundness():
    bad = 0
    for b, t in _constructor_instances():
        a = diamond_predecessor(b, t)
        hs = hartwig_spindelbock(b)
        if not leq_diamond(a, b).verdict:
            bad += 1
            continue
        if not matrices_equal(predecessor_mp(b, t), moore_penrose(a), 1e-9):
            bad += 1
            continue
        if not matrices_equal(recover_idempotent(a, hs), t, 1e-8):
            bad += 1
    _report(7, "200 seeded constructions: below base, closed-form pinv to "
               "1e-9, parameter recovered to 1e-8", bad == 0)


def test_criterion_08_criteria_match_direct_checks():
    bad = 0
    for b, t in _constructor_instances():
        a = diamond_predecessor(b, t)
        rd, rc = reverse_order_law(a, b)
        bd, bc = is_bidagger(b)
        dd, dc = dagger_isotone(b, t)
        if rd != rc or bd != bc or dd != dc:
            bad += 1
    _report(8, "closed-form criteria equal direct checks on the same 200 "
               "instances", bad == 0)


def test_criterion_09_four_way_equivalences():
    counts = []
    failures = 0
    for name in ("left-star-four-way", "right-star-four-way"):
        for backend, trials in ((EXACT, 300), (FLOAT, 300)):
            res = run_property(RunConfig(backend=backend, seed=SEED,
                                         trials=trials, dim_max=4), name)
            counts.append(res.trials)
            failures += res.failures
    _report(9, "one-sided star four-way readings all-equal on 600 pairs per "
               "side", failures == 0 and sum(counts) == 1200)


def test_criterion_10_partial_isometry_collapse():
    res = run_property(RunConfig(backend=FLOAT, seed=SEED, trials=100,
                                 dim_max=4), "partial-isometry-collapse")
    _report(10, "star, minus, diamond coincide on 100 partial-isometry "
                "pairs", res.trials == 100 and res.failures == 0)


CORPUS = [
    Matrix.zeros(2, 2),
    Matrix.identity(2),
    Matrix.exact([[1, 0], [0, 0]]),
    Matrix.exact([[0, 0], [0, 1]]),
    Matrix.exact([[0, 1], [0, 0]]),
    Matrix.exact([[1, 1], [0, 1]]),
    Matrix.exact([[1, 0], [-1, 1]]),
    Matrix.exact([[0, 0], [1, 0]]),
    Matrix.exact([[1, -1], [0, 1]]),
    Matrix.exact([[2, 0], [0, 1]]),
    Matrix.exact([[2, 0], [0, 0]]),
    Matrix.exact([[1, 1], [0, 0]]),
    Matrix.exact([[1, 0], [1, 0]]),
    Matrix.exact([[1, 1], [1, 1]]),
    Matrix.exact([[1, 1], [1, -1]]),
    Matrix.exact([[0, (0, 1)], [0, 0]]),
    Matrix.exact([[1, (0, 1)], [0, 0]]),
    Matrix.exact([[2, 0], [0, 2]]),
    Matrix.exact([[1, 0], [0, -1]]),
    Matrix.exact([["1/2", 0], [0, 0]]),
]


def test_criterion_11_diamond_is_a_partial_order():
    n = len(CORPUS)
    assert n == 20
    assert len({repr(m) for m in CORPUS}) == n
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            via_def = leq_diamond(CORPUS[i], CORPUS[j]).verdict
            via_dagger = diamond_via_dagger_minus(CORPUS[i], CORPUS[j]).verdict
            assert via_def == via_dagger, (i, j)
            leq[i][j] = via_def
    reflexive = all(leq[i][i] for i in range(n))
    antisymmetric = all(not (leq[i][j] and leq[j][i])
                        for i in range(n) for j in range(n) if i != j)
    transitive = all(not (leq[i][j] and leq[j][k]) or leq[i][k]
                     for i in range(n) for j in range(n) for k in range(n))
    strict = sum(leq[i][j] for i in range(n) for j in range(n) if i != j)
    composed = sum(leq[i][j] and leq[j][k]
                   for i in range(n) for j in range(n) for k in range(n)
                   if i != j and j != k and i != k)
    ok = (reflexive and antisymmetric and transitive
          and strict >= 10 and composed >= 1)
    _report(11, "diamond is reflexive, antisymmetric, transitive on a fixed "
                "20-matrix corpus (8000 triples, %d strict pairs)" % strict,
            ok)
