"""Acceptance criteria 1-11, one test each; every test logs a PASS or FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import random
import time

from kncactus import cactus_verify as cv
from kncactus.core_tableaux import (
    Tableau,
    coadmissible_inverse,
    coadmissible_of,
    enumerate_kn,
    from_cells,
    is_admissible,
    kn_violation,
    parse,
    partitions_of,
    partitions_upto,
    render,
    split_tableau,
)
from kncactus.crystal import generate_crystal
from kncactus.sjdt import anti_rectify, rectify_with_journal
from kncactus.virtualization import embed_E, invert_E
from kncactus.words_plactic import column_insert_A, reverse_column_insert_A
from kncactus.worked_examples import run_fixture

# The C2 crystal of shape (2,1) as drawn: f_1 and f_2 arrows.
FIGURE_F1 = [
    ("1,1/2", "1,2/2"), ("1,1/-2", "1,2/-2"), ("1,2/-2", "2,2/-2"), ("2,2/-2", "2,2/-1"),
    ("2,-2/-2", "2,-2/-1"), ("-2,-2/-1", "-2,-1/-1"), ("1,-2/-2", "1,-1/-2"), ("2,-1/-2", "2,-1/-1"),
    ("1,-1/-2", "2,-1/-2"), ("1,-2/2", "1,-1/2"),
]
FIGURE_F2 = [
    ("1,1/2", "1,1/-2"), ("2,-1/-1", "-2,-1/-1"), ("1,-1/2", "1,-1/-2"), ("1,-2/2", "1,-2/-2"),
    ("1,2/2", "1,-2/2"), ("2,2/-2", "2,-2/-2"), ("2,2/-1", "2,-2/-1"), ("2,-2/-1", "-2,-2/-1"),
]


def _log(log, k, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    if log is not None:
        log.append(line)
    print(line)
    return ok


# ---------------------------------------------------------------------------


def criterion_1():
    start = time.perf_counter()
    g = generate_crystal(Tableau.yamanouchi((2, 1), 2))
    elapsed = time.perf_counter() - start
    got = {(render(g.vertices[s]), i, render(g.vertices[d])) for s, i, d in g.arrows}
    want = {(a, 1, b) for a, b in FIGURE_F1} | {(a, 2, b) for a, b in FIGURE_F2}
    ok = len(g) == 16 and got == want and len(g.arrows) == len(want) and elapsed < 1.0
    return ok, f"{len(g)} vertices, {len(got & want)}/{len(want)} arrows match, {elapsed:.3f}s"


def criterion_2():
    bad = parse("2,2/-2,-2", 2, check=False)
    split = split_tableau(bad)
    cells = {}
    for c, (_, (lc, rc)) in enumerate(split):
        for r, x in enumerate(lc):
            cells[(r, 2 * c)] = x
        for r, x in enumerate(rc):
            cells[(r, 2 * c + 1)] = x
    split_text = render(from_cells(cells, 2))
    reason = kn_violation(bad) or ""
    ok = (is_admissible((2, -2), 2) and not is_admissible((1, -1), 2)
          and split_text == "1,2,1,2/-2,-1,-2,-1" and reason.startswith("split not semi-standard"))
    return ok, f"(2,-2) admissible, (1,-1) not, split {split_text}, {reason}"


def _fixture(name):
    rep = run_fixture(name)
    bad = [c.id for c in rep.checks if not c.ok]
    return rep.passed, f"fixture {name}: {len(rep.checks) - len(bad)}/{len(rep.checks)} checks" + (
        f", failing {bad}" if bad else "")


def criterion_3():
    return _fixture("full-reversal-c3")


def criterion_4():
    ok, detail = _fixture("partial-reversal-c4")
    rep = run_fixture("partial-reversal-c4")
    final = next(c for c in rep.checks if c.id == "result")
    wt = next(c for c in rep.checks if c.id == "window_weight")
    return ok and final.ok and wt.ok, detail + ", final tableau and window weight (-1,2,-1)"


def criterion_5():
    return _fixture("virtualization-n6")


def criterion_6():
    return _fixture("bk-c2")


def criterion_7():
    return _fixture("counterexample-c2")


CRITERION_8 = [
    ("a", "crystal"), ("b", "jsp"), ("c", "bkc"), ("d", "bn"), ("e", "coplactic"), ("f", "virtual"),
    ("f", "vjsp"), ("g", "switching"),
]


def criterion_8():
    start = time.perf_counter()
    failed, checks = [], 0
    for n, cells in ((2, 5), (3, 4)):
        for part, suite in CRITERION_8:
            rep = cv.run_suite(suite, n, cells)
            checks += rep.checked
            if not rep.passed:
                failed.append(f"({part}) {suite} n={n}: {rep.failures[0].relation} at {rep.failures[0].tableau}")
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < 600
    return ok, f"{checks} checks, {len(failed)} failing suites, {elapsed:.0f}s" + (f"; {failed}" if failed else "")


def criterion_9():
    probes = cv.non_relation_probes(3)
    on_kn = cv.verify(probes, cv.kn_universe(3, 5))
    on_virtual = cv.verify(probes, cv.virtual_universe(3, 5))
    found = {w.relation: w.tableau for w in on_kn.failures + on_virtual.failures}
    ok = on_kn.passed and on_virtual.passed and len(found) == 3
    return ok, "witnesses " + "; ".join(f"{k} at T={v}" for k, v in found.items())


def criterion_10():
    reps = [cv.run_suite("character", n, cells) for n, cells in ((2, 5), (3, 4))]
    return all(r.passed for r in reps), ", ".join(f"{r.universe}: {r.checked} reflection checks" for r in reps)


def _skew_kn(n, cells):
    return cv.skew_kn(n, cells)


def _random_skew(rng, n):
    while True:
        outer = rng.choice([lam for lam in partitions_upto(7, n + 1) if lam])
        inner = rng.choice([mu for k in range(sum(outer)) for mu in partitions_of(k, len(outer), outer[0])
                            if all(a <= b for a, b in zip(mu, outer)) and len(mu) <= len(outer)])
        pool = enumerate_kn(outer, n, inner)
        if pool:
            return rng.choice(pool)


def criterion_11():
    rng = random.Random(20261017)
    from conftest import random_kn, straight_kn

    failures = []

    def check(name, ok, t):
        if not ok and len(failures) < 5:
            failures.append(f"{name} at {render(t)}")

    small = straight_kn(2, 4) + straight_kn(3, 3)
    randoms = [random_kn(rng, rng.choice((2, 3, 4)), 6) for _ in range(1000)]
    skews = _skew_kn(2, 4) + [_random_skew(rng, rng.choice((2, 3))) for _ in range(1000)]
    counts = {"parse/render": 0, "Phi": 0, "E": 0, "rectify": 0, "insertion": 0}
    for t in small + randoms + skews:
        check("parse/render", parse(render(t), t.n) == t, t)
        counts["parse/render"] += 1
        for col in t.columns():
            check("Phi", coadmissible_inverse(coadmissible_of(col, t.n), t.n) == col, t)
            counts["Phi"] += 1
    for t in small + randoms:
        check("E", invert_E(embed_E(t), t.outer, t.n) == t, t)
        counts["E"] += 1
        word = [x if x > 0 else 2 * t.n + 1 + x for _, _, x in t.cells()]
        rng.shuffle(word)
        p, q = column_insert_A(None, word, 2 * t.n)
        check("insertion", column_insert_A(None, reverse_column_insert_A(p, q), 2 * t.n) == (p, q), t)
        counts["insertion"] += 1
    for t in skews:
        r, journal = rectify_with_journal(t)
        check("rectify", anti_rectify(r, journal) == t, t)
        counts["rectify"] += 1
    detail = ", ".join(f"{k} {v}" for k, v in counts.items())
    return not failures, detail + (f"; failures {failures}" if failures else "")


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11,
}


# ---------------------------------------------------------------------------


def _run(k, log):
    ok, detail = CRITERIA[k]()
    assert _log(log, k, ok, detail), detail


def test_criterion_01_crystal_figure(acceptance_log):
    _run(1, acceptance_log)


def test_criterion_02_admissibility_and_split(acceptance_log):
    _run(2, acceptance_log)


def test_criterion_03_full_reversal(acceptance_log):
    _run(3, acceptance_log)


def test_criterion_04_partial_reversal(acceptance_log):
    _run(4, acceptance_log)


def test_criterion_05_virtualization(acceptance_log):
    _run(5, acceptance_log)


def test_criterion_06_bender_knuth(acceptance_log):
    _run(6, acceptance_log)


def test_criterion_07_counterexample(acceptance_log):
    _run(7, acceptance_log)


def test_criterion_08_relation_suites(acceptance_log):
    _run(8, acceptance_log)


def test_criterion_09_non_relation_probes(acceptance_log):
    _run(9, acceptance_log)


def test_criterion_10_character_symmetry(acceptance_log):
    _run(10, acceptance_log)


def test_criterion_11_round_trips(acceptance_log):
    _run(11, acceptance_log)


if __name__ == "__main__":
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent))
    results = []
    for k in CRITERIA:
        ok, detail = CRITERIA[k]()
        results.append(_log(None, k, ok, detail))
    sys.exit(0 if all(results) else 1)
