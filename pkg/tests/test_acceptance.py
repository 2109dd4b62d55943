"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line, repeated in the pytest summary, and asserts
both correctness and the wall-clock budget.
"""

import time

from conftest import ACCEPTANCE_LINES
from higher_specht.fixtures import fixtures_suite, load_fixtures
from higher_specht.specht import f_w, stable_truncation
from higher_specht.polyring import Polynomial
from higher_specht.verify import (
    characters_suite,
    cocharge_suite,
    decomp_suite,
    operators_suite,
    rsk_suite,
    specht_suite,
    stability_suite,
    truncation_suite,
)


def report(label, reports, elapsed, budget):
    ok = all(r.ok for r in reports) and (budget is None or elapsed < budget)
    cases = sum(r.cases for r in reports)
    failures = sum(len(r.failures) for r in reports)
    limit = f" (budget {budget:.0f}s)" if budget else ""
    line = f"{'PASS' if ok else 'FAIL'} {label}: {cases} checks, {failures} failures, {elapsed:.1f}s{limit}"
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)
    for r in reports:
        for f in r.failures[:5]:
            print("   ", f.to_json())
    return ok


def timed(*calls):
    start = time.perf_counter()
    reps = [c() for c in calls]
    return reps, time.perf_counter() - start


def test_1_fixture_replay():
    reps, elapsed = timed(fixtures_suite)
    tags = {f["tag"] for f in load_fixtures()}
    assert {"specht-polynomial-2134", "specht-polynomial-24153", "specht-quotient-24153",
            "stable-truncation-24153", "cocharge-tableaux-431", "rsk-and-evacuation-35271486",
            "first-row-insertion-35271486", "external-corners-431", "subset-compositions",
            "h-vector-bijection"} <= tags
    assert f_w((2, 1, 3, 4)).poly == Polynomial.parse("x2 - x1")
    assert report("1 fixture replay", reps, elapsed, 5)


def test_2_rsk_suite():
    reps, elapsed = timed(lambda: rsk_suite(7, conj_n=6))
    assert report("2 RSK/evacuation n<=7", reps, elapsed, 60)


def test_3_cocharge_suite():
    reps, elapsed = timed(lambda: cocharge_suite(6))
    assert report("3 cocharge n<=6", reps, elapsed, None)


def test_4_specht_suite():
    reps, elapsed = timed(lambda: specht_suite(5))
    assert report("4 Specht n<=5", reps, elapsed, 120)


def test_5_decomposition_suite():
    small, small_elapsed = timed(lambda: decomp_suite(5), lambda: characters_suite(5))
    assert report("5a decomposition + characters n<=5", small, small_elapsed, 120)
    full, full_elapsed = timed(lambda: decomp_suite(6), lambda: characters_suite(6))
    assert report("5b decomposition + characters n<=6", full, full_elapsed, 1800)


def test_6_operator_suite():
    reps, elapsed = timed(lambda: operators_suite(5, span_max_n=4))
    assert report("6 operators n<=5", reps, elapsed, None)


def test_7_stability_suite():
    reps, elapsed = timed(lambda: stability_suite(6))
    assert report("7 stability n<=6", reps, elapsed, None)


def test_8_stable_truncation():
    reps, elapsed = timed(lambda: truncation_suite(n=4, N=8, samples=50))
    for N in range(5, 9):
        poly, cert = stable_truncation((2, 1, 3, 4), N, samples=5)
        assert poly == Polynomial.parse("x2 - x1") and cert.stabilization_index <= 8
    assert report("8 stable truncation S_4 to N=8", reps, elapsed, 120)
