"""Acceptance gate: criteria 1-8 at full parameters, one pass/fail line each."""

import time

import pytest

from hyperdom.verify import FAIL, PASS, run_check

pytestmark = pytest.mark.acceptance

TIME_LIMITS = {1: 60, 2: 1, 3: 300, 4: 120, 5: 120, 6: 300, 7: 600, 8: 600}


def _run(check_id, capsys):
    start = time.perf_counter()
    result = run_check(check_id, "full", seed=0)
    elapsed = time.perf_counter() - start
    ok = result.status == PASS and elapsed < TIME_LIMITS[check_id]
    with capsys.disabled():
        print(f"\nacceptance criterion {check_id}: {'PASS' if ok else 'FAIL'} "
              f"({result.status}, {elapsed:.2f}s < {TIME_LIMITS[check_id]}s) {result.anchor}")
    assert result.status != FAIL, result.computed
    assert result.status == PASS, f"check {check_id} was skipped: {result.computed}"
    assert elapsed < TIME_LIMITS[check_id]
    return result


def test_criterion_1_projective_designs(capsys):
    result = _run(1, capsys)
    rows = result.computed["rows"]
    assert len(rows) == 10
    assert {(r["q"], r["d"], r["t"], r["n"], r["k"]) for r in rows} == {
        (2, 2, 2, 9, 5), (3, 2, 3, 16, 10), (2, 3, 2, 21, 9), (3, 3, 3, 52, 28),
        (5, 2, 5, 36, 26)}
    assert all(r["exact"] >= r["required"] == r["d"] + r["s"] - 1 for r in rows)
    assert result.computed["n(28,3)_upper"] == 52 < result.computed["2k+3"] == 59


def test_criterion_2_vertex_count_sandwich(capsys):
    result = _run(2, capsys)
    rows = result.computed["rows"]
    assert len(rows) == 5 and all(r["lower_ok"] and r["upper_ok"] for r in rows)


def test_criterion_3_extremal_values(capsys):
    result = _run(3, capsys)
    rows = {(r["variant"], r["k"], r["gamma"]): r for r in result.computed["rows"]}
    assert rows["plain", 2, 2]["n_min"] == 4
    for k in (2, 3, 4):
        assert rows["plain", k, 1]["n_min"] == k
    for k, gamma in ((2, 2), (3, 2), (2, 3)):
        row = rows["dist(2)", k, gamma]
        assert row["n_min"] == k * gamma and row["unique_disjoint"]


def test_criterion_4_tree_tables(capsys):
    result = _run(4, capsys)
    table = result.computed["table"]
    assert {(n, j) for n, j, _ in table} == {(n, j) for n in range(1, 10)
                                             for j in range(1, min(3, n) + 1)}
    for n, j, value in table:
        assert n // (j + 1) <= value <= -(-n // (j + 1))
        if j == 1:
            assert value == -(-(n - 1) // 2)
    assert all(row["ok"] for row in result.computed["r1_structure"])


def test_criterion_5_constructive_radius(capsys):
    result = _run(5, capsys)
    assert result.computed["radius_failures"] == 0
    assert result.computed["peel_failures"] == 0
    assert result.parameters["random_trees"] == 10_000
    assert result.parameters["n_max"] == 10


def test_criterion_6_distance_constructions(capsys):
    result = _run(6, capsys)
    assert result.parameters["k"] == [2, 3, 4, 5]
    assert result.computed["certified_instances"] > 0


def test_criterion_7_matching_dominator(capsys):
    result = _run(7, capsys)
    assert result.parameters["instances"] == 500
    assert result.computed["exact_comparisons"] > 0


def test_criterion_8_oracle_equivalence(capsys):
    result = _run(8, capsys)
    assert result.computed["comparisons"] == 4000
