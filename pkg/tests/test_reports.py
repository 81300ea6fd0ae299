"""Report builders: values, verdicts, serialization determinism."""

import itertools
import json
from fractions import Fraction

import pytest

from chaoslab.algebra import Permutation
from chaoslab.partitions import Composition
from chaoslab.reports import (
    converge_report,
    count_report,
    crossval_report,
    freeness_report,
    linearize_report,
    paths_report,
    render_report,
    report_to_csv,
    report_to_json,
    residual_report,
    tableaux_report,
    toeplitz_report,
)


def test_converge_free_reference_run():
    rep = converge_report("free", Composition((2, 2)), [4, 8, 16])
    assert [row.gap for row in rep.rows] == [Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)]
    assert all(row.limit == 1 for row in rep.rows)
    assert rep.verdict == "PASS"


def test_converge_classical_reference_run():
    rep = converge_report("classical", Composition((2, 2)), [4, 8, 16])
    assert [row.gap for row in rep.rows] == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    assert all(row.limit == 2 for row in rep.rows)
    assert rep.verdict == "PASS"


def test_converge_with_times():
    comp = Composition((1, 1), times=(1, 2))
    rep = converge_report("classical", comp, [6])
    assert rep.rows[0].gap == 0 and rep.rows[0].limit == 1
    assert rep.verdict == "PASS"


def test_converge_free_with_times_tracks_weighted_limit():
    # the free finite-n traces with unequal times approach the noncrossing
    # weighted pairing sum; here the exact trace is 1 - 1/n against limit 1
    comp = Composition((2, 2), times=(1, 2))
    rep = converge_report("free", comp, [4, 8, 16])
    assert all(row.limit == 1 for row in rep.rows)
    assert [row.gap for row in rep.rows] == [Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)]
    assert rep.verdict == "PASS"
    mixed = Composition((1, 2, 1), times=(2, 1, 2))
    rep = converge_report("free", mixed, [4, 8, 12])
    gaps = [row.gap for row in rep.rows]
    assert gaps[0] >= gaps[1] >= gaps[2]
    assert rep.verdict == "PASS"


def test_converge_guard_errors_leave_rows():
    rep = converge_report("free", Composition((2, 2)), [4, 100], guard=500)
    assert rep.rows[0].error is None
    assert "instance too large" in rep.rows[1].error
    assert rep.has_errors


def test_converge_heuristic_fails_honestly_at_tiny_n():
    # at n=2 the order-2 word is far from its limit: gap 21/8 > 4/2
    rep = converge_report("free", Composition((2, 2, 2, 2)), [2])
    assert rep.rows[0].values["trace"] == Fraction(3, 8)
    assert rep.rows[0].gap == Fraction(21, 8)
    assert rep.verdict == "FAIL"


def test_residual_reports():
    rep = residual_report("free", 1, Fraction(1), [3, 5, 7])
    assert all(row.values["residual"] == 0 for row in rep.rows)
    assert rep.verdict == "PASS"
    rep = residual_report("classical", 2, Fraction(1), [4, 6, 8])
    assert rep.rows[0].values["drift"] == Fraction(-1, 2)
    assert rep.rows[0].values["residual"] == Fraction(1, 4)
    assert rep.verdict == "PASS"


def _brute_free_word_trace(word, ranges, n):
    # independent route: raw tuple sum over the word's cycle factors
    total = Fraction(0)
    spaces = [list(itertools.permutations(ranges[letter], 1)) for letter in word]
    for combo in itertools.product(*spaces):
        prod = Permutation.identity()
        for (a,) in combo:
            prod = prod * Permutation.cycle([0, a])
        if prod.is_identity:
            total += 1
    return total / Fraction(n ** (len(word) // 2))


def test_freeness_free_word_values():
    breakpoints = [Fraction(0), Fraction(1), Fraction(2)]
    rep = freeness_report("free", (1, 1), breakpoints, "ABABAB", [2, 3, 4])
    for row, n in zip(rep.rows, [2, 3, 4]):
        ranges = {"A": range(1, n + 1), "B": range(n + 1, 2 * n + 1)}
        assert row.values["gap"] == _brute_free_word_trace("ABABAB", ranges, n)
    # the exact finite-n value is 1/n for this word
    assert [row.gap for row in rep.rows] == [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
    assert rep.verdict == "PASS"


def test_freeness_alternating_short_words_vanish():
    breakpoints = [Fraction(0), Fraction(1), Fraction(2)]
    rep = freeness_report("free", (1, 1), breakpoints, "ABAB", [2, 4, 6])
    assert all(row.gap == 0 for row in rep.rows)
    assert rep.verdict == "PASS"


def test_freeness_classical_factorizes_exactly():
    breakpoints = [Fraction(0), Fraction(1), Fraction(2)]
    rep = freeness_report("classical", (2, 2), breakpoints, "AABB", [2, 4])
    assert all(row.gap == 0 for row in rep.rows)
    assert rep.verdict == "PASS"


def test_freeness_degenerate_word_passes():
    rep = freeness_report("free", (1,), [Fraction(0), Fraction(1)], "AA", [2, 4])
    assert rep.params["degenerate"] is True
    assert rep.verdict == "PASS"


def test_freeness_validation():
    with pytest.raises(ValueError):
        freeness_report("free", (1, 1), [Fraction(0), Fraction(1)], "AB", [2])
    with pytest.raises(ValueError):
        freeness_report("free", (1, 1), [Fraction(0), Fraction(1), Fraction(2)], "AC", [2])


def test_count_report():
    rep = count_report(Composition((2, 2)))
    values = {row.instance: row.values["count"] for row in rep.rows}
    assert values == {
        "nc2": 1,
        "nc2_star": 1,
        "pi2": 2,
        "pi2_star": 2,
        "dyck_paths": 1,
        "dyck_paths_irreducible": 1,
        "toeplitz": 1,
        "ssyt": 1,
    }
    assert rep.verdict == "PASS"


def test_linearize_reports():
    rep = linearize_report("chebyshev", (2, 2))
    coeffs = {row.instance: row.values["coefficient"] for row in rep.rows}
    assert coeffs == {"k=0": 1, "k=1": 0, "k=2": 1, "k=3": 0, "k=4": 1}
    assert rep.verdict == "PASS"
    rep = linearize_report("hermite", (1, 1), 2)
    assert rep.rows[0].values["pairing_count"] == 2
    assert rep.verdict == "PASS"
    rep = linearize_report("charlier", (1, 1))
    assert rep.rows[0].values["pairing_count"] == 1
    assert rep.verdict == "PASS"


def test_paths_tableaux_toeplitz_reports():
    rep = paths_report((1, 1, 1, 1))
    assert [row.instance for row in rep.rows] == ["(0,1,0,1,0)", "(0,1,2,1,0)"]
    assert rep.verdict == "PASS"
    rep = paths_report((2, 2, 2), irreducible=True)
    assert [row.instance for row in rep.rows] == ["(0,2,2,0)"]
    assert rep.verdict == "PASS"
    rep = tableaux_report((1, 1, 1, 1))
    assert [row.instance for row in rep.rows] == ["[[1,2],[3,4]]", "[[1,3],[2,4]]"]
    assert rep.verdict == "PASS"
    rep = toeplitz_report((1, 2, 1))
    assert [row.values["moment"] for row in rep.rows] == [1, 1]
    assert rep.verdict == "PASS"


def test_crossval_small():
    rep = crossval_report(2)
    counts = {row.instance: row.values["nc2"] for row in rep.rows}
    assert counts == {"r=1": 0, "r=1,1": 1, "r=2": 0}
    assert rep.verdict == "PASS"
    with pytest.raises(ValueError):
        crossval_report(7)


def test_serialization_schema_and_determinism():
    rep = converge_report("free", Composition((2, 2)), [4, 8])
    doc = json.loads(report_to_json(rep))
    assert set(doc) == {"command", "params", "rows", "verdict"}
    assert set(doc["rows"][0]) == {
        "instance",
        "values",
        "decimals",
        "limit",
        "gap",
        "gap_decimal",
        "error",
    }
    assert doc["rows"][0]["values"]["trace"] == "3/4"
    assert doc["rows"][0]["decimals"]["trace"] == 0.75
    again = converge_report("free", Composition((2, 2)), [4, 8])
    assert report_to_json(rep) == report_to_json(again)
    assert report_to_csv(rep) == report_to_csv(again)
    assert report_to_csv(rep).splitlines()[-1] == "verdict,PASS"
    with pytest.raises(ValueError):
        render_report(rep, "xml")
