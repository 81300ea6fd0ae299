"""Report builders behind the command-line harness.

Every report is a deterministic structure of exact rationals; verdicts come
from exact comparisons only.  Decimal renderings appear next to the exact
strings for readability and never feed back into any decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chaos import (
    classical_element,
    classical_identity,
    classical_interval_element,
    finite_trace_classical,
    finite_trace_free,
    floor_times,
    free_identity,
    free_interval_element,
    residual_classical,
    residual_free,
    SEARCH_GUARD,
)
from .cumulants import classical_cumulant, free_cumulant, nc2_moments, pi2_moments
from .dyck import enumerate_dyck_paths, enumerate_irreducible_dyck_paths, pairing_to_path, path_to_pairing
from .orthopoly import (
    chebyshev_product_expansion,
    free_charlier,
    integrate,
    linearize_hermite,
    weight_moments,
)
from .partitions import (
    Composition,
    GuardExceeded,
    count_nc2,
    count_nc2_star,
    count_pi2,
    count_pi2_star,
    enumerate_nc2,
    enumerate_nc2_star,
    enumerate_pi2,
    enumerate_pi2_star,
    weighted_pairing_sum,
)
from .tableaux import enumerate_ssyt, pairing_to_tableau
from .toeplitz import toeplitz_moment

Exact = Fraction | int


@dataclass
class ReportRow:
    instance: str
    values: dict[str, Exact | str | None] = field(default_factory=dict)
    limit: Exact | None = None
    gap: Exact | None = None
    error: str | None = None


@dataclass
class Report:
    command: str
    params: dict[str, object]
    rows: list[ReportRow]
    verdict: str  # PASS | FAIL

    @property
    def has_errors(self) -> bool:
        return any(row.error for row in self.rows)


def format_exact(x: Exact | str | None) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _decimal(x: Exact | str | None) -> float | None:
    if x is None or isinstance(x, str):
        return None
    return float(Fraction(x))


def report_to_json(report: Report) -> str:
    import json

    rows = []
    for row in report.rows:
        decimals = {k: _decimal(v) for k, v in row.values.items() if _decimal(v) is not None}
        rows.append(
            {
                "instance": row.instance,
                "values": {k: format_exact(v) for k, v in row.values.items()},
                "decimals": decimals,
                "limit": format_exact(row.limit) if row.limit is not None else None,
                "gap": format_exact(row.gap) if row.gap is not None else None,
                "gap_decimal": _decimal(row.gap),
                "error": row.error,
            }
        )
    doc = {
        "command": report.command,
        "params": report.params,
        "rows": rows,
        "verdict": report.verdict,
    }
    return json.dumps(doc, indent=2) + "\n"


def report_to_csv(report: Report) -> str:
    import csv
    import io

    keys: list[str] = []
    for row in report.rows:
        for k in row.values:
            if k not in keys:
                keys.append(k)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["instance", *keys, "limit", "gap", "gap_decimal", "error"])
    for row in report.rows:
        record = [row.instance]
        record += [format_exact(row.values.get(k)) for k in keys]
        record.append(format_exact(row.limit) if row.limit is not None else "")
        record.append(format_exact(row.gap) if row.gap is not None else "")
        dec = _decimal(row.gap)
        record.append("" if dec is None else repr(dec))
        record.append(row.error or "")
        writer.writerow(record)
    writer.writerow(["verdict", report.verdict])
    return buf.getvalue()


def render_report(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return report_to_json(report)
    if fmt == "csv":
        return report_to_csv(report)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# report builders
# ---------------------------------------------------------------------------

def _times_or_ones(comp: Composition) -> Composition:
    return comp if comp.times is not None else comp.with_times((1,) * comp.p)


def _tolerance(n_list: list[int]) -> Fraction:
    return Fraction(4, max(n_list))


def converge_report(
    model: str, comp: Composition, n_list: list[int], guard: int = SEARCH_GUARD
) -> Report:
    """Finite-n traces against the pairing-sum limit, with exact gaps."""
    comp = _times_or_ones(comp)
    limit = weighted_pairing_sum(comp, noncrossing_only=(model == "free"))
    trace_fn = finite_trace_free if model == "free" else finite_trace_classical
    rows = []
    gaps: list[Fraction] = []
    for n in sorted(n_list):
        row = ReportRow(instance=f"n={n}", limit=limit)
        try:
            value = trace_fn(comp, n, guard)
            row.values["trace"] = value
            row.gap = abs(value - limit)
            gaps.append(row.gap)
        except GuardExceeded as exc:
            row.error = str(exc)
        rows.append(row)
    ok = bool(gaps) and gaps[-1] <= gaps[0] and gaps[-1] <= _tolerance(n_list)
    return Report(
        command="converge",
        params={
            "model": model,
            "r": list(comp.parts),
            "t": [format_exact(comp.time_of_part(k)) for k in range(1, comp.p + 1)],
            "n": sorted(n_list),
            "guard": guard,
        },
        rows=rows,
        verdict="PASS" if ok else "FAIL",
    )


def residual_report(
    model: str, r: int, t: Fraction, n_list: list[int], guard: int = SEARCH_GUARD
) -> Report:
    """Recurrence-defect traces per n; PASS needs a nonincreasing run."""
    rows = []
    values: list[Fraction] = []
    for n in sorted(n_list):
        row = ReportRow(instance=f"n={n}", limit=Fraction(0))
        try:
            if model == "free":
                res = residual_free(n, t, r, guard)
            else:
                eps, res = residual_classical(n, t, r, guard)
                row.values["drift"] = eps
            row.values["residual"] = res
            row.gap = abs(res)
            values.append(res)
        except GuardExceeded as exc:
            row.error = str(exc)
        rows.append(row)
    ok = (
        bool(values)
        and all(a >= b for a, b in zip(values, values[1:]))
        and values[-1] <= _tolerance(n_list)
    )
    return Report(
        command="residual",
        params={
            "model": model,
            "r": r,
            "t": format_exact(t),
            "n": sorted(n_list),
            "guard": guard,
        },
        rows=rows,
        verdict="PASS" if ok else "FAIL",
    )


def _word_indices(word: str, p: int) -> list[int]:
    indices = []
    for ch in word.upper():
        i = ord(ch) - ord("A")
        if not 0 <= i < p:
            raise ValueError(f"word letter {ch!r} does not name one of the {p} parts")
        indices.append(i)
    if not indices:
        raise ValueError("word must not be empty")
    return indices


def _interval_guard(n: int, parts: tuple[int, ...], breakpoints: list[Fraction], word: list[int], guard: int) -> None:
    space = 1
    for i in word:
        width = floor_times(n, breakpoints[i + 1]) - floor_times(n, breakpoints[i])
        space *= max(width, 1) ** parts[i]
        if space > guard:
            raise GuardExceeded(f"instance too large: search space exceeds guard {guard}")


def freeness_report(
    model: str,
    parts: tuple[int, ...],
    breakpoints: list[Fraction],
    word: str,
    n_list: list[int],
    guard: int = SEARCH_GUARD,
) -> Report:
    """Asymptotic freeness / independence gaps for a word of elements drawn
    from disjoint time intervals.

    Free mode: the trace of the product of centered elements.  Classical
    mode: the joint trace minus the product of per-letter traces.
    """
    p = len(parts)
    if len(breakpoints) != p + 1 or any(a >= b for a, b in zip(breakpoints, breakpoints[1:])):
        raise ValueError("breakpoints must be strictly increasing, one more than parts")
    letters = _word_indices(word, p)
    if model == "free":
        degenerate = len(set(letters)) < 2 or any(a == b for a, b in zip(letters, letters[1:]))
    else:
        degenerate = len(set(letters)) < 2
    rows = []
    gaps: list[Fraction] = []
    for n in sorted(n_list):
        row = ReportRow(instance=f"n={n}", limit=Fraction(0))
        try:
            _interval_guard(n, parts, breakpoints, letters, guard)
            value = _freeness_gap(model, parts, breakpoints, letters, n)
            row.values["gap"] = value
            row.gap = abs(value)
            gaps.append(abs(value))
        except GuardExceeded as exc:
            row.error = str(exc)
        rows.append(row)
    if degenerate:
        ok = True
    else:
        ok = bool(gaps) and gaps[-1] <= gaps[0] and gaps[-1] <= _tolerance(n_list)
    return Report(
        command="freeness",
        params={
            "model": model,
            "r": list(parts),
            "t": [format_exact(t) for t in breakpoints],
            "word": word.upper(),
            "n": sorted(n_list),
            "guard": guard,
            "degenerate": degenerate,
        },
        rows=rows,
        verdict="PASS" if ok else "FAIL",
    )


def _freeness_gap(
    model: str, parts: tuple[int, ...], breakpoints: list[Fraction], letters: list[int], n: int
) -> Fraction:
    if model == "free":
        elements = {
            i: free_interval_element(n, parts[i], breakpoints[i], breakpoints[i + 1])
            for i in set(letters)
        }
        centered = {i: e - free_identity(n).scale(e.trace()) for i, e in elements.items()}
        prod = free_identity(n)
        for i in letters:
            prod = prod * centered[i]
        return prod.trace()
    elements = {
        i: classical_interval_element(n, parts[i], breakpoints[i], breakpoints[i + 1])
        for i in set(letters)
    }
    joint = classical_identity(n)
    for i in letters:
        joint = joint * elements[i]
    marginal = Fraction(1)
    for i in sorted(set(letters)):
        sub = classical_identity(n)
        for k in letters:
            if k == i:
                sub = sub * elements[i]
        marginal *= sub.trace()
    return joint.trace() - marginal


def count_report(comp: Composition, guard: int = 20) -> Report:
    """All eight family counts for one composition, cross-checked."""
    labels = comp.parts
    nc2 = count_nc2(comp, guard)
    nc2s = count_nc2_star(comp, guard)
    paths = len(enumerate_dyck_paths(labels))
    irreducible = len(enumerate_irreducible_dyck_paths(labels))
    moment = toeplitz_moment(labels)
    ssyt = len(enumerate_ssyt(labels))
    rows = [
        ReportRow("nc2", {"count": nc2}),
        ReportRow("nc2_star", {"count": nc2s}),
        ReportRow("pi2", {"count": count_pi2(comp, guard)}),
        ReportRow("pi2_star", {"count": count_pi2_star(comp, guard)}),
        ReportRow("dyck_paths", {"count": paths}),
        ReportRow("dyck_paths_irreducible", {"count": irreducible}),
        ReportRow("toeplitz", {"count": moment}),
        ReportRow("ssyt", {"count": ssyt}),
    ]
    ok = nc2 == paths == moment == ssyt and nc2s == irreducible
    return Report(
        command="count",
        params={"r": list(labels), "guard": guard},
        rows=rows,
        verdict="PASS" if ok else "FAIL",
    )


def linearize_report(family: str, parts: tuple[int, ...], k: int | None = None) -> Report:
    """Linearization coefficients next to their pairing counts."""
    total = sum(parts)
    ks = range(total + 1) if k is None else [k]
    rows = []
    ok = True
    if family == "chebyshev":
        expansion = chebyshev_product_expansion(parts)
        for kk in ks:
            coeff = expansion[kk] if kk < len(expansion) else Fraction(0)
            count = count_nc2(_appended(parts, kk))
            rows.append(ReportRow(f"k={kk}", {"coefficient": coeff, "pairing_count": count}))
            ok = ok and coeff == count
    elif family == "hermite":
        for kk in ks:
            coeff, count = linearize_hermite(parts, kk)
            rows.append(
                ReportRow(
                    f"k={kk}",
                    {
                        "coefficient": coeff,
                        "pairing_count": count,
                        "coefficient_times_kfact": coeff * math.factorial(kk),
                    },
                )
            )
            ok = ok and count == coeff * math.factorial(kk)
    elif family == "charlier":
        for kk in ks:
            count = count_nc2(_appended(tuple(2 * r for r in parts), 2 * kk))
            prod = free_charlier(kk)
            for r in parts:
                prod = prod * free_charlier(r)
            coeff = integrate(prod, weight_moments("mp_centered", max(prod.degree, 0)))
            rows.append(ReportRow(f"k={kk}", {"integral": coeff, "pairing_count": count}))
            ok = ok and coeff == count
    else:
        raise ValueError(f"unknown family {family!r}")
    return Report(
        command="linearize",
        params={"family": family, "r": list(parts), "k": k},
        rows=rows,
        verdict="PASS" if ok else "FAIL",
    )


def _appended(parts: tuple[int, ...], k: int) -> Composition:
    combined = tuple(r for r in parts + (k,) if r)
    return Composition(combined) if combined else Composition((1,))


def paths_report(parts: tuple[int, ...], irreducible: bool = False) -> Report:
    comp = Composition(parts)
    paths = (
        enumerate_irreducible_dyck_paths(parts) if irreducible else enumerate_dyck_paths(parts)
    )
    rows = [ReportRow(str(p), {"max_height": max(p.heights)}) for p in paths]
    expected = count_nc2_star(comp) if irreducible else count_nc2(comp)
    return Report(
        command="paths",
        params={"r": list(parts), "irreducible": irreducible, "count": len(paths)},
        rows=rows,
        verdict="PASS" if len(paths) == expected else "FAIL",
    )


def tableaux_report(parts: tuple[int, ...]) -> Report:
    comp = Composition(parts)
    tabs = enumerate_ssyt(parts)
    rows = [ReportRow(str(t), {}) for t in tabs]
    return Report(
        command="tableaux",
        params={"r": list(parts), "count": len(tabs)},
        rows=rows,
        verdict="PASS" if len(tabs) == count_nc2(comp) else "FAIL",
    )


def toeplitz_report(parts: tuple[int, ...], d: int | None = None) -> Report:
    comp = Composition(parts)
    base = sum(parts) // 2 + 1 if d is None else d
    first = toeplitz_moment(parts, base)
    second = toeplitz_moment(parts, base + 3)
    rows = [
        ReportRow(f"d={base}", {"moment": first}),
        ReportRow(f"d={base + 3}", {"moment": second}),
    ]
    ok = first == second == count_nc2(comp)
    return Report(
        command="toeplitz",
        params={"r": list(parts), "d": base},
        rows=rows,
        verdict="PASS" if ok else "FAIL",
    )


def _compositions_of(m: int):
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions_of(m - first):
            yield (first,) + rest


def crossval_report(max_total: int) -> Report:
    """The full identity battery over every composition up to a total size.

    Per composition: the four-way count equality, the starred/irreducible
    match with an element-by-element bijection round-trip, both
    moment-cumulant inversion identities, and the three linearization
    identities for every admissible appended degree.
    """
    if max_total % 2 or max_total < 2:
        raise ValueError("max_total must be a positive even integer")
    free_moments = nc2_moments()
    classical_moments = pi2_moments()
    rows = []
    all_ok = True
    for m in range(1, max_total + 1):
        for labels in _compositions_of(m):
            comp = Composition(labels)
            checks: list[str] = []
            nc2 = count_nc2(comp)
            nc2s = count_nc2_star(comp)
            paths = enumerate_dyck_paths(labels)
            if not (nc2 == len(paths) == toeplitz_moment(labels) == len(enumerate_ssyt(labels))):
                checks.append("four_way")
            if nc2s != len(enumerate_irreducible_dyck_paths(labels)):
                checks.append("starred_counts")
            if not _bijections_round_trip(comp):
                checks.append("bijection")
            if free_cumulant(free_moments, labels) != nc2s:
                checks.append("free_cumulant")
            if classical_cumulant(classical_moments, labels) != count_pi2_star(comp):
                checks.append("classical_cumulant")
            checks.extend(_linearization_checks(labels, max_total))
            row = ReportRow(
                f"r={','.join(map(str, labels))}",
                {
                    "nc2": nc2,
                    "nc2_star": nc2s,
                    "pi2": count_pi2(comp),
                    "pi2_star": count_pi2_star(comp),
                    "checks": "ok" if not checks else "failed:" + "+".join(checks),
                },
            )
            rows.append(row)
            all_ok = all_ok and not checks
    return Report(
        command="crossval",
        params={"max_total": max_total},
        rows=rows,
        verdict="PASS" if all_ok else "FAIL",
    )


def _bijections_round_trip(comp: Composition) -> bool:
    pairings = enumerate_nc2(comp)
    starred = {p.blocks for p in enumerate_nc2_star(comp)}
    seen_paths = set()
    seen_tabs = set()
    for pairing in pairings:
        path = pairing_to_path(pairing, comp)
        if path_to_pairing(path) != pairing:
            return False
        if path.is_irreducible() != (pairing.blocks in starred):
            return False
        seen_paths.add(path.heights)
        seen_tabs.add(pairing_to_tableau(pairing, comp))
    if seen_paths != {p.heights for p in enumerate_dyck_paths(comp.parts)}:
        return False
    return seen_tabs == set(enumerate_ssyt(comp.parts))


def _linearization_checks(labels: tuple[int, ...], max_total: int) -> list[str]:
    failed = []
    total = sum(labels)
    expansion = chebyshev_product_expansion(labels)
    for k in range(0, max_total - total + 1):
        coeff = expansion[k] if k < len(expansion) else Fraction(0)
        if coeff != count_nc2(_appended(labels, k)):
            failed.append(f"chebyshev_k{k}")
            break
    for k in range(0, max_total - total + 1):
        coeff, count = linearize_hermite(labels, k)
        if count != coeff * math.factorial(k):
            failed.append(f"hermite_k{k}")
            break
    if 2 * total <= max_total:
        for k in range(0, max_total // 2 - total + 1):
            doubled = _appended(tuple(2 * r for r in labels), 2 * k)
            prod = free_charlier(k)
            for r in labels:
                prod = prod * free_charlier(r)
            integral = integrate(prod, weight_moments("mp_centered", max(prod.degree, 0)))
            if integral != count_nc2(doubled):
                failed.append(f"charlier_k{k}")
                break
    return failed
