"""Deterministic text / JSON / CSV rendering and matrix spec files.

JSON output deliberately omits wall-clock time and the partition count so
that identical analyses serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from circmem.circulant import GeneratorRow, index_to_string
from circmem.dynamics import Cycle, FixedPoint, MaxItersExceeded
from circmem.errors import ParseError
from circmem.lab import CapacityReport, FigureData, SearchReport, SuiteReport

FORMATS = ("text", "json", "csv")

CAPACITY_HEADER = [
    "label", "n", "row_sum", "class", "total_states", "fixed_count", "unique_count",
    "rotation_orbits", "expected_fixed", "fixed_match", "expected_unique", "unique_match",
]
SEARCH_HEADER = ["trial", "first_row", "row_sum", "fixed_count", "unique_count", "draws"]
FIGURE_HEADER = ["n", "fixed_count", "label"]


def bracketed(state: str) -> str:
    """``"++--"`` -> ``"[+ + - -]"``."""
    return "[" + " ".join(state) + "]"


def _flag(value: bool | None) -> str:
    return "" if value is None else str(value).lower()


def _opt(value) -> str:
    return "" if value is None else str(value)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- capacity reports ---------------------------------------------------------

def capacity_dict(r: CapacityReport) -> dict:
    n = r.n
    d = {
        "label": r.label,
        "n": n,
        "first_row": list(r.row.c),
        "row_sum": r.row_sum,
        "class": r.class_tag,
        "total_states": r.total_states,
        "fixed_count": r.fixed_count,
        "unique_count": r.unique_count,
        "rotation_orbit_count": r.rotation_orbit_count,
        "rotation_orbits": [
            {"representative": cls[0], "state": index_to_string(cls[0], n), "size": len(cls)}
            for cls in r.rotation_orbits
        ],
        "expected_fixed": r.expected_fixed,
        "fixed_match": r.fixed_match,
        "expected_unique": r.expected_unique,
        "unique_match": r.unique_match,
        "unique_rule_trusted": r.unique_trusted,
        "stats": {
            "method": r.stats.method,
            "states_examined": r.stats.states_examined,
            "fixed_found": r.stats.fixed_found,
        },
    }
    points = r.fixed_points
    d["fixed_points"] = None if points is None else [
        {"index": i, "state": index_to_string(i, n)} for i in points
    ]
    return d


def capacity_row(r: CapacityReport) -> list[str]:
    return [
        r.label, str(r.n), str(r.row_sum), r.class_tag, str(r.total_states),
        str(r.fixed_count), str(r.unique_count), str(r.rotation_orbit_count),
        _opt(r.expected_fixed), _flag(r.fixed_match),
        _opt(r.expected_unique), _flag(r.unique_match),
    ]


def capacity_text(r: CapacityReport) -> str:
    n = r.n
    lines = [
        f"matrix      {r.label}",
        f"first row   [{', '.join(str(v) for v in r.row.c)}]",
        f"size        {n}x{n}, {r.total_states} states",
        f"row sum     {r.row_sum} ({r.class_tag})",
        f"memories    {r.fixed_count}",
        f"unique      {r.unique_count} (complement pairs merged)",
        f"rotations   {r.rotation_orbit_count} orbit(s)",
    ]
    if r.expected_fixed is not None:
        lines.append(f"reported    {r.expected_fixed} memories -> {'match' if r.fixed_match else 'MISMATCH'}")
    if r.expected_unique is not None:
        trust = "" if r.unique_trusted else ", untrusted"
        lines.append(f"reported    {r.expected_unique} unique{trust} -> {'match' if r.unique_match else 'MISMATCH'}")
    lines.append(
        f"enumerated  {r.stats.states_examined} states by {r.stats.method} "
        f"({r.stats.partitions} block(s), {r.stats.wall_time:.3f}s)"
    )
    lines.append("orbits")
    for cls in r.rotation_orbits:
        lines.append(f"  {bracketed(index_to_string(cls[0], n))}  x{len(cls)}")
    if r.list_states:
        lines.append("memories")
        lines.extend(f"  {bracketed(index_to_string(i, n))}" for i in r.fixed.states)
    return "\n".join(lines) + "\n"


def emit_capacity(r: CapacityReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(capacity_dict(r))
    if fmt == "csv":
        return _csv(CAPACITY_HEADER, [capacity_row(r)])
    return capacity_text(r)


# -- suite --------------------------------------------------------------------

def suite_dict(s: SuiteReport) -> dict:
    entries = []
    for e in s.entries:
        d = capacity_dict(e.report)
        d.update({
            "source": e.entry.source,
            "naive_fixed_count": e.naive_count,
            "enumerators_agree": e.enumerators_agree,
            "listed_count": len(e.entry.listed),
            "listed_not_fixed": list(e.listed_not_fixed),
            "status": e.status,
            "notes": e.notes,
        })
        entries.append(d)
    counts = {k: sum(1 for e in s.entries if e.status == k) for k in ("PASS", "DISCREPANCY", "FAIL")}
    return {"status": s.status, "summary": counts, "entries": entries}


def suite_text(s: SuiteReport) -> str:
    lines = [f"{'label':<14} {'n':>2} {'sum':>4} {'fixed':>6} {'reported':>8} {'unique':>6} {'reported':>8}  status"]
    for e in s.entries:
        r = e.report
        lines.append(
            f"{r.label:<14} {r.n:>2} {r.row_sum:>4} {r.fixed_count:>6} {_opt(r.expected_fixed):>8} "
            f"{r.unique_count:>6} {_opt(r.expected_unique):>8}  {e.status}"
            + (f"  ({'; '.join(e.notes)})" if e.notes else "")
        )
    status = s.status
    if status == "DISCREPANCY":
        lines.append(
            "DISCREPANCY: enumerators agree everywhere and every trusted count "
            "reproduces; the entries above differ from reported values"
        )
    elif status == "FAIL":
        lines.append("FAIL: enumerators disagree or a trusted count does not reproduce")
    else:
        lines.append("PASS")
    return "\n".join(lines) + "\n"


def emit_suite(s: SuiteReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(suite_dict(s))
    if fmt == "csv":
        return _csv(CAPACITY_HEADER, [capacity_row(e.report) for e in s.entries])
    return suite_text(s)


# -- search -------------------------------------------------------------------

def search_dict(rep: SearchReport) -> dict:
    c = rep.config
    best = rep.best
    return {
        "config": {
            "n": c.n, "trials": c.trials, "weight_min": c.weight_min, "weight_max": c.weight_max,
            "row_sum_target": c.row_sum_target, "seed": c.seed,
            "max_rejections_per_trial": c.max_rejections_per_trial,
        },
        "accepted_trials": len(rep.trials),
        "rejected_trials": rep.rejected_trials,
        "histogram": {str(k): v for k, v in rep.histogram.items()},
        "mean_fixed": rep.mean_fixed,
        "max_fixed": rep.max_fixed,
        "best": None if best is None else {
            "trial": best.trial, "first_row": list(best.row.c), "fixed_count": best.fixed_count,
        },
        "trials": [
            {"trial": t.trial, "first_row": list(t.row.c), "row_sum": t.row_sum,
             "fixed_count": t.fixed_count, "unique_count": t.unique_count, "draws": t.draws}
            for t in rep.trials
        ],
    }


def emit_search(rep: SearchReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(search_dict(rep))
    if fmt == "csv":
        return _csv(SEARCH_HEADER, [
            [t.trial, t.row.render(), t.row_sum, t.fixed_count, t.unique_count, t.draws]
            for t in rep.trials
        ])
    c = rep.config
    lines = [
        f"n={c.n} trials={c.trials} weights=[{c.weight_min}, {c.weight_max}] "
        f"row_sum={_opt(c.row_sum_target) or 'any'} seed={c.seed}",
        f"accepted {len(rep.trials)}, rejected {rep.rejected_trials}",
    ]
    if rep.trials:
        lines.append(f"mean {rep.mean_fixed:.3f}  max {rep.max_fixed}")
        lines.append(f"best trial {rep.best.trial}: [{rep.best.row.render()}]")
        lines.append("fixed_count  trials")
        lines.extend(f"{k:>11}  {v}" for k, v in rep.histogram.items())
    return "\n".join(lines) + "\n"


# -- converge / figures -------------------------------------------------------

def outcome_dict(outcome) -> dict:
    if isinstance(outcome, FixedPoint):
        return {"outcome": "FixedPoint", "state": str(outcome.state), "steps": outcome.steps}
    if isinstance(outcome, Cycle):
        return {
            "outcome": "Cycle", "period": outcome.period,
            "first_state_of_cycle": str(outcome.first_state_of_cycle),
            "steps_to_enter": outcome.steps_to_enter,
        }
    if isinstance(outcome, MaxItersExceeded):
        return {"outcome": "MaxItersExceeded", "last_state": str(outcome.last_state)}
    raise TypeError(type(outcome))


def emit_outcome(outcome, fmt: str = "text") -> str:
    d = outcome_dict(outcome)
    if fmt == "json":
        return _dumps(d)
    return " ".join(f"{k}={v}" if k != "outcome" else v for k, v in d.items()) + "\n"


def figure_csvs(data: FigureData) -> dict[str, str]:
    return {
        f"{name}.csv": _csv(FIGURE_HEADER, [[p.n, p.fixed_count, p.label] for p in points])
        for name, points in data.datasets().items()
    }


# -- matrix spec files --------------------------------------------------------

def dump_matrix_spec(row: GeneratorRow, label: str | None = None) -> str:
    d = {"n": row.n, "first_row": list(row.c)}
    if label is not None:
        d["label"] = label
    return _dumps(d)


def load_matrix_spec(text: str) -> tuple[GeneratorRow, str | None]:
    """Parse a JSON document ``{"n": 4, "first_row": [...], "label": ...}``."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(d, dict) or "first_row" not in d:
        raise ParseError("matrix spec needs a 'first_row' array", 0)
    first = d["first_row"]
    if not isinstance(first, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in first):
        raise ParseError("'first_row' must be an array of integers", 0)
    if "n" in d and d["n"] != len(first):
        raise ParseError(f"'n' is {d['n']} but 'first_row' has {len(first)} entries", 0)
    label = d.get("label")
    return GeneratorRow(tuple(first)), None if label is None else str(label)


def read_matrix_spec(path: str | Path) -> tuple[GeneratorRow, str | None]:
    return load_matrix_spec(Path(path).read_text(encoding="utf-8"))
