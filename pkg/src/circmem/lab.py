"""Capacity experiments: per-matrix analysis, the reference suite,
seeded random search and figure datasets."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from circmem.catalog import CatalogEntry, paper_catalog
from circmem.circulant import (
    MAX_WEIGHT,
    BipolarState,
    CirculantMatrix,
    GeneratorRow,
    as_row,
)
from circmem.enumeration import (
    EnumerationStats,
    FixedPointSet,
    enumerate_naive,
    enumerate_partitioned,
)
from circmem.errors import RowSumUnsatisfiable
from circmem.symmetry import Group, group_orbits, unique_memory_count

LIST_STATES_MAX_N = 16

PASS = "PASS"
DISCREPANCY = "DISCREPANCY"
FAIL = "FAIL"


def class_tag(total: int) -> str:
    if total == 0:
        return "ZeroSum"
    return "PositiveSum" if total > 0 else "NegativeSum"


@dataclass
class CapacityReport:
    label: str
    row: GeneratorRow
    fixed: FixedPointSet
    unique_count: int
    rotation_orbits: tuple[tuple[int, ...], ...]
    stats: EnumerationStats
    list_states: bool = False
    expected_fixed: int | None = None
    expected_unique: int | None = None
    unique_trusted: bool = False

    @property
    def n(self) -> int:
        return self.row.n

    @property
    def row_sum(self) -> int:
        return sum(self.row.c)

    @property
    def class_tag(self) -> str:
        return class_tag(self.row_sum)

    @property
    def total_states(self) -> int:
        return 1 << self.n

    @property
    def fixed_count(self) -> int:
        return len(self.fixed)

    @property
    def rotation_orbit_count(self) -> int:
        return len(self.rotation_orbits)

    @property
    def fixed_points(self) -> tuple[int, ...] | None:
        if self.list_states or self.n <= LIST_STATES_MAX_N:
            return self.fixed.states
        return None

    @property
    def fixed_match(self) -> bool | None:
        if self.expected_fixed is None:
            return None
        return self.fixed_count == self.expected_fixed

    @property
    def unique_match(self) -> bool | None:
        if self.expected_unique is None:
            return None
        return self.unique_count == self.expected_unique


def analyze(
    row,
    *,
    label: str | None = None,
    partitions: int = 1,
    workers: int | None = None,
    expected_fixed: int | None = None,
    expected_unique: int | None = None,
    unique_trusted: bool = False,
    list_states: bool = False,
    force_large: bool = False,
) -> CapacityReport:
    """Enumerate the fixed points of one circulant network and summarise them."""
    row = as_row(row)
    W = CirculantMatrix(row)
    fixed, stats = enumerate_partitioned(W, partitions, workers=workers, force_large=force_large)
    orbits = group_orbits(fixed, Group.ROTATION)
    return CapacityReport(
        label=label if label is not None else row.render(),
        row=row,
        fixed=fixed,
        unique_count=unique_memory_count(fixed),
        rotation_orbits=orbits.classes,
        stats=stats,
        list_states=list_states,
        expected_fixed=expected_fixed,
        expected_unique=expected_unique,
        unique_trusted=unique_trusted,
    )


@dataclass
class SuiteEntry:
    entry: CatalogEntry
    report: CapacityReport
    naive_count: int
    enumerators_agree: bool
    listed_not_fixed: tuple[str, ...]

    @property
    def notes(self) -> list[str]:
        r = self.report
        notes = []
        if not self.enumerators_agree:
            notes.append(f"enumerators disagree (gray {r.fixed_count}, naive {self.naive_count})")
        if r.fixed_match is False:
            notes.append(f"fixed count {r.fixed_count} != reported {r.expected_fixed}")
        if r.unique_match is False:
            kind = "trusted" if r.unique_trusted else "untrusted"
            notes.append(f"{kind} unique count {r.unique_count} != reported {r.expected_unique}")
        if self.listed_not_fixed:
            notes.append(f"{len(self.listed_not_fixed)} listed state(s) are not fixed points")
        return notes

    @property
    def status(self) -> str:
        r = self.report
        if not self.enumerators_agree or (r.unique_trusted and r.unique_match is False):
            return FAIL
        if r.fixed_match is False or r.unique_match is False or self.listed_not_fixed:
            return DISCREPANCY
        return PASS


@dataclass
class SuiteReport:
    entries: list[SuiteEntry]
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        statuses = {e.status for e in self.entries}
        for s in (FAIL, DISCREPANCY):
            if s in statuses:
                return s
        return PASS

    def entry(self, label: str) -> SuiteEntry:
        for e in self.entries:
            if e.entry.label == label:
                return e
        raise KeyError(label)


def run_paper_suite(partitions: int = 1, workers: int | None = None) -> SuiteReport:
    """Analyse every catalog matrix with both enumerators.

    A disagreement between the enumerators, or a trusted unique count that
    does not reproduce, is a failure. Other mismatches against reported
    values are recorded as discrepancies.
    """
    t0 = time.perf_counter()
    entries = []
    for cat in paper_catalog():
        report = analyze(
            cat.row,
            label=cat.label,
            partitions=partitions,
            workers=workers,
            expected_fixed=cat.expected_fixed,
            expected_unique=cat.expected_unique,
            unique_trusted=cat.unique_rule_trusted,
        )
        naive, _ = enumerate_naive(CirculantMatrix(cat.row))
        listed_bad = tuple(
            s for s in cat.listed if BipolarState.from_string(s) not in report.fixed
        )
        entries.append(SuiteEntry(
            entry=cat,
            report=report,
            naive_count=len(naive),
            enumerators_agree=naive.states == report.fixed.states,
            listed_not_fixed=listed_bad,
        ))
    return SuiteReport(entries, wall_time=time.perf_counter() - t0)


@dataclass(frozen=True)
class SearchConfig:
    n: int
    trials: int
    weight_min: int
    weight_max: int
    seed: int
    row_sum_target: int | None = None
    max_rejections_per_trial: int = 10_000

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.trials < 0:
            raise ValueError(f"trials must be >= 0, got {self.trials}")
        if self.weight_min > self.weight_max:
            raise ValueError("weight_min must not exceed weight_max")
        if max(abs(self.weight_min), abs(self.weight_max)) > MAX_WEIGHT:
            raise ValueError(f"weights must lie within +/-{MAX_WEIGHT}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.max_rejections_per_trial < 1:
            raise ValueError("max_rejections_per_trial must be >= 1")


@dataclass
class SearchTrial:
    trial: int
    row: GeneratorRow
    fixed_count: int
    unique_count: int
    draws: int

    @property
    def row_sum(self) -> int:
        return sum(self.row.c)


@dataclass
class SearchReport:
    config: SearchConfig
    trials: list[SearchTrial] = field(default_factory=list)
    rejected_trials: int = 0

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(t.fixed_count for t in self.trials).items()))

    @property
    def mean_fixed(self) -> float | None:
        if not self.trials:
            return None
        return sum(t.fixed_count for t in self.trials) / len(self.trials)

    @property
    def max_fixed(self) -> int | None:
        return max((t.fixed_count for t in self.trials), default=None)

    @property
    def best(self) -> SearchTrial | None:
        # first trial reaching the maximum
        top = self.max_fixed
        return next((t for t in self.trials if t.fixed_count == top), None)


def draw_row(rng: np.random.Generator, n: int, lo: int, hi: int) -> GeneratorRow:
    tail = rng.integers(lo, hi, size=n - 1, endpoint=True) if n > 1 else []
    return GeneratorRow((0, *(int(v) for v in tail)))


def random_search(config: SearchConfig, partitions: int = 1) -> SearchReport:
    """Draw random generator rows from a seeded PCG64 stream and analyse each.

    With ``row_sum_target`` set, rows are redrawn until they hit the target,
    giving up on a trial after ``max_rejections_per_trial`` draws.
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    report = SearchReport(config)
    for trial in range(config.trials):
        accepted = None
        for draw in range(1, config.max_rejections_per_trial + 1):
            row = draw_row(rng, config.n, config.weight_min, config.weight_max)
            if config.row_sum_target is None or sum(row.c) == config.row_sum_target:
                accepted = row
                break
        if accepted is None:
            report.rejected_trials += 1
            continue
        cap = analyze(accepted, partitions=partitions)
        report.trials.append(SearchTrial(trial, accepted, cap.fixed_count, cap.unique_count, draw))
    if config.trials and not report.trials:
        raise RowSumUnsatisfiable(
            f"no row with sum {config.row_sum_target} found in "
            f"{config.max_rejections_per_trial} draws on any of {config.trials} trials"
        )
    return report


# Canonical entry per size for the figure datasets; class-1 anchors n = 4 and 8.
FIGURE_LABELS = {4: "4x4-class1-a", 5: "5x5-a", 8: "8x8-class1"}


@dataclass(frozen=True)
class FigurePoint:
    n: int
    fixed_count: int
    label: str


@dataclass
class FigureData:
    all_sizes: list[FigurePoint]

    @property
    def even(self) -> list[FigurePoint]:
        return [p for p in self.all_sizes if p.n % 2 == 0]

    @property
    def odd(self) -> list[FigurePoint]:
        return [p for p in self.all_sizes if p.n % 2 == 1]

    def datasets(self) -> dict[str, list[FigurePoint]]:
        return {"figure2": self.all_sizes, "figure3": self.even, "figure4": self.odd}


def figure_data(suite: SuiteReport, counts: str = "computed") -> FigureData:
    """One point per size: ``counts="computed"`` uses enumeration,
    ``"reported"`` uses the published counts."""
    if counts not in ("computed", "reported"):
        raise ValueError(f"counts must be 'computed' or 'reported', got {counts!r}")
    by_size: dict[int, list[SuiteEntry]] = {}
    for e in suite.entries:
        by_size.setdefault(e.entry.n, []).append(e)
    points = []
    for n, group in sorted(by_size.items()):
        e = next((g for g in group if g.entry.label == FIGURE_LABELS.get(n)), group[0])
        value = e.report.fixed_count if counts == "computed" else e.entry.expected_fixed
        points.append(FigurePoint(n, value, e.entry.label))
    return FigureData(points)


def even_dominance_violations(points: list[FigurePoint]) -> list[tuple[int, int, int]]:
    """``(even n, neighbour n, neighbour count)`` wherever an even size holds
    fewer fixed points than an adjacent odd size."""
    by_n = {p.n: p.fixed_count for p in points}
    bad = []
    for n, count in sorted(by_n.items()):
        if n % 2:
            continue
        for m in (n - 1, n + 1):
            if m in by_n and by_n[m] > count:
                bad.append((n, m, by_n[m]))
    return bad
