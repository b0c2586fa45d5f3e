"""Built-in catalog of the published reference matrices (n = 4 .. 15).

Each entry carries the generator row, the reported fixed-point and unique
counts, and the printed memory listing where one exists. Reported counts
are expectations only; enumeration decides what is true.
"""

from __future__ import annotations

from dataclasses import dataclass

from circmem.circulant import GeneratorRow

# Unique counts are reproducible by complement-pair merging only for n = 4, 5, 7.
TRUSTED_UNIQUE_SIZES = frozenset({4, 5, 7})


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    row: GeneratorRow
    expected_fixed: int | None
    expected_unique: int | None
    unique_rule_trusted: bool
    source: str
    listed: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return self.row.n


_CLASS1_4 = ("++--", "-++-", "--++", "+--+", "++++")
_CLASS2_4 = _CLASS1_4[:4] + ("----", "++++")
_LIST_5 = ("+++++", "++-+-", "+-++-", "-+-++", "-++-+", "+-+-+", "-----")
_LIST_5D = ("+++++", "+--++", "++--+", "+++--", "-+++-", "--+++", "-----")
_LIST_8_CLASS1 = (
    "+++-+++-", "-+++-+++", "+-+++-++", "++-+++-+", "+-+-+-+-", "-+-+-+-+",
    "++--++--", "-++--++-", "--++--++", "+--++--+", "++++++++",
)
_LIST_8_CLASS2 = _LIST_8_CLASS1[:10] + (
    "---+---+", "+---+---", "-+---+--", "--+---+-", "--------", "++++++++",
)

_RAW = [
    # label, row, expected_fixed, expected_unique, source, listing
    ("4x4-class1-a", (0, 2, -5, 3), 5, 3, "4x4 class-1 (zero row sum), first matrix", _CLASS1_4),
    ("4x4-class1-b", (0, 2, -7, 5), 5, 3, "4x4 class-1 (zero row sum), second matrix", _CLASS1_4),
    ("4x4-class1-c", (0, 5, -8, 3), 5, 3, "4x4 class-1 (zero row sum), third matrix", _CLASS1_4),
    ("4x4-class1-d", (0, 1, -4, 3), 5, 3, "4x4 class-1 (zero row sum), fourth matrix", _CLASS1_4),
    ("4x4-class2-a", (0, 2, -5, 4), 6, 3, "4x4 class-2, row sum 1, first matrix", _CLASS2_4),
    ("4x4-class2-b", (0, 5, -7, 3), 6, 3, "4x4 class-2, row sum 1, second matrix", _CLASS2_4),
    ("4x4-class2-c", (0, 5, -6, 3), 6, 3, "4x4 class-2, row sum 2", _CLASS2_4),
    ("5x5-a", (0, -2, 3, 3, -2), 7, 6, "5x5, first matrix", _LIST_5),
    ("5x5-b", (0, -1, 2, 2, -1), 7, 6, "5x5, second matrix", _LIST_5),
    ("5x5-c", (0, -3, 4, 4, -3), 7, 6, "5x5, third matrix", _LIST_5),
    ("5x5-d", (0, 3, -1, -1, 3), 7, 6, "5x5, fourth matrix", _LIST_5D),
    ("6x6", (0, -4, 1, 2, 3, -2), 9, 5, "6x6", (
        "++++++", "-+--+-", "+-++-+", "++-++-", "--+--+", "-++-++", "+--+--",
        "+-+-+-", "-+-+-+",
    )),
    ("7x7", (0, -2, -1, 3, 3, 1, -2), 9, 8, "7x7", (
        "-------", "+++-++-", "++-+++-", "+-+++-+", "++-++-+", "+-++-++",
        "+++++++", "-++-+++", "-+++-++",
    )),
    ("8x8-class1", (0, -2, -1, 4, 4, 1, -2, -4), 11, 10, "8x8 class-1 (zero row sum)", _LIST_8_CLASS1),
    ("8x8-class2", (0, -2, -1, 4, 5, 1, -2, -4), 16, 10, "8x8 class-2, row sum 1", _LIST_8_CLASS2),
    ("9x9", (0, -3, -2, -1, 4, 4, 1, 2, -3), 11, 9, "9x9", (
        "---------", "++++-+++-", "-++++-+++", "+-++++-++", "++-++++-+",
        "+++-++++-", "-+++-++++", "+-+++-+++", "++-+++-++", "+++-+++-+",
        "+++++++++",
    )),
    ("10x10", (0, -4, -1, -2, 3, 11, 2, -1, -3, -4), 24, 21, "10x10", (
        "++++-++++-", "-++++-++++", "+-++++-+++", "++-++++-++", "+++-++++-+",
        "----+----+", "+----+----", "-+----+---", "--+----+--", "---+----+-",
        "+-+-+-+-+-", "-+-+-+-+-+", "++++++++++", "++---++---", "-++---++--",
        "--++---++-", "---++---++", "+---++---+", "--+++--+++", "+--+++--++",
        "++--+++--+", "+++--+++--", "-+++--+++-", "----------",
    )),
    ("11x11", (0, -4, -3, -2, -1, 6, 6, 1, 2, 3, -4), 13, 11, "11x11", (
        "+++++++++++", "+++++-++++-", "-+++++-++++", "+-+++++-+++",
        "++-+++++-++", "+++-+++++-+", "++++-+++++-", "-++++-+++++",
        "+-++++-++++", "++-++++-+++", "+++-++++-++", "++++-++++-+",
        "-----------",
    )),
    ("12x12", (0, -5, -4, -1, -2, 3, 17, 2, -1, -3, 4, -5), 34, None, "12x12", (
        "++++++++++++", "+++++-+++++-", "-----+-----+", "-+++++-+++++",
        "+-----+-----", "+-+++++-++++", "-+-----+----", "++-+++++-+++",
        "--+-----+---", "+++-+++++-++", "----+-----+-", "+-+-+-+-+-+-",
        "-+-+-+-+-+-+", "++----++----", "--++++--++++", "-++----++---",
        "+--++++--+++", "--++----++--", "++--++++--++", "---++----++-",
        "+++--++++--+", "----++----++", "++++--++++--", "+----++----+",
        "-++++--++++-", "++-++-++-++-", "--+--+--+--+", "-++-++-++-++",
        "+--+--+--+--", "+-++-++-++-+", "-+--+--+--+-", "------------",
    )),
    # The printed 13x13 listing opens with a 12-symbol row; it is left out.
    ("13x13", (0, -5, -4, -3, -2, -1, 8, 8, 1, 2, 3, 4, -5), 15, None, "13x13", (
        "++++++-+++++-", "-++++++-+++++", "+-++++++-++++", "++-++++++-+++",
        "++++-++++++-+", "+++++-++++++-", "-+++++-++++++", "+-+++++-+++++",
        "++-+++++-++++", "+++-+++++-+++", "++++-+++++-++", "+++++-+++++-+",
        "-------------",
    )),
    ("14x14", (0, -6, -5, -4, -1, -2, 3, 28, 2, -1, 3, -4, 5, -6), 46, 23, "14x14", (
        "++++++++++++++", "++++++-++++++-", "-++++++-++++++", "+-++++++-+++++",
        "++-++++++-++++", "+++-++++++-+++", "++++-++++++-++", "+-+-+-+-+-+-+-",
        "++++---++++---", "-++++---++++--", "--++++---++++-", "---++++---++++",
        "+---++++---+++", "+++---++++---+", "++-----++-----", "-++-----++----",
        "--++-----++---", "---++-----++--", "----++-----++-", "-----++-----++",
        "+-----++-----+",
    )),
    ("15x15", (0, -6, -5, -4, -3, -2, -1, 10, 10, 1, 2, 3, 4, 5, -6), 17, None, "15x15", (
        "+++++++++++++++", "+++++++-++++++-", "-+++++++-++++++", "+-+++++++-+++++",
        "++-+++++++-++++", "+++-+++++++-+++", "+++++-+++++++-+", "-++++++-+++++++",
        "+-++++++-++++++", "++-++++++-+++++", "+++-++++++-++++", "+++++-+++++-+++",
        "++++++-+++++-++", "---------------",
    )),
]


def paper_catalog() -> list[CatalogEntry]:
    """Every published reference matrix, in presentation order."""
    return [
        CatalogEntry(
            label=label,
            row=GeneratorRow(row),
            expected_fixed=fixed,
            expected_unique=unique,
            unique_rule_trusted=unique is not None and len(row) in TRUSTED_UNIQUE_SIZES,
            source=source,
            listed=listing,
        )
        for label, row, fixed, unique, source, listing in _RAW
    ]


def catalog_entry(label: str) -> CatalogEntry:
    for entry in paper_catalog():
        if entry.label == label:
            return entry
    raise KeyError(label)
