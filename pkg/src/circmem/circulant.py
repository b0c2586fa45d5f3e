"""Generator rows, circulant weight matrices, bipolar states and local fields.

Only the generator row is stored; the full matrix is a derived view.
Every quantity is an exact Python integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, total_ordering
from operator import mul
from typing import Iterable, Sequence

import numpy as np

from circmem.errors import (
    EmptyRow,
    NonZeroDiagonal,
    ParseError,
    SizeMismatch,
    WeightOutOfRange,
)

# |c[k]| <= 2^20 keeps n-term sums far inside int64 for any enumerable n.
MAX_WEIGHT = 1 << 20


@dataclass(frozen=True)
class GeneratorRow:
    """First row ``c`` of a circulant matrix, with ``c[0] == 0``."""

    c: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.c)
        object.__setattr__(self, "c", c)
        if not c:
            raise EmptyRow("generator row must have at least one entry")
        if c[0] != 0:
            raise NonZeroDiagonal(f"c[0] must be 0 (zero self-coupling), got {c[0]}")
        for k, v in enumerate(c):
            if abs(v) > MAX_WEIGHT:
                raise WeightOutOfRange(
                    f"|c[{k}]| = {abs(v)} exceeds the bound {MAX_WEIGHT}"
                )

    @property
    def n(self) -> int:
        return len(self.c)

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __getitem__(self, k):
        return self.c[k]

    def render(self) -> str:
        return ",".join(str(v) for v in self.c)


def as_row(row: GeneratorRow | Iterable[int]) -> GeneratorRow:
    return row if isinstance(row, GeneratorRow) else GeneratorRow(tuple(row))


def parse_first_row(text: str) -> GeneratorRow:
    """Parse ``"0,2,-5,3"`` into a :class:`GeneratorRow`.

    Raises :class:`ParseError` (with the character offset of the bad token)
    on malformed input, and :class:`NonZeroDiagonal` if the first value is
    not zero.
    """
    values = []
    offset = 0
    for token in text.split(","):
        stripped = token.strip()
        pos = offset + (len(token) - len(token.lstrip()))
        body = stripped[1:] if stripped[:1] in "+-" else stripped
        if not body.isdigit() or not body.isascii():
            what = "empty entry" if not stripped else f"not an integer: {stripped!r}"
            raise ParseError(what, pos)
        values.append(int(stripped))
        offset += len(token) + 1
    return GeneratorRow(tuple(values))


class CirculantMatrix:
    """Immutable n x n circulant weight matrix, ``W[i][j] = c[(j - i) mod n]``."""

    def __init__(self, row: GeneratorRow | Iterable[int]):
        self.row = as_row(row)

    @property
    def n(self) -> int:
        return self.row.n

    def __getitem__(self, ij):
        i, j = ij
        n = self.n
        return self.row.c[(j - i) % n]

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        c, n = self.row.c, self.n
        return tuple(c[n - i:] + c[:n - i] for i in range(n))

    @cached_property
    def entries(self) -> np.ndarray:
        """Read-only int64 array of the full matrix."""
        a = np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)
        a.setflags(write=False)
        return a

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, CirculantMatrix) and other.row == self.row

    def __hash__(self):
        return hash(self.row)

    def __repr__(self):
        return f"CirculantMatrix({list(self.row.c)})"


def build_circulant(row: GeneratorRow | Iterable[int]) -> CirculantMatrix:
    return CirculantMatrix(row)


def row_sum(row: GeneratorRow | CirculantMatrix | Iterable[int]) -> int:
    if isinstance(row, CirculantMatrix):
        row = row.row
    return sum(as_row(row).c)


@total_ordering
@dataclass(frozen=True)
class BipolarState:
    """A vector in {+1, -1}^n.

    The packed index puts position 0 in the most significant bit and encodes
    ``+1`` as 0, so ``index`` order equals lexicographic order of the
    ``"+"``/``"-"`` string with ``+`` before ``-``.
    """

    spins: tuple[int, ...]

    def __post_init__(self):
        spins = tuple(int(v) for v in self.spins)
        if any(v not in (1, -1) for v in spins):
            raise ValueError(f"spins must be +1/-1, got {spins}")
        object.__setattr__(self, "spins", spins)

    @property
    def n(self) -> int:
        return len(self.spins)

    @property
    def index(self) -> int:
        return pack(self.spins)

    @classmethod
    def from_index(cls, index: int, n: int) -> "BipolarState":
        if not 0 <= index < (1 << n):
            raise ValueError(f"index {index} out of range for n={n}")
        return cls(unpack(index, n))

    @classmethod
    def from_string(cls, text: str) -> "BipolarState":
        text = text.replace(" ", "").strip("[]")
        try:
            return cls(tuple({"+": 1, "-": -1, "−": -1}[ch] for ch in text))
        except KeyError as exc:
            raise ParseError(f"bad spin character {exc.args[0]!r}", text.index(exc.args[0])) from None

    @classmethod
    def all_plus(cls, n: int) -> "BipolarState":
        return cls((1,) * n)

    @classmethod
    def all_minus(cls, n: int) -> "BipolarState":
        return cls((-1,) * n)

    def __lt__(self, other):
        if not isinstance(other, BipolarState):
            return NotImplemented
        return (self.n, self.index) < (other.n, other.index)

    def __str__(self):
        return spins_to_string(self.spins)

    def __len__(self):
        return len(self.spins)

    def __iter__(self):
        return iter(self.spins)

    def __getitem__(self, i):
        return self.spins[i]


def pack(spins: Sequence[int]) -> int:
    idx = 0
    for v in spins:
        idx = (idx << 1) | (v < 0)
    return idx


def unpack(index: int, n: int) -> tuple[int, ...]:
    return tuple(-1 if (index >> (n - 1 - i)) & 1 else 1 for i in range(n))


def spins_to_string(spins: Iterable[int]) -> str:
    return "".join("+" if v > 0 else "-" for v in spins)


def index_to_string(index: int, n: int) -> str:
    return format(index, f"0{n}b").replace("0", "+").replace("1", "-") if n else ""


def local_field(W: CirculantMatrix, s: BipolarState | Sequence[int]) -> tuple[int, ...]:
    """Exact integer product ``W @ s``."""
    spins = s.spins if isinstance(s, BipolarState) else tuple(s)
    if len(spins) != W.n:
        raise SizeMismatch(f"matrix is {W.n}x{W.n} but state has {len(spins)} spins")
    return tuple(sum(map(mul, r, spins)) for r in W.rows)
