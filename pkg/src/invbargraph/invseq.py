"""Inversion sequences, their bargraph statistics, and permutation conversions.

An inversion sequence of length n is a word rho_1..rho_n with 1 <= rho_i <= i.
Drawn as a bargraph (column i has height rho_i) it carries five statistics:

* area: number of unit cells, sum(rho_i)
* sper: half the bargraph perimeter (the bottom boundary included), equal to
  n + (rho_1 + sum |rho_i - rho_{i-1}| + rho_n) / 2
* levels / descents / ascents: indices i < n with rho_i =, >, < rho_{i+1}

>>> stats(InversionSequence((1, 2, 1, 3, 5, 3)))
StatRecord(area=15, sper=12, levels=0, descents=2, ascents=3)
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product
from typing import Iterable, Iterator

from invbargraph import kernel
from invbargraph.mpoly import MPoly
from invbargraph.recur import DistTable


class EmptySequenceError(ValueError):
    """Inversion sequences must have length at least 1."""


class OutOfRangeError(ValueError):
    """Entry rho_i outside 1..i; `index` is the offending 1-based position."""

    def __init__(self, index: int, value: int):
        super().__init__(f"entry {value} at position {index} is outside 1..{index}")
        self.index = index
        self.value = value


class InversionSequence:
    """A validated sequence rho with 1 <= rho_i <= i."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(v) for v in entries)
        if not entries:
            raise EmptySequenceError("empty sequence")
        for i, v in enumerate(entries, start=1):
            if not 1 <= v <= i:
                raise OutOfRangeError(i, v)
        object.__setattr__(self, "_entries", entries)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __getitem__(self, i: int) -> int:
        return self._entries[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, InversionSequence) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"InversionSequence({self._entries!r})"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("InversionSequence is immutable")

    def to_text(self) -> str:
        return ",".join(map(str, self._entries))

    @classmethod
    def from_text(cls, text: str) -> "InversionSequence":
        return cls(int(part) for part in text.strip().split(","))


class Permutation:
    """A permutation of [n] in one-line notation."""

    __slots__ = ("_oneline",)

    def __init__(self, oneline: Iterable[int]):
        oneline = tuple(int(v) for v in oneline)
        n = len(oneline)
        if n == 0:
            raise ValueError("empty permutation")
        if sorted(oneline) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {oneline}")
        object.__setattr__(self, "_oneline", oneline)

    @property
    def oneline(self) -> tuple[int, ...]:
        return self._oneline

    def __len__(self) -> int:
        return len(self._oneline)

    def __iter__(self) -> Iterator[int]:
        return iter(self._oneline)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._oneline == other._oneline

    def __hash__(self) -> int:
        return hash(self._oneline)

    def __repr__(self) -> str:
        return f"Permutation({self._oneline!r})"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Permutation is immutable")

    def to_text(self) -> str:
        return ",".join(map(str, self._oneline))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(int(part) for part in text.strip().split(","))


@dataclass(frozen=True)
class StatRecord:
    area: int
    sper: int
    levels: int
    descents: int
    ascents: int

    def to_json_obj(self) -> dict[str, int]:
        return asdict(self)


def validate(raw: Iterable[int]) -> InversionSequence:
    """Validate a raw integer sequence (constructor alias)."""
    return InversionSequence(raw)


def from_permutation(pi: Permutation) -> InversionSequence:
    """Shifted inversion table: entry i is 1 + #{j in [i-1] right of letter i}."""
    word = pi.oneline
    pos = {v: k for k, v in enumerate(word)}
    entries = []
    for i in range(1, len(word) + 1):
        smaller_right = sum(1 for j in range(1, i) if pos[j] > pos[i])
        entries.append(1 + smaller_right)
    return InversionSequence(entries)


def to_permutation(rho: InversionSequence) -> Permutation:
    """Rebuild the permutation: insert letter i with rho_i - 1 smaller letters after it."""
    word: list[int] = []
    for i, v in enumerate(rho, start=1):
        word.insert(i - v, i)
    return Permutation(word)


def enumerate_sequences(n: int) -> Iterator[InversionSequence]:
    """All inversion sequences of length n in lexicographic order (n! of them)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for entries in product(*(range(1, i + 1) for i in range(1, n + 1))):
        yield InversionSequence(entries)


def stats(rho: InversionSequence) -> StatRecord:
    """All five bargraph statistics of a sequence."""
    e = rho.entries
    n = len(e)
    area = sum(e)
    boundary = e[0] + sum(abs(e[i] - e[i - 1]) for i in range(1, n)) + e[-1]
    # boundary is even: the step sum telescopes to rho_n - rho_1 mod 2
    sper = n + boundary // 2
    levels = sum(1 for i in range(n - 1) if e[i] == e[i + 1])
    descents = sum(1 for i in range(n - 1) if e[i] > e[i + 1])
    ascents = sum(1 for i in range(n - 1) if e[i] < e[i + 1])
    return StatRecord(area, sper, levels, descents, ascents)


def brute_dist_area_sper(n: int) -> DistTable:
    """Joint area/sper distribution table by direct enumeration.

    Cell (m, i) is sum of p^area q^sper over all length-m sequences ending
    in i.  Practical bound n <= 11.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = []
    for m in range(1, n + 1):
        terms: list[dict] = [dict() for _ in range(m + 1)]
        for (last, area, sper), mult in kernel.area_sper_counts(m).items():
            terms[last][(0, area, sper, 0, 0)] = mult
        rows.append(tuple(MPoly(terms[i]) for i in range(1, m + 1)))
    return DistTable(tuple(rows))


def brute_dist_lda(n: int) -> DistTable:
    """Joint levels/descents/ascents distribution table by direct enumeration.

    Cell (m, i) is sum of p^levels q^descents r^ascents over length-m
    sequences ending in i.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = []
    for m in range(1, n + 1):
        terms: list[dict] = [dict() for _ in range(m + 1)]
        for (last, lev, des, asc), mult in kernel.lda_counts(m).items():
            terms[last][(0, lev, des, asc, 0)] = mult
        rows.append(tuple(MPoly(terms[i]) for i in range(1, m + 1)))
    return DistTable(tuple(rows))


def brute_stat_totals(n: int) -> dict[str, int]:
    """Sums of each statistic over all length-n sequences, by enumeration."""
    totals = {"area": 0, "sper": 0, "levels": 0, "descents": 0, "ascents": 0}
    for (_, area, sper), mult in kernel.area_sper_counts(n).items():
        totals["area"] += mult * area
        totals["sper"] += mult * sper
    for (_, lev, des, asc), mult in kernel.lda_counts(n).items():
        totals["levels"] += mult * lev
        totals["descents"] += mult * des
        totals["ascents"] += mult * asc
    return totals
