"""Two-row semistandard Young tableaux of a given weight.

For a composition r with even total, the shape is two rows of length
|r|/2 and the weight prescribes r_i entries equal to i.  Rows must be
weakly increasing and columns strictly increasing.  Since each row is
determined by how many copies of each value it holds, enumeration runs over
the splittings of every value between the rows and keeps the column-strict
ones, checked literally on the built rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Composition, SetPartition


@dataclass(frozen=True)
class Tableau:
    """A two-row column-strict filling; construction validates."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if not _rows_valid(self.top, self.bottom):
            raise ValueError(f"rows {self.top} / {self.bottom} are not column-strict")

    def weight(self) -> tuple[int, ...]:
        entries = self.top + self.bottom
        return tuple(entries.count(i) for i in range(1, max(entries) + 1))

    def __str__(self) -> str:
        return f"[[{','.join(map(str, self.top))}],[{','.join(map(str, self.bottom))}]]"


def _rows_valid(top: tuple[int, ...], bottom: tuple[int, ...]) -> bool:
    if len(top) != len(bottom):
        return False
    if any(a > b for a, b in zip(top, top[1:])) or any(a > b for a, b in zip(bottom, bottom[1:])):
        return False
    return all(a < b for a, b in zip(top, bottom))


def enumerate_ssyt(parts: tuple[int, ...]) -> list[Tableau]:
    """All two-row tableaux of the given weight, ordered by reading words."""
    parts = tuple(parts)
    total = sum(parts)
    if total % 2:
        return []
    half = total // 2
    out: list[Tableau] = []

    def split(i: int, top: list[int], bottom: list[int]) -> None:
        if len(top) > half or len(bottom) > half:
            return
        if i == len(parts):
            if len(top) == half and _rows_valid(tuple(top), tuple(bottom)):
                out.append(Tableau(tuple(top), tuple(bottom)))
            return
        value = i + 1
        for to_top in range(parts[i], -1, -1):
            split(i + 1, top + [value] * to_top, bottom + [value] * (parts[i] - to_top))

    split(0, [], [])
    out.sort(key=lambda t: (t.top, t.bottom))
    return out


def pairing_to_tableau(pairing: SetPartition, comp: Composition) -> Tableau:
    """Send a constrained noncrossing pairing to a tableau: for each block,
    its closers fill the bottom row and its openers the top row."""
    from .dyck import _require_member, _openers_closers

    _require_member(pairing, comp)
    top: list[int] = []
    bottom: list[int] = []
    for i, (t, s) in enumerate(_openers_closers(pairing, comp), start=1):
        bottom.extend([i] * s)
        top.extend([i] * t)
    return Tableau(tuple(top), tuple(bottom))
