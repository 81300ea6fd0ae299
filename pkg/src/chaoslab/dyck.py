"""Lattice paths with composition-sized jumps and the pairing bijection.

A path for a composition (r_1, ..., r_p) starts and ends at height 0, jumps
by some d in {r_i, r_i - 2, ..., -r_i} at step i, and satisfies the floor
rule height(i) + height(i-1) >= r_i, which forces nonnegativity.  The jump
at step i splits the i-th block into (r_i + d)/2 pair openers and
(r_i - d)/2 closers, which is exactly the data of a constrained noncrossing
pairing; closing always shuts the most recently opened pair, so the pairing
is recovered from the path alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Composition, SetPartition, is_noncrossing


def jump_set(k: int) -> tuple[int, ...]:
    """Admissible jumps for a block of size k: k, k-2, ..., -k."""
    return tuple(range(-k, k + 1, 2))


def _heights_valid(heights: tuple[int, ...], parts: tuple[int, ...]) -> bool:
    if len(heights) != len(parts) + 1:
        return False
    if heights[0] != 0 or heights[-1] != 0:
        return False
    for i, r in enumerate(parts, start=1):
        d = heights[i] - heights[i - 1]
        if abs(d) > r or (d - r) % 2:
            return False
        if heights[i] + heights[i - 1] < r:
            return False
    return True


@dataclass(frozen=True)
class DyckPath:
    """A valid path for its composition; construction validates."""

    parts: tuple[int, ...]
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "heights", tuple(self.heights))
        if not _heights_valid(self.heights, self.parts):
            raise ValueError(f"heights {self.heights} are not a valid path for {self.parts}")

    @property
    def steps(self) -> int:
        return len(self.parts)

    def is_irreducible(self) -> bool:
        """No proper window, shifted to start at 0, is itself a valid path."""
        p = self.steps
        for x in range(p):
            for y in range(x + 1, p + 1):
                if (x, y) == (0, p):
                    continue
                window = tuple(h - self.heights[x] for h in self.heights[x : y + 1])
                if _heights_valid(window, self.parts[x:y]):
                    return False
        return True

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.heights)) + ")"


def enumerate_dyck_paths(parts: tuple[int, ...]) -> list[DyckPath]:
    """All valid paths for the composition, in height-lexicographic order."""
    parts = tuple(parts)
    p = len(parts)
    suffix = [0] * (p + 1)
    for i in range(p - 1, -1, -1):
        suffix[i] = suffix[i + 1] + parts[i]
    out: list[DyckPath] = []
    heights = [0] * (p + 1)

    def step(i: int) -> None:
        if i == p:
            if heights[p] == 0:
                out.append(DyckPath(parts, tuple(heights)))
            return
        prev = heights[i]
        r = parts[i]
        for d in jump_set(r):
            nxt = prev + d
            # must stay reachable back to 0 with the remaining jump budget
            if nxt + prev < r or nxt < 0 or nxt > suffix[i + 1] or (nxt - suffix[i + 1]) % 2:
                continue
            heights[i + 1] = nxt
            step(i + 1)

    if suffix[0] % 2 == 0:
        step(0)
    return out


def enumerate_irreducible_dyck_paths(parts: tuple[int, ...]) -> list[DyckPath]:
    return [path for path in enumerate_dyck_paths(parts) if path.is_irreducible()]


def _openers_closers(pairing: SetPartition, comp: Composition) -> list[tuple[int, int]]:
    """Per block: (number of openers, number of closers) of the pairing."""
    opener = {min(a, b) for a, b in pairing.blocks}
    counts = []
    for k in range(1, comp.p + 1):
        positions = comp.block_positions(k)
        t = sum(1 for x in positions if x in opener)
        counts.append((t, len(positions) - t))
    return counts


def pairing_to_path(pairing: SetPartition, comp: Composition) -> DyckPath:
    """The path whose height after block i counts the pairs still open."""
    _require_member(pairing, comp)
    heights = [0]
    for t, s in _openers_closers(pairing, comp):
        heights.append(heights[-1] + t - s)
    return DyckPath(comp.parts, tuple(heights))


def path_to_pairing(path: DyckPath) -> SetPartition:
    """Rebuild the pairing: each closer shuts the most recent open pair."""
    comp = Composition(path.parts)
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for i in range(1, path.steps + 1):
        r = path.parts[i - 1]
        d = path.heights[i] - path.heights[i - 1]
        t, s = (r + d) // 2, (r - d) // 2
        positions = list(comp.block_positions(i))
        for x in positions[:s]:
            pairs.append((stack.pop(), x))
        for x in positions[s:]:
            stack.append(x)
    if stack:
        raise ValueError("path left unclosed pairs")
    return SetPartition.from_blocks(comp.total, pairs)


def _require_member(pairing: SetPartition, comp: Composition) -> None:
    if pairing.ground != comp.total:
        raise ValueError("pairing ground set does not match the composition")
    if not pairing.is_pairing:
        raise ValueError("not a pairing")
    if not is_noncrossing(pairing):
        raise ValueError("pairing has a crossing")
    for a, b in pairing.blocks:
        if comp.block_of(a) == comp.block_of(b):
            raise ValueError(f"pair ({a},{b}) lies inside one block")
