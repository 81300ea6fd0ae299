"""Compositions, set partitions and constrained pairing families.

A composition fixes the block structure of a word of generators: positions
1..|r| are split into consecutive blocks of sizes r_1, ..., r_p, and each
block may carry a nonnegative rational time.  The pairing families
constrained by a composition are

- ``nc2``: noncrossing pairings with no pair inside a block,
- ``pi2``: arbitrary pairings with no pair inside a block,

and their starred variants, which additionally must join with the block
partition into a single block.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator

Pair = tuple[int, int]


class GuardExceeded(ValueError):
    """Raised when an enumeration or search would exceed its size guard."""


@dataclass(frozen=True)
class Composition:
    """A vector of positive part sizes with optional per-part times.

    ``block_of`` is the projection sending a position x in 1..total to the
    index of the part it falls in.
    """

    parts: tuple[int, ...]
    times: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(r) for r in self.parts))
        if not self.parts:
            raise ValueError("composition needs at least one part")
        if any(r < 1 for r in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if self.times is not None:
            times = tuple(Fraction(t) for t in self.times)
            if len(times) != len(self.parts):
                raise ValueError("times must match parts in length")
            if any(t < 0 for t in times):
                raise ValueError(f"times must be nonnegative: {times}")
            object.__setattr__(self, "times", times)

    @staticmethod
    def constant(size: int, count: int, time: Fraction | int | None = None) -> "Composition":
        """The composition (size, size, ..., size) with ``count`` parts."""
        times = None if time is None else (Fraction(time),) * count
        return Composition((size,) * count, times)

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @cached_property
    def _ends(self) -> tuple[int, ...]:
        ends = []
        acc = 0
        for r in self.parts:
            acc += r
            ends.append(acc)
        return tuple(ends)

    def block_of(self, position: int) -> int:
        """1-indexed part containing a 1-indexed position."""
        if not 1 <= position <= self.total:
            raise ValueError(f"position {position} out of range 1..{self.total}")
        return bisect.bisect_left(self._ends, position) + 1

    def block_positions(self, k: int) -> range:
        """Positions of part k, 1-indexed."""
        start = self._ends[k - 1] - self.parts[k - 1] + 1
        return range(start, self._ends[k - 1] + 1)

    def time_of_part(self, k: int) -> Fraction:
        return Fraction(1) if self.times is None else self.times[k - 1]

    def time_of_position(self, position: int) -> Fraction:
        return self.time_of_part(self.block_of(position))

    def block_partition(self) -> "SetPartition":
        """The partition of 1..total whose blocks are the parts."""
        return SetPartition.from_blocks(
            self.total, [tuple(self.block_positions(k)) for k in range(1, self.p + 1)]
        )

    def with_times(self, times: Iterable[Fraction | int]) -> "Composition":
        return Composition(self.parts, tuple(Fraction(t) for t in times))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..ground} into disjoint nonempty blocks.

    Blocks are stored sorted, and sorted by their minima, so the canonical
    form is unique.

    >>> str(SetPartition.from_blocks(4, [(2, 3), (4, 1)]))
    '{{1,4},{2,3}}'
    """

    ground: int
    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_blocks(ground: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen = [x for b in canon for x in b]
        if sorted(seen) != list(range(1, ground + 1)):
            raise ValueError(f"blocks {canon} do not partition 1..{ground}")
        return SetPartition(ground, canon)

    @staticmethod
    def singletons(ground: int) -> "SetPartition":
        return SetPartition(ground, tuple((x,) for x in range(1, ground + 1)))

    @staticmethod
    def full(ground: int) -> "SetPartition":
        if ground == 0:
            return SetPartition(0, ())
        return SetPartition(ground, (tuple(range(1, ground + 1)),))

    @cached_property
    def block_index(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def same_block(self, x: int, y: int) -> bool:
        return self.block_index[x] == self.block_index[y]

    @property
    def is_pairing(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def partner_array(self) -> tuple[int, ...]:
        """For a pairing, the array whose i-th entry is the partner of i."""
        if not self.is_pairing:
            raise ValueError("partner_array is only defined for pairings")
        partner = [0] * self.ground
        for a, b in self.blocks:
            partner[a - 1] = b
            partner[b - 1] = a
        return tuple(partner)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def is_noncrossing(partition: SetPartition) -> bool:
    """No a < b < c < d with a,c in one block and b,d in another.

    Single left-to-right scan: a partition is noncrossing exactly when its
    blocks close in last-opened-first-closed order.
    """
    stack: list[int] = []
    open_set: set[int] = set()
    maxima = {i: b[-1] for i, b in enumerate(partition.blocks)}
    for x in range(1, partition.ground + 1):
        i = partition.block_index[x]
        if i in open_set:
            if stack[-1] != i:
                return False
        else:
            open_set.add(i)
            stack.append(i)
        if x == maxima[i]:
            stack.pop()
    return True


def meet(p: SetPartition, q: SetPartition) -> SetPartition:
    """Common refinement: nonempty pairwise intersections of blocks."""
    if p.ground != q.ground:
        raise ValueError("meet needs partitions of the same ground set")
    blocks = []
    for b in p.blocks:
        groups: dict[int, list[int]] = {}
        for x in b:
            groups.setdefault(q.block_index[x], []).append(x)
        blocks.extend(groups.values())
    return SetPartition.from_blocks(p.ground, blocks)


def join(p: SetPartition, q: SetPartition) -> SetPartition:
    """Transitive closure of the union of both block relations."""
    if p.ground != q.ground:
        raise ValueError("join needs partitions of the same ground set")
    parent = list(range(p.ground + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for part in (p, q):
        for b in part.blocks:
            for x in b[1:]:
                union(b[0], x)
    groups: dict[int, list[int]] = {}
    for x in range(1, p.ground + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition.from_blocks(p.ground, groups.values())


def refines(p: SetPartition, q: SetPartition) -> bool:
    """True when every block of p sits inside a block of q."""
    return meet(p, q) == p


# ---------------------------------------------------------------------------
# Pairing enumeration.  The raw generators yield tuples of (i, j) pairs with
# i < j; the public functions wrap them into canonical SetPartitions.  The
# intra-block rejection happens inline, before recursing, which only prunes:
# the full filter path (enumerate everything, then filter) is pinned against
# it in the tests.
# ---------------------------------------------------------------------------

PAIRING_GROUND_GUARD = 20


def _pairings_raw(points: tuple[int, ...], forbidden: Callable[[int, int], bool]) -> Iterator[tuple[Pair, ...]]:
    if not points:
        yield ()
        return
    i = points[0]
    rest = points[1:]
    for idx, j in enumerate(rest):
        if forbidden(i, j):
            continue
        for tail in _pairings_raw(rest[:idx] + rest[idx + 1 :], forbidden):
            yield ((i, j),) + tail


def _noncrossing_pairings_raw(points: tuple[int, ...], forbidden: Callable[[int, int], bool]) -> Iterator[tuple[Pair, ...]]:
    if not points:
        yield ()
        return
    i = points[0]
    # i's partner must leave an even number of points on each side
    for idx in range(1, len(points), 2):
        j = points[idx]
        if forbidden(i, j):
            continue
        for left in _noncrossing_pairings_raw(points[1:idx], forbidden):
            for right in _noncrossing_pairings_raw(points[idx + 1 :], forbidden):
                yield ((i, j),) + left + right


def _check_ground(m: int, guard: int) -> None:
    if m > guard:
        raise GuardExceeded(f"pairing ground set {m} exceeds guard {guard}")


def _never(i: int, j: int) -> bool:
    return False


def _wrap(m: int, raw: Iterable[tuple[Pair, ...]]) -> list[SetPartition]:
    out = [SetPartition.from_blocks(m, pairs) for pairs in raw]
    out.sort(key=lambda p: p.partner_array())
    return out


def enumerate_pairings(m: int, guard: int = PAIRING_GROUND_GUARD) -> list[SetPartition]:
    """All (m-1)!! pairings of 1..m; empty for odd m."""
    _check_ground(m, guard)
    if m % 2:
        return []
    return _wrap(m, _pairings_raw(tuple(range(1, m + 1)), _never))


def _same_block_test(comp: Composition) -> Callable[[int, int], bool]:
    return lambda i, j: comp.block_of(i) == comp.block_of(j)


def _nc2_raw(comp: Composition) -> Iterator[tuple[Pair, ...]]:
    return _noncrossing_pairings_raw(tuple(range(1, comp.total + 1)), _same_block_test(comp))


def _pi2_raw(comp: Composition) -> Iterator[tuple[Pair, ...]]:
    return _pairings_raw(tuple(range(1, comp.total + 1)), _same_block_test(comp))


def _connects_blocks(pairs: tuple[Pair, ...], comp: Composition) -> bool:
    """True when the pairs glue all parts of the composition together."""
    p = comp.p
    if p == 1:
        return True
    parent = list(range(p + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = p
    for i, j in pairs:
        a, b = find(comp.block_of(i)), find(comp.block_of(j))
        if a != b:
            parent[a] = b
            components -= 1
    return components == 1


def enumerate_nc2(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> list[SetPartition]:
    """Noncrossing pairings of 1..|r| with no pair inside a part."""
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return []
    return _wrap(comp.total, _nc2_raw(comp))


def enumerate_nc2_star(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> list[SetPartition]:
    """The connected members of nc2: joining with the block partition yields one block."""
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return []
    return _wrap(comp.total, (pp for pp in _nc2_raw(comp) if _connects_blocks(pp, comp)))


def enumerate_pi2(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> list[SetPartition]:
    """All pairings of 1..|r| with no pair inside a part."""
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return []
    return _wrap(comp.total, _pi2_raw(comp))


def enumerate_pi2_star(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> list[SetPartition]:
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return []
    return _wrap(comp.total, (pp for pp in _pi2_raw(comp) if _connects_blocks(pp, comp)))


def count_nc2(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> int:
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return 0
    return sum(1 for _ in _nc2_raw(comp))


def count_nc2_star(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> int:
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return 0
    return sum(1 for pp in _nc2_raw(comp) if _connects_blocks(pp, comp))


def count_pi2(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> int:
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return 0
    return sum(1 for _ in _pi2_raw(comp))


def count_pi2_star(comp: Composition, guard: int = PAIRING_GROUND_GUARD) -> int:
    _check_ground(comp.total, guard)
    if comp.total % 2:
        return 0
    return sum(1 for pp in _pi2_raw(comp) if _connects_blocks(pp, comp))


def weighted_pairing_sum(comp: Composition, noncrossing_only: bool = False) -> Fraction:
    """Sum over the pairing family of the product of min-times over pairs.

    Each pair {i, j} contributes min of the times of the parts containing i
    and j; the sum runs over pi2 by default, or over nc2 when
    ``noncrossing_only`` is set.
    """
    if comp.times is None:
        raise ValueError("weighted_pairing_sum needs a composition with times")
    if comp.total % 2:
        return Fraction(0)
    raw = _nc2_raw(comp) if noncrossing_only else _pi2_raw(comp)
    total = Fraction(0)
    for pairs in raw:
        w = Fraction(1)
        for i, j in pairs:
            w *= min(comp.time_of_position(i), comp.time_of_position(j))
        total += w
    return total


def collapse(pairing: SetPartition, comp: Composition) -> SetPartition:
    """How a pairing links the parts: the induced partition of {1..p}.

    Parts k and l land in one block exactly when the join of the pairing
    with the block partition merges them.
    """
    if pairing.ground != comp.total:
        raise ValueError("pairing ground set does not match the composition")
    joined = join(pairing, comp.block_partition())
    rep_block = {k: joined.block_index[comp.block_positions(k)[0]] for k in range(1, comp.p + 1)}
    groups: dict[int, list[int]] = {}
    for k in range(1, comp.p + 1):
        groups.setdefault(rep_block[k], []).append(k)
    return SetPartition.from_blocks(comp.p, groups.values())


# ---------------------------------------------------------------------------
# Set partition enumeration (all / noncrossing), streamed as raw index blocks
# over arbitrary ordered point tuples.
# ---------------------------------------------------------------------------

def _all_partitions_raw(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for part in _all_partitions_raw(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + ((first,) + block,) + part[i + 1 :]


def _nc_partitions_raw(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    yield from _nc_first_block((first,), rest)


def _nc_first_block(block: tuple[int, ...], remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    # close the block of the minimum here, or extend it past an independent gap
    for tail in _nc_partitions_raw(remaining):
        yield (block,) + tail
    for j in range(len(remaining)):
        for gap in _nc_partitions_raw(remaining[:j]):
            for out in _nc_first_block(block + (remaining[j],), remaining[j + 1 :]):
                yield (out[0],) + gap + out[1:]


def enumerate_set_partitions(m: int) -> list[SetPartition]:
    """All partitions of 1..m (Bell(m) of them)."""
    pts = tuple(range(1, m + 1))
    out = [SetPartition.from_blocks(m, blocks) for blocks in _all_partitions_raw(pts)]
    out.sort(key=lambda p: p.blocks)
    return out


def enumerate_nc(m: int) -> list[SetPartition]:
    """All noncrossing partitions of 1..m (Catalan(m) of them)."""
    pts = tuple(range(1, m + 1))
    out = [SetPartition.from_blocks(m, blocks) for blocks in _nc_partitions_raw(pts)]
    out.sort(key=lambda p: p.blocks)
    return out
