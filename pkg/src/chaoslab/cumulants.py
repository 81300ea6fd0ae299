"""Moment-cumulant inversion on the noncrossing and full partition lattices.

A moment functional maps tuples of generator labels to exact values.  Free
cumulants invert it over noncrossing partitions, classical cumulants over
all partitions; both use the triangular recursion that subtracts every
non-maximal partition term, with cumulants memoized per label tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .chaos import finite_trace_classical, finite_trace_free
from .partitions import (
    Composition,
    SetPartition,
    _all_partitions_raw,
    _nc2_raw,
    _nc_partitions_raw,
    collapse,
    count_nc2,
    count_pi2,
)

Labels = tuple[int, ...]


class MomentFunctional:
    """A total map from label tuples to moments, memoized together with the
    cumulants computed from it."""

    def __init__(self, fn: Callable[[Labels], Fraction | int]):
        self._fn = fn
        self._moments: dict[Labels, Fraction | int] = {}
        self._free: dict[Labels, Fraction | int] = {}
        self._classical: dict[Labels, Fraction | int] = {}

    def moment(self, labels: Labels) -> Fraction | int:
        labels = tuple(labels)
        if labels not in self._moments:
            self._moments[labels] = self._fn(labels)
        return self._moments[labels]


def nc2_moments() -> MomentFunctional:
    """Limit moments of the free model: labels -> number of constrained
    noncrossing pairings."""
    return MomentFunctional(lambda labels: count_nc2(Composition(labels)))


def pi2_moments() -> MomentFunctional:
    """Limit moments of the classical model: labels -> number of constrained
    pairings."""
    return MomentFunctional(lambda labels: count_pi2(Composition(labels)))


def finite_free_moments(n: int, guard: int | None = None) -> MomentFunctional:
    kwargs = {} if guard is None else {"guard": guard}
    return MomentFunctional(lambda labels: finite_trace_free(Composition(labels), n, **kwargs))


def finite_classical_moments(n: int, guard: int | None = None) -> MomentFunctional:
    kwargs = {} if guard is None else {"guard": guard}
    return MomentFunctional(lambda labels: finite_trace_classical(Composition(labels), n, **kwargs))


def _as_functional(m: MomentFunctional | Callable[[Labels], Fraction | int]) -> MomentFunctional:
    return m if isinstance(m, MomentFunctional) else MomentFunctional(m)


def free_cumulant(m: MomentFunctional, labels: Labels) -> Fraction | int:
    """The free cumulant at a label tuple, by noncrossing-lattice inversion.

    Within each partition block, arguments keep their ground-set order.
    """
    m = _as_functional(m)
    return _cumulant(m, tuple(labels), m._free, _nc_partitions_raw)


def classical_cumulant(m: MomentFunctional, labels: Labels) -> Fraction | int:
    """The classical cumulant at a label tuple, inverted over all partitions."""
    m = _as_functional(m)
    return _cumulant(m, tuple(labels), m._classical, _all_partitions_raw)


def _cumulant(m, labels, memo, partitions_raw) -> Fraction | int:
    if labels in memo:
        return memo[labels]
    p = len(labels)
    total = m.moment(labels)
    for blocks in partitions_raw(tuple(range(p))):
        if len(blocks) == 1:
            continue
        prod = 1
        for block in blocks:
            prod *= _cumulant(m, tuple(labels[i] for i in block), memo, partitions_raw)
            if prod == 0:
                break
        total -= prod
    memo[labels] = total
    return total


def count_by_collapse(comp: Composition, pi: SetPartition) -> int:
    """Fiber size of the collapse map over a noncrossing partition of the
    parts: how many constrained noncrossing pairings link the parts exactly
    as pi prescribes."""
    if pi.ground != comp.p:
        raise ValueError("partition ground set must equal the number of parts")
    count = 0
    for pairs in _nc2_raw(comp):
        pairing = SetPartition.from_blocks(comp.total, pairs)
        if collapse(pairing, comp) == pi:
            count += 1
    return count
