"""Moment-cumulant inversion against the pairing-count predictions."""

import math
from fractions import Fraction

import pytest

from chaoslab.cumulants import (
    MomentFunctional,
    classical_cumulant,
    count_by_collapse,
    finite_classical_moments,
    finite_free_moments,
    free_cumulant,
    nc2_moments,
    pi2_moments,
)
from chaoslab.partitions import (
    Composition,
    SetPartition,
    count_nc2,
    count_nc2_star,
    count_pi2,
    count_pi2_star,
    enumerate_nc,
    enumerate_nc2,
    collapse,
)


def compositions_up_to(max_total):
    for m in range(1, max_total + 1):
        yield from _compositions_of(m)


def _compositions_of(m):
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions_of(m - first):
            yield (first,) + rest


def test_free_cumulant_examples():
    m = nc2_moments()
    assert free_cumulant(m, (2, 2)) == 1
    assert free_cumulant(m, (2, 2, 2, 2)) == 1
    assert free_cumulant(m, (1,)) == 0
    # semicircular generator: only the second cumulant survives
    assert free_cumulant(m, (1, 1)) == 1
    assert free_cumulant(m, (1, 1, 1, 1)) == 0


def test_free_poisson_cumulants():
    m = nc2_moments()
    for p in range(2, 7):
        labels = (2,) * p
        assert free_cumulant(m, labels) == 1
        assert count_nc2_star(Composition(labels)) == 1


def test_classical_cumulant_examples():
    m = pi2_moments()
    assert classical_cumulant(m, (2, 2)) == 2 == count_pi2_star(Composition((2, 2)))
    # textbook third and fourth cumulants of a centered variable
    m2 = count_pi2(Composition((2, 2)))
    m3 = count_pi2(Composition((2, 2, 2)))
    m4 = count_pi2(Composition((2, 2, 2, 2)))
    assert (m2, m3, m4) == (2, 8, 60)
    assert classical_cumulant(m, (2, 2, 2)) == m3
    assert classical_cumulant(m, (2, 2, 2, 2)) == m4 - 3 * m2**2 == 48


def test_chi_square_oracle():
    # the order-2 classical limit is a centered chi-square with one degree
    # of freedom, whose cumulants are 2^(p-1) * (p-1)!
    m = pi2_moments()
    for p in range(2, 5):
        expected = 2 ** (p - 1) * math.factorial(p - 1)
        assert classical_cumulant(m, (2,) * p) == expected
        assert count_pi2_star(Composition.constant(2, p)) == expected


def test_first_order_cumulants_are_moments():
    free = nc2_moments()
    classical = pi2_moments()
    for r in range(1, 5):
        assert free_cumulant(free, (r,)) == free.moment((r,))
        assert classical_cumulant(classical, (r,)) == classical.moment((r,))


def test_free_identity_suite():
    m = nc2_moments()
    for labels in compositions_up_to(12):
        assert free_cumulant(m, labels) == count_nc2_star(Composition(labels)), labels


def test_classical_identity_suite():
    # exhaustive to total 10; the full-partition stream at the longest
    # 11- and 12-part words costs minutes, so those are spot-checked below
    m = pi2_moments()
    for labels in compositions_up_to(10):
        assert classical_cumulant(m, labels) == count_pi2_star(Composition(labels)), labels


def test_classical_identity_suite_spot_checks_past_ten():
    classical = pi2_moments()
    for labels in [(1,) * 11, (1,) * 12, (2, 2, 1, 1, 2, 2), (3, 3, 2, 2), (2,) * 6]:
        assert classical_cumulant(classical, labels) == count_pi2_star(Composition(labels)), labels


def test_count_by_collapse_examples():
    comp = Composition((2, 2))
    assert count_by_collapse(comp, SetPartition.full(2)) == 1
    assert count_by_collapse(comp, SetPartition.singletons(2)) == 0
    total = sum(count_by_collapse(comp, pi) for pi in enumerate_nc(2))
    assert total == count_nc2(comp) == 1


def test_multiplicativity_over_collapse_fibers():
    # the product of starred counts over the blocks of pi equals the number
    # of pairings whose collapse is exactly pi
    star_counts: dict[tuple[int, ...], int] = {}

    def starred(labels):
        if labels not in star_counts:
            star_counts[labels] = count_nc2_star(Composition(labels))
        return star_counts[labels]

    for parts in compositions_up_to(10):
        comp = Composition(parts)
        fibers = {}
        for pairing in enumerate_nc2(comp):
            key = collapse(pairing, comp)
            fibers[key] = fibers.get(key, 0) + 1
        for pi in enumerate_nc(comp.p):
            prod = 1
            for block in pi.blocks:
                prod *= starred(tuple(parts[k - 1] for k in block))
                if prod == 0:
                    break
            assert prod == fibers.get(pi, 0), (parts, str(pi))


def test_count_by_collapse_validates_ground():
    with pytest.raises(ValueError):
        count_by_collapse(Composition((2, 2)), SetPartition.full(3))


def test_finite_moment_functionals():
    free = finite_free_moments(4)
    assert free.moment((2, 2)) == Fraction(3, 4)
    classical = finite_classical_moments(4)
    assert classical.moment((2, 2)) == Fraction(3, 2)
    # finite-n free cumulants converge to the starred counts
    kappa_4 = free_cumulant(finite_free_moments(4), (2, 2))
    kappa_16 = free_cumulant(finite_free_moments(16), (2, 2))
    assert abs(1 - kappa_16) < abs(1 - kappa_4)


def test_moment_functional_memoizes():
    calls = []

    def fn(labels):
        calls.append(labels)
        return count_nc2(Composition(labels))

    m = MomentFunctional(fn)
    free_cumulant(m, (1, 1, 1, 1))
    free_cumulant(m, (1, 1, 1, 1))
    assert len(calls) == len(set(calls))
