"""Orthogonal polynomial families, integration and linearization."""

import math
from fractions import Fraction

import pytest

from chaoslab.orthopoly import (
    MomentSequence,
    Polynomial,
    chebyshev_u,
    free_charlier,
    hermite,
    integrate,
    linearize_charlier,
    linearize_chebyshev,
    linearize_hermite,
    weight_moments,
)
from chaoslab.partitions import (
    Composition,
    count_nc2,
    count_pi2,
    enumerate_set_partitions,
    is_noncrossing,
)


def poly(*coeffs):
    return Polynomial.of(coeffs)


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


def test_polynomial_arithmetic():
    x = Polynomial.x()
    assert (x * x - Polynomial.one()).coeffs == (Fraction(-1), Fraction(0), Fraction(1))
    assert poly(1, 2).compose(poly(0, 0, 1)) == poly(1, 0, 2)
    assert poly(-1, 0, 1)(3) == 8
    assert Polynomial.of([0, 0]).is_zero


def test_chebyshev_values():
    assert chebyshev_u(0) == poly(1)
    assert chebyshev_u(1) == poly(0, 1)
    assert chebyshev_u(2) == poly(-1, 0, 1)
    assert chebyshev_u(4) == poly(1, 0, -3, 0, 1)


def test_chebyshev_closed_identity_at_exact_points():
    # sin((n+1)t)/sin(t) at the five arguments with rational cosine values
    for n in range(11):
        assert chebyshev_u(n)(2) == n + 1
        assert chebyshev_u(n)(-2) == (-1) ** n * (n + 1)
        assert chebyshev_u(n)(0) == [1, 0, -1, 0][n % 4]
        assert chebyshev_u(n)(1) == [1, 1, 0, -1, -1, 0][n % 6]
        assert chebyshev_u(n)(-1) == [1, -1, 0, 1, -1, 0][n % 6]


def test_hermite_values():
    assert hermite(0) == poly(1)
    assert hermite(2) == poly(-1, 0, 1)
    assert hermite(3) == poly(0, -3, 0, 1)


def test_weight_moments():
    semi = weight_moments("semicircle", 6)
    assert semi.values[6] == 5 and semi.values[4] == 2 and semi.values[3] == 0
    gauss = weight_moments("gaussian", 6)
    assert gauss.values[6] == 15 and gauss.values[2] == 1 and gauss.values[5] == 0
    mp = weight_moments("mp_centered", 4)
    assert mp.values == (1, 0, 1, 1, 3)
    with pytest.raises(ValueError):
        weight_moments("cauchy", 4)
    with pytest.raises(ValueError):
        MomentSequence("w", (Fraction(2),))


def test_integrate_examples():
    semi = weight_moments("semicircle", 8)
    assert integrate(chebyshev_u(2) * chebyshev_u(2), semi) == 1
    assert integrate(chebyshev_u(1) * chebyshev_u(2), semi) == 0
    assert integrate(Polynomial.one(), semi) == 1
    with pytest.raises(ValueError):
        integrate(chebyshev_u(5) * chebyshev_u(5), semi)


def test_orthogonality_tables():
    semi = weight_moments("semicircle", 16)
    gauss = weight_moments("gaussian", 16)
    for a in range(9):
        for b in range(9):
            expected_u = 1 if a == b else 0
            assert integrate(chebyshev_u(a) * chebyshev_u(b), semi) == expected_u
            expected_h = math.factorial(a) if a == b else 0
            assert integrate(hermite(a) * hermite(b), gauss) == expected_h


def test_monomial_moments_match_pairing_counts():
    semi = weight_moments("semicircle", 12)
    gauss = weight_moments("gaussian", 12)
    for n in range(1, 13):
        monomial = Polynomial.of([0] * n + [1])
        ones = Composition.constant(1, n)
        assert integrate(monomial, semi) == count_nc2(ones)
        assert integrate(monomial, gauss) == count_pi2(ones)


def test_product_integrals_match_free_moments():
    semi = weight_moments("semicircle", 12)
    for labels in compositions_up_to(12):
        prod = Polynomial.one()
        for r in labels:
            prod = prod * chebyshev_u(r)
        assert integrate(prod, semi) == count_nc2(Composition(labels)), labels


def test_linearize_chebyshev_examples():
    assert linearize_chebyshev((1, 1), 2) == 1
    assert linearize_chebyshev((2, 2), 0) == 1
    assert linearize_chebyshev((1,), 2) == 0
    # U2*U2 = U0 + U2 + U4
    assert [linearize_chebyshev((2, 2), k) for k in range(5)] == [1, 0, 1, 0, 1]


def test_linearize_hermite_examples():
    assert linearize_hermite((1, 1), 2) == (1, 2)
    assert linearize_hermite((1, 1), 0) == (1, 1)
    assert linearize_hermite((2, 2), 0) == (2, 2)


def test_hermite_normalization_contract():
    for labels in compositions_up_to(8):
        for k in range(0, 9 - sum(labels)):
            coeff, count = linearize_hermite(labels, k)
            assert count == coeff * math.factorial(k), (labels, k)


def test_free_charlier_polynomials():
    assert free_charlier(0) == poly(1)
    assert free_charlier(1) == poly(0, 1)
    assert free_charlier(2) == poly(-1, -1, 1)


def test_free_charlier_compose_identity():
    for n in range(5):
        assert free_charlier(n).compose(chebyshev_u(2)) == chebyshev_u(2 * n)


def test_free_charlier_orthonormal():
    mp = weight_moments("mp_centered", 10)
    for a in range(5):
        for b in range(5):
            expected = 1 if a == b else 0
            assert integrate(free_charlier(a) * free_charlier(b), mp) == expected


def test_linearize_charlier_examples():
    assert linearize_charlier((1, 1), 0) == 1
    assert linearize_charlier((1,), 1) == 1
    assert linearize_charlier((1,), 0) == 0
    assert linearize_charlier((2,), 1) == count_nc2(Composition((4, 2)))


def test_charlier_counts_match_singleton_free_partitions():
    # doubling a composition turns constrained noncrossing pairings into
    # singleton-free constrained noncrossing partitions of the halved ground
    for labels in compositions_up_to(6):
        comp = Composition(labels)
        doubled = Composition(tuple(2 * r for r in labels))
        blocks = comp.block_partition()
        matches = [
            p
            for p in enumerate_set_partitions(comp.total)
            if is_noncrossing(p)
            and all(len(b) >= 2 for b in p.blocks)
            and all(
                not blocks.same_block(a, b) for block in p.blocks for a in block for b in block if a < b
            )
        ]
        assert count_nc2(doubled) == len(matches), labels
