"""Exact orthogonal polynomials and linearization coefficients.

Three families appear: Chebyshev polynomials of the second kind (orthonormal
for the semicircle weight), probabilists' Hermite polynomials (Gaussian
weight), and the monic orthogonal polynomials of the centered Marchenko-
Pastur weight, built by Gram-Schmidt from its moment sequence.  All
arithmetic is rational; integration against a weight is evaluation of the
moment functional, never quadrature.

Products of these polynomials expand back in the same family with
coefficients counted by constrained pairings; the expansion routines verify
the counting identity and refuse to return an unverified value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .partitions import Composition, count_nc2, count_pi2


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are degree-indexed with trailing zeros trimmed; the zero
    polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[Fraction, ...] = ()

    @staticmethod
    def of(coeffs: Iterable[Fraction | int]) -> "Polynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial.of([1])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial.of([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.of(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial.of(out)

    def scale(self, c: Fraction | int) -> "Polynomial":
        return Polynomial.of([a * c for a in self.coeffs])

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Horner composition self(inner(x))."""
        out = Polynomial.zero()
        for a in reversed(self.coeffs):
            out = out * inner + Polynomial.of([a])
        return out

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            base = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"{c}" if k == 0 else (base if c == 1 else f"{c}*{base}"))
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def chebyshev_u(n: int) -> Polynomial:
    """Chebyshev polynomial of the second kind, monic normalization."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return Polynomial.x()
    return Polynomial.x() * chebyshev_u(n - 1) - chebyshev_u(n - 2)


@lru_cache(maxsize=None)
def hermite(n: int) -> Polynomial:
    """Probabilists' Hermite polynomial (monic)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return Polynomial.x()
    return Polynomial.x() * hermite(n - 1) - hermite(n - 2).scale(n - 1)


@dataclass(frozen=True)
class MomentSequence:
    """Moments m_0..m_k of a weight, as exact rationals."""

    weight: str
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("a moment sequence starts with m_0 = 1")

    def moment(self, k: int) -> Fraction:
        if k >= len(self.values):
            raise ValueError(f"moment {k} not available (have up to {len(self.values) - 1})")
        return self.values[k]


def _catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def _double_factorial_odd(k: int) -> int:
    return math.factorial(2 * k) // (2**k * math.factorial(k))


@lru_cache(maxsize=None)
def _mp_centered_moment(k: int) -> int:
    if k == 0:
        return 1
    return count_nc2(Composition.constant(2, k))


def weight_moments(weight: str, up_to: int) -> MomentSequence:
    """Moment sequence of one of the three built-in weights.

    semicircle: Catalan numbers interleaved with zeros; gaussian: odd double
    factorials interleaved with zeros; mp_centered: counts of constrained
    noncrossing pairings on blocks of size two.
    """
    if weight == "semicircle":
        values = [Fraction(_catalan(k // 2)) if k % 2 == 0 else Fraction(0) for k in range(up_to + 1)]
    elif weight == "gaussian":
        values = [
            Fraction(_double_factorial_odd(k // 2)) if k % 2 == 0 else Fraction(0)
            for k in range(up_to + 1)
        ]
    elif weight == "mp_centered":
        values = [Fraction(_mp_centered_moment(k)) for k in range(up_to + 1)]
    else:
        raise ValueError(f"unknown weight {weight!r}")
    return MomentSequence(weight, tuple(values))


def integrate(poly: Polynomial, moments: MomentSequence) -> Fraction:
    """Integral of the polynomial against the weight: sum of c_k * m_k."""
    if poly.degree >= len(moments.values):
        raise ValueError(
            f"need moments up to degree {poly.degree}, have {len(moments.values) - 1}"
        )
    return sum((c * moments.values[k] for k, c in enumerate(poly.coeffs)), Fraction(0))


def _monic_basis_expansion(poly: Polynomial, basis) -> list[Fraction]:
    """Coefficients of poly in a monic graded basis, by leading-term peeling."""
    rest = list(poly.coeffs)
    out = [Fraction(0)] * len(rest)
    for d in range(len(rest) - 1, -1, -1):
        c = rest[d]
        if c == 0:
            continue
        out[d] = c
        for k, b in enumerate(basis(d).coeffs):
            rest[k] -= c * b
    if any(rest):
        raise ArithmeticError("basis expansion left a nonzero remainder")
    return out


def _joined(parts: Iterable[int], k: int) -> Composition:
    """The composition (r_1, ..., r_p, k) with zero entries dropped."""
    combined = tuple(r for r in tuple(parts) + (k,) if r != 0)
    return Composition(combined) if combined else Composition((1,))


def chebyshev_product_expansion(parts: Iterable[int]) -> list[Fraction]:
    """Expansion of a product of Chebyshev polynomials in the same basis."""
    prod = Polynomial.one()
    for r in parts:
        prod = prod * chebyshev_u(r)
    return _monic_basis_expansion(prod, chebyshev_u)


def linearize_chebyshev(parts: Iterable[int], k: int) -> int:
    """Coefficient of the degree-k Chebyshev polynomial in a product.

    The coefficient equals the number of constrained noncrossing pairings of
    the composition obtained by appending k; both routes are computed and a
    disagreement raises, so the returned value is always cross-checked.
    """
    parts = tuple(parts)
    expansion = chebyshev_product_expansion(parts)
    coeff = expansion[k] if k < len(expansion) else Fraction(0)
    count = count_nc2(_joined(parts, k)) if parts or k else 1
    if coeff != count:
        raise ArithmeticError(
            f"chebyshev linearization mismatch at r={parts}, k={k}: "
            f"expansion {coeff} vs pairing count {count}"
        )
    return count


def hermite_product_expansion(parts: Iterable[int]) -> list[Fraction]:
    prod = Polynomial.one()
    for r in parts:
        prod = prod * hermite(r)
    return _monic_basis_expansion(prod, hermite)


def linearize_hermite(parts: Iterable[int], k: int) -> tuple[Fraction, int]:
    """Hermite basis coefficient and the matching pairing count.

    Returns (coefficient of H_k in the product, number of constrained
    pairings of the appended composition); the two satisfy
    count == coefficient * k!.
    """
    parts = tuple(parts)
    expansion = hermite_product_expansion(parts)
    coeff = expansion[k] if k < len(expansion) else Fraction(0)
    count = count_pi2(_joined(parts, k)) if parts or k else 1
    return coeff, count


@lru_cache(maxsize=None)
def free_charlier(n: int) -> Polynomial:
    """Monic orthogonal polynomial of the centered Marchenko-Pastur weight.

    Built by Gram-Schmidt against the moment sequence; composing with the
    degree-2 Chebyshev polynomial recovers the degree-2n one.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    moments = weight_moments("mp_centered", 2 * n)
    poly = Polynomial.of([0] * n + [1])
    for j in range(n):
        vj = free_charlier(j)
        overlap = integrate(poly * vj, moments)
        norm = integrate(vj * vj, moments)
        poly = poly - vj.scale(overlap / norm)
    return poly


def linearize_charlier(parts: Iterable[int], k: int) -> int:
    """Linearization count for the centered Marchenko-Pastur family.

    Returns the number of constrained noncrossing pairings of the doubled
    appended composition, cross-checked against exact integration of the
    polynomial product (the family is orthonormal, so the basis coefficient
    is the integral); a disagreement raises.
    """
    parts = tuple(parts)
    doubled = _joined(tuple(2 * r for r in parts), 2 * k)
    count = count_nc2(doubled) if parts or k else 1
    prod = free_charlier(k)
    for r in parts:
        prod = prod * free_charlier(r)
    moments = weight_moments("mp_centered", max(prod.degree, 0))
    coeff = integrate(prod, moments)
    if coeff != count:
        raise ArithmeticError(
            f"charlier linearization mismatch at r={parts}, k={k}: "
            f"integral {coeff} vs pairing count {count}"
        )
    return count
