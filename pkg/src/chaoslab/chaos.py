"""Finite-n chaos model elements and their exact traces.

The free model element of order r is the normalized sum of the (r+1)-cycles
through 0 over all r-tuples of pairwise distinct integers in [1, floor(n*t)];
the classical analogue sums the r-element subsets of the same range (each
unordered set arising r! times from the tuple sum).  The normalization is
n**(-r/2), which is irrational for odd r, so elements carry their residual
half-power of n explicitly and every reported trace stays an exact rational.

Mixed traces can be computed two ways: by explicit convolution of the model
elements, or by backtracking over index tuples.  The two routes agree
exactly and are pinned against each other in the tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, FiniteSet, Permutation, trace_of_product
from .partitions import Composition, GuardExceeded

SEARCH_GUARD = 10**8


def floor_times(n: int, t: Fraction | int) -> int:
    """Exact floor of n*t for rational t."""
    t = Fraction(t)
    return (n * t.numerator) // t.denominator


@dataclass(frozen=True)
class ScaledElement:
    """An algebra element with an exact n**(-half/2) prefactor.

    ``half`` is kept in {0, 1}: even powers of 1/sqrt(n) are absorbed into
    the rational coefficients of ``base``, so equality is structural.
    """

    n: int
    half: int
    base: AlgebraElement

    @staticmethod
    def of(n: int, half: int, base: AlgebraElement) -> "ScaledElement":
        if half < 0:
            raise ValueError("half-power must be nonnegative")
        if base.is_zero:
            return ScaledElement(n, 0, base)
        if half >= 2:
            base = base.scale(Fraction(1, n ** (half // 2)))
            half %= 2
        return ScaledElement(n, half, base)

    @property
    def is_zero(self) -> bool:
        return self.base.is_zero

    def _check_compatible(self, other: "ScaledElement") -> None:
        if self.n != other.n:
            raise ValueError("elements live over different n")

    def __mul__(self, other: "ScaledElement") -> "ScaledElement":
        if not isinstance(other, ScaledElement):
            return NotImplemented
        self._check_compatible(other)
        return ScaledElement.of(self.n, self.half + other.half, self.base * other.base)

    def __add__(self, other: "ScaledElement") -> "ScaledElement":
        if not isinstance(other, ScaledElement):
            return NotImplemented
        self._check_compatible(other)
        if not self.is_zero and not other.is_zero and self.half != other.half:
            raise ValueError("cannot add elements with different half-power parity")
        half = other.half if self.is_zero else self.half
        return ScaledElement.of(self.n, half, self.base + other.base)

    def __sub__(self, other: "ScaledElement") -> "ScaledElement":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "ScaledElement":
        return ScaledElement.of(self.n, self.half, self.base.scale(c))

    def star(self) -> "ScaledElement":
        return ScaledElement(self.n, self.half, self.base.star())

    def trace(self) -> Fraction:
        """Exact rational trace; a leftover 1/sqrt(n) can only multiply 0."""
        t = self.base.trace()
        if self.half and t != 0:
            raise ArithmeticError("irrational trace: nonzero identity term at odd half-power")
        return t if not self.half else Fraction(0)

    def product_trace(self, other: "ScaledElement") -> Fraction:
        """trace(self * other) without forming the product."""
        self._check_compatible(other)
        t = trace_of_product(self.base, other.base)
        h = self.half + other.half
        if h % 2:
            if t != 0:
                raise ArithmeticError("irrational trace: nonzero identity term at odd half-power")
            return Fraction(0)
        return t / self.n**(h // 2) if h else t


def free_identity(n: int) -> ScaledElement:
    return ScaledElement.of(n, 0, AlgebraElement.delta(Permutation.identity()))


def classical_identity(n: int) -> ScaledElement:
    return ScaledElement.of(n, 0, AlgebraElement.delta(FiniteSet.identity()))


def free_interval_element(n: int, r: int, t_lo: Fraction | int, t_hi: Fraction | int) -> ScaledElement:
    """Normalized sum of (r+1)-cycles with entries in (floor(n*t_lo), floor(n*t_hi)]."""
    if r < 0:
        raise ValueError("order must be nonnegative")
    if r == 0:
        return free_identity(n)
    lo, hi = floor_times(n, t_lo), floor_times(n, t_hi)
    coeff = Fraction(1, n ** (r // 2))
    terms = {
        Permutation.cycle((0,) + tup): coeff
        for tup in itertools.permutations(range(lo + 1, hi + 1), r)
    }
    return ScaledElement.of(n, r % 2, AlgebraElement.from_terms(terms))


def free_element(n: int, t: Fraction | int, r: int) -> ScaledElement:
    """The free model element of order r at time t over [1, floor(n*t)]."""
    return free_interval_element(n, r, 0, t)


def classical_interval_element(n: int, r: int, t_lo: Fraction | int, t_hi: Fraction | int) -> ScaledElement:
    """Normalized sum of r-subsets of (floor(n*t_lo), floor(n*t_hi)]; each
    subset carries the r! tuple multiplicity."""
    if r < 0:
        raise ValueError("order must be nonnegative")
    if r == 0:
        return classical_identity(n)
    lo, hi = floor_times(n, t_lo), floor_times(n, t_hi)
    coeff = Fraction(math.factorial(r), n ** (r // 2))
    terms = {
        FiniteSet(tup): coeff
        for tup in itertools.combinations(range(lo + 1, hi + 1), r)
    }
    return ScaledElement.of(n, r % 2, AlgebraElement.from_terms(terms))


def classical_element(n: int, t: Fraction | int, r: int) -> ScaledElement:
    """The classical model element of order r at time t over [1, floor(n*t)]."""
    return classical_interval_element(n, r, 0, t)


def product_element_free(comp: Composition, n: int) -> ScaledElement:
    """Explicit convolution of the free model elements of a composition."""
    out = free_identity(n)
    for k in range(1, comp.p + 1):
        out = out * free_element(n, comp.time_of_part(k), comp.parts[k - 1])
    return out


def product_element_classical(comp: Composition, n: int) -> ScaledElement:
    out = classical_identity(n)
    for k in range(1, comp.p + 1):
        out = out * classical_element(n, comp.time_of_part(k), comp.parts[k - 1])
    return out


def _position_limits(comp: Composition, n: int, guard: int) -> list[int]:
    limits = [floor_times(n, comp.time_of_position(x)) for x in range(1, comp.total + 1)]
    space = math.prod(limits)
    if space > guard:
        raise GuardExceeded(f"instance too large: search space {space} exceeds guard {guard}")
    return limits


def finite_trace_free(comp: Composition, n: int, guard: int = SEARCH_GUARD) -> Fraction:
    """Exact trace of the product of free model elements, by tuple counting.

    Each tuple contributes via the product of its star transpositions
    (0 a_1)(0 a_2)...(0 a_m); the trace is the number of tuples whose product
    is the identity, divided by n**(m/2).  Backtracking tracks the partial
    product and prunes positions whose moved points can no longer be
    repaired by the remaining factors.
    """
    m = comp.total
    limits = _position_limits(comp, n, guard)
    suffix_max = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        suffix_max[k] = max(limits[k], suffix_max[k + 1])
    blocks = [comp.block_of(x) for x in range(1, m + 1)]
    used: list[set[int]] = [set() for _ in range(comp.p + 1)]
    images: dict[int, int] = {}

    def moved_repairable(k: int) -> bool:
        rem = m - k
        count = 0
        for p in images:
            if p == 0:
                continue
            count += 1
            if count > rem or p > suffix_max[k]:
                return False
        return True

    def place(k: int) -> int:
        if k == m:
            return 1 if not images else 0
        if not moved_repairable(k):
            return 0
        blk = blocks[k]
        total = 0
        for a in range(1, limits[k] + 1):
            if a in used[blk]:
                continue
            used[blk].add(a)
            # multiply the partial product on the right by (0 a)
            old0, olda = images.get(0, 0), images.get(a, a)
            _assign(images, 0, olda)
            _assign(images, a, old0)
            total += place(k + 1)
            _assign(images, 0, old0)
            _assign(images, a, olda)
            used[blk].remove(a)
        return total

    count = place(0)
    if m % 2:
        if count:
            raise ArithmeticError("odd-length product counted a nonzero identity term")
        return Fraction(0)
    return Fraction(count, n ** (m // 2))


def _assign(images: dict[int, int], point: int, image: int) -> None:
    if point == image:
        images.pop(point, None)
    else:
        images[point] = image


def finite_trace_classical(comp: Composition, n: int, guard: int = SEARCH_GUARD) -> Fraction:
    """Exact trace of the product of classical model elements.

    The symmetric difference of singletons is empty exactly when every value
    appears an even number of times, so the search tracks the set of
    odd-count values.
    """
    m = comp.total
    limits = _position_limits(comp, n, guard)
    suffix_max = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        suffix_max[k] = max(limits[k], suffix_max[k + 1])
    blocks = [comp.block_of(x) for x in range(1, m + 1)]
    used: list[set[int]] = [set() for _ in range(comp.p + 1)]
    odd: set[int] = set()

    def place(k: int) -> int:
        rem = m - k
        if len(odd) > rem or any(v > suffix_max[k] for v in odd):
            return 0
        if k == m:
            return 1 if not odd else 0
        blk = blocks[k]
        total = 0
        for a in range(1, limits[k] + 1):
            if a in used[blk]:
                continue
            used[blk].add(a)
            odd.symmetric_difference_update((a,))
            total += place(k + 1)
            odd.symmetric_difference_update((a,))
            used[blk].remove(a)
        return total

    count = place(0)
    if m % 2:
        if count:
            raise ArithmeticError("odd-length product counted a nonzero empty-set term")
        return Fraction(0)
    return Fraction(count, n ** (m // 2))


def residual_free(n: int, t: Fraction | int, r: int, guard: int = SEARCH_GUARD) -> Fraction:
    """Exact trace of the squared defect of the free three-term recurrence.

    The defect element is x1*xr - t*x(r-1) - x(r+1) where xk is the order-k
    free model element; its squared trace vanishes as n grows.
    """
    if r < 1:
        raise ValueError("order must be at least 1")
    t = Fraction(t)
    if t <= 0:
        raise ValueError("time must be positive")
    space = floor_times(n, t) ** (2 * (r + 1))
    if space > guard:
        raise GuardExceeded(f"instance too large: search space {space} exceeds guard {guard}")
    x1 = free_element(n, t, 1)
    xr = free_element(n, t, r)
    defect = x1 * xr - free_element(n, t, r - 1).scale(t) - free_element(n, t, r + 1)
    return defect.product_trace(defect)


def residual_classical(
    n: int, t: Fraction | int, r: int, guard: int = SEARCH_GUARD
) -> tuple[Fraction, Fraction]:
    """Exact squared-defect trace of the classical recurrence, with its drift.

    The defect element xr*x1 - r*t*x(r-1) - x(r+1) collapses to
    eps * x(r-1) with eps = r*(floor(n*t) - r + 1)/n - r*t, so the returned
    residual equals eps**2 times the trace of x(r-1) squared.  Both the
    drift eps and the residual are returned.
    """
    if r < 1:
        raise ValueError("order must be at least 1")
    t = Fraction(t)
    if t <= 0:
        raise ValueError("time must be positive")
    m = floor_times(n, t)
    space = m ** (2 * (r + 1))
    if space > guard:
        raise GuardExceeded(f"instance too large: search space {space} exceeds guard {guard}")
    x1 = classical_element(n, t, 1)
    xr = classical_element(n, t, r)
    defect = xr * x1 - classical_element(n, t, r - 1).scale(r * t) - classical_element(n, t, r + 1)
    eps = Fraction(r * (m - r + 1), n) - r * t
    return eps, defect.product_trace(defect)
