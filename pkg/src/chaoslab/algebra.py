"""Exact group algebras over two groups of combinatorial origin.

The two groups are:

- finitely-supported permutations of the nonnegative integers, stored
  support-only in a canonical form (fixed points never appear);
- finite sets of nonnegative integers under symmetric difference, where
  every element is its own inverse and the empty set is the identity.

Algebra elements are finitely-supported maps from group elements to exact
rationals.  No floating point appears anywhere in this module; equality and
hashing are structural, so two equal elements always have identical term
lists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Union


@dataclass(frozen=True)
class Permutation:
    """A finitely-supported permutation of the nonnegative integers.

    ``mapping`` holds the (point, image) pairs of all *moved* points, sorted
    by point.  The empty mapping is the identity.

    >>> Permutation.cycle([0, 1, 2]) * Permutation.cycle([0, 1, 2])
    Permutation.cycle([0, 2, 1])
    """

    mapping: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def identity() -> "Permutation":
        return Permutation()

    @staticmethod
    def from_mapping(images: Mapping[int, int]) -> "Permutation":
        """Build a permutation from a point -> image map, canonicalizing."""
        moved = {p: q for p, q in images.items() if p != q}
        if any(p < 0 or q < 0 for p, q in moved.items()):
            raise ValueError("points must be nonnegative integers")
        if sorted(moved) != sorted(moved.values()):
            raise ValueError("mapping is not a permutation of its support")
        return Permutation(tuple(sorted(moved.items())))

    @staticmethod
    def cycle(points: Iterable[int]) -> "Permutation":
        """The cyclic permutation sending each listed point to the next one.

        A cycle on fewer than two points is the identity.
        """
        pts = list(points)
        if len(set(pts)) != len(pts):
            raise ValueError(f"cycle points must be pairwise distinct: {pts}")
        if len(pts) < 2:
            return Permutation()
        images = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
        return Permutation.from_mapping(images)

    @staticmethod
    def parse(text: str) -> "Permutation":
        """Inverse of str(): cycle lists like "(0 3 5)(7 8)" or "id"."""
        text = text.strip()
        if text in ("id", ""):
            return Permutation()
        if not re.fullmatch(r"(\(\d+(?: \d+)*\))+", text):
            raise ValueError(f"not a cycle expression: {text!r}")
        out = Permutation()
        for group in re.findall(r"\(([\d ]+)\)", text):
            out = out * Permutation.cycle([int(x) for x in group.split()])
        return out

    @cached_property
    def _images(self) -> dict[int, int]:
        return dict(self.mapping)

    def __call__(self, point: int) -> int:
        return self._images.get(point, point)

    @property
    def is_identity(self) -> bool:
        return not self.mapping

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.mapping)

    def inverse(self) -> "Permutation":
        return Permutation(tuple(sorted((q, p) for p, q in self.mapping)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(a * b)(x) == a(b(x))`` (right factor acts first)."""
        if not isinstance(other, Permutation):
            return NotImplemented
        points = set(self._images) | set(other._images)
        return Permutation.from_mapping({p: self(other(p)) for p in points})

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen: set[int] = set()
        out = []
        for start, _ in self.mapping:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    @property
    def sort_key(self) -> tuple:
        return self.mapping

    def __str__(self) -> str:
        if self.is_identity:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        if self.is_identity:
            return "Permutation.identity()"
        cycs = self.cycles()
        if len(cycs) == 1:
            return f"Permutation.cycle({list(cycs[0])})"
        return f"Permutation.from_mapping({self._images})"


@dataclass(frozen=True)
class FiniteSet:
    """A finite set of nonnegative integers; the group law is symmetric
    difference, so every element is an involution and ``{}`` is the identity.

    >>> FiniteSet.of([1, 2]) * FiniteSet.of([2, 3])
    FiniteSet.of([1, 3])
    """

    members: tuple[int, ...] = ()

    @staticmethod
    def identity() -> "FiniteSet":
        return FiniteSet()

    @staticmethod
    def of(members: Iterable[int]) -> "FiniteSet":
        mem = sorted(set(members))
        if mem and mem[0] < 0:
            raise ValueError("members must be nonnegative integers")
        return FiniteSet(tuple(mem))

    @staticmethod
    def parse(text: str) -> "FiniteSet":
        """Inverse of str(): set literals like "{1,3,5}" or "{}"."""
        text = text.strip()
        if not re.fullmatch(r"\{(\d+(?:,\d+)*)?\}", text):
            raise ValueError(f"not a set literal: {text!r}")
        inner = text[1:-1]
        return FiniteSet.of(int(x) for x in inner.split(",") if x)

    @property
    def is_identity(self) -> bool:
        return not self.members

    def inverse(self) -> "FiniteSet":
        return self

    def __mul__(self, other: "FiniteSet") -> "FiniteSet":
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return FiniteSet(tuple(sorted(set(self.members) ^ set(other.members))))

    @property
    def sort_key(self) -> tuple:
        return self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def __repr__(self) -> str:
        return f"FiniteSet.of({list(self.members)})"


GroupElement = Union[Permutation, FiniteSet]


def _check_same_kind(a: GroupElement, b: GroupElement) -> None:
    if type(a) is not type(b):
        raise ValueError(
            f"kind mismatch: cannot combine {type(a).__name__} with {type(b).__name__}"
        )


@dataclass(frozen=True)
class AlgebraElement:
    """A finitely-supported rational combination of group elements.

    Terms are stored sorted by the group element's canonical key with zero
    coefficients dropped, so equality and hashing are structural.
    """

    terms: tuple[tuple[GroupElement, Fraction], ...] = ()

    @staticmethod
    def from_terms(terms: Mapping[GroupElement, Fraction]) -> "AlgebraElement":
        kept = {g: Fraction(c) for g, c in terms.items() if c != 0}
        kinds = {type(g) for g in kept}
        if len(kinds) > 1:
            raise ValueError("kind mismatch: mixed group elements in one algebra element")
        return AlgebraElement(tuple(sorted(kept.items(), key=lambda t: t[0].sort_key)))

    @staticmethod
    def delta(g: GroupElement, coefficient: Fraction | int = 1) -> "AlgebraElement":
        """The basis element carried by a single group element."""
        return AlgebraElement.from_terms({g: Fraction(coefficient)})

    @staticmethod
    def zero() -> "AlgebraElement":
        return AlgebraElement()

    @cached_property
    def _coeffs(self) -> dict[GroupElement, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def kind(self) -> type | None:
        """The shared group-element type, or None for the zero element."""
        return type(self.terms[0][0]) if self.terms else None

    def coefficient(self, g: GroupElement) -> Fraction:
        return self._coeffs.get(g, Fraction(0))

    def trace(self) -> Fraction:
        """Coefficient of the group identity (0 if absent)."""
        if self.is_zero:
            return Fraction(0)
        return self.coefficient(self.kind())  # type: ignore[misc]

    def star(self) -> "AlgebraElement":
        """Adjoint: conjugate coefficients on inverse group elements.

        Coefficients are rational, so conjugation is the identity.
        """
        return AlgebraElement.from_terms({g.inverse(): c for g, c in self.terms})

    def scale(self, c: Fraction | int) -> "AlgebraElement":
        c = Fraction(c)
        if c == 0:
            return AlgebraElement.zero()
        return AlgebraElement(tuple((g, x * c) for g, x in self.terms))

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.kind and other.kind:
            _check_same_kind(self.terms[0][0], other.terms[0][0])
        acc = dict(self.terms)
        for g, c in other.terms:
            acc[g] = acc.get(g, Fraction(0)) + c
        return AlgebraElement.from_terms(acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Convolution: the bilinear extension of the group product."""
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return AlgebraElement.zero()
        _check_same_kind(self.terms[0][0], other.terms[0][0])
        acc: dict[GroupElement, Fraction] = {}
        for g, c in self.terms:
            for h, d in other.terms:
                gh = g * h
                acc[gh] = acc.get(gh, Fraction(0)) + c * d
        return AlgebraElement.from_terms(acc)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*{g}" for g, c in self.terms)


def trace_of_product(x: AlgebraElement, y: AlgebraElement) -> Fraction:
    """trace(x * y) computed without forming the product.

    Only pairs (g, g^{-1}) contribute to the identity coefficient, so the
    cost is linear in the support of x instead of quadratic.
    """
    if x.is_zero or y.is_zero:
        return Fraction(0)
    _check_same_kind(x.terms[0][0], y.terms[0][0])
    total = Fraction(0)
    for g, c in x.terms:
        d = y.coefficient(g.inverse())
        if d:
            total += c * d
    return total
