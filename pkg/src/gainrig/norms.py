"""Norm descriptors and their support functionals.

A quadrilateral norm on the plane is given by two independent facet
covectors a, b (the unit ball is {x : |a.x| <= 1, |b.x| <= 1}); its norm is
max(|a.x|, |b.x|) and the support functional at a direction off the cone
boundaries is the (signed) covector achieving the max.  Smooth l^p norms
(p > 1, p != 2) have the usual gradient functional.  Support covectors are
stored unscaled by edge length: rank verdicts are scaling-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Vector = tuple  # length-d tuple of Fraction or float


class NormError(ValueError):
    pass


class ZeroVector(NormError):
    """Support functional undefined for the zero vector."""


class ConeBoundary(NormError):
    """Direction lies on a boundary between facet cones (not differentiable)."""


@dataclass(frozen=True)
class PolyhedralNorm:
    """Quadrilateral norm from two independent facet covectors."""

    facets: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

    def __post_init__(self):
        if len(self.facets) != 2:
            raise NormError("exactly two facet covectors required")
        (a1, a2), (b1, b2) = self.facets
        if a1 * b2 - a2 * b1 == 0:
            raise NormError("facet covectors must span the plane")

    @property
    def dimension(self) -> int:
        return 2

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return max(abs(_dot(f, x)) for f in self.facets)

    def facet_of(self, delta: Sequence[Fraction]) -> tuple[int, int]:
        """(facet index, sign) of the cone containing delta."""
        vals = [_dot(f, delta) for f in self.facets]
        if all(v == 0 for v in vals):
            raise ZeroVector("zero edge vector")
        if abs(vals[0]) == abs(vals[1]):
            raise ConeBoundary(f"direction {tuple(delta)} on a cone boundary")
        idx = 0 if abs(vals[0]) > abs(vals[1]) else 1
        return idx, (1 if vals[idx] > 0 else -1)

    def support_covector(self, delta: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
        idx, sign = self.facet_of(delta)
        f = self.facets[idx]
        return (sign * f[0], sign * f[1])


@dataclass(frozen=True)
class LpNorm:
    p: float
    dimension: int = 2

    def __post_init__(self):
        if not (self.p > 1) or self.p == 2:
            raise NormError("p must satisfy p > 1 and p != 2")
        if self.dimension < 2:
            raise NormError("dimension must be at least 2")

    def value(self, x: Sequence) -> float:
        return sum(abs(float(c)) ** self.p for c in x) ** (1.0 / self.p)

    def support_covector(self, delta: Sequence) -> tuple:
        d = [float(c) for c in delta]
        if all(c == 0.0 for c in d):
            raise ZeroVector("zero edge vector")
        nrm = self.value(d)
        q = self.p - 1.0
        return tuple(
            (1.0 if c > 0 else -1.0) * abs(c) ** q / nrm**q if c != 0.0 else 0.0
            for c in d
        )


Norm = Union[PolyhedralNorm, LpNorm]

LINF = PolyhedralNorm(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))
L1 = PolyhedralNorm(((Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1))))


def _dot(f, x):
    return sum(fi * xi for fi, xi in zip(f, x))
