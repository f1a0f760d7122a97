"""Monodromy of the boundary torus bundle of a sphere cycle.

The plumbed 3-manifold bounding a cycle of spheres fibers as a torus bundle
over the circle; its monodromy is a product of elementary SL(2, Z) matrices
read off the self-intersection sequence.  Only conjugation-invariant data
(trace, bundle type) is exported for classification.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .divisor import PreconditionError, SphereCycle, Torus

__all__ = [
    "BundleType",
    "Monodromy",
    "NotACycle",
    "TraceCertificate",
    "bundle_type",
    "monodromy",
    "nondegeneracy_by_trace",
]


class NotACycle(PreconditionError):
    """A cycle-only operation was applied to a torus."""


class Monodromy(NamedTuple):
    """A 2x2 integer matrix of determinant one."""

    m11: int
    m12: int
    m21: int
    m22: int

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))


_IDENTITY = Monodromy(1, 0, 0, 1)


def _mul(a: Monodromy, b: Monodromy) -> Monodromy:
    return Monodromy(
        a.m11 * b.m11 + a.m12 * b.m21,
        a.m11 * b.m12 + a.m12 * b.m22,
        a.m21 * b.m11 + a.m22 * b.m21,
        a.m21 * b.m12 + a.m22 * b.m22,
    )


def monodromy(d: SphereCycle) -> Monodromy:
    """Torus-bundle monodromy of the boundary of a sphere cycle.

    For the sequence (s_1, ..., s_k) this is the product of the factors
    ((-s_i, 1), (-1, 0)) with the s_1 factor rightmost and the s_k factor
    leftmost.  Rotating the sequence conjugates the product, so the trace
    is an invariant of the cycle.
    """
    if isinstance(d, Torus):
        raise NotACycle("a torus bounds a circle bundle, not a torus bundle")
    acc = _IDENTITY
    for s in d.seq:
        acc = _mul(Monodromy(-s, 1, -1, 0), acc)
    return acc


class TraceCertificate(NamedTuple):
    trace: int
    certifies_nondegenerate: bool


def nondegeneracy_by_trace(d: SphereCycle) -> TraceCertificate:
    """Trace-based certificate that the intersection matrix is nondegenerate.

    A trace different from 2 certifies nondegeneracy.  Trace equal to 2 is
    reported without any claim in the other direction.
    """
    t = monodromy(d).trace
    return TraceCertificate(t, t != 2)


class BundleType(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


def bundle_type(m: Monodromy) -> BundleType:
    """Classify a torus bundle by the absolute value of its monodromy trace."""
    t = abs(m.trace)
    if t < 2:
        return BundleType.ELLIPTIC
    if t == 2:
        return BundleType.PARABOLIC
    return BundleType.HYPERBOLIC
