"""Numerical lattice of an elliptic ruled surface.

A ruled surface over an elliptic curve is determined, for our purposes, by
its integer invariant ``e >= -1``.  Its numerical group is free of rank two
on the minimal section ``C0`` and a fiber ``f``, with intersection form

    C0 . C0 = -e,    C0 . f = 1,    f . f = 0

and canonical class ``K = -2*C0 - e*f``.  Everything downstream (cohomology
tables, positivity, normal presentation) is an exact integer computation on
this lattice, so all arithmetic here is plain Python integers: no floats,
no wraparound.

Classes on the boundary ray ``(2n, -n)`` of an ``e = -1`` surface contain
finitely many effective members, distinguished by a torsion twist that the
numerical class alone cannot see.  ``BoundaryTag`` records which member of
such a class is meant; ``Generic`` means "none of the distinguished ones"
(and is the only tag allowed off the ray or on surfaces with ``e >= 0``).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum


class TagPlacementError(ValueError):
    """A boundary tag was attached to a class/surface where it has no meaning."""


class BoundaryTag(Enum):
    """Which member of a boundary-ray class a query refers to."""

    ZERO = "zero"      # the determinant-twist member n*(2C0 - f) itself
    ETA1 = "eta1"      # the three nontrivial 2-torsion twists of it
    ETA2 = "eta2"
    ETA3 = "eta3"
    GENERIC = "generic"


ETA_TAGS = (BoundaryTag.ETA1, BoundaryTag.ETA2, BoundaryTag.ETA3)


def _as_int(value, name: str) -> int:
    # operator.index accepts any true integer type (and rejects floats), and
    # always lands on an exact arbitrary-precision int.
    try:
        return operator.index(value)
    except TypeError:
        raise TypeError(f"{name} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class SurfaceModel:
    """An elliptic ruled surface, identified by its invariant ``e >= -1``."""

    e: int

    def __post_init__(self):
        object.__setattr__(self, "e", _as_int(self.e, "e"))
        if self.e < -1:
            raise ValueError(f"invariant e must be >= -1, got {self.e}")


@dataclass(frozen=True)
class NumClass:
    """A numerical divisor class ``a*C0 + b*f``."""

    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", _as_int(self.a, "a"))
        object.__setattr__(self, "b", _as_int(self.b, "b"))

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "NumClass":
        return NumClass(-self.a, -self.b)

    def __rmul__(self, n: int) -> "NumClass":
        n = _as_int(n, "n")
        return NumClass(n * self.a, n * self.b)

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class BundleRef:
    """A numerical class plus the tag saying which member of it is meant.

    Tag validity depends on the surface, so it is checked by
    :func:`validate_tag` (and by every consumer that resolves tags), not at
    construction time.
    """

    cls: NumClass
    tag: BoundaryTag = BoundaryTag.GENERIC


def class_add(c1: NumClass, c2: NumClass) -> NumClass:
    """Group law of the numerical lattice (componentwise)."""
    return c1 + c2


def class_scale(n: int, c: NumClass) -> NumClass:
    """Integer scaling in the numerical lattice."""
    return n * c


def intersect(c1: NumClass, c2: NumClass, s: SurfaceModel) -> int:
    """Intersection number of two classes: ``-e*a1*a2 + a1*b2 + a2*b1``."""
    return -s.e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b


def canonical_class(s: SurfaceModel) -> NumClass:
    """The canonical class ``-2*C0 - e*f``."""
    return NumClass(-2, -s.e)


def serre_dual_class(c: NumClass, s: SurfaceModel) -> NumClass:
    """The class ``K - c`` featuring in Serre duality h^i(c) = h^(2-i)(K - c)."""
    return canonical_class(s) - c


def ray_index(c: NumClass) -> int | None:
    """Return ``n`` if ``c = (2n, -n)`` with ``n >= 0``, else ``None``.

    Only meaningful on an ``e = -1`` surface, where this is the boundary ray
    of the effective cone whose members need a :class:`BoundaryTag`.
    """
    if c.a >= 0 and c.a == -2 * c.b:
        return -c.b
    return None


def validate_tag(ref: BundleRef, s: SurfaceModel) -> None:
    """Reject tags other than Generic off the e = -1 boundary ray."""
    if ref.tag is BoundaryTag.GENERIC:
        return
    if s.e != -1:
        raise TagPlacementError(
            f"tag {ref.tag.value!r} is only valid on an e = -1 surface, got e = {s.e}"
        )
    if ray_index(ref.cls) is None:
        raise TagPlacementError(
            f"tag {ref.tag.value!r} requires a class of the form (2n, -n), n >= 0; "
            f"got {ref.cls}"
        )
