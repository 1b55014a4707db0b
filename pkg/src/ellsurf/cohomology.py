"""Cohomology dimensions of line-bundle classes on elliptic ruled surfaces.

The dimension of each h^i is an almost-numerical invariant: outside a thin
boundary locus the numerical class alone decides whether h^0, h^1, h^2
vanish (and Riemann-Roch then pins the one possibly-nonzero group exactly).
This module transcribes those classical vanishing tables, computes Euler
characteristics by Riemann-Roch with chi(O_X) = 0 (the base curve is
elliptic), and resolves the e = -1 boundary ray (2n, -n) through the
torsion tag of the queried member:

    h0 of the determinant-twist member      = 3*floor(n/2) - n + 1
    h0 of each nontrivial 2-torsion twist   = n - floor(n/2)

with h2 = 0 and h1 = h0 there (chi vanishes on the whole ray).

All threshold comparisons are integer-exact: "b > -a/2" is evaluated as
``2*b + a > 0`` and so on.  The cells the tables genuinely cannot decide
(the e >= 0 boundary lines, where the answer depends on the bundle type of
the surface) are reported as Indeterminate, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import (
    ETA_TAGS,
    BoundaryTag,
    BundleRef,
    NumClass,
    SurfaceModel,
    canonical_class,
    intersect,
    ray_index,
    validate_tag,
)

_EXACT = "exact"
_POSITIVE = "positive"
_INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class DimStatus:
    """Status of one cohomology dimension: an exact value, ">0", or unknown."""

    kind: str
    value: int | None = None

    def __post_init__(self):
        if self.kind == _EXACT:
            if self.value is None or self.value < 0:
                raise ValueError(f"exact dimension must be >= 0, got {self.value}")
        elif self.kind in (_POSITIVE, _INDETERMINATE):
            if self.value is not None:
                raise ValueError(f"{self.kind} status carries no value")
        else:
            raise ValueError(f"unknown status kind {self.kind!r}")

    @property
    def known_zero(self) -> bool:
        return self.kind == _EXACT and self.value == 0

    @property
    def known_nonzero(self) -> bool:
        return self.kind == _POSITIVE or (self.kind == _EXACT and self.value > 0)

    @property
    def is_exact(self) -> bool:
        return self.kind == _EXACT

    @property
    def is_indeterminate(self) -> bool:
        return self.kind == _INDETERMINATE

    def to_json(self) -> dict:
        if self.kind == _EXACT:
            return {"kind": _EXACT, "value": self.value}
        return {"kind": self.kind}

    def __str__(self) -> str:
        if self.kind == _EXACT:
            return str(self.value)
        return ">0" if self.kind == _POSITIVE else "?"


def exact(n: int) -> DimStatus:
    return DimStatus(_EXACT, n)


ZERO = exact(0)
POSITIVE = DimStatus(_POSITIVE)
INDETERMINATE = DimStatus(_INDETERMINATE)


@dataclass(frozen=True)
class CohomologyProfile:
    """Per-degree statuses plus the (always well-defined) Euler characteristic."""

    h0: DimStatus
    h1: DimStatus
    h2: DimStatus
    chi: int

    def __post_init__(self):
        if self.h0.is_exact and self.h1.is_exact and self.h2.is_exact:
            if self.h0.value - self.h1.value + self.h2.value != self.chi:
                raise ValueError(
                    f"h0 - h1 + h2 = {self.h0.value} - {self.h1.value} + "
                    f"{self.h2.value} != chi = {self.chi}"
                )

    @property
    def statuses(self) -> tuple[DimStatus, DimStatus, DimStatus]:
        return (self.h0, self.h1, self.h2)

    @property
    def fully_determined(self) -> bool:
        return not any(st.is_indeterminate for st in self.statuses)


@dataclass(frozen=True)
class EffectivityStatus:
    """Effectivity of the members of a numerical class.

    ``finitely_many`` only occurs on the e = -1 boundary ray, where exactly
    the listed tagged members are effective.
    """

    kind: str
    tags: tuple[BoundaryTag, ...] = ()

    def to_json(self) -> dict:
        if self.kind == "finitely_many":
            return {"kind": self.kind, "tags": [t.value for t in self.tags]}
        return {"kind": self.kind}


ALL_EFFECTIVE = EffectivityStatus("all_effective")
NONE_EFFECTIVE = EffectivityStatus("none_effective")
EFFECTIVITY_INDETERMINATE = EffectivityStatus("indeterminate")


def chi(c: NumClass, s: SurfaceModel) -> int:
    """Euler characteristic by Riemann-Roch: c.(c - K)/2, chi(O_X) = 0."""
    product = intersect(c, c - canonical_class(s), s)
    if product % 2 != 0:
        raise ArithmeticError(
            f"c.(c - K) = {product} is odd for {c}, e = {s.e}: intersection-form bug"
        )
    return product // 2


def vanishing_table(c: NumClass, s: SurfaceModel) -> CohomologyProfile:
    """Raw table cell for each h^i, with no Riemann-Roch or tag upgrades."""
    a, b, e = c.a, c.b, s.e
    if e == -1:
        t = 2 * b + a  # sign of b - (-a/2)
        if a >= 0:
            if t > 0:
                cells = (POSITIVE, ZERO, ZERO)
            elif t == 0:
                cells = (INDETERMINATE, INDETERMINATE, ZERO)
            else:
                cells = (ZERO, POSITIVE, ZERO)
        elif a == -1:
            cells = (ZERO, ZERO, ZERO)
        else:
            if t > 0:
                cells = (ZERO, POSITIVE, ZERO)
            elif t == 0:
                cells = (ZERO, INDETERMINATE, INDETERMINATE)
            else:
                cells = (ZERO, ZERO, POSITIVE)
    else:
        if a >= 0:
            if b > 0:
                h0, h2 = POSITIVE, ZERO
            elif b == 0:
                h0, h2 = INDETERMINATE, ZERO
            else:
                h0, h2 = ZERO, ZERO
            d = b - a * e
            h1 = ZERO if d > 0 else INDETERMINATE if d == 0 else POSITIVE
        elif a == -1:
            h0, h1, h2 = ZERO, ZERO, ZERO
        else:
            if b > -e:
                h0, h2 = ZERO, ZERO
            elif b == -e:
                h0, h2 = ZERO, INDETERMINATE
            else:
                h0, h2 = ZERO, POSITIVE
            # Mirror of the a >= 0 block under Serre duality: h1 vanishes
            # strictly below the line b = e*(a+1) and is positive strictly
            # above it.
            d = b - e * (a + 1)
            h1 = ZERO if d < 0 else INDETERMINATE if d == 0 else POSITIVE
        cells = (h0, h1, h2)
    return CohomologyProfile(*cells, chi=chi(c, s))


def _rr_resolve(profile: CohomologyProfile) -> CohomologyProfile:
    """Solve the single non-exact status from chi when the other two are exact."""
    sts = list(profile.statuses)
    open_slots = [i for i, st in enumerate(sts) if not st.is_exact]
    if len(open_slots) != 1:
        return profile
    i = open_slots[0]
    if i == 0:
        val = profile.chi + sts[1].value - sts[2].value
    elif i == 1:
        val = sts[0].value + sts[2].value - profile.chi
    else:
        val = profile.chi - sts[0].value + sts[1].value
    if val < 0 or (sts[i].kind == _POSITIVE and val == 0):
        raise ArithmeticError(
            f"Riemann-Roch value {val} contradicts table cell {sts[i]} "
            f"(profile {profile})"
        )
    sts[i] = exact(val)
    return CohomologyProfile(*sts, chi=profile.chi)


def class_profile(c: NumClass, s: SurfaceModel) -> CohomologyProfile:
    """Profile of a class with no member information: table plus Riemann-Roch.

    Boundary cells stay Indeterminate; use :func:`cohomology_profile` with a
    tag to resolve the e = -1 ray.
    """
    return _rr_resolve(vanishing_table(c, s))


def ray_h0(tag: BoundaryTag, n: int) -> int:
    """Sections of the tagged member of the e = -1 ray class (2n, -n)."""
    if n < 0:
        raise ValueError(f"ray index must be >= 0, got {n}")
    if tag is BoundaryTag.ZERO:
        return 3 * (n // 2) - n + 1
    if tag in ETA_TAGS:
        return n - n // 2
    raise ValueError(f"no tabulated h0 for tag {tag.value!r}")


def cohomology_profile(ref: BundleRef, s: SurfaceModel) -> CohomologyProfile:
    """Profile of a specific member, resolving the boundary ray through its tag.

    A Generic tag on the ray means the member is known to be none of the
    four distinguished ones, so for n >= 1 it has no sections at all.
    """
    validate_tag(ref, s)
    c = ref.cls
    n = ray_index(c) if s.e == -1 else None
    if n is not None:
        chiv = chi(c, s)
        assert chiv == 0, f"chi must vanish on the ray, got {chiv} at {c}"
        if ref.tag is not BoundaryTag.GENERIC:
            h0v = ray_h0(ref.tag, n)
            return CohomologyProfile(exact(h0v), exact(h0v), ZERO, chi=0)
        if n >= 1:
            return CohomologyProfile(ZERO, ZERO, ZERO, chi=0)
        # (0, 0) with no member information: the class mixes the trivial
        # bundle (one section) with sectionless torsion twists.
    return class_profile(c, s)


def effectivity_status(c: NumClass, s: SurfaceModel) -> EffectivityStatus:
    """Which members of the class are effective, per the h0 column."""
    a, b = c.a, c.b
    if a < 0:
        return NONE_EFFECTIVE
    if s.e == -1:
        t = 2 * b + a
        if t > 0:
            return ALL_EFFECTIVE
        if t < 0:
            return NONE_EFFECTIVE
        n = ray_index(c)
        assert n is not None, f"2b + a = 0 forces the ray form, got {c}"
        if n == 0:
            # Trivial-class convention: the class of O_X is reported
            # effective outright.
            return ALL_EFFECTIVE
        if n == 1:
            return EffectivityStatus("finitely_many", ETA_TAGS)
        return EffectivityStatus("finitely_many", (BoundaryTag.ZERO,) + ETA_TAGS)
    if b > 0:
        return ALL_EFFECTIVE
    if b < 0:
        return NONE_EFFECTIVE
    if a == 0:
        return ALL_EFFECTIVE  # trivial class, same convention as above
    return EFFECTIVITY_INDETERMINATE
