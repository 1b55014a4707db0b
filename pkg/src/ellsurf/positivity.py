"""Ampleness and base-point-freeness of numerical classes.

Ampleness is a genuinely numerical condition here (Nakai-Moishezon on the
two extremal curve classes).  Base-point-freeness is not: a class can sit
outside the all-members-base-point-free region and still contain isolated
base-point-free members.  We therefore expose

* ``is_ample``            -- the ample cone, integer form;
* ``class_all_bpf``       -- classes consisting entirely of bpf bundles;
* ``is_ample_and_all_bpf``-- the conjunction (one theorem, so one function);
* ``special_bpf_members`` -- the curated families of bpf members of
  degenerate classes outside that region (self-intersection-zero twists on
  e = -1, section multiples on e >= 0).  The list is known not to be
  exhaustive for every e = 0 surface; it is documentation, not a predicate.

A per-member bpf predicate is deliberately absent: it would encode a false
numerical criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import NumClass, SurfaceModel


def is_ample(c: NumClass, s: SurfaceModel) -> bool:
    """Ample iff a >= 1 and (e = -1) a + 2b >= 1 / (e >= 0) b - ae >= 1."""
    if c.a < 1:
        return False
    if s.e == -1:
        return c.a + 2 * c.b >= 1
    return c.b - c.a * s.e >= 1


def class_all_bpf(c: NumClass, s: SurfaceModel) -> bool:
    """True iff every line bundle in the class is base-point-free."""
    if c.a < 0:
        return False
    if s.e == -1:
        return c.a + c.b >= 2 and c.a + 2 * c.b >= 2
    return c.b - c.a * s.e >= 2


def is_ample_and_all_bpf(c: NumClass, s: SurfaceModel) -> bool:
    """Ample with every member base-point-free (the two conditions conjoined)."""
    if c.a < 1:
        return False
    if s.e == -1:
        return c.a + c.b >= 2 and c.a + 2 * c.b >= 2
    return c.b - c.a * s.e >= 2


@dataclass(frozen=True)
class SpecialMember:
    """A known base-point-free member of a class outside the all-bpf region."""

    cls: NumClass
    multiple: int
    note: str

    def to_json(self) -> dict:
        return {
            "a": self.cls.a,
            "b": self.cls.b,
            "multiple": self.multiple,
            "note": self.note,
        }


def special_bpf_members(c: NumClass, s: SurfaceModel) -> list[SpecialMember]:
    """Known bpf members of degree-degenerate classes outside the bpf region.

    e = -1: even multiples n(2C0 - f), n even > 0, contain one bpf member
    (the determinant-twist one).  e >= 1: every multiple of the
    self-degree-zero section class (1, e).  e = 0: multiples of (1, 0), but
    only when the surface is the product C x P1 (the model cannot tell, so
    the note carries the caveat).
    """
    a, b, e = c.a, c.b, s.e
    if e == -1:
        if a > 0 and a == -2 * b and (-b) % 2 == 0:
            n = -b
            return [
                SpecialMember(
                    c, n, f"determinant-twist member of {n}(2C0 - f), n even"
                )
            ]
        return []
    if e >= 1:
        if a > 0 and b == a * e:
            return [
                SpecialMember(c, a, f"multiple {a} of the section class (1, {e})")
            ]
        return []
    if a > 0 and b == 0:
        return [
            SpecialMember(
                c, a, f"multiple {a} of the section class (1, 0); "
                "applies when the surface is a product C x P1"
            )
        ]
    return []


@dataclass(frozen=True)
class PositivityReport:
    """Joint ampleness / base-point-freeness verdict for one class."""

    ample: bool
    all_members_bpf: bool
    ample_and_all_bpf: bool
    special_bpf_members: tuple[SpecialMember, ...]

    def __post_init__(self):
        if self.ample_and_all_bpf != (self.ample and self.all_members_bpf):
            raise ValueError("ample_and_all_bpf must equal ample AND all_members_bpf")


def positivity_report(c: NumClass, s: SurfaceModel) -> PositivityReport:
    return PositivityReport(
        ample=is_ample(c, s),
        all_members_bpf=class_all_bpf(c, s),
        ample_and_all_bpf=is_ample_and_all_bpf(c, s),
        special_bpf_members=tuple(special_bpf_members(c, s)),
    )
