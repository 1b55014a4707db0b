"""Region scans over lattice windows and their ASCII/SVG renderings.

A scan classifies every lattice point of a rectangle and renders one
composite marker per point, in the vocabulary of the classical region
figure for these surfaces: a cross for all-members-base-point-free, a blank
disc for ample, a shaded disc for ample-and-base-point-free, a dashed disc
for normally presented (equivalently, Koszul section ring).  Normal
generation is a different classification that this package does not
compute; the SVG legend shows its annulus marker hatched out as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .cohomology import EffectivityStatus, effectivity_status
from .positivity import class_all_bpf, is_ample, is_ample_and_all_bpf
from .presentation import is_koszul, is_normally_presented
from .surface import NumClass, SurfaceModel


@dataclass(frozen=True)
class RegionCell:
    """Classification flags of one lattice point."""

    cls: NumClass
    effective: EffectivityStatus
    ample: bool
    all_bpf: bool
    ample_bpf: bool
    np: bool
    koszul: bool

    def __post_init__(self):
        if self.np != self.koszul:
            raise ValueError("np and koszul must agree")
        if self.ample_bpf != (self.ample and self.all_bpf):
            raise ValueError("ample_bpf must equal ample AND all_bpf")
        if self.np and not self.ample:
            raise ValueError("normally presented classes are ample")

    def to_json(self) -> dict:
        return {
            "a": self.cls.a,
            "b": self.cls.b,
            "effective": self.effective.to_json(),
            "ample": self.ample,
            "all_bpf": self.all_bpf,
            "ample_bpf": self.ample_bpf,
            "np": self.np,
            "koszul": self.koszul,
        }


def region_cell(c: NumClass, s: SurfaceModel) -> RegionCell:
    return RegionCell(
        cls=c,
        effective=effectivity_status(c, s),
        ample=is_ample(c, s),
        all_bpf=class_all_bpf(c, s),
        ample_bpf=is_ample_and_all_bpf(c, s),
        np=is_normally_presented(c, s),
        koszul=is_koszul(c, s),
    )


def region_cells(
    s: SurfaceModel, a_range: tuple[int, int], b_range: tuple[int, int]
) -> Iterator[RegionCell]:
    """One cell per lattice point, streamed row-major with a fastest."""
    a_lo, a_hi = a_range
    b_lo, b_hi = b_range
    for b in range(b_lo, b_hi + 1):
        for a in range(a_lo, a_hi + 1):
            yield region_cell(NumClass(a, b), s)


ASCII_LEGEND = [
    "N  normally presented (Koszul section ring)",
    "@  ample, all members base-point-free",
    "o  ample",
    "+  all members base-point-free",
    "*  finitely many effective members (boundary ray)",
    ".  every member effective",
    "?  effectivity undecided at class level",
    "   (blank) no effective members",
]


def _glyph(cell: RegionCell) -> str:
    if cell.np:
        return "N"
    if cell.ample_bpf:
        return "@"
    if cell.ample:
        return "o"
    if cell.all_bpf:
        return "+"
    kind = cell.effective.kind
    if kind == "finitely_many":
        return "*"
    if kind == "all_effective":
        return "."
    if kind == "indeterminate":
        return "?"
    return " "


def ascii_region(
    cells: Iterable[RegionCell], a_range: tuple[int, int], b_range: tuple[int, int]
) -> str:
    """Grid with a rightward and b upward, one glyph per lattice point."""
    a_lo, a_hi = a_range
    b_lo, b_hi = b_range
    by_point = {(cell.cls.a, cell.cls.b): _glyph(cell) for cell in cells}
    label_w = max(len(str(b_lo)), len(str(b_hi)))
    lines = ["b"]
    for b in range(b_hi, b_lo - 1, -1):
        row = " ".join(by_point.get((a, b), " ") for a in range(a_lo, a_hi + 1))
        lines.append(f"{b:>{label_w}} | {row}".rstrip())
    width = 2 * (a_hi - a_lo + 1) - 1
    lines.append(" " * label_w + " +-" + "-" * width)
    # Tick labels under every fifth column (and the first one).
    ticks = [" "] * (width + label_w + 3)
    for a in range(a_lo, a_hi + 1):
        if a % 5 == 0 or a == a_lo:
            pos = label_w + 3 + 2 * (a - a_lo)
            text = str(a)
            if pos + len(text) <= len(ticks):
                ticks[pos:pos + len(text)] = text
    lines.append("".join(ticks).rstrip() + "  a")
    lines.append("")
    lines.append("legend:")
    lines.extend("  " + entry for entry in ASCII_LEGEND)
    return "\n".join(lines) + "\n"


_SVG_STYLE = (
    '.axis{stroke:#999;stroke-width:1}'
    '.tick{font:10px sans-serif;fill:#333}'
    '.label{font:12px sans-serif;fill:#111}'
    '.eff{fill:#444}'
    '.ray{fill:none;stroke:#444;stroke-width:1}'
    '.amp{fill:none;stroke:#111;stroke-width:1.2}'
    '.shade{fill:#c8c8c8;stroke:none}'
    '.cross{stroke:#111;stroke-width:1.2}'
    '.npd{fill:none;stroke:#111;stroke-width:1.2;stroke-dasharray:3 2}'
    '.hatch{stroke:#777;stroke-width:1}'
)

_PITCH = 22
_MARGIN_LEFT = 50
_MARGIN_TOP = 20
_MARGIN_BOTTOM = 40
_LEGEND_WIDTH = 250


def _fmt(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


def _marker(x: float, y: float, cell: RegionCell) -> list[str]:
    parts: list[str] = []
    kind = cell.effective.kind
    if cell.ample_bpf:
        parts.append(f'<circle class="shade" cx="{_fmt(x)}" cy="{_fmt(y)}" r="7"/>')
    if cell.ample:
        parts.append(f'<circle class="amp" cx="{_fmt(x)}" cy="{_fmt(y)}" r="7"/>')
    elif kind == "all_effective":
        parts.append(f'<circle class="eff" cx="{_fmt(x)}" cy="{_fmt(y)}" r="1.6"/>')
    if kind == "finitely_many":
        parts.append(f'<circle class="ray" cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.6"/>')
    if cell.all_bpf:
        parts.append(
            f'<line class="cross" x1="{_fmt(x - 6)}" y1="{_fmt(y)}" '
            f'x2="{_fmt(x + 6)}" y2="{_fmt(y)}"/>'
            f'<line class="cross" x1="{_fmt(x)}" y1="{_fmt(y - 6)}" '
            f'x2="{_fmt(x)}" y2="{_fmt(y + 6)}"/>'
        )
    if cell.np:
        parts.append(f'<circle class="npd" cx="{_fmt(x)}" cy="{_fmt(y)}" r="9.5"/>')
    return parts


def _legend(x0: float, y0: float) -> list[str]:
    rows = [
        ("cross", "all members base-point-free"),
        ("dashed", "normally presented (Koszul)"),
        ("blank", "ample"),
        ("shaded", "ample + base-point-free"),
        ("annulus", "normally generated: not computed"),
        ("dot", "every member effective"),
        ("ring", "finitely many effective members"),
    ]
    parts = [f'<text class="label" x="{_fmt(x0)}" y="{_fmt(y0)}">legend</text>']
    for i, (marker, text) in enumerate(rows):
        cy = y0 + 20 + 24 * i
        cx = x0 + 10
        if marker == "cross":
            parts.append(
                f'<line class="cross" x1="{_fmt(cx - 6)}" y1="{_fmt(cy)}" '
                f'x2="{_fmt(cx + 6)}" y2="{_fmt(cy)}"/>'
                f'<line class="cross" x1="{_fmt(cx)}" y1="{_fmt(cy - 6)}" '
                f'x2="{_fmt(cx)}" y2="{_fmt(cy + 6)}"/>'
            )
        elif marker == "dashed":
            parts.append(f'<circle class="npd" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="8"/>')
        elif marker == "blank":
            parts.append(f'<circle class="amp" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="7"/>')
        elif marker == "shaded":
            parts.append(
                f'<circle class="shade" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="7"/>'
                f'<circle class="amp" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="7"/>'
            )
        elif marker == "annulus":
            # Not a classification this tool computes: hatched out.
            parts.append(
                f'<circle class="amp" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="8"/>'
                f'<circle class="amp" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4"/>'
                f'<line class="hatch" x1="{_fmt(cx - 9)}" y1="{_fmt(cy + 9)}" '
                f'x2="{_fmt(cx + 9)}" y2="{_fmt(cy - 9)}"/>'
            )
        elif marker == "dot":
            parts.append(f'<circle class="eff" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="1.6"/>')
        else:
            parts.append(f'<circle class="ray" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2.6"/>')
        parts.append(
            f'<text class="tick" x="{_fmt(cx + 16)}" y="{_fmt(cy + 3)}">{text}</text>'
        )
    return parts


def svg_region(
    cells: Iterable[RegionCell], a_range: tuple[int, int], b_range: tuple[int, int]
) -> str:
    """SVG 1.1 rendering of a region scan, with axes and legend."""
    a_lo, a_hi = a_range
    b_lo, b_hi = b_range
    cols = a_hi - a_lo + 1
    rows = b_hi - b_lo + 1
    grid_w = cols * _PITCH
    grid_h = rows * _PITCH
    width = _MARGIN_LEFT + grid_w + _LEGEND_WIDTH
    height = _MARGIN_TOP + grid_h + _MARGIN_BOTTOM

    def x_of(a: int) -> float:
        return _MARGIN_LEFT + (a - a_lo) * _PITCH + _PITCH / 2

    def y_of(b: int) -> float:
        return _MARGIN_TOP + (b_hi - b) * _PITCH + _PITCH / 2

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<style>{_SVG_STYLE}</style>",
    ]
    # Coordinate axes (only where they cross the window).
    if a_lo <= 0 <= a_hi:
        x = x_of(0)
        parts.append(
            f'<line class="axis" x1="{_fmt(x)}" y1="{_MARGIN_TOP}" '
            f'x2="{_fmt(x)}" y2="{_MARGIN_TOP + grid_h}"/>'
        )
    if b_lo <= 0 <= b_hi:
        y = y_of(0)
        parts.append(
            f'<line class="axis" x1="{_MARGIN_LEFT}" y1="{_fmt(y)}" '
            f'x2="{_MARGIN_LEFT + grid_w}" y2="{_fmt(y)}"/>'
        )
    for a in range(a_lo, a_hi + 1):
        if a % 5 == 0 or a in (a_lo, a_hi):
            parts.append(
                f'<text class="tick" x="{_fmt(x_of(a) - 4)}" '
                f'y="{_MARGIN_TOP + grid_h + 14}">{a}</text>'
            )
    for b in range(b_lo, b_hi + 1):
        if b % 5 == 0 or b in (b_lo, b_hi):
            parts.append(
                f'<text class="tick" x="8" y="{_fmt(y_of(b) + 3)}">{b}</text>'
            )
    parts.append(
        f'<text class="label" x="{_MARGIN_LEFT + grid_w - 10}" '
        f'y="{_MARGIN_TOP + grid_h + 30}">a</text>'
    )
    parts.append(f'<text class="label" x="8" y="{_MARGIN_TOP - 6}">b</text>')
    for cell in cells:
        parts.extend(_marker(x_of(cell.cls.a), y_of(cell.cls.b), cell))
    parts.extend(_legend(_MARGIN_LEFT + grid_w + 30, _MARGIN_TOP + 10))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
