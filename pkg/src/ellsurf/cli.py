"""Command-line interface.

Four subcommands:

* ``classify``  -- full verdict for one class (JSON document on stdout);
* ``region``    -- scan a lattice window (JSON lines, ASCII grid, or SVG);
* ``decompose`` -- all-bpf splitting witness (constructive or brute force);
* ``verify``    -- run the self-verification suites.

Exit codes: 0 on success, 1 when a verification suite finds a counterexample,
2 on usage or input errors.  All output is deterministic: fixed key order,
no timestamps, seeded randomness only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import chi, cohomology_profile
from .positivity import special_bpf_members
from .presentation import (
    CHAR_ASSUMPTION,
    brute_force_decompose,
    brute_force_search_bounds,
    decompose_np,
)
from .render import ascii_region, region_cell, region_cells, svg_region
from .surface import BoundaryTag, BundleRef, NumClass, SurfaceModel, TagPlacementError
from .verify import DEFAULT_E_VALUES, run_suites

DEFAULT_CELL_CAP = 1_000_000


class UsageError(ValueError):
    """Invalid input reported as a one-line diagnostic with exit code 2."""


def _surface(e: int) -> SurfaceModel:
    try:
        return SurfaceModel(e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_range(text: str, name: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise UsageError(f"{name} must look like lo:hi, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"{name} is empty: {lo} > {hi}")
    return lo, hi


def _parse_e_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise UsageError(f"--e-list must be comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("--e-list is empty")
    for e in values:
        if e < -1:
            raise UsageError(f"invariant e must be >= -1, got {e}")
    return values


def _classify_doc(e: int, a: int, b: int, tag: BoundaryTag) -> dict:
    s = _surface(e)
    c = NumClass(a, b)
    ref = BundleRef(c, tag)
    try:
        profile = cohomology_profile(ref, s)
    except TagPlacementError as exc:
        raise UsageError(str(exc)) from None
    cell = region_cell(c, s)
    decomposition = decompose_np(c, s)
    return {
        "e": e,
        "a": a,
        "b": b,
        "tag": tag.value,
        "chi": chi(c, s),
        "h0": profile.h0.to_json(),
        "h1": profile.h1.to_json(),
        "h2": profile.h2.to_json(),
        "effective": cell.effective.to_json(),
        "ample": cell.ample,
        "all_bpf": cell.all_bpf,
        "ample_bpf": cell.ample_bpf,
        "np": cell.np,
        "koszul": cell.koszul,
        "decomposition": decomposition.to_json() if decomposition else None,
        "special_bpf_members": [m.to_json() for m in special_bpf_members(c, s)],
        "assumptions": [CHAR_ASSUMPTION],
    }


def _cmd_classify(args: argparse.Namespace) -> int:
    doc = _classify_doc(args.e, args.a, args.b, BoundaryTag(args.tag))
    print(json.dumps(doc, indent=2))
    return 0


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_region(args: argparse.Namespace) -> int:
    s = _surface(args.e)
    a_range = _parse_range(args.a_range, "--a-range")
    b_range = _parse_range(args.b_range, "--b-range")
    total = (a_range[1] - a_range[0] + 1) * (b_range[1] - b_range[0] + 1)
    if total > args.cap:
        raise UsageError(f"window has {total} cells, above the cap of {args.cap}")
    cells = region_cells(s, a_range, b_range)
    if args.format == "json":
        # One object per lattice point, streamed without materializing the scan.
        handle = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8")
        try:
            for cell in cells:
                handle.write(json.dumps(cell.to_json(), separators=(",", ":")) + "\n")
        finally:
            if handle is not sys.stdout:
                handle.close()
    elif args.format == "ascii":
        _write_output(ascii_region(cells, a_range, b_range), args.out)
    else:
        _write_output(svg_region(cells, a_range, b_range), args.out)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    s = _surface(args.e)
    c = NumClass(args.a, args.b)
    doc = {"e": args.e, "a": args.a, "b": args.b, "mode": args.mode}
    if args.mode == "constructive":
        decomposition = decompose_np(c, s)
    else:
        decomposition = brute_force_decompose(c, s)
        doc["search_bounds"] = brute_force_search_bounds(c, s)
    doc["decomposition"] = decomposition.to_json() if decomposition else None
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.window < 4:
        raise UsageError(f"--window must be >= 4, got {args.window}")
    e_values = _parse_e_list(args.e_list)
    report = run_suites(
        window=args.window, e_values=e_values, seed=args.seed, samples=args.samples
    )
    print(
        f"verify: window {args.window}, e in {{{', '.join(map(str, e_values))}}}, "
        f"seed {args.seed}"
    )
    for suite in report.suites:
        status = "PASS" if suite.passed else "FAIL"
        print(f"[{status}] {suite.name}: {suite.checked} checks in {suite.elapsed:.2f}s")
        for example in suite.counterexamples:
            print(f"    counterexample: {example}")
    print(f"{'all suites passed' if report.passed else 'FAILURES found'} "
          f"in {report.elapsed:.2f}s")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellsurf",
        description=(
            "Exact classification of line-bundle numerical classes on "
            "elliptic ruled surfaces"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify a single class")
    p_classify.add_argument("--e", type=int, required=True, help="surface invariant, >= -1")
    p_classify.add_argument("--a", type=int, required=True, help="coefficient of C0")
    p_classify.add_argument("--b", type=int, required=True, help="coefficient of f")
    p_classify.add_argument(
        "--tag",
        choices=[t.value for t in BoundaryTag],
        default=BoundaryTag.GENERIC.value,
        help="member tag, only meaningful on the e = -1 ray (2n, -n)",
    )
    p_classify.set_defaults(func=_cmd_classify)

    p_region = sub.add_parser("region", help="scan a lattice window")
    p_region.add_argument("--e", type=int, required=True)
    p_region.add_argument("--a-range", required=True, metavar="LO:HI")
    p_region.add_argument("--b-range", required=True, metavar="LO:HI")
    p_region.add_argument("--format", choices=["json", "ascii", "svg"], default="json")
    p_region.add_argument("--out", default=None, metavar="PATH")
    p_region.add_argument("--cap", type=int, default=DEFAULT_CELL_CAP,
                          help="maximum number of cells")
    p_region.set_defaults(func=_cmd_region)

    p_decompose = sub.add_parser("decompose", help="find an all-bpf splitting")
    p_decompose.add_argument("--e", type=int, required=True)
    p_decompose.add_argument("--a", type=int, required=True)
    p_decompose.add_argument("--b", type=int, required=True)
    p_decompose.add_argument("--mode", choices=["constructive", "brute"],
                             default="constructive")
    p_decompose.set_defaults(func=_cmd_decompose)

    p_verify = sub.add_parser("verify", help="run the self-verification suites")
    p_verify.add_argument("--window", type=int, default=40)
    p_verify.add_argument("--e-list", default=",".join(map(str, DEFAULT_E_VALUES)))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=10_000,
                          help="random tuples per corollary and per e")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def _join_range_flags(argv: list[str]) -> list[str]:
    # argparse mistakes values like "-3:6" for option strings; fold the
    # value into the flag so both "--a-range -3:6" and "--a-range=-3:6" work.
    joined: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in ("--a-range", "--b-range") and i + 1 < len(argv):
            joined.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            joined.append(arg)
            i += 1
    return joined


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_range_flags(list(argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TagPlacementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
