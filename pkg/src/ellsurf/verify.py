"""Self-verification suites over lattice windows.

Each suite sweeps an exact, finite check (duality symmetry of the tables,
Riemann-Roch sign coherence, the boundary-ray section counts, equivalence
of the two normal-presentation routes, convexity of the classified region,
corollary thresholds with seeded random factors, and the sharpness
examples).  A suite never samples where it can enumerate; randomness only
appears, seeded, where the claim itself is about random tuples.

The classification predicate can be injected (``np_fn``) so a harness can
prove the suites actually detect corruption.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cohomology import chi, class_profile, ray_h0, vanishing_table
from .positivity import is_ample, is_ample_and_all_bpf
from .presentation import (
    adjoint_np_threshold,
    brute_force_decompose,
    is_koszul,
    is_normally_presented,
)
from .surface import BoundaryTag, NumClass, SurfaceModel, canonical_class

NpPredicate = Callable[[NumClass, SurfaceModel], bool]

DEFAULT_E_VALUES = (-1, 0, 1, 2)
SHARPNESS_E_VALUES = (1, 2, 3)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexamples: list[str] = field(default_factory=list)
    elapsed: float = 0.0


@dataclass
class VerifyReport:
    window: int
    e_values: tuple[int, ...]
    seed: int
    suites: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def elapsed(self) -> float:
        return sum(s.elapsed for s in self.suites)


def _window_classes(window: int) -> Iterable[NumClass]:
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            yield NumClass(a, b)


def _finish(name: str, checked: int, bad: list[str], started: float) -> SuiteResult:
    return SuiteResult(
        name=name,
        passed=not bad,
        checked=checked,
        counterexamples=bad,
        elapsed=time.perf_counter() - started,
    )


def check_duality_symmetry(window: int, e_values: Iterable[int]) -> SuiteResult:
    """Statuses of (h0, h1, h2) at c mirror those at K - c.

    Checked at raw table level for every class, and at resolved-profile
    level (exact values included) wherever neither side is indeterminate.
    """
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for e in e_values:
        s = SurfaceModel(e)
        k = canonical_class(s)
        for c in _window_classes(window):
            checked += 1
            dual = k - c
            cell = vanishing_table(c, s)
            dual_cell = vanishing_table(dual, s)
            if cell.statuses != tuple(reversed(dual_cell.statuses)):
                bad.append(f"e={e} c={c} table cells break duality against {dual}")
                continue
            prof = class_profile(c, s)
            dual_prof = class_profile(dual, s)
            if prof.fully_determined and dual_prof.fully_determined:
                if prof.statuses != tuple(reversed(dual_prof.statuses)):
                    bad.append(f"e={e} c={c} resolved profile breaks duality against {dual}")
    return _finish("duality-symmetry", checked, bad, started)


def check_rr_signs(window: int, e_values: Iterable[int]) -> SuiteResult:
    """Table cells force the right sign of chi, and chi vanishes on the ray."""
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for e in e_values:
        s = SurfaceModel(e)
        for c in _window_classes(window):
            checked += 1
            cell = vanishing_table(c, s)
            h0, h1, h2 = cell.statuses
            cv = cell.chi
            if h0.known_zero and h1.known_zero and h2.known_zero:
                ok = cv == 0
            elif h0.kind == "positive" and h1.known_zero and h2.known_zero:
                ok = cv > 0
            elif h0.known_zero and h1.kind == "positive" and h2.known_zero:
                ok = cv < 0
            elif h0.known_zero and h1.known_zero and h2.kind == "positive":
                ok = cv > 0
            else:
                ok = True
            if e == -1 and 2 * c.b + c.a == 0:
                ok = ok and cv == 0
            if not ok:
                bad.append(f"e={e} c={c} cells={tuple(map(str, cell.statuses))} chi={cv}")
    return _finish("rr-sign-consistency", checked, bad, started)


def check_ray_totals(n_max: int = 1000, chi_n_max: int = 10_000) -> SuiteResult:
    """Boundary-ray section counts match their closed forms and totals."""
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    s = SurfaceModel(-1)
    first_zero = [1, 0, 2, 1]
    first_eta = [0, 1, 1, 2]
    for n in range(4):
        checked += 1
        if ray_h0(BoundaryTag.ZERO, n) != first_zero[n]:
            bad.append(f"n={n} zero-twist h0 != {first_zero[n]}")
        if ray_h0(BoundaryTag.ETA1, n) != first_eta[n]:
            bad.append(f"n={n} torsion-twist h0 != {first_eta[n]}")
    for n in range(1, n_max + 1):
        checked += 1
        z = ray_h0(BoundaryTag.ZERO, n)
        t = ray_h0(BoundaryTag.ETA1, n)
        m, r = divmod(n, 2)
        expected_total = 4 * m + 1 if r == 0 else 4 * m + 3
        if z < 0 or t < 0 or z + 3 * t != expected_total:
            bad.append(f"n={n} section total {z} + 3*{t} != {expected_total}")
    for n in range(chi_n_max + 1):
        checked += 1
        if chi(NumClass(2 * n, -n), s) != 0:
            bad.append(f"n={n} chi((2n,-n)) != 0")
    return _finish("ray-table-totals", checked, bad, started)


def check_np_equivalence(
    window: int, e_values: Iterable[int], np_fn: NpPredicate = is_normally_presented
) -> SuiteResult:
    """Inequality route == (ample and all-bpf splitting exists), exhaustively."""
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for e in e_values:
        s = SurfaceModel(e)
        for c in _window_classes(window):
            checked += 1
            lhs = np_fn(c, s)
            rhs = is_ample(c, s) and brute_force_decompose(c, s) is not None
            if lhs != rhs:
                bad.append(f"e={e} c={c} predicate={lhs} splitting-route={rhs}")
    return _finish("np-equivalence", checked, bad, started)


# Half-plane data (coef_a, coef_b, bound) with membership coef_a*a + coef_b*b
# >= bound, written out independently of the predicate implementation.
def _np_half_planes(e: int) -> list[tuple[int, int, int]]:
    if e == -1:
        return [(1, 0, 1), (1, 1, 4), (1, 2, 4)]
    return [(1, 0, 1), (-e, 1, 4)]


def check_convexity(
    window: int, e_values: Iterable[int], np_fn: NpPredicate = is_normally_presented
) -> SuiteResult:
    """The classified region is a lattice-convex set.

    Three exact checks per e: membership equals the independently
    transcribed half-plane intersection; the set is midpoint-closed; and it
    is stable under adding small recession-cone directions.
    """
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for e in e_values:
        s = SurfaceModel(e)
        planes = _np_half_planes(e)
        members: set[tuple[int, int]] = set()
        for c in _window_classes(window):
            checked += 1
            in_planes = all(ca * c.a + cb * c.b >= bound for ca, cb, bound in planes)
            if np_fn(c, s) != in_planes:
                bad.append(f"e={e} c={c} predicate != half-plane intersection")
            if in_planes:
                members.add((c.a, c.b))
        # Midpoint closure: only pairs with matching coordinate parities
        # have a lattice midpoint, so bucket by parity class first.
        buckets: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for pt in members:
            buckets.setdefault((pt[0] % 2, pt[1] % 2), []).append(pt)
        seen_midpoints: set[tuple[int, int]] = set()
        for bucket in buckets.values():
            bucket.sort()
            for i, (a1, b1) in enumerate(bucket):
                for a2, b2 in bucket[i:]:
                    checked += 1
                    mid = ((a1 + a2) // 2, (b1 + b2) // 2)
                    if mid in seen_midpoints:
                        continue
                    seen_midpoints.add(mid)
                    if not np_fn(NumClass(*mid), s):
                        bad.append(
                            f"e={e} midpoint {mid} of ({a1},{b1}), ({a2},{b2}) not in region"
                        )
        # Recession stability: adding any direction that satisfies the
        # homogeneous inequalities keeps membership.
        dirs = [
            (da, db)
            for da in range(0, 6)
            for db in range(-5, 6)
            if all(ca * da + cb * db >= 0 for ca, cb, _ in planes)
        ]
        for a1, b1 in members:
            for da, db in dirs:
                checked += 1
                if not np_fn(NumClass(a1 + da, b1 + db), s):
                    bad.append(f"e={e} ({a1},{b1}) + direction ({da},{db}) leaves region")
    return _finish("np-convexity", checked, bad, started)


def check_koszul_agreement(window: int, e_values: Iterable[int]) -> SuiteResult:
    """Koszul and normal-presentation classifications agree everywhere."""
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    for e in e_values:
        s = SurfaceModel(e)
        for c in _window_classes(window):
            checked += 1
            if is_koszul(c, s) != is_normally_presented(c, s):
                bad.append(f"e={e} c={c} koszul != normally presented")
    return _finish("koszul-agreement", checked, bad, started)


def _sample(rng: random.Random, s: SurfaceModel, accept, bound: int = 10) -> NumClass:
    while True:
        c = NumClass(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if accept(c, s):
            return c


def check_corollary_soundness(
    e_values: Iterable[int], seed: int, samples: int = 10_000
) -> SuiteResult:
    """Random factor tuples at each corollary's threshold give NP sums.

    Per e: the adjoint bound (canonical class plus q ample factors at the
    e-dependent threshold), two ample+all-bpf factors, and four ample
    factors.  Components of every sampled factor lie in [-10, 10].
    """
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    rng = random.Random(seed)
    for e in e_values:
        s = SurfaceModel(e)
        k = canonical_class(s)
        q = adjoint_np_threshold(e)
        # For e > 8 no ample class fits in the +-10 box; widen just enough.
        bound = max(10, e + 2)
        for _ in range(samples):
            checked += 1
            total = k
            factors = [_sample(rng, s, is_ample, bound) for _ in range(q)]
            for f in factors:
                total = total + f
            if not is_normally_presented(total, s):
                bad.append(f"e={e} adjoint of {list(map(str, factors))} -> {total} not NP")
        for _ in range(samples):
            checked += 1
            f1 = _sample(rng, s, is_ample_and_all_bpf, bound)
            f2 = _sample(rng, s, is_ample_and_all_bpf, bound)
            if not is_normally_presented(f1 + f2, s):
                bad.append(f"e={e} ample+bpf pair {f1}, {f2} sum not NP")
        for _ in range(samples):
            checked += 1
            factors = [_sample(rng, s, is_ample, bound) for _ in range(4)]
            total = NumClass(0, 0)
            for f in factors:
                total = total + f
            if not is_normally_presented(total, s):
                bad.append(f"e={e} four amples {list(map(str, factors))} sum not NP")
    return _finish("corollary-soundness", checked, bad, started)


def check_sharpness(np_fn: NpPredicate = is_normally_presented) -> SuiteResult:
    """The adjoint bound is sharp: one-below-threshold examples are not NP."""
    started = time.perf_counter()
    bad: list[str] = []
    checked = 0
    cases = [(-1, NumClass(4, 0)), (0, NumClass(3, 3))]
    cases += [(e, NumClass(2, 2 * (e + 1))) for e in SHARPNESS_E_VALUES]
    for e, twist in cases:
        checked += 1
        s = SurfaceModel(e)
        cls = canonical_class(s) + twist
        if np_fn(cls, s):
            bad.append(f"e={e} sharpness class {cls} unexpectedly NP")
    below = [
        (-1, [NumClass(1, 1)]),                       # one ample+bpf factor
        (-1, [NumClass(1, 0)] * 3),                   # three ample factors
    ]
    for e, factors in below:
        checked += 1
        s = SurfaceModel(e)
        total = NumClass(0, 0)
        for f in factors:
            total = total + f
        if np_fn(total, s):
            bad.append(f"e={e} below-threshold product {total} unexpectedly NP")
    return _finish("sharpness-triple", checked, bad, started)


def run_suites(
    window: int = 40,
    e_values: Iterable[int] = DEFAULT_E_VALUES,
    seed: int = 0,
    samples: int = 10_000,
    np_fn: NpPredicate = is_normally_presented,
) -> VerifyReport:
    """Run every suite and aggregate the outcome."""
    if window < 4:
        raise ValueError(f"window must be >= 4, got {window}")
    e_values = tuple(e_values)
    suites = [
        check_duality_symmetry(window, e_values),
        check_rr_signs(window, e_values),
        check_ray_totals(),
        check_np_equivalence(window, e_values, np_fn),
        check_convexity(window, e_values, np_fn),
        check_koszul_agreement(window, e_values),
        check_corollary_soundness(e_values, seed, samples),
        check_sharpness(np_fn),
    ]
    return VerifyReport(window=window, e_values=e_values, seed=seed, suites=suites)
