"""Bounded-window analysis of subsets of the naturals.

Nothing here ever claims an asymptotic property.  Every check is
scoped to an explicit horizon N and returns a Verdict that says what
was established inside that window:

* WITNESSED          - a concrete witness was found; an independent
                       verifier (a separate code path from the search)
                       accepts it.
* REFUTED_IN_WINDOW  - an exhaustive scan of the declared bounded
                       search space found nothing.
* UNKNOWN            - the window cannot decide (e.g. a gap running
                       into the horizon may close just past it).

Sets default to members in [1, N]; a flag admits 0 for the shift
dynamics checks, which work over the nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Any, Iterable

from .errors import BadBounds, EmptyInput, ZeroDivisor

WITNESSED = "WITNESSED"
REFUTED_IN_WINDOW = "REFUTED_IN_WINDOW"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Any = None
    note: str = ""

    @classmethod
    def witnessed(cls, witness, note: str = "") -> "Verdict":
        return cls(WITNESSED, witness, note)

    @classmethod
    def refuted(cls, note: str) -> "Verdict":
        return cls(REFUTED_IN_WINDOW, None, note)

    @classmethod
    def unknown(cls, note: str) -> "Verdict":
        return cls(UNKNOWN, None, note)


@dataclass(frozen=True)
class WindowSet:
    """A subset of [origin, horizon]; origin is 1 unless zero is admitted."""

    horizon: int
    members: tuple[int, ...]
    include_zero: bool = False

    @classmethod
    def of(cls, horizon: int, members: Iterable[int], include_zero: bool = False) -> "WindowSet":
        if horizon < 1:
            raise BadBounds(f"horizon must be positive, got {horizon}")
        lo = 0 if include_zero else 1
        ms = sorted(set(int(m) for m in members))
        for m in ms:
            if not lo <= m <= horizon:
                raise BadBounds(f"member {m} outside [{lo}, {horizon}]")
        return cls(horizon, tuple(ms), include_zero)

    @property
    def origin(self) -> int:
        return 0 if self.include_zero else 1

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True)
class Coloring:
    """A total coloring of [1, horizon] with colors 1..colors."""

    horizon: int
    colors: int
    assignment: tuple[int, ...]

    @classmethod
    def of(cls, horizon: int, colors: int, assignment: Iterable[int]) -> "Coloring":
        values = tuple(int(v) for v in assignment)
        if len(values) != horizon:
            raise BadBounds(f"expected {horizon} color values, got {len(values)}")
        for v in values:
            if not 1 <= v <= colors:
                raise BadBounds(f"color {v} not in [1, {colors}]")
        return cls(horizon, colors, values)

    def color_of(self, x: int) -> int:
        if not 1 <= x <= self.horizon:
            raise BadBounds(f"{x} outside [1, {self.horizon}]")
        return self.assignment[x - 1]

    def color_class(self, c: int) -> WindowSet:
        return WindowSet.of(self.horizon,
                            (x for x in range(1, self.horizon + 1) if self.assignment[x - 1] == c))


def _op(mode: str):
    if mode == "additive":
        return lambda a, b: a + b
    if mode == "multiplicative":
        return lambda a, b: a * b
    raise BadBounds(f"mode must be additive or multiplicative, got {mode!r}")


def combination_closure(xs: Iterable[int], mode: str, cap: int) -> tuple[frozenset[int], bool]:
    """All sums (or ordered products) over nonempty subsets of xs, capped.

    Returns the closure truncated to [1, cap] and a flag telling whether
    any combination exceeded the cap.
    """
    pool = sorted(set(int(x) for x in xs))
    if not pool:
        raise EmptyInput("closure of the empty set")
    if cap < max(pool):
        raise BadBounds(f"cap {cap} below max element {max(pool)}")
    op = _op(mode)
    values: set[int] = set()
    truncated = False
    for r in range(1, len(pool) + 1):
        for comb in combinations(pool, r):
            v = reduce(op, comb)
            if v > cap:
                truncated = True
            else:
                values.add(v)
    return frozenset(values), truncated


def find_fs_basis(A: WindowSet, size: int, mode: str = "additive") -> Verdict:
    """Search for an increasing basis X of the given size with its whole
    combination closure inside A (and hence inside the horizon).

    Backtracking is lexicographic, so a WITNESSED verdict carries the
    least basis; REFUTED_IN_WINDOW means the bounded space (bases whose
    closure stays within the horizon) is exhausted.
    """
    if size < 1:
        raise BadBounds(f"basis size must be positive, got {size}")
    op = _op(mode)
    members = A.as_set()
    candidates = [m for m in A.members if m >= 1]

    def extend(chosen: list[int], sums: frozenset[int]) -> tuple[int, ...] | None:
        if len(chosen) == size:
            return tuple(chosen)
        floor = chosen[-1] if chosen else 0
        for x in candidates:
            if x <= floor:
                continue
            fresh = {op(s, x) for s in sums} | {x}
            if all(v in members for v in fresh):
                found = extend(chosen + [x], sums | fresh)
                if found is not None:
                    return found
        return None

    basis = extend([], frozenset())
    if basis is not None:
        closure, _ = combination_closure(basis, mode, A.horizon)
        return Verdict.witnessed(
            {"basis": list(basis), "closure": sorted(closure)},
            f"{mode} closure of {list(basis)} lies inside A within [1, {A.horizon}]")
    return Verdict.refuted(
        f"no {size}-element {mode} basis has its closure inside A within [1, {A.horizon}]")


def verify_fs_basis(A: WindowSet, basis: Iterable[int], mode: str = "additive") -> bool:
    """Independent check: enumerate every nonempty subset combination."""
    basis = sorted(set(basis))
    if not basis:
        return False
    op = _op(mode)
    members = A.as_set()
    for r in range(1, len(basis) + 1):
        for comb in combinations(basis, r):
            if reduce(op, comb) not in members:
                return False
    return True


def _interval_start(members: Iterable[int], length: int) -> int | None:
    run = 0
    prev = None
    for m in members:
        run = run + 1 if prev is not None and m == prev + 1 else 1
        prev = m
        if run >= length:
            return m - length + 1
    return None


def thick_verdict(A: WindowSet, interval_len: int) -> Verdict:
    start = _interval_start(A.members, interval_len)
    if start is not None:
        return Verdict.witnessed(
            {"start": start, "length": interval_len},
            f"A contains the interval [{start}, {start + interval_len - 1}]")
    return Verdict.refuted(
        f"A contains no interval of length {interval_len} inside [{A.origin}, {A.horizon}]")


def syndetic_verdict(A: WindowSet, gap_bound: int) -> Verdict:
    """Gap scan with the tail convention: a long empty run that touches
    the horizon cannot refute (the gap may close past the window); when
    such a run is the only obstruction the verdict is UNKNOWN."""
    g = gap_bound
    N = A.horizon
    ms = A.members
    if not ms:
        return Verdict.unknown(f"window [{A.origin}, {N}] shows no members; gaps undecidable")
    lead = ms[0] - A.origin
    if lead >= g:
        return Verdict(REFUTED_IN_WINDOW, {"gap_after": A.origin - 1, "gap_before": ms[0]},
                       f"positions [{A.origin}, {ms[0] - 1}] miss A, a run of {lead} >= {g}")
    max_gap = 0
    for a, b in zip(ms, ms[1:]):
        if b - a > g:
            return Verdict(REFUTED_IN_WINDOW, {"gap_after": a, "gap_before": b},
                           f"consecutive members {a} -> {b} leave a gap of {b - a} > {g}")
        max_gap = max(max_gap, b - a)
    tail = N - ms[-1]
    if tail >= g:
        return Verdict.unknown(
            f"all closed gaps are <= {g} but positions ({ms[-1]}, {N}] miss A; "
            "the run touches the horizon and may close past it")
    return Verdict.witnessed(
        {"max_gap": max_gap},
        f"every gap of A inside [{A.origin}, {N}] is <= {g} and the tail is clear")


def pws_verdict(A: WindowSet, gap_bound: int, interval_len: int, shift_radius: int) -> Verdict:
    members = A.as_set()
    for shifts in _shift_sets(shift_radius):
        shifted = sorted({m + t for m in members for t in shifts if m + t <= A.horizon})
        start = _interval_start(shifted, interval_len)
        if start is not None:
            return Verdict.witnessed(
                {"shifts": list(shifts), "start": start, "length": interval_len},
                f"A + {list(shifts)} covers [{start}, {start + interval_len - 1}]")
    return Verdict.refuted(
        f"no shift set inside [1, {shift_radius}] makes A cover an interval of "
        f"length {interval_len} within [{A.origin}, {A.horizon}]")


def _shift_sets(radius: int):
    pool = range(1, radius + 1)
    for r in range(1, radius + 1):
        yield from combinations(pool, r)


@dataclass(frozen=True)
class LargenessVerdicts:
    thick: Verdict
    syndetic: Verdict
    piecewise_syndetic: Verdict


def window_largeness(A: WindowSet, gap_bound: int, interval_len: int,
                     shift_radius: int) -> LargenessVerdicts:
    for name, v in (("gap_bound", gap_bound), ("interval_len", interval_len),
                    ("shift_radius", shift_radius)):
        if not 1 <= v <= A.horizon:
            raise BadBounds(f"{name} = {v} outside [1, {A.horizon}]")
    return LargenessVerdicts(
        thick=thick_verdict(A, interval_len),
        syndetic=syndetic_verdict(A, gap_bound),
        piecewise_syndetic=pws_verdict(A, gap_bound, interval_len, shift_radius),
    )


def div_set(A: WindowSet, n: int) -> WindowSet:
    """{m : m*n in A}, with the horizon shrunk to floor(N/n)."""
    if n == 0:
        raise ZeroDivisor("division of a window set by zero")
    if n < 0:
        raise BadBounds(f"divisor must be positive, got {n}")
    horizon = A.horizon // n
    if horizon < 1:
        raise BadBounds(f"horizon {A.horizon} too small for divisor {n}")
    members = A.as_set()
    lo = 0 if A.include_zero else 1
    return WindowSet.of(horizon,
                        (m for m in range(lo, horizon + 1) if m * n in members),
                        A.include_zero)


def bergelson_search(col: Coloring) -> Verdict:
    """Search for distinct a, b, c, d of one color with a + b = c * d.

    The scan is exhaustive over the window and returns the least
    witness in (c, d, a) order; every emitted witness is re-checked by
    the independent verifier before being returned.
    """
    N = col.horizon
    color = col.assignment
    for c in range(1, N + 1):
        if c * 1 > 2 * N:
            break
        cc = color[c - 1]
        for d in range(1, N + 1):
            prod = c * d
            if prod > 2 * N:
                break
            if color[d - 1] != cc:
                continue
            for a in range(max(1, prod - N), min(N, prod - 1) + 1):
                b = prod - a
                if color[a - 1] != cc or color[b - 1] != cc:
                    continue
                if len({a, b, c, d}) != 4:
                    continue
                witness = {"color": cc, "a": a, "b": b, "c": c, "d": d}
                if not verify_bergelson(col, witness):
                    raise AssertionError(f"search produced an invalid witness {witness}")
                return Verdict.witnessed(
                    witness, f"{a} + {b} = {c} * {d}, all of color {cc}, within [1, {N}]")
    return Verdict.refuted(
        f"no distinct monochromatic quadruple with a + b = c * d exists within [1, {N}]")


def verify_bergelson(col: Coloring, witness: dict) -> bool:
    try:
        a, b, c, d = witness["a"], witness["b"], witness["c"], witness["d"]
        i = witness["color"]
    except (KeyError, TypeError):
        return False
    vals = (a, b, c, d)
    if len(set(vals)) != 4:
        return False
    if any(not 1 <= v <= col.horizon for v in vals):
        return False
    if a + b != c * d:
        return False
    return all(col.color_of(v) == i for v in vals)


@dataclass(frozen=True)
class ColorClassReport:
    color: int
    size: int
    largeness: LargenessVerdicts
    additive_bases: tuple[tuple[int, Verdict], ...]
    multiplicative_bases: tuple[tuple[int, Verdict], ...]
    additively_pws_and_multiplicatively_fs: bool


@dataclass(frozen=True)
class PartitionScanReport:
    classes: tuple[ColorClassReport, ...]


def partition_scan(col: Coloring, gap_bound: int, interval_len: int, shift_radius: int,
                   basis_max: int = 3) -> PartitionScanReport:
    """Per color class: window largeness plus basis searches for sizes
    2..basis_max under both operations, flagging the classes that are
    simultaneously additively piecewise-syndetic-witnessed and
    multiplicatively basis-witnessed at basis_max inside the window."""
    reports = []
    for c in range(1, col.colors + 1):
        cls = col.color_class(c)
        if cls.members:
            largeness = window_largeness(cls, gap_bound, interval_len, shift_radius)
            add = tuple((k, find_fs_basis(cls, k, "additive")) for k in range(2, basis_max + 1))
            mul = tuple((k, find_fs_basis(cls, k, "multiplicative")) for k in range(2, basis_max + 1))
        else:
            empty = Verdict.unknown("color class is empty in the window")
            largeness = LargenessVerdicts(empty, empty, empty)
            add = tuple((k, Verdict.refuted("empty class")) for k in range(2, basis_max + 1))
            mul = tuple((k, Verdict.refuted("empty class")) for k in range(2, basis_max + 1))
        both = (largeness.piecewise_syndetic.status == WITNESSED
                and mul and mul[-1][1].status == WITNESSED)
        reports.append(ColorClassReport(
            color=c, size=len(cls.members), largeness=largeness,
            additive_bases=add, multiplicative_bases=mul,
            additively_pws_and_multiplicatively_fs=bool(both)))
    return PartitionScanReport(tuple(reports))


def verify_largeness_witness(A: WindowSet, kind: str, verdict: Verdict) -> bool:
    """Re-derive a WITNESSED largeness claim from its payload alone."""
    if verdict.status != WITNESSED:
        return True
    w = verdict.witness
    members = A.as_set()
    if kind == "thick":
        return all(x in members for x in range(w["start"], w["start"] + w["length"]))
    if kind == "syndetic":
        ms = A.members
        if not ms:
            return False
        gaps = [b - a for a, b in zip(ms, ms[1:])]
        return max(gaps, default=0) == w["max_gap"]
    if kind == "piecewise_syndetic":
        shifted = {m + t for m in members for t in w["shifts"] if m + t <= A.horizon}
        return all(x in shifted for x in range(w["start"], w["start"] + w["length"]))
    raise BadBounds(f"unknown largeness kind {kind!r}")
