"""Shift systems on the full binary cube over a finite semigroup, and
window-level shift checks over the nonnegative integers.

Given a finite semigroup S, adjoin a fresh two-sided identity e to get
the index monoid Q; the phase space is every function Q -> {0,1}
(encoded as an integer whose binary digits are read in the order
e, 0, 1, ...), and the translation by s sends f to x |-> f(x*s).  The
action is verified to be a homomorphism on construction.  In this
finite discrete setting single elements replace nets and the singleton
{x} generates all neighborhoods of x, so recurrence and proximality
are decided exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ConventionMismatch, ElementOutOfRange, InvariantViolation, TooLarge
from .semigroup import (
    ElementSet,
    FiniteSemigroup,
    ideal_structure,
    is_syndetic,
)
from .windows import (
    REFUTED_IN_WINDOW,
    WITNESSED,
    Verdict,
    WindowSet,
    syndetic_verdict,
)


@dataclass(frozen=True)
class ShiftSystem:
    semigroup: FiniteSemigroup
    q_count: int
    action: tuple[tuple[int, ...], ...]  # action[s][point] -> point

    @property
    def points(self) -> range:
        return range(1 << self.q_count)

    def bit(self, point: int, q: int) -> int:
        return (point >> (self.q_count - 1 - q)) & 1

    def apply(self, s: int, point: int) -> int:
        return self.action[s][point]


def _q_mul(S: FiniteSemigroup, x: int, y: int) -> int:
    # Q indices: 0 is the adjoined identity e; i+1 is semigroup element i.
    if x == 0:
        return y
    if y == 0:
        return x
    return S.mul(x - 1, y - 1) + 1


def build_shift_system(S: FiniteSemigroup, max_order: int = 4) -> ShiftSystem:
    """Tabulate the full translation action on 2^(|S|+1) points and
    verify the homomorphism law exhaustively."""
    if S.order > max_order:
        raise TooLarge(f"order {S.order} exceeds the guard {max_order} "
                       f"(2^{S.order + 1} points); raise max_order to override")
    q = S.order + 1
    count = 1 << q
    action = []
    for s in range(S.order):
        row = []
        for point in range(count):
            new = 0
            for x in range(q):
                bit = (point >> (q - 1 - _q_mul(S, x, s + 1))) & 1
                new |= bit << (q - 1 - x)
            row.append(new)
        action.append(tuple(row))
    sys = ShiftSystem(S, q, tuple(action))
    for s in range(S.order):
        for t in range(S.order):
            st = S.mul(s, t)
            for point in range(count):
                if action[st][point] != action[s][action[t][point]]:
                    raise InvariantViolation(
                        "homomorphism", f"T_(s*t) != T_s . T_t at s={s}, t={t}, point={point}")
    return sys


def char_point(sys: ShiftSystem, members: Iterable[int], identity_value: int = 1) -> int:
    """The point whose Q-digits are the characteristic function of a
    subset of S, with a chosen value at the adjoined identity."""
    point = identity_value << (sys.q_count - 1)
    for m in members:
        if not 0 <= m < sys.semigroup.order:
            raise ElementOutOfRange(f"element {m} not in [0, {sys.semigroup.order})")
        point |= 1 << (sys.q_count - 2 - m)
    return point


def return_set(sys: ShiftSystem, x: int, U: Iterable[int]) -> ElementSet:
    """{s : the translate of x by s lies in U}."""
    targets = frozenset(U)
    return ElementSet(sys.semigroup.order,
                      frozenset(s for s in range(sys.semigroup.order)
                                if sys.apply(s, x) in targets))


@dataclass(frozen=True)
class RecurrenceChecks:
    via_return_set: bool
    via_kernel: bool
    via_minimal_idempotent: bool
    kernel_witness: int | None
    idempotent_witness: int | None


def recurrence_checks(sys: ShiftSystem, x: int) -> RecurrenceChecks:
    """The three equivalent recurrence criteria, computed separately:
    the return set to {x} is syndetic; some kernel element fixes x;
    some minimal idempotent fixes x."""
    S = sys.semigroup
    r = return_set(sys, x, {x})
    via_syndetic = is_syndetic(S, r.members)
    struct = ideal_structure(S)
    kernel_w = next((a for a in struct.kernel if sys.apply(a, x) == x), None)
    idem_w = next((a for a in struct.minimal_idempotents if sys.apply(a, x) == x), None)
    return RecurrenceChecks(via_syndetic, kernel_w is not None, idem_w is not None,
                            kernel_w, idem_w)


def uniformly_recurrent(sys: ShiftSystem, x: int) -> bool:
    checks = recurrence_checks(sys, x)
    if not (checks.via_return_set == checks.via_kernel == checks.via_minimal_idempotent):
        raise InvariantViolation(
            "recurrence", f"criteria disagree at point {x}: {checks}")
    return checks.via_return_set


def proximal(sys: ShiftSystem, x: int, y: int) -> tuple[bool, int | None]:
    """Points are proximal when a single translation merges them."""
    s = next((s for s in range(sys.semigroup.order)
              if sys.apply(s, x) == sys.apply(s, y)), None)
    return s is not None, s


@dataclass(frozen=True)
class DynReport:
    point: int
    uniformly_recurrent: bool
    recurrence: RecurrenceChecks
    proximal_to: tuple[tuple[int, int], ...]  # (point, least merging translation)
    proximal_to_partner: tuple[bool, int | None] | None


def recurrence_and_proximality(sys: ShiftSystem, x: int, y: int | None = None) -> DynReport:
    checks = recurrence_checks(sys, x)
    flag = uniformly_recurrent(sys, x)
    prox = []
    for z in sys.points:
        ok, s = proximal(sys, x, z)
        if ok:
            prox.append((z, s))
    partner = proximal(sys, x, y) if y is not None else None
    return DynReport(x, flag, checks, tuple(prox), partner)


def minimal_idempotent_transport_mismatches(sys: ShiftSystem) -> list[tuple[int, int]]:
    """Pairs (x, y) where 'proximal and y recurrent' disagrees with
    'some minimal idempotent maps x onto y'; empty on every system."""
    S = sys.semigroup
    minimal_idem = ideal_structure(S).minimal_idempotents.members
    out = []
    for x in sys.points:
        for y in sys.points:
            lhs = proximal(sys, x, y)[0] and uniformly_recurrent(sys, y)
            rhs = any(sys.apply(e, x) == y for e in minimal_idem)
            if lhs != rhs:
                out.append((x, y))
    return out


def dynamically_central(S: FiniteSemigroup, A: ElementSet,
                        max_order: int = 4) -> tuple[bool, dict]:
    """Decide whether A is a return set witnessing proximality to a
    uniformly recurrent point, via the canonical construction.

    The base point x is the characteristic function of A (value 1 at
    the adjoined identity, recorded in the transcript).  The search
    scans every point y with the identity-coordinate neighborhood
    U = {z : z(e) = y(e)} and demands: x, y proximal; y uniformly
    recurrent; A equal to the return set of x into U.  A broader scan
    over all single-coordinate neighborhoods is run as a cross-check
    and must agree.
    """
    sys = build_shift_system(S, max_order=max_order)
    x = char_point(sys, A.members, identity_value=1)
    n = S.order
    members = A.members

    def matches(y: int, q: int) -> bool:
        ok, _ = proximal(sys, x, y)
        if not ok or not uniformly_recurrent(sys, y):
            return False
        want = sys.bit(y, q)
        r = frozenset(s for s in range(n) if sys.bit(sys.apply(s, x), q) == want)
        return r == members

    canonical = next((y for y in sys.points if matches(y, 0)), None)
    cylinder = next(((y, q) for y in sys.points for q in range(sys.q_count)
                     if matches(y, q)), None)
    agree = (canonical is not None) == (cylinder is not None)
    transcript = {
        "x_point": x,
        "identity_value": 1,
        "points_scanned": 1 << sys.q_count,
        "canonical_y": canonical,
        "canonical_U": None if canonical is None else {"coordinate": "e",
                                                       "value": sys.bit(canonical, 0)},
        "cylinder_hit": cylinder,
        "canonical_equals_cylinder_search": agree,
    }
    if canonical is not None:
        ok, s = proximal(sys, x, canonical)
        transcript["proximal_witness"] = s
        transcript["y_recurrence"] = recurrence_checks(sys, canonical)
    if not agree:
        raise InvariantViolation("cylinder-search", f"broader neighborhood scan disagrees: {transcript}")
    return canonical is not None, transcript


@dataclass(frozen=True)
class WindowDynamicsReport:
    ur_a: Verdict
    ur_b: Verdict
    proximal: Verdict
    zero_in_b: bool
    dyn_central: Verdict


def _match_set(A: WindowSet, block: int) -> WindowSet:
    """Positions n where A restricted to [n, n+block] is the shifted
    copy of its initial block [0, block]."""
    members = A.as_set()
    initial = frozenset(j for j in range(0, block + 1) if j in members)
    horizon = A.horizon - block
    hits = [n for n in range(0, horizon + 1)
            if frozenset(j for j in range(0, block + 1) if n + j in members) == initial]
    return WindowSet.of(max(horizon, 1), [h for h in hits if h <= max(horizon, 1)],
                        include_zero=True)


def _literal_match_set(A: WindowSet, block: int) -> WindowSet:
    """Literal sum reading: positions n where the truncated sumset
    A + [n, n+block] equals the shifted initial block."""
    members = A.as_set()
    initial = frozenset(j for j in range(0, block + 1) if j in members)
    horizon = A.horizon - block
    hits = []
    for n in range(0, horizon + 1):
        sums = {a + m for a in members for m in range(n, n + block + 1) if a + m <= A.horizon}
        if sums == {n + j for j in initial}:
            hits.append(n)
    return WindowSet.of(max(horizon, 1), [h for h in hits if h <= max(horizon, 1)],
                        include_zero=True)


def window_recurrence(A: WindowSet, block: int, gap_bound: int | None = None,
                      literal: bool = False) -> Verdict:
    """Window recurrence of a set: the positions whose length-block
    window reproduces the initial block must form a syndetic set."""
    g = gap_bound if gap_bound is not None else block
    matches = (_literal_match_set if literal else _match_set)(A, block)
    verdict = syndetic_verdict(matches, g)
    note = (f"match positions {list(matches.members[:8])}{'...' if len(matches.members) > 8 else ''}; "
            + verdict.note)
    return Verdict(verdict.status, verdict.witness, note)


def window_proximal(A: WindowSet, B: WindowSet, interval_len: int) -> Verdict:
    """Sets are window-proximal when they agree on some interval of at
    least the requested length."""
    a, b = A.as_set(), B.as_set()
    lo = min(A.origin, B.origin)
    hi = min(A.horizon, B.horizon)
    run_start = None
    best = None
    for x in range(lo, hi + 2):
        if x <= hi and (x in a) == (x in b):
            if run_start is None:
                run_start = x
        else:
            if run_start is not None and x - run_start >= interval_len:
                best = (run_start, x - 1)
                break
            run_start = None
    if best:
        return Verdict.witnessed({"start": best[0], "end": best[1]},
                                 f"A and B agree on [{best[0]}, {best[1]}]")
    return Verdict.refuted(
        f"no agreement interval of length {interval_len} inside [{lo}, {hi}]")


def window_dynamics(A: WindowSet, B: WindowSet, block: int, interval_len: int,
                    gap_bound: int | None = None, literal: bool = False) -> WindowDynamicsReport:
    """Window forms of recurrence, proximality, and the derived
    centrality check: A is window-dynamically-central relative to B when
    A and B are window-proximal, B is window-recurrent, and 0 lies in B.
    """
    if A.include_zero != B.include_zero:
        raise ConventionMismatch("window sets disagree about admitting 0")
    ur_a = window_recurrence(A, block, gap_bound, literal)
    ur_b = window_recurrence(B, block, gap_bound, literal)
    prox = window_proximal(A, B, interval_len)
    zero_in_b = 0 in B.as_set()
    if prox.status == WITNESSED and ur_b.status == WITNESSED and zero_in_b:
        central = Verdict.witnessed(
            {"proximal": prox.witness, "recurrent_partner": ur_b.witness},
            "A is window-proximal to the window-recurrent B, and 0 is in B")
    elif prox.status == REFUTED_IN_WINDOW or ur_b.status == REFUTED_IN_WINDOW or not zero_in_b:
        why = []
        if prox.status == REFUTED_IN_WINDOW:
            why.append("no agreement interval")
        if ur_b.status == REFUTED_IN_WINDOW:
            why.append("B's match set is not window-syndetic")
        if not zero_in_b:
            why.append("0 is not in B")
        central = Verdict.refuted("; ".join(why))
    else:
        central = Verdict.unknown("components undecided in this window")
    return WindowDynamicsReport(ur_a, ur_b, prox, zero_in_b, central)
