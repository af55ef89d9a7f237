"""Exact algebraic structure of finite semigroups.

A finite semigroup is given by its Cayley table over element indices
0..n-1.  Everything here is computed exhaustively: principal ideals,
the kernel (smallest two-sided ideal), idempotents, and the four
largeness notions (thick, syndetic, piecewise syndetic, central) with
explicit witnesses.  All searches return the lexicographically least
witness, with elements ordered by index and sets ordered by their
sorted member lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    ElementOutOfRange,
    IndexOutOfRange,
    InvariantViolation,
    NonAssociative,
)


@dataclass(frozen=True)
class FiniteSemigroup:
    """An order-n Cayley table; table[i][j] is the index of i*j."""

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)


def load_semigroup(order: int, table, labels=None) -> FiniteSemigroup:
    """Validate a Cayley table (dimensions, entry range, associativity)."""
    if order < 1:
        raise IndexOutOfRange(f"order must be positive, got {order}")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != order or any(len(r) != order for r in rows):
        raise IndexOutOfRange(f"table dimensions do not match order {order}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < order:
                raise IndexOutOfRange(f"table[{i}][{j}] = {v} not in [0, {order})")
    for i in range(order):
        ri = rows[i]
        for j in range(order):
            left = rows[ri[j]]
            rj = rows[j]
            for k in range(order):
                if left[k] != ri[rj[k]]:
                    raise NonAssociative(i, j, k)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != order:
            raise InvariantViolation("labels", f"expected {order} labels, got {len(labels)}")
    return FiniteSemigroup(order, rows, labels)


@dataclass(frozen=True)
class ElementSet:
    """A subset of a finite semigroup's elements."""

    order: int
    members: frozenset[int]

    @classmethod
    def of(cls, order: int, members: Iterable[int]) -> "ElementSet":
        ms = frozenset(int(m) for m in members)
        for m in ms:
            if not 0 <= m < order:
                raise ElementOutOfRange(f"element {m} not in [0, {order})")
        return cls(order, ms)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.as_tuple())

    def __len__(self) -> int:
        return len(self.members)


def subsets_in_order(items: Iterable[int], include_empty: bool = False):
    """Yield subsets as sorted tuples, smallest first, lexicographic within a size."""
    pool = sorted(items)
    start = 0 if include_empty else 1
    for r in range(start, len(pool) + 1):
        yield from combinations(pool, r)


@dataclass(frozen=True)
class IdealStructure:
    minimal_left_ideals: tuple[ElementSet, ...]
    minimal_right_ideals: tuple[ElementSet, ...]
    kernel: ElementSet
    idempotents: ElementSet
    minimal_idempotents: ElementSet


@lru_cache(maxsize=None)
def ideal_structure(S: FiniteSemigroup) -> IdealStructure:
    """Minimal one-sided ideals, kernel, idempotents of a finite semigroup.

    Principal left ideals are computed with a formal identity adjoined,
    {a} | S*a, so each element generates an ideal containing itself; the
    inclusion-minimal ones among these are exactly the minimal left
    ideals.  The kernel is their union (and equally the union of the
    minimal right ideals).
    """
    n = S.order
    lefts = {frozenset({a} | {S.mul(s, a) for s in range(n)}) for a in range(n)}
    rights = {frozenset({a} | {S.mul(a, s) for s in range(n)}) for a in range(n)}
    min_left = sorted((L for L in lefts if not any(M < L for M in lefts)),
                      key=lambda L: tuple(sorted(L)))
    min_right = sorted((R for R in rights if not any(M < R for M in rights)),
                       key=lambda R: tuple(sorted(R)))
    kernel = frozenset().union(*min_left)
    kernel_right = frozenset().union(*min_right)
    if kernel != kernel_right:
        raise InvariantViolation("kernel", "left and right ideal unions differ")
    idem = frozenset(e for e in range(n) if S.mul(e, e) == e)
    if not idem:
        raise InvariantViolation("idempotents", "finite semigroup without idempotent")
    return IdealStructure(
        minimal_left_ideals=tuple(ElementSet(n, L) for L in min_left),
        minimal_right_ideals=tuple(ElementSet(n, R) for R in min_right),
        kernel=ElementSet(n, kernel),
        idempotents=ElementSet(n, idem),
        minimal_idempotents=ElementSet(n, idem & kernel),
    )


def _check_subset(S: FiniteSemigroup, A: ElementSet) -> None:
    if A.order != S.order:
        raise ElementOutOfRange(f"set declared over order {A.order}, semigroup has order {S.order}")
    for m in A.members:
        if not 0 <= m < S.order:
            raise ElementOutOfRange(f"element {m} not in [0, {S.order})")


def shift_set(S: FiniteSemigroup, A: ElementSet, s: int) -> ElementSet:
    """The preimage of A under left translation by s: {t : s*t in A}."""
    _check_subset(S, A)
    if not 0 <= s < S.order:
        raise ElementOutOfRange(f"element {s} not in [0, {S.order})")
    return ElementSet(S.order, frozenset(t for t in S.elements if S.mul(s, t) in A.members))


def preimage(S: FiniteSemigroup, members: frozenset[int], shifts: Iterable[int]) -> frozenset[int]:
    """{s : g*s in members for some g in shifts}."""
    shifts = tuple(shifts)
    return frozenset(s for s in S.elements if any(S.mul(g, s) in members for g in shifts))


def is_syndetic(S: FiniteSemigroup, members: frozenset[int]) -> bool:
    return len(preimage(S, members, S.elements)) == S.order


@dataclass(frozen=True)
class LargenessProfile:
    thick: bool
    thick_witness: int | None
    syndetic: bool
    syndetic_witness: tuple[int, ...] | None
    piecewise_syndetic: bool
    pws_witness: tuple[tuple[int, ...], int] | None
    central: bool
    central_witness: int | None


def largeness_profile(S: FiniteSemigroup, A: ElementSet) -> LargenessProfile:
    """Decide all four largeness notions for A inside S, with witnesses.

    On a finite semigroup the defining quantifiers collapse: thick
    means S*t lands in A for some t, syndetic means finitely many left
    shifts of A cover S, piecewise syndetic means some S*a lands in a
    shift cover, and central means A meets the minimal idempotents.
    The empty set satisfies none of them.
    """
    _check_subset(S, A)
    members = A.members
    n = S.order
    thick_w = next(
        (t for t in range(n) if all(S.mul(s, t) in members for s in range(n))), None)

    syndetic = len(preimage(S, members, range(n))) == n
    synd_w = None
    if syndetic:
        synd_w = next(G for G in subsets_in_order(range(n))
                      if len(preimage(S, members, G)) == n)

    pws_w = None
    for G in subsets_in_order(range(n)):
        covered = preimage(S, members, G)
        a = next((a for a in range(n)
                  if all(S.mul(s, a) in covered for s in range(n))), None)
        if a is not None:
            pws_w = (G, a)
            break

    struct = ideal_structure(S)
    central_w = min((e for e in struct.minimal_idempotents.members if e in members),
                    default=None)

    return LargenessProfile(
        thick=thick_w is not None,
        thick_witness=thick_w,
        syndetic=syndetic,
        syndetic_witness=synd_w,
        piecewise_syndetic=pws_w is not None,
        pws_witness=pws_w,
        central=central_w is not None,
        central_witness=central_w,
    )


def is_central(S: FiniteSemigroup, A: ElementSet) -> bool:
    _check_subset(S, A)
    return bool(ideal_structure(S).minimal_idempotents.members & A.members)


@dataclass(frozen=True)
class SpectrumReport:
    piecewise_syndetic: bool
    spectrum_syndetic: bool
    spectrum_nonempty: bool
    agree: bool


def central_shift_spectrum(S: FiniteSemigroup, A: ElementSet) -> tuple[ElementSet, SpectrumReport]:
    """Elements whose shifted preimage of A is central, plus the three-way report.

    The report records whether A is piecewise syndetic (by witness
    search), whether the spectrum is syndetic, and whether it is
    nonempty; the three conditions coincide on every finite semigroup.
    """
    _check_subset(S, A)
    minimal_idem = ideal_structure(S).minimal_idempotents.members
    spectrum = frozenset(
        s for s in S.elements
        if any(S.mul(s, e) in A.members for e in minimal_idem))
    pws = largeness_profile(S, A).piecewise_syndetic
    synd = is_syndetic(S, spectrum)
    nonempty = bool(spectrum)
    report = SpectrumReport(
        piecewise_syndetic=pws,
        spectrum_syndetic=synd,
        spectrum_nonempty=nonempty,
        agree=(pws == synd == nonempty),
    )
    return ElementSet(S.order, spectrum), report
