"""Catalog of finite semigroups for test batteries.

Orders 1..3 are enumerated exhaustively (every associative Cayley
table).  At order 4 raw rejection sampling of random tables is
hopeless (about one table in 10^6 is associative), so seeded random
instances come from constructions that are associative by design:
named families, direct products of smaller semigroups, and closures of
random transformations under composition, each followed by a random
relabeling.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from .errors import TooLarge
from .semigroup import FiniteSemigroup


def cyclic_group(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def left_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(n, tuple(tuple(i for _ in range(n)) for i in range(n)))


def right_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(n, tuple(tuple(j for j in range(n)) for _ in range(n)))


def min_semigroup(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(n, tuple(tuple(min(i, j) for j in range(n)) for i in range(n)))


def mod_mul(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(n, tuple(tuple((i * j) % n for j in range(n)) for i in range(n)))


NAMED_BUILDERS = (cyclic_group, left_zero, right_zero, min_semigroup, mod_mul)


def named_families(n: int) -> tuple[FiniteSemigroup, ...]:
    seen = {}
    for build in NAMED_BUILDERS:
        S = build(n)
        seen.setdefault(S.table, S)
    return tuple(seen.values())


def direct_product(S1: FiniteSemigroup, S2: FiniteSemigroup) -> FiniteSemigroup:
    n1, n2 = S1.order, S2.order
    n = n1 * n2
    rows = []
    for a1 in range(n1):
        for a2 in range(n2):
            row = []
            for b1 in range(n1):
                for b2 in range(n2):
                    row.append(S1.mul(a1, b1) * n2 + S2.mul(a2, b2))
            rows.append(tuple(row))
    return FiniteSemigroup(n, tuple(rows))


def relabeled(S: FiniteSemigroup, perm: tuple[int, ...]) -> FiniteSemigroup:
    n = S.order
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows[perm[i]][perm[j]] = perm[S.mul(i, j)]
    return FiniteSemigroup(n, tuple(tuple(r) for r in rows))


def _is_associative(rows: tuple[tuple[int, ...], ...], n: int) -> bool:
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            left = rows[ri[j]]
            rj = rows[j]
            for k in range(n):
                if left[k] != ri[rj[k]]:
                    return False
    return True


@lru_cache(maxsize=None)
def all_semigroups(order: int) -> tuple[FiniteSemigroup, ...]:
    """Every associative Cayley table of the given order (order <= 3)."""
    if order > 3:
        raise TooLarge(f"exhaustive enumeration limited to order <= 3, got {order}")
    out = []
    for flat in product(range(order), repeat=order * order):
        rows = tuple(flat[r * order:(r + 1) * order] for r in range(order))
        if _is_associative(rows, order):
            out.append(FiniteSemigroup(order, rows))
    return tuple(out)


def semigroups_up_to(max_order: int = 3):
    for n in range(1, max_order + 1):
        yield from all_semigroups(n)


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(f[g[x]] for x in range(len(g)))


def _transformation_closure(gens: list[tuple[int, ...]]) -> FiniteSemigroup | None:
    elems: list[tuple[int, ...]] = []
    seen = set()
    queue = list(gens)
    while queue:
        f = queue.pop(0)
        if f in seen:
            continue
        seen.add(f)
        elems.append(f)
        if len(elems) > 16:
            return None
        for g in list(elems):
            for h in (_compose(f, g), _compose(g, f)):
                if h not in seen:
                    queue.append(h)
    index = {f: i for i, f in enumerate(elems)}
    n = len(elems)
    rows = tuple(tuple(index[_compose(elems[i], elems[j])] for j in range(n)) for i in range(n))
    return FiniteSemigroup(n, rows)


def random_semigroup(order: int, rng: random.Random) -> FiniteSemigroup:
    """A seeded random semigroup of the requested order (order <= 4)."""
    if not 1 <= order <= 4:
        raise TooLarge(f"random generation supports orders 1..4, got {order}")
    S = None
    for _ in range(100):
        kind = rng.randrange(3)
        if kind == 0 and order <= 3:
            S = rng.choice(all_semigroups(order))
            break
        if kind == 1 and order == 4:
            S = direct_product(rng.choice(all_semigroups(2)), rng.choice(all_semigroups(2)))
            break
        if kind == 2:
            base = rng.choice((2, 3))
            gens = [tuple(rng.randrange(base) for _ in range(base))
                    for _ in range(rng.choice((1, 2)))]
            cand = _transformation_closure(gens)
            if cand is not None and cand.order == order:
                S = cand
                break
        if kind in (0, 1):
            S = rng.choice(named_families(order))
            break
    if S is None:
        S = rng.choice(named_families(order))
    perm = list(range(order))
    rng.shuffle(perm)
    return relabeled(S, tuple(perm))
