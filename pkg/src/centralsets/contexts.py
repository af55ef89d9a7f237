"""Ambient semigroup contexts shared by the tree and witness machinery.

A context is just a named binary operation.  Finite semigroups wrap
their Cayley table; the naturals come in their additive and
multiplicative flavors.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Callable

from .semigroup import FiniteSemigroup


@dataclass(frozen=True)
class Context:
    name: str
    mul: Callable[[int, int], int] = field(compare=False)

    def product(self, items) -> int:
        it = iter(items)
        try:
            value = next(it)
        except StopIteration:
            raise ValueError("empty product has no value in a semigroup")
        for x in it:
            value = self.mul(value, x)
        return value


NAT_ADD = Context("nat-add", operator.add)
NAT_MUL = Context("nat-mul", operator.mul)


def semigroup_context(S: FiniteSemigroup) -> Context:
    return Context(f"finite-{S.order}", S.mul)


def as_context(carrier) -> Context:
    if isinstance(carrier, Context):
        return carrier
    if isinstance(carrier, FiniteSemigroup):
        return semigroup_context(carrier)
    raise TypeError(f"cannot interpret {carrier!r} as a semigroup context")
