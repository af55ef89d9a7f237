"""Trees of sequences in a semigroup, their product structure, and
families of subsets with translation structure.

A tree is a set of finite element sequences closed under initial
segments.  For a node f, B_f is its branch set (the children's last
entries) and P_f is the set of all ordered products over increasing
index subsequences of f (empty node: empty product set).  Two tree
classes matter here:

* product trees:  B_f equals the union, over all strict extensions g,
  of the products of g's entries past f (checked on interior nodes;
  nodes at the deepest constructed level have no recorded extensions
  and are exempt by convention);
* star trees:     x * B_{f.x} lands inside B_f for every child f.x.

Every product tree is a star tree; builders here construct product
trees from a membership set by the branch recursion
B_f = {x in A : P_f * x inside A}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .contexts import Context, as_context
from .errors import (
    BudgetExceeded,
    ElementOutOfRange,
    EmptyInput,
    NodeNotInTree,
    NotAnExtension,
)
from .semigroup import ElementSet, FiniteSemigroup, ideal_structure, preimage, subsets_in_order

Node = tuple[int, ...]


@dataclass(frozen=True)
class FiniteTree:
    context: Context
    nodes: frozenset[Node]

    @classmethod
    def of(cls, carrier, nodes) -> "FiniteTree":
        ctx = as_context(carrier)
        ns = frozenset(tuple(n) for n in nodes)
        ns = ns | {()}
        for f in ns:
            if f and f[:-1] not in ns:
                raise NodeNotInTree(f"tree not closed under initial segments at {f}")
        return cls(ctx, ns)

    def branch_set(self, f: Node) -> frozenset[int]:
        return frozenset(g[-1] for g in self.nodes if len(g) == len(f) + 1 and g[:-1] == f)

    @property
    def depth(self) -> int:
        return max(len(f) for f in self.nodes)


def fp_products(ctx: Context, entries) -> frozenset[int]:
    """Ordered products over nonempty increasing-index subsequences."""
    prods: set[int] = set()
    for x in entries:
        prods |= {ctx.mul(p, x) for p in prods} | {x}
    return frozenset(prods)


def branch_and_products(T: FiniteTree, f: Node, g: Node | None = None):
    """(B_f, P_f, P_{g-f}): branch set, node products, and later-entry
    products of a strict extension g when one is given."""
    f = tuple(f)
    if f not in T.nodes:
        raise NodeNotInTree(f"{f} is not a node")
    later = None
    if g is not None:
        g = tuple(g)
        if g not in T.nodes:
            raise NodeNotInTree(f"{g} is not a node")
        if not (len(g) > len(f) and g[:len(f)] == f):
            raise NotAnExtension(f"{g} does not strictly extend {f}")
        later = fp_products(T.context, g[len(f):])
    return T.branch_set(f), fp_products(T.context, f), later


@dataclass(frozen=True)
class TreeClassification:
    is_star_tree: bool
    is_fp_tree: bool
    pruned_to_depth: int
    star_witness: tuple | None
    fp_witness: tuple | None


def classify_tree(T: FiniteTree) -> TreeClassification:
    ctx = T.context
    nodes_sorted = sorted(T.nodes, key=lambda f: (len(f), f))
    branch = {f: tuple(sorted(T.branch_set(f))) for f in nodes_sorted}
    d_max = T.depth

    star_witness = None
    for f in nodes_sorted:
        for x in branch[f]:
            child = f + (x,)
            for y in branch[child]:
                if f + (ctx.mul(x, y),) not in T.nodes:
                    star_witness = (f, x)
                    break
            if star_witness:
                break
        if star_witness:
            break

    # union of later-entry products over all strict extensions, bottom up:
    # D_f = union over children f.x of {x} | D_{f.x} | x * D_{f.x}
    descendants_products: dict[Node, frozenset[int]] = {}
    for f in sorted(T.nodes, key=len, reverse=True):
        acc: set[int] = set()
        for x in branch[f]:
            sub = descendants_products[f + (x,)]
            acc.add(x)
            acc |= sub
            acc |= {ctx.mul(x, p) for p in sub}
        descendants_products[f] = frozenset(acc)

    fp_witness = None
    for f in nodes_sorted:
        if len(f) >= d_max:
            continue
        if frozenset(branch[f]) != descendants_products[f]:
            fp_witness = _fp_failure_witness(T, f, branch[f], descendants_products[f])
            break

    empty_depths = [len(f) for f in nodes_sorted if not branch[f]]
    pruned = min(empty_depths, default=d_max)

    return TreeClassification(
        is_star_tree=star_witness is None,
        is_fp_tree=fp_witness is None,
        pruned_to_depth=pruned,
        star_witness=star_witness,
        fp_witness=fp_witness,
    )


def _fp_failure_witness(T: FiniteTree, f: Node, branch_f, union_f) -> tuple:
    extra = sorted(union_f - set(branch_f))
    if extra:
        # find a concrete extension g whose product set produces the element
        target = extra[0]
        for g in sorted(T.nodes, key=lambda n: (len(n), n)):
            if len(g) > len(f) and g[:len(f)] == f:
                if target in fp_products(T.context, g[len(f):]):
                    return (f, g, target)
    missing = sorted(set(branch_f) - union_f)
    return (f, None, missing[0])


def build_fp_tree(carrier, A, depth: int, max_nodes: int = 100_000) -> FiniteTree:
    """Construct the product tree of a membership set, levels 0..depth.

    Level one is A itself; below a node f, the branch set keeps the
    members whose left products with P_f stay inside A.  Branch sets
    may come out empty; classify_tree's pruned_to_depth reports how far
    the tree stays pruned.
    """
    ctx = as_context(carrier)
    members = frozenset(A.members if isinstance(A, ElementSet) else A)
    nodes: set[Node] = {()}
    frontier: list[tuple[Node, frozenset[int]]] = [((), frozenset())]
    for _ in range(depth):
        next_frontier = []
        for f, products in frontier:
            for x in sorted(members):
                if all(ctx.mul(p, x) in members for p in products):
                    node = f + (x,)
                    nodes.add(node)
                    if len(nodes) > max_nodes:
                        raise BudgetExceeded(f"tree exceeds {max_nodes} nodes")
                    next_frontier.append((node, products | {ctx.mul(p, x) for p in products} | {x}))
        frontier = next_frontier
    return FiniteTree(ctx, frozenset(nodes))


@dataclass(frozen=True)
class SetFamily:
    parent: FiniteSemigroup
    sets: tuple[ElementSet, ...]

    @classmethod
    def of(cls, parent: FiniteSemigroup, sets) -> "SetFamily":
        out = []
        for s in sets:
            es = s if isinstance(s, ElementSet) else ElementSet.of(parent.order, s)
            if es.order != parent.order:
                raise ElementOutOfRange("family member declared over a different order")
            out.append(es)
        if not out:
            raise EmptyInput("a set family needs at least one member")
        return cls(parent, tuple(out))


@dataclass(frozen=True)
class GoodFamilyReport:
    good: bool
    translate_choice: tuple[tuple[tuple[int, int], int], ...] | None
    violation: tuple | None


def is_good_family(fam: SetFamily) -> GoodFamilyReport:
    """Finite intersection property plus: every x in C_i admits a j with
    x * C_j inside C_i.  On failure reports either the smallest
    subfamily with empty intersection or the violating (i, x)."""
    S = fam.parent
    sets = [c.members for c in fam.sets]
    for idxs in subsets_in_order(range(len(sets))):
        inter = frozenset.intersection(*(sets[i] for i in idxs))
        if not inter:
            return GoodFamilyReport(False, None, ("empty_intersection", idxs))
    choice = []
    for i, members in enumerate(sets):
        for x in sorted(members):
            j = next((j for j, cj in enumerate(sets)
                      if all(S.mul(x, y) in members for y in cj)), None)
            if j is None:
                return GoodFamilyReport(False, None, ("no_translate", i, x))
            choice.append(((i, x), j))
    return GoodFamilyReport(True, tuple(choice), None)


def verify_good_family_witness(fam: SetFamily, choice) -> bool:
    """Independent product check of a goodness witness."""
    S = fam.parent
    mapping = dict(choice)
    for i, ci in enumerate(fam.sets):
        for x in ci.members:
            if (i, x) not in mapping:
                return False
            j = mapping[(i, x)]
            if any(S.mul(x, y) not in ci.members for y in fam.sets[j].members):
                return False
    return True


@dataclass(frozen=True)
class CwpwsWitness:
    """Uniform piecewise syndeticity data: one anchor element plus a
    shift set per nonempty subfamily; the chooser function is the
    anchor, constant in both arguments."""

    alpha: int
    shifts: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def shift_for(self, subfamily: tuple[int, ...]) -> tuple[int, ...]:
        return dict(self.shifts)[tuple(sorted(subfamily))]

    def chooser(self, subfamily, finite_set) -> int:
        return self.alpha


@dataclass(frozen=True)
class CwpwsReport:
    cwpws: bool
    witness: CwpwsWitness | None
    refutation: tuple | None
    kernel_oracle: bool
    agree: bool


def cwpws_check(fam: SetFamily) -> CwpwsReport:
    """Direct search for collectionwise piecewise syndeticity against
    the kernel oracle.

    Direct side: find an anchor alpha such that S * alpha lies in some
    shift cover of every nonempty subfamily intersection; the full
    chooser witness is the constant section at alpha.  Oracle side: the
    kernel meets the intersection of the whole family.  The report
    asserts whether the two verdicts coincide.
    """
    S = fam.parent
    n = S.order
    sets = [c.members for c in fam.sets]
    subfamilies = list(subsets_in_order(range(len(sets))))
    inters = {idxs: frozenset.intersection(*(sets[i] for i in idxs)) for idxs in subfamilies}

    kernel = ideal_structure(S).kernel.members
    oracle = bool(kernel & inters[tuple(range(len(sets)))])

    empty = next((idxs for idxs in subfamilies if not inters[idxs]), None)
    if empty is not None:
        return CwpwsReport(False, None, ("empty_intersection", empty), oracle,
                           agree=(oracle is False))

    covers = {idxs: preimage(S, inter, range(n)) for idxs, inter in inters.items()}
    alpha = next(
        (a for a in range(n)
         if all(all(S.mul(s, a) in covers[idxs] for s in range(n)) for idxs in subfamilies)),
        None)
    if alpha is None:
        return CwpwsReport(False, None, ("search_exhausted", n), oracle, agree=(oracle is False))

    shifts = []
    for idxs in subfamilies:
        G = next(G for G in subsets_in_order(range(n))
                 if all(S.mul(s, alpha) in preimage(S, inters[idxs], G) for s in range(n)))
        shifts.append((idxs, G))
    witness = CwpwsWitness(alpha, tuple(shifts))
    return CwpwsReport(True, witness, None, oracle, agree=(oracle is True))


def verify_cwpws_witness(fam: SetFamily, witness: CwpwsWitness) -> bool:
    """Literal check of the defining condition: for every finite F and
    every nested pair of subfamilies, F * chooser lands in the declared
    shift cover of the smaller subfamily's intersection."""
    S = fam.parent
    n = S.order
    sets = [c.members for c in fam.sets]
    subfamilies = list(subsets_in_order(range(len(sets))))
    for small in subfamilies:
        inter = frozenset.intersection(*(sets[i] for i in small))
        cover = preimage(S, inter, witness.shift_for(small))
        for large in subfamilies:
            if not set(small) <= set(large):
                continue
            for F in subsets_in_order(range(n)):
                chi = witness.chooser(large, F)
                if any(S.mul(s, chi) not in cover for s in F):
                    return False
    return True
