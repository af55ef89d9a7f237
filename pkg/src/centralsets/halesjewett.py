"""Words, combinatorial lines, and the alternating-product witness
machinery built on them.

The centerpiece is an alternating product evaluator: given padding
elements a(1..m+1), increasing positions t(1..m), and a sequence table
f, it forms a(1) f(t1) a(2) f(t2) ... a(m) f(tm) a(m+1) in an ambient
semigroup.  On top of it sit:

* exhaustive monochromatic-line search over word cubes and tiny
  empirical Hales-Jewett numbers;
* bounded witness search for hitting a membership set with one
  (m, a, t) pattern across a whole finite family of sequences;
* the word-indexed sequence transform g_w and the reduction that
  rewrites a line of transformed patterns as a single pattern, with a
  built-in equality verification;
* the bounded recursion that assembles nested witnesses over a finite
  family of sequence sets, plus its independent verifier.

Sequences are explicit finite tables (tuple index i holds the value at
position i+1); searches are exhaustive within caller-supplied bounds
and return lexicographically least witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .contexts import Context, as_context
from .errors import (
    BadBounds,
    BudgetExceeded,
    DomainTooSmall,
    NoStar,
    UndefinedAt,
    VerificationFailed,
)

STAR = 0


@dataclass(frozen=True)
class VariableWord:
    """A word over 1..alphabet with at least one star slot (entry 0)."""

    alphabet: int
    entries: tuple[int, ...]

    @classmethod
    def of(cls, alphabet: int, entries: Iterable[int]) -> "VariableWord":
        es = tuple(int(e) for e in entries)
        if alphabet < 1 or not es:
            raise BadBounds("variable word needs alphabet >= 1 and positive length")
        for e in es:
            if not 0 <= e <= alphabet:
                raise BadBounds(f"entry {e} outside star|1..{alphabet}")
        if STAR not in es:
            raise NoStar("variable word without a star slot")
        return cls(alphabet, es)

    def star_positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.entries) if e == STAR)

    def substitute(self, letter: int) -> tuple[int, ...]:
        return tuple(letter if e == STAR else e for e in self.entries)


def line(w: VariableWord) -> list[tuple[int, ...]]:
    """The combinatorial line: every star slot replaced by each letter."""
    return [w.substitute(a) for a in range(1, w.alphabet + 1)]


def all_words(alphabet: int, length: int):
    return product(range(1, alphabet + 1), repeat=length)


def word_rank(word: tuple[int, ...], alphabet: int) -> int:
    rank = 0
    for e in word:
        rank = rank * alphabet + (e - 1)
    return rank


@dataclass(frozen=True)
class WordColoring:
    """A coloring of the full word cube, stored in lexicographic rank order."""

    alphabet: int
    length: int
    colors: int
    values: tuple[int, ...]

    @classmethod
    def of(cls, alphabet: int, length: int, colors: int, values: Iterable[int]) -> "WordColoring":
        vs = tuple(int(v) for v in values)
        if len(vs) != alphabet ** length:
            raise BadBounds(f"expected {alphabet ** length} colors, got {len(vs)}")
        if any(not 1 <= v <= colors for v in vs):
            raise BadBounds("color value out of range")
        return cls(alphabet, length, colors, vs)

    def color_of(self, word: tuple[int, ...]) -> int:
        return self.values[word_rank(word, self.alphabet)]


def find_mono_line(col: WordColoring) -> VariableWord | None:
    """Least variable word (stars sort before letters) whose line is
    monochromatic, or None once all variable words are exhausted."""
    k, N = col.alphabet, col.length
    for entries in product(range(0, k + 1), repeat=N):
        if STAR not in entries:
            continue
        w = VariableWord(k, entries)
        colors = {col.color_of(word) for word in line(w)}
        if len(colors) == 1:
            return w
    return None


def verify_mono_line(col: WordColoring, w: VariableWord) -> bool:
    return len({col.color_of(word) for word in line(w)}) == 1


@dataclass(frozen=True)
class HjSearchResult:
    found: int | None
    refuters: tuple[tuple[int, tuple[int, ...]], ...]
    checked: tuple[tuple[int, int], ...]

    def refuter_for(self, length: int) -> tuple[int, ...] | None:
        return dict(self.refuters).get(length)


def hj_number_search(alphabet: int, colors: int, n_max: int,
                     budget: int = 200_000) -> HjSearchResult:
    """Least word length (up to n_max) at which every coloring of the
    cube admits a monochromatic line; exhaustive over colorings, with a
    hard enumeration budget."""
    if alphabet < 1 or colors < 1 or n_max < 1:
        raise BadBounds("alphabet, colors, n_max must all be positive")
    refuters = []
    checked = []
    for N in range(1, n_max + 1):
        total = colors ** (alphabet ** N)
        if total > budget:
            raise BudgetExceeded(
                f"{total} colorings at length {N} exceed budget {budget}",
                partial=HjSearchResult(None, tuple(refuters), tuple(checked)))
        refuter = None
        count = 0
        for values in product(range(1, colors + 1), repeat=alphabet ** N):
            count += 1
            col = WordColoring(alphabet, N, colors, values)
            if find_mono_line(col) is None:
                refuter = values
                break
        checked.append((N, count))
        if refuter is None:
            return HjSearchResult(N, tuple(refuters), tuple(checked))
        refuters.append((N, refuter))
    return HjSearchResult(None, tuple(refuters), tuple(checked))


def seq_value(table: tuple[int, ...], index: int) -> int:
    if not 1 <= index <= len(table):
        raise UndefinedAt(index)
    return table[index - 1]


@dataclass(frozen=True)
class ChiArguments:
    """Arguments of the alternating product: padding a of length m+1,
    strictly increasing positions t of length m, sequence table f."""

    m: int
    a: tuple[int, ...]
    t: tuple[int, ...]
    f: tuple[int, ...]

    @classmethod
    def of(cls, m: int, a, t, f) -> "ChiArguments":
        a, t, f = tuple(a), tuple(t), tuple(f)
        if m < 1:
            raise BadBounds(f"m must be positive, got {m}")
        if len(a) != m + 1:
            raise BadBounds(f"padding has length {len(a)}, expected {m + 1}")
        if len(t) != m or any(x < 1 for x in t) or list(t) != sorted(set(t)):
            raise BadBounds(f"positions {t} are not strictly increasing positive integers of length {m}")
        if max(t) > len(f):
            raise UndefinedAt(max(t))
        return cls(m, a, t, f)


def chi_value(m: int, a, t, f, ctx: Context) -> int:
    value = a[0]
    for i in range(m):
        value = ctx.mul(value, seq_value(tuple(f), t[i]))
        value = ctx.mul(value, a[i + 1])
    return value


def chi_eval(args: ChiArguments, carrier) -> int:
    """Evaluate the alternating product left to right in the carrier."""
    ctx = as_context(carrier)
    return chi_value(args.m, args.a, args.t, args.f, ctx)


@dataclass(frozen=True)
class JSearchBounds:
    m_max: int
    t_max: int
    a_candidates: tuple[int, ...]

    @classmethod
    def of(cls, m_max: int, t_max: int, a_candidates) -> "JSearchBounds":
        if m_max < 1 or t_max < 1:
            raise BadBounds("m_max and t_max must be positive")
        cands = tuple(a_candidates)
        if not cands:
            raise BadBounds("need at least one padding candidate")
        return cls(m_max, t_max, cands)


@dataclass(frozen=True)
class JWitness:
    m: int
    a: tuple[int, ...]
    t: tuple[int, ...]


def find_j_witness(A, F, bounds: JSearchBounds, carrier, min_t: int = 0) -> JWitness | None:
    """Least (m, t, a) pattern whose alternating product lands in A for
    every sequence in F, with all positions strictly above min_t.

    The min_t constraint realizes the tail-shift trick: demanding
    t(1) > k is the same as witnessing the family of k-shifted
    sequences.  Exhaustion of the bounded space returns None.
    """
    ctx = as_context(carrier)
    members = frozenset(A.members if hasattr(A, "members") else A)
    tables = [tuple(f) for f in F]
    if not members or not tables:
        return None
    lo = min_t + 1
    for m in range(1, bounds.m_max + 1):
        if lo + m - 1 > bounds.t_max:
            break
        for t in combinations(range(lo, bounds.t_max + 1), m):
            if any(t[-1] > len(f) for f in tables):
                continue
            for a in product(bounds.a_candidates, repeat=m + 1):
                if all(chi_value(m, a, t, f, ctx) in members for f in tables):
                    return JWitness(m, a, t)
    return None


def verify_j_witness(A, F, witness: JWitness, carrier, min_t: int = 0) -> bool:
    ctx = as_context(carrier)
    members = frozenset(A.members if hasattr(A, "members") else A)
    m, a, t = witness.m, witness.a, witness.t
    if len(a) != m + 1 or len(t) != m:
        return False
    if list(t) != sorted(set(t)) or t[0] <= min_t:
        return False
    return all(chi_value(m, a, t, tuple(f), ctx) in members for f in F)


def build_gw(H, length: int, filler: int, l_max: int, carrier) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Word-indexed sequence transform: for each word w over 1..k,
    g_w(l) is the in-order product over i = 1..length of
    filler * h_{w_i}(length*l + i), tabulated for l = 1..l_max."""
    ctx = as_context(carrier)
    tables = [tuple(h) for h in H]
    if length < 1:
        raise DomainTooSmall(f"block length must be positive, got {length}")
    if l_max < 1:
        raise DomainTooSmall(f"table length must be positive, got {l_max}")
    need = length * l_max + length
    for idx, h in enumerate(tables):
        if len(h) < need:
            raise DomainTooSmall(
                f"sequence {idx} has {len(h)} values, needs {need} for l_max {l_max}")
    k = len(tables)
    out = {}
    for w in all_words(k, length):
        values = []
        for l in range(1, l_max + 1):
            value = None
            for i in range(1, length + 1):
                term = ctx.mul(filler, tables[w[i - 1] - 1][length * l + i - 1])
                value = term if value is None else ctx.mul(value, term)
            values.append(value)
        out[w] = tuple(values)
    return out


@dataclass(frozen=True)
class ReducedWitness:
    m: int
    a: tuple[int, ...]
    t: tuple[int, ...]
    checks: tuple[tuple[int, int], ...]  # (letter, common value of both sides)


def reduce_line_to_witness(p: int, b, s, w: VariableWord, H, filler: int,
                           carrier) -> ReducedWitness:
    """Rewrite a block pattern evaluated along a combinatorial line as a
    single alternating pattern that is uniform in the substituted letter.

    Expanding a(=b)-padded blocks g_{w(letter)}(s_j) turns the product
    into an alternating sequence of constant tokens and the letter's
    sequence values at positions length*s_j + v (v a star slot of w).
    The new positions t are those star positions across all blocks; the
    new padding folds every maximal star-free token run (b entries,
    fillers, and fixed-letter sequence values, which are treated as
    opaque constants) into the neighboring padding slot; consecutive
    stars are separated by the filler alone.  The returned report
    re-evaluates both sides for every letter; a mismatch raises, it is
    never returned as output.
    """
    ctx = as_context(carrier)
    tables = [tuple(h) for h in H]
    k = w.alphabet
    if len(tables) != k:
        raise BadBounds(f"{len(tables)} sequences for alphabet of size {k}")
    if p < 1:
        raise BadBounds(f"p must be positive, got {p}")
    b = tuple(b)
    s = tuple(s)
    if len(b) != p + 1:
        raise BadBounds(f"padding has length {len(b)}, expected {p + 1}")
    if list(s) != sorted(set(s)) or any(x < 1 for x in s):
        raise BadBounds(f"positions {s} are not strictly increasing positive integers")
    length = len(w.entries)
    need = length * s[-1] + length
    for idx, h in enumerate(tables):
        if len(h) < need:
            raise DomainTooSmall(f"sequence {idx} needs {need} values, has {len(h)}")

    stars = w.star_positions()
    r = len(stars)
    m = p * r
    t = tuple(length * sj + v for sj in s for v in stars)

    # token expansion of b(1) g(s_1) b(2) ... g(s_p) b(p+1); None marks a star slot
    tokens: list[int | None] = [b[0]]
    for j in range(p):
        base = length * s[j]
        for i in range(1, length + 1):
            tokens.append(filler)
            e = w.entries[i - 1]
            tokens.append(None if e == STAR else tables[e - 1][base + i - 1])
        tokens.append(b[j + 1])

    padding = []
    run: list[int] = []
    for tok in tokens:
        if tok is None:
            padding.append(ctx.product(run))
            run = []
        else:
            run.append(tok)
    padding.append(ctx.product(run))
    a = tuple(padding)
    if len(a) != m + 1:
        raise VerificationFailed(f"padding came out with {len(a)} slots, expected {m + 1}")

    gw = build_gw(tables, length, filler, s[-1], carrier)
    checks = []
    for letter in range(1, k + 1):
        direct = chi_value(m, a, t, tables[letter - 1], ctx)
        reduced = chi_value(p, b, s, gw[w.substitute(letter)], ctx)
        if direct != reduced:
            raise VerificationFailed(
                f"letter {letter}: alternating pattern gives {direct}, "
                f"block pattern gives {reduced}", letter=letter)
        checks.append((letter, direct))
    return ReducedWitness(m, a, t, tuple(checks))


def _normalize_families(families) -> tuple[tuple[tuple[int, ...], ...], list[frozenset[int]]]:
    tables: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}
    fams: list[frozenset[int]] = []
    for fam in families:
        idxs = set()
        for f in fam:
            f = tuple(f)
            if f not in index:
                index[f] = len(tables)
                tables.append(f)
            idxs.add(index[f])
        if not idxs:
            raise BadBounds("empty sequence family")
        fs = frozenset(idxs)
        if fs not in fams:
            fams.append(fs)
    fams.sort(key=lambda fs: (len(fs), tuple(sorted(fs))))
    return tuple(tables), fams


def subsets_of_tables(tables) -> list[tuple[tuple[int, ...], ...]]:
    """All nonempty subfamilies of a base list of sequence tables."""
    base = [tuple(f) for f in tables]
    out = []
    for r in range(1, len(base) + 1):
        for comb in combinations(range(len(base)), r):
            out.append(tuple(base[i] for i in comb))
    return out


@dataclass
class CsetWitness:
    tables: tuple[tuple[int, ...], ...]
    subfamilies: tuple[frozenset[int], ...]
    m: dict
    a: dict
    t: dict
    records: dict


@dataclass
class CsetOutcome:
    witness: CsetWitness | None
    failed_at: frozenset[int] | None
    diagnostics: dict | None

    @property
    def ok(self) -> bool:
        return self.witness is not None


def _chains_below(target: frozenset[int], handled: list[frozenset[int]]):
    """All nonempty strictly increasing chains of handled subfamilies
    strictly below target."""
    below = [G for G in handled if G < target]
    chains: list[list[frozenset[int]]] = []

    def extend(chain):
        chains.append(chain)
        for G in below:
            if chain[-1] < G:
                extend(chain + [G])

    for G in below:
        extend([G])
    return chains


def cset_recursion(A, families, carrier, bounds: JSearchBounds,
                   size_cap: int | None = None) -> CsetOutcome:
    """Assemble nested (m, a, t) witnesses over a family of sequence
    sets, smallest sets first.

    For each subfamily F the minimum position is pushed above every
    position already used below F, the pool of chain products through
    proper subfamilies is collected, the membership set is restricted
    to the elements whose products with that pool stay inside, and a
    fresh pattern witness is searched there.  A bounded-search miss is
    reported as the failure point; it refutes nothing.
    """
    ctx = as_context(carrier)
    members = frozenset(A.members if hasattr(A, "members") else A)
    tables, fams = _normalize_families(families)
    if size_cap is not None:
        fams = [F for F in fams if len(F) <= size_cap]
    m_map: dict[frozenset[int], int] = {}
    a_map: dict[frozenset[int], tuple[int, ...]] = {}
    t_map: dict[frozenset[int], tuple[int, ...]] = {}
    records: dict[frozenset[int], dict] = {}
    handled: list[frozenset[int]] = []
    for F in fams:
        floor = max((t_map[G][-1] for G in handled if G < F), default=0)
        pool = set()
        for chain in _chains_below(F, handled):
            for picks in product(*(sorted(G) for G in chain)):
                pool.add(ctx.product(
                    chi_value(m_map[G], a_map[G], t_map[G], tables[g], ctx)
                    for G, g in zip(chain, picks)))
        restricted = frozenset(x for x in members
                               if all(ctx.mul(q, x) in members for q in pool))
        witness = find_j_witness(restricted, [tables[i] for i in sorted(F)],
                                 bounds, ctx, min_t=floor)
        if witness is None:
            return CsetOutcome(None, F, {
                "min_t": floor,
                "chain_product_pool": len(pool),
                "restricted_size": len(restricted),
                "bounds": (bounds.m_max, bounds.t_max, len(bounds.a_candidates)),
            })
        m_map[F], a_map[F], t_map[F] = witness.m, witness.a, witness.t
        records[F] = {"min_t": floor, "chain_product_pool": len(pool),
                      "restricted_size": len(restricted)}
        handled.append(F)
    return CsetOutcome(
        CsetWitness(tables, tuple(handled), m_map, a_map, t_map, records), None, None)


def verify_c_witness(A, witness: CsetWitness, carrier) -> tuple[bool, dict | None]:
    """Exhaustively check the nesting condition (positions of a smaller
    subfamily end before a larger one starts) and the chain-product
    condition (every chain with every selection lands in A)."""
    ctx = as_context(carrier)
    members = frozenset(A.members if hasattr(A, "members") else A)
    fams = list(witness.subfamilies)
    for F in fams:
        for G in fams:
            if F < G and witness.t[F][-1] >= witness.t[G][0]:
                return False, {"kind": "ordering", "small": sorted(F), "large": sorted(G),
                               "t_small_end": witness.t[F][-1], "t_large_start": witness.t[G][0]}
    chains: list[list[frozenset[int]]] = []

    def extend(chain):
        chains.append(chain)
        for G in fams:
            if chain[-1] < G:
                extend(chain + [G])

    for F in fams:
        extend([F])
    for chain in chains:
        for picks in product(*(sorted(G) for G in chain)):
            value = ctx.product(
                chi_value(witness.m[G], witness.a[G], witness.t[G], witness.tables[g], ctx)
                for G, g in zip(chain, picks))
            if value not in members:
                return False, {"kind": "membership", "chain": [sorted(G) for G in chain],
                               "selection": list(picks), "value": value}
    return True, None
