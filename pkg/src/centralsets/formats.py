"""File formats and report serialization.

Cayley table:     line 1 is n; lines 2..n+1 hold n space-separated
                  entries each; an optional trailing line
                  '# labels: a b c' names the elements.  Dump/parse is
                  a bit-exact round trip on canonical text.
Window set:       line 1 is 'N <horizon>' with an optional trailing
                  token 'omega' admitting 0; line 2 is either the
                  space-separated members or
                  'periodic <period> <residues...>'.
Coloring:         line 1 is 'N <horizon> C <colors>'; line 2 holds the
                  horizon many color values.
Word coloring:    line 1 is 'k N c'; the following whitespace-separated
                  values color the whole word cube in lexicographic
                  word order.
Sequence table:   line 1 is the length, then the values.
Tree:             line 1 is 'carrier <cayley-file>' (resolved relative
                  to the tree file); each following line is one node as
                  space-separated element indices, with a lone '-'
                  denoting the root.

Structured reports are JSON with sorted keys and no volatile fields,
so identical inputs yield byte-identical documents.
"""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path

from .errors import IndexOutOfRange, InvariantViolation, NonAssociative, ParseError
from .halesjewett import WordColoring
from .semigroup import FiniteSemigroup, load_semigroup
from .trees import FiniteTree
from .windows import Coloring, WindowSet


def _tokens(line: str) -> list[str]:
    return line.split()


def parse_cayley(text: str) -> FiniteSemigroup:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty Cayley file", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected the order, got {lines[0]!r}", line=1)
    if n < 1:
        raise InvariantViolation("order", f"order must be positive, got {n}")
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", line=len(lines))
    table = []
    for i in range(n):
        toks = _tokens(lines[1 + i])
        row = []
        for j, tok in enumerate(toks):
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"bad table entry {tok!r}", line=2 + i, col=j + 1)
        table.append(row)
    labels = None
    for extra in lines[n + 1:]:
        stripped = extra.strip()
        if not stripped:
            continue
        if stripped.startswith("# labels:"):
            labels = stripped[len("# labels:"):].split()
        else:
            raise ParseError(f"unexpected trailing line {stripped!r}", line=lines.index(extra) + 1)
    try:
        return load_semigroup(n, table, labels)
    except NonAssociative as exc:
        raise InvariantViolation("associativity", str(exc)) from exc
    except (IndexOutOfRange, IndexError, ValueError) as exc:
        raise InvariantViolation("range", str(exc)) from exc


def dump_cayley(S: FiniteSemigroup) -> str:
    lines = [str(S.order)]
    lines += [" ".join(str(v) for v in row) for row in S.table]
    if S.labels:
        lines.append("# labels: " + " ".join(S.labels))
    return "\n".join(lines) + "\n"


def load_cayley(path) -> FiniteSemigroup:
    return parse_cayley(Path(path).read_text())


def parse_window_set(text: str) -> WindowSet:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty window-set file", line=1)
    head = _tokens(lines[0])
    if len(head) < 2 or head[0] != "N":
        raise ParseError(f"expected 'N <horizon>', got {lines[0]!r}", line=1)
    try:
        horizon = int(head[1])
    except ValueError:
        raise ParseError(f"bad horizon {head[1]!r}", line=1, col=2)
    include_zero = len(head) > 2 and head[2] == "omega"
    if len(lines) < 2:
        members: list[int] = []
    else:
        toks = _tokens(lines[1])
        if toks and toks[0] == "periodic":
            try:
                period = int(toks[1])
                residues = {int(t) % period for t in toks[2:]}
            except (IndexError, ValueError):
                raise ParseError("periodic spec needs a period and residues", line=2)
            lo = 0 if include_zero else 1
            members = [x for x in range(lo, horizon + 1) if x % period in residues]
        else:
            try:
                members = [int(t) for t in toks]
            except ValueError:
                raise ParseError("bad member token", line=2)
    try:
        return WindowSet.of(horizon, members, include_zero)
    except Exception as exc:
        raise InvariantViolation("range", str(exc)) from exc


def dump_window_set(A: WindowSet) -> str:
    head = f"N {A.horizon}" + (" omega" if A.include_zero else "")
    return head + "\n" + " ".join(str(m) for m in A.members) + "\n"


def load_window_set(path) -> WindowSet:
    return parse_window_set(Path(path).read_text())


def parse_coloring(text: str) -> Coloring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty coloring file", line=1)
    head = _tokens(lines[0])
    if len(head) != 4 or head[0] != "N" or head[2] != "C":
        raise ParseError(f"expected 'N <horizon> C <colors>', got {lines[0]!r}", line=1)
    try:
        horizon, colors = int(head[1]), int(head[3])
    except ValueError:
        raise ParseError("bad horizon or color count", line=1)
    values = []
    for ln in lines[1:]:
        values.extend(int(t) for t in _tokens(ln))
    try:
        return Coloring.of(horizon, colors, values)
    except Exception as exc:
        raise InvariantViolation("range", str(exc)) from exc


def dump_coloring(col: Coloring) -> str:
    return (f"N {col.horizon} C {col.colors}\n"
            + " ".join(str(v) for v in col.assignment) + "\n")


def load_coloring(path) -> Coloring:
    return parse_coloring(Path(path).read_text())


def parse_word_coloring(text: str) -> WordColoring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty word-coloring file", line=1)
    head = _tokens(lines[0])
    if len(head) != 3:
        raise ParseError(f"expected 'k N c', got {lines[0]!r}", line=1)
    try:
        k, n, c = (int(t) for t in head)
    except ValueError:
        raise ParseError("bad word-coloring header", line=1)
    values = []
    for ln in lines[1:]:
        values.extend(int(t) for t in _tokens(ln))
    try:
        return WordColoring.of(k, n, c, values)
    except Exception as exc:
        raise InvariantViolation("range", str(exc)) from exc


def dump_word_coloring(col: WordColoring) -> str:
    return (f"{col.alphabet} {col.length} {col.colors}\n"
            + " ".join(str(v) for v in col.values) + "\n")


def load_word_coloring(path) -> WordColoring:
    return parse_word_coloring(Path(path).read_text())


def parse_sequence_table(text: str) -> tuple[int, ...]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty sequence-table file", line=1)
    try:
        length = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected the length, got {lines[0]!r}", line=1)
    values = []
    for ln in lines[1:]:
        values.extend(int(t) for t in _tokens(ln))
    if len(values) != length:
        raise ParseError(f"declared {length} values, found {len(values)}", line=len(lines))
    return tuple(values)


def dump_sequence_table(table) -> str:
    table = tuple(table)
    return f"{len(table)}\n" + " ".join(str(v) for v in table) + "\n"


def load_sequence_table(path) -> tuple[int, ...]:
    return parse_sequence_table(Path(path).read_text())


def load_tree(path) -> FiniteTree:
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines or not lines[0].startswith("carrier "):
        raise ParseError("tree file must start with 'carrier <cayley-file>'", line=1)
    carrier_path = lines[0][len("carrier "):].strip()
    S = load_cayley((path.parent / carrier_path))
    nodes = [()]
    for idx, ln in enumerate(lines[1:], start=2):
        stripped = ln.strip()
        if not stripped:
            continue  # an empty line denotes the root, which is always present
        try:
            nodes.append(tuple(int(t) for t in stripped.split()))
        except ValueError:
            raise ParseError(f"bad node line {stripped!r}", line=idx)
    return FiniteTree.of(S, nodes)


def dump_tree_nodes(T: FiniteTree) -> str:
    lines = []
    for node in sorted(T.nodes, key=lambda f: (len(f), f)):
        lines.append("" if not node else " ".join(str(x) for x in node))
    return "\n".join(lines) + "\n"


def dump_shift_action(sys) -> str:
    """Action table as 's point -> point' triples over canonical point
    indices (binary numerals, identity digit first)."""
    lines = []
    for s in range(sys.semigroup.order):
        for point in sys.points:
            lines.append(f"{s} {point} -> {sys.apply(s, point)}")
    return "\n".join(lines) + "\n"


KIND_LOADERS = {
    "cayley": load_cayley,
    "window": load_window_set,
    "coloring": load_coloring,
    "word_coloring": load_word_coloring,
    "tree": load_tree,
    "sequence": load_sequence_table,
}


def parse_inputs(paths, kinds):
    """Load each path as its declared kind; all invariants are enforced
    at parse time (ParseError / InvariantViolation)."""
    paths, kinds = list(paths), list(kinds)
    if len(paths) != len(kinds):
        raise ParseError(f"{len(paths)} paths but {len(kinds)} kinds")
    return [KIND_LOADERS[k](p) for p, k in zip(paths, kinds)]


def jsonable(obj):
    """Recursively convert package values into JSON-serializable data."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: _key(kv[0]))}
    if isinstance(obj, (frozenset, set)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if isinstance(obj, range):
        return list(obj)
    return repr(obj)


def _key(k) -> str:
    if isinstance(k, frozenset):
        return ",".join(str(x) for x in sorted(k))
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def render_structured(doc) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2) + "\n"
