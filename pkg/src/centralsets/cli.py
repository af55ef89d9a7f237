"""Batch command-line surface.

One binary, subcommand style.  Every command echoes its configuration
(seed and budget included), re-verifies any witness it is about to
print, and emits either a human-readable text report or a structured
JSON document (byte-stable for fixed inputs, seed, and version).
Timing is printed to stderr in text mode only, so structured output
stays deterministic.

Exit codes: 0 on success, 1 when the command's main verdict is a
refutation / a miss / false, 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time

from . import __version__, acceptance
from .contexts import NAT_ADD, NAT_MUL, semigroup_context
from .dynamics import build_shift_system, dynamically_central, window_dynamics
from .errors import CentralSetsError
from .formats import (
    dump_shift_action,
    jsonable,
    load_cayley,
    load_coloring,
    load_sequence_table,
    load_tree,
    load_window_set,
    load_word_coloring,
)
from .halesjewett import (
    JSearchBounds,
    cset_recursion,
    find_j_witness,
    find_mono_line,
    hj_number_search,
    line,
    subsets_of_tables,
    verify_c_witness,
    verify_j_witness,
    verify_mono_line,
)
from .semigroup import (
    ElementSet,
    central_shift_spectrum,
    ideal_structure,
    largeness_profile,
    subsets_in_order,
)
from .trees import SetFamily, classify_tree, cwpws_check, verify_cwpws_witness
from .windows import (
    WITNESSED,
    bergelson_search,
    find_fs_basis,
    verify_bergelson,
    verify_fs_basis,
    verify_largeness_witness,
    window_largeness,
)

DEFAULT_BUDGET = 200_000
BUDGET_ENV = "CENTRALSETS_BUDGET"


def _parse_set_spec(text: str) -> list[int]:
    if not text.strip():
        return []
    return [int(tok) for tok in text.replace(",", " ").split()]


def _element_set(S, spec: str) -> ElementSet:
    return ElementSet.of(S.order, _parse_set_spec(spec))


def _window_context(mode: str):
    return NAT_ADD if mode == "additive" else NAT_MUL


# ---------------------------------------------------------------- handlers

def _cmd_semigroup_analyze(args):
    def one(path):
        S = load_cayley(path)
        return {"input": str(path), "order": S.order, "structure": ideal_structure(S)}

    paths = sorted(args.inputs)
    if args.jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(one, paths))
    else:
        results = [one(p) for p in paths]
    return {"results": results}, 0


def _cmd_semigroup_central(args):
    S = load_cayley(args.input)
    A = _element_set(S, args.set)
    profile = largeness_profile(S, A)
    return ({"input": str(args.input), "set": A.as_tuple(), "profile": profile},
            0 if profile.central else 1)


def _cmd_semigroup_equivalences(args):
    S = load_cayley(args.input)
    if args.set is not None:
        sets = [_element_set(S, args.set)]
    else:
        sets = [ElementSet.of(S.order, sub)
                for sub in subsets_in_order(range(S.order), include_empty=True)]
    kernel = ideal_structure(S).kernel.members
    rows = []
    all_agree = True
    for A in sets:
        profile = largeness_profile(S, A)
        spectrum, report = central_shift_spectrum(S, A)
        kernel_match = profile.piecewise_syndetic == bool(kernel & A.members)
        chain = ((not profile.thick or profile.central)
                 and (not profile.central or profile.piecewise_syndetic))
        agree = report.agree and kernel_match and chain
        all_agree &= agree
        rows.append({"set": A.as_tuple(), "profile": profile,
                     "spectrum": spectrum.as_tuple(), "three_way": report,
                     "pws_matches_kernel": kernel_match, "chain_holds": chain,
                     "agree": agree})
    return ({"input": str(args.input), "checked_sets": len(rows), "rows": rows,
             "all_agree": all_agree}, 0 if all_agree else 1)


def _cmd_window_largeness(args):
    A = load_window_set(args.input)
    verdicts = window_largeness(A, args.gap, args.interval, args.shift)
    for kind, verdict in (("thick", verdicts.thick), ("syndetic", verdicts.syndetic),
                          ("piecewise_syndetic", verdicts.piecewise_syndetic)):
        if not verify_largeness_witness(A, kind, verdict):
            raise CentralSetsError(f"emitted {kind} witness failed re-verification")
    witnessed_any = any(v.status == WITNESSED for v in
                        (verdicts.thick, verdicts.syndetic, verdicts.piecewise_syndetic))
    return ({"input": str(args.input), "horizon": A.horizon,
             "gap": args.gap, "interval": args.interval, "shift": args.shift,
             "verdicts": verdicts}, 0 if witnessed_any else 1)


def _cmd_window_fs(args):
    A = load_window_set(args.input)
    verdict = find_fs_basis(A, args.k, args.mode)
    if verdict.status == WITNESSED and not verify_fs_basis(A, verdict.witness["basis"], args.mode):
        raise CentralSetsError("emitted basis failed re-verification")
    return ({"input": str(args.input), "k": args.k, "mode": args.mode,
             "verdict": verdict}, 0 if verdict.status == WITNESSED else 1)


def _cmd_window_bergelson(args):
    col = load_coloring(args.input)
    verdict = bergelson_search(col)
    if verdict.status == WITNESSED and not verify_bergelson(col, verdict.witness):
        raise CentralSetsError("emitted witness failed re-verification")
    return ({"input": str(args.input), "horizon": col.horizon, "colors": col.colors,
             "verdict": verdict}, 0 if verdict.status == WITNESSED else 1)


def _cmd_trees_classify(args):
    T = load_tree(args.input)
    cls = classify_tree(T)
    return ({"input": str(args.input), "nodes": len(T.nodes), "depth": T.depth,
             "classification": cls}, 0 if cls.is_star_tree and cls.is_fp_tree else 1)


def _cmd_families_cwpws(args):
    S = load_cayley(args.input)
    sets = [_parse_set_spec(part) for part in args.sets.split(";")]
    fam = SetFamily.of(S, [ElementSet.of(S.order, s) for s in sets])
    report = cwpws_check(fam)
    if report.witness is not None and not verify_cwpws_witness(fam, report.witness):
        raise CentralSetsError("emitted cwpws witness failed re-verification")
    return ({"input": str(args.input), "family": [sorted(s) for s in sets],
             "report": report}, 0 if report.cwpws else 1)


def _cmd_hj_line(args):
    col = load_word_coloring(args.input)
    w = find_mono_line(col)
    if w is not None and not verify_mono_line(col, w):
        raise CentralSetsError("emitted line failed re-verification")
    payload = {"input": str(args.input), "alphabet": col.alphabet, "length": col.length,
               "variable_word": None if w is None else list(w.entries),
               "star_as": 0,
               "lines": None if w is None else [list(word) for word in line(w)]}
    return payload, 0 if w is not None else 1


def _cmd_hj_number(args):
    result = hj_number_search(args.k, args.c, args.nmax, budget=args.budget)
    return ({"k": args.k, "c": args.c, "nmax": args.nmax, "result": result},
            0 if result.found is not None else 1)


def _load_jset_inputs(args):
    if args.window:
        A = load_window_set(args.window).as_set()
        ctx = _window_context(args.mode)
        candidates = tuple(range(1, args.a_max + 1))
    else:
        S = load_cayley(args.cayley)
        A = _element_set(S, args.set).members
        ctx = semigroup_context(S)
        candidates = tuple(range(S.order))
    tables = [load_sequence_table(p) for p in args.seq]
    return A, ctx, candidates, tables


def _cmd_jset_witness(args):
    A, ctx, candidates, tables = _load_jset_inputs(args)
    bounds = JSearchBounds.of(args.m_max, args.t_max, candidates)
    witness = find_j_witness(A, tables, bounds, ctx, min_t=args.min_t)
    if witness is not None and not verify_j_witness(A, tables, witness, ctx, min_t=args.min_t):
        raise CentralSetsError("emitted witness failed re-verification")
    return ({"carrier": ctx.name, "sequences": len(tables), "min_t": args.min_t,
             "bounds": bounds, "witness": witness}, 0 if witness is not None else 1)


def _cmd_cset_build(args):
    A, ctx, candidates, tables = _load_jset_inputs(args)
    bounds = JSearchBounds.of(args.m_max, args.t_max, candidates)
    if args.chain:
        families = [tables[:i + 1] for i in range(len(tables))]
    else:
        families = subsets_of_tables(tables)
    outcome = cset_recursion(A, families, ctx, bounds, size_cap=args.size_cap)
    verified = None
    if outcome.ok:
        verified, violation = verify_c_witness(A, outcome.witness, ctx)
        if not verified:
            raise CentralSetsError(f"emitted witness failed re-verification: {violation}")
    return ({"carrier": ctx.name, "sequences": len(tables), "bounds": bounds,
             "outcome": outcome, "verified": verified}, 0 if outcome.ok else 1)


def _cmd_dyn_central(args):
    S = load_cayley(args.input)
    A = _element_set(S, args.set)
    flag, transcript = dynamically_central(S, A, max_order=args.max_order)
    payload = {"input": str(args.input), "set": A.as_tuple(), "dynamically_central": flag,
               "transcript": transcript}
    if args.dump_action:
        payload["action"] = dump_shift_action(build_shift_system(S, max_order=args.max_order))
    return payload, 0 if flag else 1


def _cmd_dyn_window(args):
    A = load_window_set(args.input_a)
    B = load_window_set(args.input_b)
    report = window_dynamics(A, B, args.block, args.interval,
                             gap_bound=args.gap, literal=args.literal)
    return ({"input_a": str(args.input_a), "input_b": str(args.input_b),
             "block": args.block, "interval": args.interval, "report": report},
            0 if report.dyn_central.status == WITNESSED else 1)


def _cmd_suite(args):
    results, report = acceptance.run_all(args.seed)
    payload = {"seed": args.seed, "criteria": results,
               "matrix": acceptance.format_matrix(results)}
    return payload, 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------- wiring

def _add_common(parser):
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int,
                        default=int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET)))
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="centralsets",
                                  description="exact largeness, tree, line, and shift checkers")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="group", required=True)

    sg = sub.add_parser("semigroup").add_subparsers(dest="command", required=True)
    p = sg.add_parser("analyze", help="ideal structure of Cayley-table files")
    p.add_argument("inputs", nargs="+")
    _add_common(p)
    p.set_defaults(handler=_cmd_semigroup_analyze)
    p = sg.add_parser("central", help="largeness profile of a subset")
    p.add_argument("input")
    p.add_argument("--set", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_semigroup_central)
    p = sg.add_parser("equivalences", help="cross-check the largeness equivalences")
    p.add_argument("input")
    p.add_argument("--set", default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_semigroup_equivalences)

    wd = sub.add_parser("window").add_subparsers(dest="command", required=True)
    p = wd.add_parser("largeness", help="bounded-window largeness verdicts")
    p.add_argument("input")
    p.add_argument("--gap", type=int, required=True)
    p.add_argument("--interval", type=int, required=True)
    p.add_argument("--shift", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_window_largeness)
    p = wd.add_parser("fs", help="combination-basis search")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("additive", "multiplicative"), default="additive")
    _add_common(p)
    p.set_defaults(handler=_cmd_window_fs)
    p = wd.add_parser("bergelson", help="monochromatic a+b = c*d search")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(handler=_cmd_window_bergelson)

    tr = sub.add_parser("trees").add_subparsers(dest="command", required=True)
    p = tr.add_parser("classify", help="star/product tree classification")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(handler=_cmd_trees_classify)

    fa = sub.add_parser("families").add_subparsers(dest="command", required=True)
    p = fa.add_parser("cwpws", help="collectionwise piecewise syndeticity check")
    p.add_argument("input")
    p.add_argument("--sets", required=True,
                   help="family as ';'-separated member lists, e.g. '0,1;0'")
    _add_common(p)
    p.set_defaults(handler=_cmd_families_cwpws)

    hj = sub.add_parser("hj").add_subparsers(dest="command", required=True)
    p = hj.add_parser("line", help="monochromatic combinatorial line search")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(handler=_cmd_hj_line)
    p = hj.add_parser("number", help="empirical Hales-Jewett number search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_hj_number)

    js = sub.add_parser("jset").add_subparsers(dest="command", required=True)
    p = js.add_parser("witness", help="one-pattern witness across a sequence family")
    _jset_args(p)
    p.set_defaults(handler=_cmd_jset_witness)

    cs = sub.add_parser("cset").add_subparsers(dest="command", required=True)
    p = cs.add_parser("build", help="nested witness recursion over sequence subfamilies")
    _jset_args(p)
    p.add_argument("--size-cap", type=int, default=None)
    p.add_argument("--chain", action="store_true",
                   help="treat the sequences as an increasing chain of families")
    p.set_defaults(handler=_cmd_cset_build)

    dy = sub.add_parser("dyn").add_subparsers(dest="command", required=True)
    p = dy.add_parser("central", help="dynamical centrality via the canonical shift system")
    p.add_argument("input")
    p.add_argument("--set", required=True)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--dump-action", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_dyn_central)
    p = dy.add_parser("window", help="window recurrence / proximality / centrality")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.add_argument("--block", type=int, required=True)
    p.add_argument("--interval", type=int, required=True)
    p.add_argument("--gap", type=int, default=None)
    p.add_argument("--literal", action="store_true",
                   help="use the literal sumset reading of the block match")
    _add_common(p)
    p.set_defaults(handler=_cmd_dyn_window)

    p = sub.add_parser("suite", help="run the whole acceptance battery")
    _add_common(p)
    p.set_defaults(handler=_cmd_suite, command="suite")
    return top


def _jset_args(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--window", default=None, help="window-set file (naturals carrier)")
    group.add_argument("--cayley", default=None, help="Cayley-table file (finite carrier)")
    p.add_argument("--set", default="", help="members when using --cayley")
    p.add_argument("--seq", action="append", required=True, help="sequence-table file")
    p.add_argument("--mode", choices=("additive", "multiplicative"), default="additive")
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--t-max", type=int, default=8)
    p.add_argument("--a-max", type=int, default=8)
    p.add_argument("--min-t", type=int, default=0)
    _add_common(p)


def _render_text(doc) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2)


def _emit(args, report: dict, started: float) -> None:
    doc = {
        "command": f"{args.group} {getattr(args, 'command', '')}".strip(),
        "config": {"seed": args.seed, "budget": args.budget, "jobs": args.jobs},
        "version": __version__,
    }
    doc.update(report)
    if args.format == "structured":
        text = json.dumps(jsonable(doc), sort_keys=True, indent=2) + "\n"
    else:
        if "matrix" in report:
            text = report["matrix"] + "\n"
        else:
            text = _render_text(doc) + "\n"
        print(f"elapsed: {time.time() - started:.3f}s", file=sys.stderr)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    started = time.time()
    try:
        report, code = args.handler(args)
    except CentralSetsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, report, started)
    return code


if __name__ == "__main__":
    sys.exit(main())
