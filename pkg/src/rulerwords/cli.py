"""Command-line interface.

Exit codes: 0 on success, 1 when a verification fails (incomplete
ruler, bordered word, table mismatch), 2 on usage errors. Machine
output goes behind --json; everything is deterministic, so there is no
seed anywhere (--seed-less is accepted as a no-op for interface
stability).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, bounds
from .cache import ResultCache
from .constructions import (
    counterexample_words,
    hb4_witness,
    sqrt_word,
    wichmann_word,
    wichmann_word_ext,
)
from .crossbifix import code_from_word
from .oeis import compare_table, ingest_bfile
from .rulers import (
    DifferenceRepresentation,
    Ruler,
    extended_wichmann,
    is_complete,
    missing_distances,
    ruler_from_differences,
)
from .search import (
    Budget,
    SearchRecord,
    max_holes,
    max_holes_inf,
    min_marks,
    min_marks_2d,
)
from .twod import binary_word_2d, construct_2d
from .words import Alphabet, PartialWord, borders

DEFAULT_BFILE = Path(__file__).parent / "data" / "min_marks.bfile"


def _emit(args, payload: dict, human_lines: list) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _budget(args) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_secs)


def _witness_payload(word) -> dict:
    return {
        "length": len(word.word),
        "holes": word.word.hole_count,
        "alphabet_size": word.word.alphabet.size,
        "unbordered": True,
        "source": word.source,
        "word": word.word.text(),
    }


def _run_search(args, problem: str, params: tuple, compute) -> SearchRecord:
    cache = ResultCache(args.cache) if args.cache else None
    if cache is not None:
        hit = cache.lookup(problem, params)
        if hit is not None:
            return hit
    record = compute()
    if cache is not None and record.optimal:
        cache.store(record)
    return record


def _print_search(args, record: SearchRecord) -> None:
    payload = record.to_json_dict()
    lines = [
        f"problem   {record.problem}{record.params}",
        f"value     {record.value}" + ("" if record.optimal else "  (budget exceeded: bound only)"),
        f"witness   {record.witness_text()}",
    ]
    _emit(args, payload, lines)


def cmd_verify_ruler(args) -> int:
    if args.ruler.startswith("d:"):
        ruler = ruler_from_differences(DifferenceRepresentation.parse(args.ruler))
    else:
        ruler = Ruler.parse(args.ruler)
    complete = is_complete(ruler)
    missing = sorted(missing_distances(ruler))
    payload = {"marks": list(ruler.marks), "length": ruler.length,
               "mark_count": len(ruler), "complete": complete,
               "missing": missing}
    _emit(args, payload, [
        f"marks     {ruler.text()}",
        f"length    {ruler.length}",
        f"complete  {str(complete).lower()}"
        + (f"  (missing: {','.join(map(str, missing[:12]))})" if missing else ""),
    ])
    return 0 if complete else 1


def cmd_verify_word(args) -> int:
    word = PartialWord.parse(args.word)
    report = borders(word)
    payload = {"word": word.text(), "length": len(word),
               "holes": word.hole_count,
               "domain": sorted(word.domain()),
               "unbordered": report.is_unbordered,
               "border_lengths": sorted(report.border_lengths)}
    _emit(args, payload, [
        f"word        {word.text()}",
        f"length      {len(word)}  holes {word.hole_count}",
        f"domain      {','.join(map(str, sorted(word.domain())))}",
        f"unbordered  {str(report.is_unbordered).lower()}"
        + ("" if report.is_unbordered
           else f"  (borders at {','.join(map(str, sorted(report.border_lengths)))})"),
    ])
    return 0 if report.is_unbordered else 1


def cmd_construct_wichmann(args) -> int:
    ruler = extended_wichmann(args.r, args.s, args.i, args.j)
    payload = {"marks": list(ruler.marks), "length": ruler.length,
               "mark_count": len(ruler), "complete": True}
    _emit(args, payload, [f"marks  {ruler.text()}",
                          f"length {ruler.length}  marks {len(ruler)}"])
    return 0


def cmd_construct_wichmann_word(args) -> int:
    if (args.i, args.j) == (0, 0):
        witness = wichmann_word(args.r, args.s)
    else:
        witness = wichmann_word_ext(args.r, args.s, args.i, args.j)
    _emit(args, _witness_payload(witness),
          [witness.word.text(), f"length {len(witness.word)}  holes {witness.claimed_holes}"])
    return 0


def cmd_construct_sqrt_word(args) -> int:
    witness = sqrt_word(args.n)
    _emit(args, _witness_payload(witness),
          [witness.word.text(), f"length {len(witness.word)}  holes {witness.claimed_holes}"])
    return 0


def cmd_construct_hb4_word(args) -> int:
    witness = hb4_witness(args.n)
    _emit(args, _witness_payload(witness),
          [witness.word.text(), f"length {len(witness.word)}  holes {witness.claimed_holes}"])
    return 0


def cmd_construct_counterexamples(args) -> int:
    first, second = counterexample_words()
    if args.json:
        print(json.dumps([_witness_payload(first), _witness_payload(second)],
                         sort_keys=True))
    else:
        for witness in (first, second):
            print(witness.word.text())
            print(f"length {len(witness.word)}  holes {witness.claimed_holes}")
    return 0


def cmd_construct_2d(args) -> int:
    if args.word:
        built = binary_word_2d(args.w, args.h, args.l, args.k)
        payload = {"w": args.w, "h": args.h, "letters": built.letters,
                   "repairs": built.repair_marks, "holes": built.holes,
                   "unbordered": True, "grid": built.word.text().split("\n")}
        _emit(args, payload, [built.word.text(),
                              f"letters {built.letters}  holes {built.holes}"])
    else:
        ruler = construct_2d(args.w, args.h, args.l, args.k)
        payload = {"w": args.w, "h": args.h, "mark_count": len(ruler),
                   "complete": True, "grid": ruler.text().split("\n")}
        _emit(args, payload, [ruler.text(), f"marks {len(ruler)}"])
    return 0


def cmd_search_m1(args) -> int:
    record = _run_search(args, "m1", (args.n,),
                         lambda: min_marks(args.n, _budget(args), workers=args.workers))
    _print_search(args, record)
    return 0


def cmd_search_hb(args) -> int:
    if args.k is None:
        record = _run_search(args, "hbinf", (args.n,),
                             lambda: max_holes_inf(args.n, _budget(args), workers=args.workers))
    else:
        record = _run_search(args, "hbk", (args.n, args.k),
                             lambda: max_holes(args.n, args.k, _budget(args)))
    _print_search(args, record)
    return 0


def cmd_search_m2(args) -> int:
    record = _run_search(args, "m2", (args.w, args.h),
                         lambda: min_marks_2d(args.w, args.h, _budget(args)))
    _print_search(args, record)
    return 0


def cmd_bounds(args) -> int:
    reports = []
    if args.m is not None:
        reports.append(bounds.m2_bounds(args.n, args.m))
    elif args.k is not None:
        reports.append(bounds.max_holes_bounds(args.n, args.k))
    else:
        reports.append(bounds.min_marks_bounds(args.n))
    payload = [r.as_dict() for r in reports]
    lines = []
    for r in reports:
        label = f"n={r.n}" + (f" m={r.m}" if r.m else "") + (f" k={r.k}" if r.k else "")
        lines.append(f"{label:<16} lower {r.lower:.4f} (>= {r.lower_int})   "
                     f"upper {r.upper:.4f} (<= {r.upper_int})")
    _emit(args, payload if len(payload) > 1 else payload[0], lines)
    return 0


def cmd_compare_oeis(args) -> int:
    table = ingest_bfile(args.bfile, args.offset)
    report = compare_table(table, args.max_n, args.budget_nodes)
    payload = [{"n": r.n, "expected": r.expected, "computed": r.computed,
                "verdict": r.verdict} for r in report.rows]
    lines = [f"{r.n:>5}  expected {r.expected:>3}  "
             + (f"computed {r.computed:>3}" if r.computed is not None else "computed   -")
             + f"  {r.verdict}" for r in report.rows]
    lines.append("OK" if report.ok else f"{len(report.mismatches)} MISMATCH(ES)")
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def cmd_crossbifix(args) -> int:
    from .crossbifix import DEFAULT_MATERIALIZE_CAP, TooLarge, code_from_word_2d
    from .twod import PartialWord2D

    if args.seed_2d:
        word2d = PartialWord2D.parse(Path(args.seed_2d).read_text())
        alphabet = Alphabet.from_text(args.alphabet)
        grids = code_from_word_2d(word2d, alphabet)
        payload = {"seed": word2d.text().split("\n"), "alphabet_size": alphabet.size,
                   "holes": word2d.hole_count(), "size": len(grids)}
        lines = [f"2D seed with {word2d.hole_count()} holes",
                 f"code size {len(grids)} = {alphabet.size}^{word2d.hole_count()}"]
        if args.emit:
            with open(args.emit, "w") as fh:
                fh.write("\n\n".join(g.text() for g in grids) + "\n")
            lines.append(f"wrote {args.emit}")
            payload["emitted"] = args.emit
        _emit(args, payload, lines)
        return 0
    word = PartialWord.parse(args.seed)
    alphabet = Alphabet.from_text(args.alphabet)
    code = code_from_word(word, alphabet)
    payload = {"seed": word.text(), "alphabet_size": alphabet.size,
               "holes": word.hole_count, "size": code.size}
    lines = [f"seed {word.text()}  holes {word.hole_count}",
             f"code size {code.size} = {alphabet.size}^{word.hole_count}"]
    if args.emit:
        if code.size > DEFAULT_MATERIALIZE_CAP:
            raise TooLarge(f"refusing to emit {code.size} words; "
                           f"cap is {DEFAULT_MATERIALIZE_CAP}")
        with open(args.emit, "w") as fh:
            for filled in code:
                fh.write(filled.text() + "\n")
        lines.append(f"wrote {args.emit}")
        payload["emitted"] = args.emit
    _emit(args, payload, lines)
    return 0


def cmd_experiment_hb3(args) -> int:
    from .search import hb3_monotonicity_experiment

    report = hb3_monotonicity_experiment(args.max_n, args.budget_nodes)
    payload = [{"n": r.n, "value": r.value, "violates": r.violates}
               for r in report.rows]
    lines = [f"{r.n:>4}  {'?' if r.value is None else r.value:>3}"
             + ("  VIOLATES step bound" if r.violates else "")
             for r in report.rows]
    lines.append(f"violations: {len(report.violations)}")
    _emit(args, payload, lines)
    return 0


def cmd_report(args) -> int:
    from . import report as rpt

    if args.kind == "bounds":
        paths = rpt.bounds_report(args.n, args.out)
    elif args.kind == "sweep2d":
        paths = rpt.sweep2d_report(args.lo, args.hi, args.out,
                                   words=args.word, workers=args.workers)
        fit = paths["fit"]
        print(f"fit: c={fit['c']:.3f} c'={fit['c_prime']:.3f}")
    elif args.kind == "ruler":
        record = min_marks(args.n, _budget(args), workers=args.workers)
        paths = rpt.ruler_figure(record.witness, args.out, name=f"ruler_{args.n}")
    elif args.kind == "word2d":
        from .twod import Ruler2D

        built = binary_word_2d(args.w, args.h)
        paths = rpt.grid_figure(Ruler2D(args.w, args.h, built.word.domain()),
                                args.out, name=f"word2d_{args.w}x{args.h}")
    else:  # hb3
        paths = rpt.hb3_report(args.n, args.out, args.budget_nodes)
    for key in ("csv", "png", "txt"):
        if key in paths:
            print(f"wrote {paths[key]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine output only")
    common.add_argument("--cache", metavar="PATH", help="JSONL result cache")
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-secs", type=float, default=None)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed-less", action="store_true",
                        help="no-op: every operation is deterministic")

    parser = argparse.ArgumentParser(
        prog="rulerwords",
        description="Unbordered partial words and complete sparse rulers: "
                    "verify, construct, search, bound, report.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-ruler", parents=[common],
                       help="check completeness of marks '0,1,4,6' or diffs 'd:1,2,3'")
    p.add_argument("ruler")
    p.set_defaults(func=cmd_verify_ruler)

    p = sub.add_parser("verify-word", parents=[common],
                       help="check a word 'ab..c' for borders")
    p.add_argument("word")
    p.set_defaults(func=cmd_verify_word)

    construct = sub.add_parser("construct", help="explicit rulers and words")
    csub = construct.add_subparsers(dest="what", required=True)
    p = csub.add_parser("wichmann", parents=[common])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=0)
    p.set_defaults(func=cmd_construct_wichmann)
    p = csub.add_parser("wichmann-word", parents=[common])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=0)
    p.set_defaults(func=cmd_construct_wichmann_word)
    p = csub.add_parser("sqrt-word", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_construct_sqrt_word)
    p = csub.add_parser("hb4-word", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_construct_hb4_word)
    p = csub.add_parser("counterexamples", parents=[common])
    p.set_defaults(func=cmd_construct_counterexamples)
    p = csub.add_parser("2d", parents=[common])
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--word", action="store_true", help="binary word instead of ruler")
    p.set_defaults(func=cmd_construct_2d)

    search = sub.add_parser("search", help="exact optimization searches")
    ssub = search.add_subparsers(dest="what", required=True)
    p = ssub.add_parser("m1", parents=[common], help="minimal marks, 1D")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_search_m1)
    p = ssub.add_parser("hb", parents=[common], help="maximal holes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None,
                   help="alphabet size (omit for unrestricted)")
    p.set_defaults(func=cmd_search_hb)
    p = ssub.add_parser("m2", parents=[common], help="minimal marks, 2D (tiny grids)")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.set_defaults(func=cmd_search_m2)

    p = sub.add_parser("bounds", parents=[common],
                       help="closed-form bounds for an instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="2D: second grid extent")
    p.add_argument("--k", type=int, default=None, help="alphabet size")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare-oeis", parents=[common],
                       help="check the search against a b-file of known values")
    p.add_argument("--bfile", default=str(DEFAULT_BFILE))
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--offset", type=int, default=None)
    p.set_defaults(func=cmd_compare_oeis)

    p = sub.add_parser("crossbifix", parents=[common],
                       help="cross-bifix-free code from an unbordered seed")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--seed", help="1D seed word, e.g. 'ab.c'")
    group.add_argument("--seed-2d", metavar="FILE",
                       help="file holding a 2D seed grid")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--emit", default=None,
                   help="write the code here (newline words; blank-line grids)")
    p.set_defaults(func=cmd_crossbifix)

    experiment = sub.add_parser("experiment", help="conjecture experiment harnesses")
    esub = experiment.add_subparsers(dest="what", required=True)
    p = esub.add_parser("hb3-monotone", parents=[common])
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_experiment_hb3)

    report = sub.add_parser("report", help="CSV tables plus figures")
    rsub = report.add_subparsers(dest="kind", required=True)
    p = rsub.add_parser("bounds", parents=[common])
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    p = rsub.add_parser("sweep2d", parents=[common])
    p.add_argument("--lo", type=int, default=5)
    p.add_argument("--hi", type=int, default=40)
    p.add_argument("--word", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    p = rsub.add_parser("ruler", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    p = rsub.add_parser("word2d", parents=[common])
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    p = rsub.add_parser("hb3", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
