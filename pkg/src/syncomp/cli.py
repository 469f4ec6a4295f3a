"""Command-line driver.

Exit codes: 0 success, 1 verification mismatch (tables, reverse --family
against its closed form, oracle disagreement), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automata import (emit_dfa_json, minimize, determinize,
                       parse_dfa_json, reverse, to_dot)
from .classify import classify, ruled_out_count_brute, ruled_out_count_formula
from .errors import FormatError
from .oracles import word_bfs_sigma
from .search import PruneFlags, SearchTask, search_max_sigma
from .semigroup import (sigma_of_language, transition_semigroup,
                        word_length_histogram)
from .tables import TABLE_IDS, RuledOutRow, run_table
from .witnesses import (left_ideal_witness, right_ideal_witness,
                        small_witness, two_sided_witness)

__all__ = ["main"]


def _family(name: str) -> str:
    return name.replace("-", "_")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="syncomp",
        description="Syntactic complexity of ideal and closed regular languages")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a DFA and report sigma/mu/bound")
    a.add_argument("input", help="DFA JSON file")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--histogram", action="store_true",
                   help="element count per shortest-witness length")
    a.add_argument("--samples", type=int, default=0, metavar="K",
                   help="print K sample word/transformation pairs")
    a.add_argument("--cap", type=int, default=None,
                   help="abort if the semigroup exceeds this size")

    w = sub.add_parser("witness", help="emit a witness automaton")
    w.add_argument("--family", required=True,
                   choices=("right", "left", "two-sided", "two_sided"))
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--letters", default=None, metavar="adef",
                   help="restriction, e.g. 'ad' (family witnesses only)")
    w.add_argument("--finals", default=None, metavar="1,3",
                   help="finals override (left family only)")
    w.add_argument("--small", type=int, default=None, metavar="K",
                   help="use the named small witness with K letters instead")
    w.add_argument("--variant", type=int, default=0)
    w.add_argument("--format", choices=("json", "dot", "text"), default="json")

    s = sub.add_parser("search", help="maximal sigma over a family cell")
    s.add_argument("--family", required=True,
                   choices=("right", "left", "two-sided", "two_sided", "all"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--no-prune-lemma8", action="store_true")
    s.add_argument("--no-prune-canonical", action="store_true")
    s.add_argument("--no-prune-multisets", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int, default=10 ** 9)
    s.add_argument("--format", choices=("text", "json"), default="text")

    r = sub.add_parser("reverse", help="kappa of the reversed language")
    r.add_argument("--family",
                   choices=("right", "left", "two-sided", "two_sided"))
    r.add_argument("--n", type=int)
    r.add_argument("--letters", default=None)
    r.add_argument("--input", default=None, help="DFA JSON file")

    t = sub.add_parser("tables", help="recompute a reference table")
    t.add_argument("--id", type=int, required=True, choices=TABLE_IDS)
    t.add_argument("--long", action="store_true",
                   help="include the longer-running exhaustive cells")
    t.add_argument("--jobs", type=int, default=1)

    o = sub.add_parser("oracle", help="independent brute-force cross-checks")
    o.add_argument("--dfa", default=None, metavar="FILE",
                   help="compare word-BFS sigma against the engine")
    o.add_argument("--max-words", type=int, default=1_000_000)
    o.add_argument("--ruled-out", type=int, default=None, metavar="N",
                   help="compare the ruled-out formula against enumeration")
    return p


def _load_dfa(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_dfa_json(text)


def _cmd_analyze(args) -> int:
    d = _load_dfa(args.input)
    report = classify(d, cap=args.cap)
    md = minimize(d)
    sg = transition_semigroup(md, cap=args.cap)
    payload = report.as_dict()
    payload["mu"] = sg.mu
    if args.format == "json":
        if args.histogram:
            payload["histogram"] = word_length_histogram(sg)
        print(json.dumps(payload, indent=2))
    else:
        width = max(map(len, payload))
        for key, value in payload.items():
            print(f"{key:<{width}}  {value}")
        if args.histogram:
            print("elements by shortest-witness length:")
            for length, count in word_length_histogram(sg).items():
                print(f"  {length:>3}  {count}")
    if args.samples > 0:
        pairs = sorted(sg.words.items(), key=lambda kv: (len(kv[1]), kv[1]))
        for t, word in pairs[:args.samples]:
            print(f"  {''.join(word) or 'ε'} -> {t}")
    return 0


def _cmd_witness(args) -> int:
    fam = _family(args.family)
    if args.small is not None:
        d = small_witness(fam, args.n, args.small, args.variant)
    elif fam == "right":
        d = right_ideal_witness(args.n, args.letters)
    elif fam == "left":
        finals = (frozenset(int(x) for x in args.finals.split(","))
                  if args.finals else None)
        d = left_ideal_witness(args.n, args.letters, finals)
    else:
        d = two_sided_witness(args.n, args.letters)
    if args.format == "json":
        sys.stdout.write(emit_dfa_json(d))
    elif args.format == "dot":
        sys.stdout.write(to_dot(d))
    else:
        print(f"states {d.n}  initial {d.initial}  finals {sorted(d.finals)}")
        for a in d.alphabet:
            print(f"  {a}: {d.delta[a]}")
    return 0


def _cmd_search(args) -> int:
    task = SearchTask(
        _family(args.family), args.n, args.k,
        prune=PruneFlags(
            lemma8_filter=not args.no_prune_lemma8,
            canonical_first_letter=not args.no_prune_canonical,
            dedupe_letter_multisets=not args.no_prune_multisets,
        ),
        budget=args.budget, jobs=args.jobs)
    result = search_max_sigma(task)
    if args.format == "json":
        print(json.dumps({
            "family": task.family, "n": task.n, "k": task.k,
            "max_sigma": result.max_sigma,
            "witnesses": [
                {"letters": [list(t.images) for t in w.letters],
                 "finals": sorted(w.finals)}
                for w in result.witnesses],
            "candidates_examined": result.candidates_examined,
            "candidates_pruned": result.candidates_pruned,
            "exhaustive": result.exhaustive,
        }, indent=2))
    else:
        tag = "exhaustive" if result.exhaustive else "budget-exhausted"
        print(f"{task.family} n={task.n} k={task.k}  max_sigma="
              f"{result.max_sigma}  ({tag}; examined "
              f"{result.candidates_examined}, pruned {result.candidates_pruned})")
        for w in result.witnesses[:5]:
            letters = " ".join(str(t) for t in w.letters)
            print(f"  witness: {letters}  finals={sorted(w.finals)}")
        if len(result.witnesses) > 5:
            print(f"  ... {len(result.witnesses) - 5} more")
    return 0


def _cmd_reverse(args) -> int:
    if args.input is not None:
        d = _load_dfa(args.input)
        expected = None
    else:
        if args.family is None or args.n is None:
            raise FormatError("reverse needs --input or --family with --n")
        fam = _family(args.family)
        build = {"right": right_ideal_witness, "left": left_ideal_witness,
                 "two_sided": two_sided_witness}[fam]
        d = build(args.n) if args.letters is None else build(args.n, args.letters)
        designated = {"right": "ad", "left": "acde", "two_sided": "adef"}[fam]
        expected = None
        if args.letters is not None and set(args.letters) == set(designated):
            expected = {"right": 2 ** (args.n - 1),
                        "left": 2 ** (args.n - 1) + 1,
                        "two_sided": 2 ** (args.n - 2) + 1}[fam]
    nfa = reverse(d)
    subset = determinize(nfa)
    md = minimize(subset)
    print(f"nfa states {nfa.n}  subset dfa {subset.n}  kappa {md.n}"
          + (f"  expected {expected}" if expected is not None else ""))
    return 0 if expected is None or md.n == expected else 1


def _cmd_tables(args) -> int:
    report = run_table(args.id, include_long=args.long, jobs=args.jobs)
    for row in report.rows:
        if isinstance(row, RuledOutRow):
            print(f"n={row.n}  reference={row.reference}  "
                  f"formula={row.formula}  brute={row.brute}  "
                  f"{'ok' if row.ok else 'MISMATCH'}")
        else:
            search = ("-" if row.search_max is None else str(row.search_max))
            print(f"n={row.n} k={row.k}  reference={row.reference}  "
                  f"measured={row.measured}  search_max={search}  "
                  f"[{row.status}{', tight' if row.tight else ''}]  "
                  f"{'ok' if row.ok else 'MISMATCH'}")
    print(f"table {report.table_id}: {'ok' if report.ok else 'MISMATCH'}")
    return 0 if report.ok else 1


def _cmd_oracle(args) -> int:
    status = 0
    ran = False
    if args.dfa is not None:
        ran = True
        d = _load_dfa(args.dfa)
        engine = sigma_of_language(d)
        oracle = word_bfs_sigma(minimize(d), max_words=args.max_words)
        agree = engine == oracle
        print(f"sigma engine={engine}  word-bfs={oracle}  "
              f"{'ok' if agree else 'MISMATCH'}")
        status |= 0 if agree else 1
    if args.ruled_out is not None:
        ran = True
        formula = ruled_out_count_formula(args.ruled_out)
        brute = ruled_out_count_brute(args.ruled_out)
        agree = formula == brute
        print(f"ruled-out n={args.ruled_out}  formula={formula}  "
              f"brute={brute}  {'ok' if agree else 'MISMATCH'}")
        status |= 0 if agree else 1
    if not ran:
        raise FormatError("oracle needs --dfa and/or --ruled-out")
    return status


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "analyze": _cmd_analyze,
        "witness": _cmd_witness,
        "search": _cmd_search,
        "reverse": _cmd_reverse,
        "tables": _cmd_tables,
        "oracle": _cmd_oracle,
    }[args.command]
    try:
        return handler(args)
    except (ValueError, RuntimeError) as exc:
        # FormatError/CapExceededError included; caps and budgets are
        # user-chosen limits, so overruns count as usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
