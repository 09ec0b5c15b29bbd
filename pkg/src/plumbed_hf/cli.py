"""Command-line front end.

    plumbed-hf compute --brieskorn 2 --ranks 0 4
    plumbed-hf compute --graph g.json --json out.json --dot root.dot
    plumbed-hf verify --family-max 5

Exit codes: 0 success, 1 failed check, 2 invalid input, 3 resource cap hit.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from .basic import DEFAULT_BOX_BUDGET
from .errors import InvalidInput, PlumbingError, ResourceLimit
from .graph import PlumbingGraph, brieskorn_family_graph
from .lattice import level
from .module import rank_at_degree
from .pipeline import Computation, compute
from .root import GradedRoot

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def frac(q) -> str:
    return str(Fraction(q))


def to_json(comp: Computation) -> dict[str, Any]:
    spinc = []
    for res in comp.spinc:
        root = res.root
        spinc.append({
            "index": res.spinc.index,
            "representative": list(res.spinc.representative),
            "d": frac(res.module.d_invariant),
            "summands": [
                {"length": s.length, "bottom_degree": frac(s.bottom_degree), "multiplicity": s.multiplicity}
                for s in res.module.summands
            ],
            "merge_events": [
                {"level": frac(e.level), "absorbed": list(e.absorbed), "survivor": e.survivor}
                for e in root.merges
            ],
            "branches": [{"vector": list(k), "level": frac(t)} for k, t in root.branches],
            "stabilization_level": frac(root.stabilization_level),
        })
    return {
        "graph": comp.graph.to_dict(),
        "report": {
            "negative_definite": comp.report.negative_definite,
            "bad_vertices": list(comp.report.bad_vertices),
            "determinant": comp.report.determinant,
        },
        "spinc": spinc,
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def root_to_dot(roots: Sequence[GradedRoot]) -> str:
    """One node per (branch, level) on each branch line, edges pointing down.

    Node labels are degrees.  The surviving branch gets one extra node past
    stabilization marked with an ellipsis, standing for the infinite tower.
    """
    lines = ["digraph graded_root {", "  node [shape=circle, fontsize=10];"]
    for r_idx, root in enumerate(roots):
        tops = [t for _, t in root.branches]
        end: dict[int, tuple[Fraction, int]] = {}
        for e in root.merges:
            for b in e.absorbed:
                end[b] = (e.level, e.survivor)
        lines.append(f"  subgraph cluster_{r_idx} {{")
        label = f"spin^c {root.spinc.index}" if root.spinc is not None else f"root {r_idx}"
        lines.append(f'    label="{label}";')

        def node(b: int, lvl: Fraction) -> str:
            return f"s{r_idx}_b{b}_{int((tops[b] - lvl) / 2)}"

        for b, t in enumerate(tops):
            stop, survivor = end.get(b, (root.stabilization_level - 2, None))
            lvl = t
            while lvl > stop:
                lines.append(f'    {node(b, lvl)} [label="{frac(-lvl)}"];')
                if lvl - 2 > stop:
                    lines.append(f"    {node(b, lvl)} -> {node(b, lvl - 2)};")
                lvl -= 2
            if survivor is not None:
                lines.append(f"    {node(b, stop + 2)} -> {node(survivor, stop)};")
            else:
                tail = f"s{r_idx}_b{b}_tail"
                lines.append(f'    {tail} [label="...", shape=plaintext];')
                lines.append(f"    {node(b, stop + 2)} -> {tail};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _degrees(d: Fraction, lo: Fraction, hi: Fraction) -> list[Fraction]:
    offset = (lo - d) % 2
    start = lo if offset == 0 else lo + (2 - offset)
    out = []
    while start <= hi:
        out.append(start)
        start += 2
    return out


def print_computation(comp: Computation, ranks: Optional[tuple[str, str]], out=None) -> None:
    out = out or sys.stdout
    rep = comp.report
    print(f"graph: {comp.graph.size} vertices, weights {list(comp.graph.weights)}", file=out)
    print(f"  negative-definite: {rep.negative_definite}, det {rep.determinant}, "
          f"bad vertices {rep.bad_vertices}", file=out)
    print(f"basic vectors ({len(comp.basics)}):", file=out)
    for k in comp.basics:
        print(f"  {k}  level {frac(level(comp.form, k))}", file=out)
    for res in comp.spinc:
        root = res.root
        print(f"spin^c {res.spinc.index} (representative {res.spinc.representative}):", file=out)
        for i, (k, t) in enumerate(root.branches):
            print(f"  branch {i}: {k} top level {frac(t)}", file=out)
        for e in root.merges:
            print(f"  merge at level {frac(e.level)}: {list(e.absorbed)} -> {e.survivor}", file=out)
        print(f"  d = {frac(res.module.d_invariant)}", file=out)
        print(f"  HF+ = {res.module}", file=out)
        if ranks is not None:
            lo, hi = Fraction(ranks[0]), Fraction(ranks[1])
            for deg in _degrees(res.module.d_invariant, lo, hi):
                print(f"  rank in degree {frac(deg)}: {rank_at_degree(res.module, deg)}", file=out)


def cmd_compute(args) -> int:
    if args.graph:
        graph = PlumbingGraph.from_json(Path(args.graph).read_text())
    else:
        graph = brieskorn_family_graph(args.brieskorn)
    policy = "first" if args.seed is None else random.Random(args.seed)
    comp = compute(
        graph,
        box_budget=args.box_budget,
        floor_depth=args.level_floor,
        order_policy=policy,
    )
    print_computation(comp, args.ranks)
    if args.json:
        Path(args.json).write_text(dumps(to_json(comp)))
    if args.dot:
        Path(args.dot).write_text(root_to_dot([r.root for r in comp.spinc]))
    if args.self_check:
        from .selfcheck import self_check

        report = self_check(comp)
        for line in report.skipped:
            print(f"self-check skipped {line}", file=sys.stderr)
        for line in report.mismatches:
            print(f"self-check MISMATCH {line}", file=sys.stderr)
        print(f"self-check: {report.comparisons} comparisons, "
              f"{'ok' if report.ok else f'{len(report.mismatches)} mismatches'}")
        if not report.ok:
            return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import family_checks

    failed = 0
    total = 0
    print(f"{'n':>3}  {'check':<24} result  detail")
    for n in range(1, args.family_max + 1):
        for c in family_checks(n):
            total += 1
            failed += not c.passed
            print(f"{n:>3}  {c.name:<24} {'pass' if c.passed else 'FAIL':<6}  {c.detail}")
    print(f"{total - failed}/{total} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plumbed-hf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute HF+ of a plumbing")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="graph JSON file")
    src.add_argument("--brieskorn", metavar="N", type=int, help="use the plumbing of Σ(2,2N+1,4N+3)")
    p.add_argument("--json", metavar="FILE", help="write the result as JSON")
    p.add_argument("--dot", metavar="FILE", help="write the graded roots in DOT format")
    p.add_argument("--ranks", nargs=2, metavar=("DMIN", "DMAX"), help="print ranks in this degree range")
    p.add_argument("--self-check", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--box-budget", type=int, default=DEFAULT_BOX_BUDGET)
    p.add_argument("--level-floor", type=int, default=None,
                   help="how far below the lowest basic level to search (level units)")
    p.add_argument("--seed", type=int, default=None, help="randomise push-down vertex choice")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check the Brieskorn family against its closed form")
    p.add_argument("--family-max", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PlumbingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
