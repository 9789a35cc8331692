"""Command-line interface: ``enpt <command> ...``.

Exit codes: 0 success, 1 bad input, 2 a well-formed NO (solver refusal,
failed verification, non-minimal representation, empty oracle search).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import io
from .cliques import enumerate_maximal_cliques_with_stats
from .core import build_enpt, build_ept, build_vpt
from .dot import pair_to_dot, representation_to_dot
from .errors import EnptError
from .generators import rep_of_clique, rep_of_cycle, rep_of_tree, rep_of_w51
from .minimality import equivalent_reduction
from .oracle import enumerate_representations_of_pair, search_enpt_representation
from .pairs import weak_dual_tree
from .solver import solve
from .verifier import check_p3, verify_representation

OK, INPUT_ERROR, NO = 0, 1, 2


def _write(text: str, dest: str | None) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "tree":
        if args.param is None:
            raise io.SemanticError("gen tree needs a graph file")
        r = rep_of_tree(io.read_graph(args.param))
    elif args.family == "w51":
        r = rep_of_w51()
    else:
        if args.param is None:
            raise io.SemanticError(f"gen {args.family} needs a size")
        try:
            size = int(args.param)
        except ValueError:
            raise io.SemanticError(f"size must be an integer, got {args.param!r}") from None
        r = rep_of_cycle(size) if args.family == "cycle" else rep_of_clique(size)
    _write(io.emit_representation(r), args.output)
    return OK


def cmd_graphs(args: argparse.Namespace) -> int:
    r = io.read_representation(args.rep)
    lines = [f"n {r.n}"]
    for name, build in (("vpt", build_vpt), ("ept", build_ept), ("enpt", build_enpt)):
        lines += [f"{name} {a} {b}" for a, b in build(r).sorted_edges()]
    _write("\n".join(lines) + "\n", None)
    return OK


def cmd_solve(args: argparse.Namespace) -> int:
    outcome = solve(io.read_pair(args.pair))
    if not outcome.yes:
        print(f"NO {outcome.reason.value}", file=sys.stderr)
        return NO
    _write(io.emit_representation(outcome.representation), args.output)
    return OK


def cmd_verify(args: argparse.Namespace) -> int:
    r = io.read_representation(args.rep)
    p = io.read_pair(args.pair)
    report = verify_representation(r, p)
    lines = [f"ept {'ok' if report.ept_ok else 'FAIL'}", f"enpt {'ok' if report.enpt_ok else 'FAIL'}"]
    lines += report.mismatches()
    passed = report.ok
    if args.p3:
        res = check_p3(r, p)
        if res.ok:
            lines.append("p3 ok")
        else:
            lines.append("p3 FAIL triangle " + " ".join(map(str, res.witness)))
        passed = passed and res.ok
    print("\n".join(lines))
    return OK if passed else NO


def cmd_maxclique(args: argparse.Namespace) -> int:
    stats = enumerate_maximal_cliques_with_stats(io.read_representation(args.rep))
    best = min(stats.cliques, key=lambda c: (-len(c), c))
    lines = [f"size {len(best)}", "max " + " ".join(map(str, best))]
    lines += ["maximal " + " ".join(map(str, c)) for c in stats.cliques]
    lines.append(f"candidates {stats.candidates}")
    print("\n".join(lines))
    return OK


def cmd_wdt(args: argparse.Namespace) -> int:
    w = weak_dual_tree(io.read_pair(args.pair))
    lines = [
        f"face {i} {w.kinds[i].value} " + " ".join(map(str, f)) for i, f in enumerate(w.faces)
    ]
    lines += [f"dual {a} {b} chord {w.chord_of[(a, b)][0]} {w.chord_of[(a, b)][1]}" for a, b in sorted(w.adjacency)]
    lines.append(f"leaves {len(w.leaves)}")
    lines.append(f"intermediates {len(w.intermediates)}")
    lines.append(f"junctions {len(w.junctions)}")
    lines.append(f"identity {'holds' if w.count_identity_holds() else 'fails'}")
    print("\n".join(lines))
    return OK


def cmd_minimal(args: argparse.Namespace) -> int:
    op = equivalent_reduction(io.read_representation(args.rep))
    if op is None:
        print("minimal")
        return OK
    print(f"not minimal: {op}")
    return NO


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.mode == "enumerate":
        p = io.read_pair(args.input)
        reps = enumerate_representations_of_pair(
            p, args.max_tree, require_p3=args.p3, allow_large=args.allow_large
        )
        if args.minimal:
            from .minimality import is_minimal

            reps = [r for r in reps if is_minimal(r)]
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            for i, r in enumerate(reps):
                (out / f"rep_{i:04d}.rep").write_text(io.emit_representation(r))
        else:
            chunks = [f"# representation {i}\n" + io.emit_representation(r) for i, r in enumerate(reps)]
            sys.stdout.write("\n".join(chunks))
        print(f"found {len(reps)}", file=sys.stderr)
        return OK
    g = io.read_graph(args.input)
    r = search_enpt_representation(g, args.max_tree, allow_large=args.allow_large)
    if r is None:
        print("none found", file=sys.stderr)
        return NO
    _write(io.emit_representation(r), args.output)
    return OK


def cmd_dot(args: argparse.Namespace) -> int:
    text = Path(args.input).read_text()
    kind = io.sniff(text)
    if kind == "pair":
        out = pair_to_dot(io.parse_pair(text))
    elif kind == "tree":
        out = representation_to_dot(io.parse_representation(text))
    else:
        raise io.SemanticError(f"cannot export a {kind or 'empty'} file; expected a pair or a representation")
    _write(out, args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="enpt", description="ENPT representations and Hamiltonian pairs")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a representation")
    s.add_argument("family", choices=["tree", "cycle", "clique", "w51"])
    s.add_argument("param", nargs="?", help="graph file (tree) or size (cycle, clique)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("graphs", help="print VPT/EPT/ENPT edge lists")
    s.add_argument("rep")
    s.set_defaults(func=cmd_graphs)

    s = sub.add_parser("solve", help="minimal P3 representation of a pair, or NO")
    s.add_argument("pair")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a representation against a pair")
    s.add_argument("rep")
    s.add_argument("pair")
    s.add_argument("--p3", action="store_true", help="also check that red triangles are claws")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("maxclique", help="maximum clique of the ENPT graph")
    s.add_argument("rep")
    s.set_defaults(func=cmd_maxclique)

    s = sub.add_parser("wdt", help="weak dual tree of a pair")
    s.add_argument("pair")
    s.set_defaults(func=cmd_wdt)

    s = sub.add_parser("minimal", help="one-step minimality check")
    s.add_argument("rep")
    s.set_defaults(func=cmd_minimal)

    s = sub.add_parser("oracle", help="brute-force enumeration and search")
    s.add_argument("mode", choices=["enumerate", "search"])
    s.add_argument("input", help="pair file (enumerate) or graph file (search)")
    s.add_argument("--max-tree", type=int, required=True)
    s.add_argument("--p3", action="store_true", help="enumerate: keep only P3 representations")
    s.add_argument("--minimal", action="store_true", help="enumerate: keep only minimal ones")
    s.add_argument("--allow-large", action="store_true", help="lift the n <= 6 guard")
    s.add_argument("--out-dir", help="enumerate: write one file per representation")
    s.add_argument("-o", "--output", help="search: output file")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("dot", help="export a representation or pair to DOT")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dot)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except (EnptError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
