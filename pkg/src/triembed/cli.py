"""Command-line front end: generate designs, embed, verify, sweep, oracle.

Exit codes are a stable contract: 0 success, 1 verification failure, 2
input/usage error.  All outputs are byte-identical across runs for identical
inputs and seeds; --parallel never changes output content.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

from triembed.designs import (
    LatinSquare,
    OrientationAssignment,
    TripleSystem,
    format_design,
    format_orientation,
    gen_cayley_latin,
    gen_sts,
    latin_to_triple_system,
    parse_design,
    parse_orientation,
)
from triembed.incidence import build_incidence_graph
from triembed.oracle import (
    DEFAULT_ENUM_CAP,
    DEFAULT_SWEEP_CAP,
    SweepMode,
    cross_check_single_face,
    format_oracle_report,
    format_sweep_report,
    sweep_orientations,
)
from triembed.prng import Lcg64
from triembed.rotation import (
    build_spanning_tree,
    format_embedding,
    parse_embedding,
    upper_embed,
    verify_upper_embedding,
)

_DESIGN_SPEC = re.compile(r"(sts|ls)(\d+)")


def _resolve_design(spec: str) -> tuple[str, TripleSystem]:
    """Accept 'sts<n>' / 'ls<n>' shorthand or a design file path."""
    m = _DESIGN_SPEC.fullmatch(spec)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "sts":
            return spec, gen_sts(n)
        return spec, latin_to_triple_system(gen_cayley_latin(n))
    design = parse_design(Path(spec).read_text(encoding="utf-8"))
    if isinstance(design, LatinSquare):
        return spec, latin_to_triple_system(design)
    return spec, design


def _resolve_orientation(spec: str, n_blocks: int) -> OrientationAssignment:
    """Accept all-plus, all-minus, random:<seed>, or an orientation file path."""
    if spec == "all-plus":
        return OrientationAssignment.all_plus(n_blocks)
    if spec == "all-minus":
        return OrientationAssignment.all_minus(n_blocks)
    m = re.fullmatch(r"random:(\d+)", spec)
    if m:
        return OrientationAssignment(Lcg64(int(m.group(1))).flags(n_blocks))
    orient = parse_orientation(Path(spec).read_text(encoding="utf-8"))
    if len(orient) != n_blocks:
        raise ValueError(
            f"orientation has {len(orient)} flags for {n_blocks} blocks"
        )
    return orient


def _write_output(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _say(message: str, file_went_to_stdout: bool) -> None:
    # Keep the report channel separate from file content on stdout.
    print(message, file=sys.stderr if file_went_to_stdout else sys.stdout)


def _env_cap(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "sts":
        design: TripleSystem | LatinSquare = gen_sts(args.n)
    else:
        if args.n % 2 == 0:
            raise ValueError(
                f"even-order Latin squares have no upper embedding; got n={args.n}"
            )
        design = gen_cayley_latin(args.n)
    _write_output(format_design(design), args.out)
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    _, ts = _resolve_design(args.design)
    orient = _resolve_orientation(args.orient, ts.n_blocks)
    g = build_incidence_graph(ts)
    if args.dot:
        _write_output(_format_dot(g), args.dot)
    if args.dump_tree:
        tree = build_spanning_tree(ts, g)
        lines = sorted(g.edges[e] for e in tree.tree_edges)
        text = "".join(f"{p} {bv - g.n_points}\n" for p, bv in lines)
        _write_output(text, args.dump_tree)
    if args.save_orient:
        _write_output(format_orientation(orient), args.save_orient)
    emb = upper_embed(ts, orient)
    problems = verify_upper_embedding(emb, ts, orient, check_inflation=True)
    _write_output(format_embedding(emb), args.out)
    if problems:
        _say("verification failed: " + "; ".join(problems), args.out == "-")
        return 1
    _say(f"genus={emb.genus} faces={len(emb.faces)}", args.out == "-")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    _, ts = _resolve_design(args.design)
    orient = _resolve_orientation(args.orient, ts.n_blocks)
    g = build_incidence_graph(ts)
    emb = parse_embedding(Path(args.embedding).read_text(encoding="utf-8"), g)
    problems = verify_upper_embedding(emb, ts, orient, check_inflation=True)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return 1
    print(f"verified genus={emb.genus} faces={len(emb.faces)}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    design_id, ts = _resolve_design(args.design)
    if args.exhaustive:
        mode = SweepMode(exhaustive=True)
    else:
        mode = SweepMode(samples=args.samples, seed=args.seed)
    cap = args.cap if args.cap else _env_cap("TRIEMBED_SWEEP_CAP", DEFAULT_SWEEP_CAP)
    report = sweep_orientations(
        ts, mode, design_id=design_id, parallel=args.parallel, cap=cap
    )
    _write_output(format_sweep_report(report), args.out)
    return 0 if not report.failures else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    design_id, ts = _resolve_design(args.design)
    cap = args.cap if args.cap else _env_cap("TRIEMBED_ENUM_CAP", DEFAULT_ENUM_CAP)
    report = cross_check_single_face(ts, design_id=design_id, cap=cap)
    _write_output(format_oracle_report(report), args.out)
    return 0 if report.ok else 1


def _format_dot(g) -> str:
    lines = ["graph incidence {"]
    for v in range(g.n_vertices):
        shape = "circle" if g.is_point(v) else "box"
        lines.append(f"  {g.labels[v]} [shape={shape}];")
    for u, v in g.edges:
        lines.append(f"  {g.labels[u]} -- {g.labels[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triembed",
        description="Oriented upper embeddings of Steiner triple systems and "
        "odd-order Latin squares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a standard design file")
    p_gen.add_argument("kind", choices=("sts", "ls"))
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("-o", "--out", default="-")
    p_gen.set_defaults(func=cmd_gen)

    p_embed = sub.add_parser("embed", help="construct and verify an upper embedding")
    p_embed.add_argument("design", help="design file, or sts<n>/ls<n> shorthand")
    p_embed.add_argument(
        "--orient",
        required=True,
        help="orientation file, all-plus, all-minus, or random:<seed>",
    )
    p_embed.add_argument("-o", "--out", default="-")
    p_embed.add_argument("--save-orient", help="also write the orientation used")
    p_embed.add_argument("--dump-tree", help="write the spanning tree, one 'point block' per line")
    p_embed.add_argument("--dot", help="write a DOT rendering of the incidence graph")
    p_embed.set_defaults(func=cmd_embed)

    p_verify = sub.add_parser("verify", help="re-check an embedding file")
    p_verify.add_argument("design")
    p_verify.add_argument("orient")
    p_verify.add_argument("embedding")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="verify many orientation assignments")
    p_sweep.add_argument("--design", required=True)
    group = p_sweep.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--parallel", type=int, default=1)
    p_sweep.add_argument("--cap", type=int, default=0)
    p_sweep.add_argument("-o", "--out", default="-")
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser(
        "oracle", help="brute-force single-face witnesses for every class"
    )
    p_oracle.add_argument("--design", required=True)
    p_oracle.add_argument("--cap", type=int, default=0)
    p_oracle.add_argument("-o", "--out", default="-")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
