"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 violated hypothesis,
3 search exhausted, 4 parse or input error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .book import DEFAULT_NODE_LIMIT, exact_mbt, verify_matching_book_embedding
from .corpus import DEFAULT_MENU, PIECES, BadParameter, gen_doubled_c4, gen_prism, gen_random_glued, gen_theta
from .errors import (
    DispbookError,
    GraphError,
    HypothesisError,
    NoneWithinBudget,
    ParseError,
    SearchExhausted,
)
from .dispersable import embed_dispersable
from .formats import edge_token, read_embedding, read_mel, write_embedding, write_mel
from .render import render_svg

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_HYPOTHESIS = 2
EXIT_EXHAUSTED = 3
EXIT_PARSE = 4


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    return read_mel(_read_text(path))


def summary_line(report) -> str:
    per_page = report.crossings_per_page()
    crossings = ",".join(f"{p}:{k}" for p, k in sorted(per_page.items())) if per_page else "0"
    return (
        f"pages={report.page_count} crossings_per_page={crossings} "
        f"subhamiltonian={str(report.subhamiltonian).lower()}"
    )


def _embed_one(path: str, node_limit: int) -> tuple[int, str, str]:
    """Returns ``(exit code, embedding text, message)``."""
    try:
        g = _load_graph(path)
        order, coloring, _ = embed_dispersable(g, node_limit=node_limit)
    except (InputError, ParseError, GraphError) as exc:
        return EXIT_PARSE, "", f"error: {exc}"
    except HypothesisError as exc:
        return EXIT_HYPOTHESIS, "", str(exc)
    except SearchExhausted as exc:
        return EXIT_EXHAUSTED, "", str(exc)
    except DispbookError as exc:
        return EXIT_VERIFY, "", f"verification failed: {exc}"
    report = verify_matching_book_embedding(g, order, coloring)
    code = EXIT_OK if report.ok and report.subhamiltonian else EXIT_VERIFY
    return code, write_embedding(g, order, coloring), summary_line(report)


def cmd_embed(args) -> int:
    paths = args.graph
    if len(paths) == 1:
        code, text, message = _embed_one(paths[0], args.node_limit)
        if text:
            if args.output and args.output != "-":
                Path(args.output).write_text(text)
            else:
                sys.stdout.write(text)
        print(message, file=sys.stderr)
        return code

    if "-" in paths:
        print("error: standard input can only be used with a single graph", file=sys.stderr)
        return EXIT_PARSE
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_embed_one, paths, [args.node_limit] * len(paths)))
    else:
        results = [_embed_one(p, args.node_limit) for p in paths]
    outdir = Path(args.output) if args.output else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    worst = EXIT_OK
    for path, (code, text, message) in zip(paths, results):
        if text:
            target = (outdir / (Path(path).name + ".emb")) if outdir else Path(path + ".emb")
            target.write_text(text)
        print(f"{path}: {message}", file=sys.stderr)
        worst = max(worst, code)
    return worst


def cmd_verify(args) -> int:
    try:
        g = _load_graph(args.graph)
        order, coloring = read_embedding(_read_text(args.embedding), g)
    except (InputError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify_matching_book_embedding(g, order, coloring)
    for v in report.violations:
        print(_describe(g, v))
    print(f"ok={str(report.ok).lower()} " + summary_line(report))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _describe(g, v) -> str:
    name = type(v).__name__
    if hasattr(v, "f"):
        return f"{name} page {v.page}: {edge_token(g, v.e)} {edge_token(g, v.f)}"
    if name == "Uncolored":
        return f"{name}: {edge_token(g, v.e)}"
    if name == "PageCountMismatch":
        return f"{name}: {v.page_count} pages, expected {v.expected}"
    return f"{name}: {v.detail}"


def cmd_mbt(args) -> int:
    try:
        g = _load_graph(args.graph)
        result = exact_mbt(g, page_budget=args.pages, node_limit=args.node_limit)
    except (InputError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SearchExhausted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_EXHAUSTED
    except NoneWithinBudget:
        print(f"mbt>{args.pages}")
        return EXIT_VERIFY
    print(f"mbt={result.value}")
    sys.stdout.write(write_embedding(g, result.order, result.coloring))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.kind == "theta":
            g = gen_theta()
        elif args.kind == "doubled-c4":
            g = gen_doubled_c4()
        elif args.kind == "cube":
            g = gen_prism(2)
        elif args.kind == "prism":
            if args.param is None:
                raise BadParameter("prism needs a parameter k >= 2")
            g = gen_prism(args.param)
        else:
            menu = tuple(args.menu.split(",")) if args.menu else DEFAULT_MENU
            g, cuts = gen_random_glued(args.seed, args.pieces, menu)
            planted = " ".join(f"{a},{b}" for a, b in cuts)
            sys.stdout.write(f"# seed={args.seed} pieces={args.pieces} planted_cuts={planted}\n")
    except BadParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(write_mel(g))
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        g = _load_graph(args.graph)
        order, coloring = read_embedding(_read_text(args.embedding), g)
    except (InputError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify_matching_book_embedding(g, order, coloring)
    if not report.is_book_embedding and not args.force:
        print("error: embedding does not verify; use --force to render anyway", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(render_svg(g, order, coloring, highlight=args.force))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dispbook", description="Dispersable book embeddings of cubic planar bipartite multigraphs."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="construct a 3-page subhamiltonian matching book embedding")
    p.add_argument("graph", nargs="+", help="MEL file(s); '-' reads standard input")
    p.add_argument("-o", "--output", help="output file (one graph) or directory (several)")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--jobs", type=int, default=1, help="worker processes across input files")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check an embedding against its graph")
    p.add_argument("graph")
    p.add_argument("embedding")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mbt", help="exact matching book thickness by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--pages", type=int, default=6, help="largest page count to try")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_mbt)

    p = sub.add_parser("gen", help="write a generated instance as MEL")
    p.add_argument("kind", choices=["theta", "cube", "prism", "doubled-c4", "glued"])
    p.add_argument("param", nargs="?", type=int, help="k for 'prism'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pieces", type=int, default=4)
    p.add_argument("--menu", help=f"comma-separated pieces from {','.join(sorted(PIECES))}")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="SVG arc diagram of an embedding")
    p.add_argument("graph")
    p.add_argument("embedding")
    p.add_argument("--force", action="store_true", help="render invalid embeddings, highlighting violations")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
