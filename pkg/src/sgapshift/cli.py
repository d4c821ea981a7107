"""Command-line interface: ``sgapshift {analyze,verify,flow-compare,oracle,graph}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence, Tuple

from .bowen_franks import flow_compare
from .corpus import default_corpus, generate_corpus, load_corpus
from .errors import DegenerateError, SGapError
from .gapset import canonicalize, parse_spec, render_spec
from .oracle import brute_periodic_count, count_blocks, entropy_estimate, is_admissible_block
from .presentation import build_presentation, to_dot
from .report import CHECK_NAMES, FAIL, analyze, render_text, verify_spec
from .zeta import DEFAULT_SERIES_LENGTH

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _spec_arg(text: str):
    try:
        return parse_spec(text)
    except SGapError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_analyze(args) -> int:
    rep = analyze(args.spec, N=args.N, pmax=args.pmax)
    if args.format == "json":
        sys.stdout.write(rep.to_json() + "\n")
    else:
        sys.stdout.write(render_text(rep))
    return EXIT_OK


def _verify_one(item: Tuple[str, str, int]):
    source, text, pmax = item
    spec = parse_spec(text)
    start = time.perf_counter()
    checks = verify_spec(spec, pmax=pmax)
    return source, render_spec(spec), checks, time.perf_counter() - start


def cmd_verify(args) -> int:
    if args.corpus == "default":
        entries = default_corpus()
    else:
        try:
            entries = load_corpus(args.corpus)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    items = [(src, render_spec(spec), args.pmax) for src, spec in entries]
    if args.seed is not None:
        for spec in generate_corpus(args.augment, seed=args.seed):
            items.append((f"random(seed={args.seed})", render_spec(spec), args.pmax))

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, items, chunksize=4))
    else:
        results = [_verify_one(it) for it in items]

    header = f"{'spec':<34}" + "".join(f" {name[:10]:>10}" for name in CHECK_NAMES)
    print(header)
    first_failure = None
    totals = {name: [0, 0] for name in CHECK_NAMES}
    for source, canonical, checks, _ in results:
        row = f"{canonical[:34]:<34}" + "".join(f" {checks[name]:>10}" for name in CHECK_NAMES)
        print(row)
        if source != canonical and not source.startswith("random"):
            print(f"  note: '{source}' canonicalized to '{canonical}'")
        for name in CHECK_NAMES:
            verdict = checks[name]
            if verdict != "skipped":
                totals[name][0] += verdict != FAIL
                totals[name][1] += 1
            if verdict == FAIL and first_failure is None:
                first_failure = (canonical, name)
    print()
    for name in CHECK_NAMES:
        ok, total = totals[name]
        print(f"{name:<20} {ok}/{total}")
    print(f"{len(results)} specs, pmax={args.pmax}")
    if first_failure:
        print(f"FAILED: {first_failure[1]} on {first_failure[0]}")
        return EXIT_FAIL
    print("all checks passed")
    return EXIT_OK


def cmd_flow_compare(args) -> int:
    try:
        result = flow_compare(args.spec_a, args.spec_b)
    except DegenerateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"{render_spec(args.spec_a)} vs {render_spec(args.spec_b)}: {result.message}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = args.spec
    if args.query == "admissible":
        if set(args.value) - {"0", "1"} or not args.value:
            print("error: word must be a nonempty string over {0,1}", file=sys.stderr)
            return EXIT_USAGE
        print(str(is_admissible_block(spec, args.value)).lower())
        return EXIT_OK
    try:
        n = int(args.value)
        if n < 1:
            raise ValueError
    except ValueError:
        print("error: expected a positive integer", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.query == "blocks":
            print(count_blocks(spec, n))
        elif args.query == "periodic":
            print(brute_periodic_count(spec, n))
        else:
            print(f"{entropy_estimate(spec, n):.12g}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_graph(args) -> int:
    spec = canonicalize(args.spec)
    sys.stdout.write(to_dot(build_presentation(spec), render_spec(spec)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgapshift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one spec")
    p.add_argument("--spec", required=True, type=_spec_arg, help="e.g. 'finite:1,2' or 'delta:2|1,2'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-N", type=int, default=DEFAULT_SERIES_LENGTH, help="number of periodic counts p_n")
    p.add_argument("--pmax", type=int, default=12, help="brute-force periodic counts up to this n")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run every cross-check over a corpus")
    p.add_argument("--corpus", default="default", help="'default' or a path with one spec per line")
    p.add_argument("--pmax", type=int, default=12, help="brute-force comparison up to p_pmax (<= 16)")
    p.add_argument("--seed", type=int, default=None, help="add randomly generated specs with this seed")
    p.add_argument("--augment", type=int, default=24, help="how many random specs --seed adds")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("flow-compare", help="compare flow-equivalence invariants of two specs")
    p.add_argument("spec_a", type=_spec_arg)
    p.add_argument("spec_b", type=_spec_arg)
    p.set_defaults(func=cmd_flow_compare)

    p = sub.add_parser("oracle", help="raw brute-force queries")
    p.add_argument("--spec", required=True, type=_spec_arg)
    p.add_argument("query", choices=("admissible", "blocks", "periodic", "estimate"))
    p.add_argument("value", help="a 0/1 word for 'admissible', otherwise n")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("graph", help="DOT dump of the minimal right-resolving presentation")
    p.add_argument("--spec", required=True, type=_spec_arg)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "pmax", 1) < 0 or getattr(args, "pmax", 1) > 16:
        parser.error("--pmax must lie in 0..16")
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
