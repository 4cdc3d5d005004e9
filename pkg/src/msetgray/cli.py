"""Command-line front end: enumerate, count, verify, tree, bench.

Exit codes: 0 success, 1 verification failure, 2 usage or spec error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Iterator, Optional, Sequence

from .core import (
    InvalidSpecError,
    MultisetSpec,
    OracleLimitError,
    TransitionDelta,
    to_inplace,
    validate,
)
from .counting import count_dp, count_inclusion_exclusion
from .engine import GrayEngine, OP_COUNT_CEILING
from .inplace import apply_move, init_container
from .reference import gray_generate_recursive, lex_generate
from .treemodel import ParityMode, build_lexico_tree, export_dot, twist
from .verify import iter_random_specs, run_spec_checks


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", help="comma-separated multiplicities, e.g. 1,2,2,1,1")
    parser.add_argument("--uniform", type=int, help="uniform multiplicity (with --n)")
    parser.add_argument("--n", type=int, help="component count for --uniform")
    parser.add_argument("--k", type=int, help="combination size")


def _spec_from_args(args: argparse.Namespace) -> MultisetSpec:
    if args.m is not None:
        if args.uniform is not None or args.n is not None:
            raise InvalidSpecError("give either --m or --uniform/--n, not both")
        try:
            m = tuple(int(part) for part in args.m.split(","))
        except ValueError as exc:
            raise InvalidSpecError(f"bad --m value {args.m!r}") from exc
    elif args.uniform is not None and args.n is not None:
        m = (args.uniform,) * args.n
    else:
        raise InvalidSpecError("spec required: --m LIST or --uniform M --n N")
    if args.k is None:
        raise InvalidSpecError("--k is required")
    spec = MultisetSpec(m=m, k=args.k)
    validate(spec)
    return spec


def _delta_between(x: Sequence[int], y: Sequence[int]) -> TransitionDelta:
    inc = dec = 0
    for pos, (a, b) in enumerate(zip(x, y), start=1):
        if b == a + 1:
            inc = pos
        elif b == a - 1:
            dec = pos
    return TransitionDelta(inc=inc, dec=dec)


# -- enumerate ------------------------------------------------------------


def _iter_objects(
    spec: MultisetSpec, order: str, form: str
) -> Iterator[tuple[int, object]]:
    """Yield (1-based index, payload) in the requested order and form."""
    if order == "gray-loopless":
        eng = GrayEngine(spec)
        if form == "vector":
            for idx, vec in enumerate(eng.iter_vectors(), start=1):
                yield idx, vec
        elif form == "inplace":
            state = init_container(spec, eng.current())
            yield 1, state.cells()
            idx = 1
            while True:
                delta = eng.advance()
                if delta is None:
                    return
                apply_move(state, delta)
                idx += 1
                yield idx, state.cells()
        else:  # delta
            idx = 0
            while True:
                delta = eng.advance()
                if delta is None:
                    return
                idx += 1
                yield idx, delta
        return

    vectors = lex_generate(spec) if order == "lex" else gray_generate_recursive(spec)
    if form == "vector":
        for idx, vec in enumerate(vectors, start=1):
            yield idx, vec
    elif form == "inplace":
        for idx, vec in enumerate(vectors, start=1):
            yield idx, to_inplace(spec, vec)
    else:  # delta (adjacent orders only)
        for idx, (x, y) in enumerate(zip(vectors, vectors[1:]), start=1):
            yield idx, _delta_between(x, y)


def _format_text(form: str, payload: object) -> str:
    if form == "delta":
        delta = payload
        return f"+{delta.inc} -{delta.dec}"
    return " ".join(str(v) for v in payload)


def _format_json(form: str, idx: int, payload: object) -> str:
    if form == "vector":
        return json.dumps({"i": idx, "a": list(payload)})
    if form == "inplace":
        return json.dumps({"i": idx, "elems": list(payload)})
    return json.dumps({"inc": payload.inc, "dec": payload.dec})


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    if args.order == "lex" and args.form == "delta":
        print("error: --order lex cannot stream deltas (not adjacent)", file=sys.stderr)
        return 2
    if args.limit is not None and args.limit < 1:
        print("error: --limit must be >= 1", file=sys.stderr)
        return 2
    emitted = 0
    truncated = False
    for idx, payload in _iter_objects(spec, args.order, args.form):
        if args.limit is not None and emitted >= args.limit:
            truncated = True
            break
        if args.output == "json-lines":
            print(_format_json(args.form, idx, payload))
        else:
            print(_format_text(args.form, payload))
        emitted += 1
    if truncated:
        print(f"output truncated at --limit {args.limit}", file=sys.stderr)
    return 0


# -- count ----------------------------------------------------------------


def cmd_count(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    if args.method == "ie":
        print(count_inclusion_exclusion(spec))
        return 0
    if args.method == "dp":
        print(count_dp(spec))
        return 0
    ie = count_inclusion_exclusion(spec)
    dp = count_dp(spec)
    if ie != dp:
        print(f"ie={ie}", file=sys.stderr)
        print(f"dp={dp}", file=sys.stderr)
        print("error: counting methods disagree", file=sys.stderr)
        return 1
    print(ie)
    return 0


# -- verify ---------------------------------------------------------------


def _print_trace(spec: MultisetSpec) -> None:
    eng = GrayEngine(spec)
    while True:
        delta = eng.advance()
        if delta is None:
            return
        tr = eng.last_trace
        print(
            json.dumps(
                {
                    "level": tr.level,
                    "inc": tr.delta.inc,
                    "dec": tr.delta.dec,
                    "up": int(tr.went_up),
                    "down": int(tr.went_down),
                    "ops": tr.op_count,
                }
            )
        )


def cmd_verify(args: argparse.Namespace) -> int:
    if args.random:
        specs = list(
            iter_random_specs(args.count, args.max_n, args.max_m, args.seed)
        )
    else:
        specs = [_spec_from_args(args)]

    info_totals: dict[str, int] = {}
    for spec in specs:
        report = run_spec_checks(spec)
        if not report.passed:
            failure = report.first_failure()
            print(f"FAIL m={spec.m} k={spec.k}", file=sys.stderr)
            print(f"  check {failure.name}: {failure.detail}", file=sys.stderr)
            return 1
        for key, value in report.info.items():
            info_totals[key] = info_totals.get(key, 0) + int(value)

    if not args.random and args.trace:
        _print_trace(specs[0])

    print(f"verified {len(specs)} spec(s): all mandatory checks passed")
    for key, hits in sorted(info_totals.items()):
        print(f"info {key}: {hits}/{len(specs)}")
    return 0


# -- tree -----------------------------------------------------------------


def cmd_tree(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    tree = build_lexico_tree(spec)
    if args.mode == "twisted":
        tree = twist(tree, ParityMode.SKIP_SINGLE_CHILD)
    elif args.mode == "twisted-global":
        tree = twist(tree, ParityMode.GLOBAL)
    sys.stdout.write(export_dot(tree))
    return 0


# -- bench ----------------------------------------------------------------


def _bench_one(spec: MultisetSpec, max_steps: Optional[int]) -> tuple[int, int, float, float]:
    eng = GrayEngine(spec)
    objects = 1
    max_ops = 0
    max_step = 0.0
    start = time.perf_counter()
    while max_steps is None or objects - 1 < max_steps:
        t0 = time.perf_counter()
        delta = eng.advance()
        t1 = time.perf_counter()
        if delta is None:
            break
        objects += 1
        if t1 - t0 > max_step:
            max_step = t1 - t0
        if eng.last_trace.op_count > max_ops:
            max_ops = eng.last_trace.op_count
    elapsed = time.perf_counter() - start
    return objects, max_ops, max_step, elapsed


def cmd_bench(args: argparse.Namespace) -> int:
    rows: list[tuple[MultisetSpec, str]] = []
    if args.m is not None or args.uniform is not None:
        spec = _spec_from_args(args)
        rows.append((spec, f"n={spec.n}"))
    else:
        n_values = [int(v) for v in args.n_list.split(",")]
        for n in n_values:
            m = (args.uniform_m,) * n
            k = args.k if args.k is not None else int(sum(m) * args.k_ratio)
            rows.append((MultisetSpec(m=m, k=k), f"n={n}"))

    print(f"{'instance':>12} {'k':>8} {'objects':>10} {'obj/s':>12} {'max_ops':>8} {'max_step_us':>12}")
    for spec, tag in rows:
        objects, max_ops, max_step, elapsed = _bench_one(spec, args.max_steps)
        rate = objects / elapsed if elapsed > 0 else float("inf")
        print(
            f"{tag:>12} {spec.k:>8} {objects:>10} {rate:>12.0f} {max_ops:>8} "
            f"{max_step * 1e6:>12.1f}"
        )
    print(f"op-count ceiling: {OP_COUNT_CEILING}", file=sys.stderr)
    return 0


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msetgray",
        description="Adjacent (Gray) enumeration of bounded multiset combinations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="stream all combinations")
    _add_spec_args(p_enum)
    p_enum.add_argument(
        "--order",
        choices=["lex", "gray-recursive", "gray-loopless"],
        default="gray-loopless",
    )
    p_enum.add_argument("--form", choices=["vector", "inplace", "delta"], default="vector")
    p_enum.add_argument("--output", choices=["text", "json-lines"], default="text")
    p_enum.add_argument("--limit", type=int, help="stop after this many records")
    p_enum.set_defaults(func=cmd_enumerate)

    p_count = sub.add_parser("count", help="count combinations exactly")
    _add_spec_args(p_count)
    p_count.add_argument("--method", choices=["ie", "dp", "both"], default="both")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="run the cross-oracle check suite")
    _add_spec_args(p_verify)
    p_verify.add_argument("--random", action="store_true", help="randomized batch")
    p_verify.add_argument("--count", type=int, default=100, help="batch size")
    p_verify.add_argument("--max-n", type=int, default=6)
    p_verify.add_argument("--max-m", type=int, default=4)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--trace", action="store_true", help="stream per-step trace records (single spec)"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_tree = sub.add_parser("tree", help="emit the enumeration tree as DOT")
    _add_spec_args(p_tree)
    p_tree.add_argument(
        "--mode",
        choices=["lex", "twisted", "twisted-global"],
        default="twisted",
    )
    p_tree.set_defaults(func=cmd_tree)

    p_bench = sub.add_parser("bench", help="throughput and per-step op counts")
    _add_spec_args(p_bench)
    p_bench.add_argument("--n-list", default="10,100,1000")
    p_bench.add_argument("--uniform-m", type=int, default=3)
    p_bench.add_argument("--k-ratio", type=float, default=0.5)
    p_bench.add_argument("--max-steps", type=int, default=100_000)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidSpecError, OracleLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
