"""Command-line interface: codec, embedder, law checkers, oracle verifier.

Exit codes: 0 success/feasible/pass, 1 usage or I/O error, 2 infeasible or
counterexample found.  Machine-readable output goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codec
from .huffman import FrequencyTable, SumWeighting, build_code
from .oracle import verify_algorithm
from .pifo import MaxDepthWeighting, embed, tree_from_json
from .weighting import (
    DEFAULT_SEED,
    TreeSampler,
    Weighting,
    check_algebra_laws,
    check_axiom_exchange,
    check_axiom_monotone_lengthen,
    check_axiom_structure_monotone,
)

_INSTANCES: dict[str, tuple[Weighting, TreeSampler]] = {
    "huffman": (SumWeighting(), TreeSampler(weights=tuple(range(10)))),
    "pifo": (MaxDepthWeighting(), TreeSampler(weights=tuple(range(6)))),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codetrees",
        description="Optimal d-ary code trees: Huffman codec and PIFO tree embedding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="compress a file into an AHUF container")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("decode", help="decompress an AHUF container")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("table", help="print the optimal code table for a frequency spec")
    p.add_argument("spec", help="comma-separated symbol:count pairs, e.g. a:1,b:2")
    p.add_argument("-d", type=int, default=2, help="code arity (default 2)")

    p = sub.add_parser("embed", help="embed a JSON scheduler tree into a d-ary tree")
    p.add_argument("input", help="JSON file: {\"id\": ..., \"children\": [...]}")
    p.add_argument("-d", type=int, default=2, help="target arity (default 2)")
    p.add_argument("--bound", type=int, default=None, help="height bound to check")

    p = sub.add_parser("check-laws", help="run randomized algebra/axiom checks")
    p.add_argument("instance", choices=sorted(_INSTANCES))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=1000)

    p = sub.add_parser("oracle-verify", help="compare greedy against brute force")
    p.add_argument("instance", choices=sorted(_INSTANCES))
    p.add_argument("--max-n", type=int, default=6, help="largest multiset size (default 6)")
    p.add_argument("-d", type=int, default=2, help="code arity (default 2)")

    return parser


def _run_encode(args: argparse.Namespace) -> int:
    with open(args.input, "rb") as f:
        data = f.read()
    blob, achieved = codec.compress(data)
    with open(args.output, "wb") as f:
        f.write(blob)
    print(f"original_bytes={len(data)} compressed_bytes={len(blob)} weighted_length={achieved}")
    return 0


def _run_decode(args: argparse.Namespace) -> int:
    with open(args.input, "rb") as f:
        blob = f.read()
    data = codec.decompress(blob)
    with open(args.output, "wb") as f:
        f.write(data)
    print(f"decoded_bytes={len(data)}")
    return 0


def _parse_freq_spec(spec: str) -> FrequencyTable:
    counts: dict[int, int] = {}
    for pair in spec.split(","):
        symbol, sep, count_text = pair.partition(":")
        if not sep or len(symbol) != 1:
            raise ValueError(f"malformed pair {pair!r}, expected <symbol>:<count>")
        count = int(count_text)
        if count < 1:
            raise ValueError(f"count for {symbol!r} must be >= 1")
        key = ord(symbol)
        if key > 255:
            raise ValueError(f"symbol {symbol!r} is not a byte value")
        if key in counts:
            raise ValueError(f"symbol {symbol!r} given twice")
        counts[key] = count
    return FrequencyTable(counts)


def _run_table(args: argparse.Namespace) -> int:
    table, achieved = build_code(_parse_freq_spec(args.spec), args.d)
    print(table.render())
    print(f"weighted_length={achieved}")
    return 0


def _run_embed(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as f:
        source = tree_from_json(json.load(f))
    result = embed(source, args.d, args.bound)
    print(json.dumps(result.to_json_dict(), indent=2, sort_keys=True))
    return 0 if result.feasible else 2


def _run_check(wt: Weighting, sampler: TreeSampler, seed: int, trials: int) -> int:
    reports = [
        check_algebra_laws(wt, sampler, trials, seed),
        check_axiom_monotone_lengthen(wt, sampler, trials, seed),
        check_axiom_exchange(wt, sampler, trials, seed),
        check_axiom_structure_monotone(wt, sampler, trials, seed),
    ]
    for report in reports:
        print(report.render())
    return 0 if all(r.passed for r in reports) else 2


def _run_check_laws(args: argparse.Namespace) -> int:
    wt, sampler = _INSTANCES[args.instance]
    return _run_check(wt, sampler, args.seed, args.trials)


def _run_oracle_verify(args: argparse.Namespace) -> int:
    wt, _ = _INSTANCES[args.instance]
    report = verify_algorithm(wt, args.d, args.max_n)
    print(report.render())
    return 0 if report.passed else 2


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "encode": _run_encode,
        "decode": _run_decode,
        "table": _run_table,
        "embed": _run_embed,
        "check-laws": _run_check_laws,
        "oracle-verify": _run_oracle_verify,
    }
    try:
        return handlers[args.command](args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
