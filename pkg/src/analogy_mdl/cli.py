"""Command-line surface: solve equations, score models, evaluate corpora.

Verbs:
  solve A B C       rank completions of A : B :: C : ?
  score             reusability of --model, or transferability of --source,
                    toward --target
  eval CORPUS.tsv   run a tab-separated corpus (a, b, c, optional gold d)
  inspect-model     print a model's bit encoding and cost breakdown

Reports are JSON (default) or TSV; identical inputs produce byte-identical
output. Exit codes: 0 ok, 1 usage or input error, 2 no solution. The
ANALOGY_MDL_LOG environment variable (debug/info/warning) controls log
verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .coding import Alphabet, DEFAULT_SYMBOLS
from .errors import AnalogyMdlError, EmptySolutionError
from .inference import compatible_models, optimal_models
from .model_space import MorphologySpace
from .morphology import SearchBounds, encode_model, format_model, is_canonical, model_cost, parse_model, pattern_symbol_cost
from .reusability import reusability_report
from .solver import Solution, solve, source_pool
from .transferability import transfer_report

log = logging.getLogger("analogy_mdl")

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_SOLUTION = 2


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with(message))

    def exit_with(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="analogy-mdl", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default=DEFAULT_SYMBOLS,
                        help="symbols allowed in words (default: a-z plus hyphen)")
    common.add_argument("--max-slots", type=int, default=2,
                        help="max distinct representation slots per model")
    common.add_argument("--max-literals", type=int, default=3,
                        help="max literal tokens per pattern")
    common.add_argument("--variant", choices=("weak", "strong"), default="weak")
    common.add_argument("--top-k", type=int, default=3)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=0,
                        help="reserved; has no semantic effect")

    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", parents=[common],
                             help="solve A : B :: C : ?")
    p_solve.add_argument("a")
    p_solve.add_argument("b")
    p_solve.add_argument("c")

    p_score = sub.add_parser("score", parents=[common],
                             help="score reusability or transferability")
    p_score.add_argument("--model", help="source model expression, e.g. 'phi1=$1; phi2=$1.\"s\"'")
    p_score.add_argument("--source", help="source case as problem:solution")
    p_score.add_argument("--target", required=True, help="target case as problem:solution")

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate a TSV corpus of analogies")
    p_eval.add_argument("corpus", help="TSV file: a<TAB>b<TAB>c[<TAB>gold]; '#' comments")

    p_inspect = sub.add_parser("inspect-model", parents=[common],
                               help="print a model's bit encoding and cost breakdown")
    p_inspect.add_argument("--model", required=True)

    return parser


@dataclass
class RunConfig:
    alphabet: Alphabet
    bounds: SearchBounds
    variant: str
    top_k: int
    format: str

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            alphabet=Alphabet(tuple(args.alphabet)),
            bounds=SearchBounds(max_slots=args.max_slots, max_literals=args.max_literals),
            variant=args.variant,
            top_k=args.top_k,
            format=args.format,
        )


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_tsv(rows) -> None:
    for row in rows:
        print("\t".join(str(v) for v in row))


def _parse_case(text: str, what: str) -> tuple[str, str]:
    parts = text.split(":")
    if len(parts) != 2:
        raise AnalogyMdlError(f"{what} must be written problem:solution, got {text!r}")
    return parts[0], parts[1]


def _fraction_fields(value: Fraction) -> dict:
    return {"value": float(value), "exact": f"{value.numerator}/{value.denominator}"}


def _solution_payload(sol: Solution) -> dict:
    return {
        "rank": sol.rank,
        "y": sol.y,
        "total_bits": sol.total_bits,
        "transfer_bits": sol.transfer_bits,
        "case_bits": sol.case_bits,
        "model": format_model(sol.model),
        "representation": list(sol.representation),
        "source_model": format_model(sol.source_model),
    }


def cmd_solve(args, config: RunConfig) -> int:
    space = MorphologySpace(config.alphabet)
    solutions = solve(args.a, args.b, args.c, config.bounds, config.top_k, space=space)
    pool, pool_kind = source_pool(space, (args.a, args.b), config.bounds)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "solve",
        "equation": {"a": args.a, "b": args.b, "c": args.c},
        "source_pool": pool_kind,
        "source_models": [format_model(m) for m in pool],
        "solutions": [_solution_payload(s) for s in solutions],
    }
    if config.format == "json":
        _emit_json(payload)
    else:
        _emit_tsv([(s["rank"], s["y"], s["total_bits"], s["model"]) for s in payload["solutions"]])
    return EXIT_OK


def cmd_score(args, config: RunConfig) -> int:
    if bool(args.model) == bool(args.source):
        raise AnalogyMdlError("score needs exactly one of --model or --source")
    space = MorphologySpace(config.alphabet)
    target = _parse_case(args.target, "--target")
    if args.model:
        model = parse_model(args.model)
        report = reusability_report(space, model, target, config.bounds)
        payload = {
            "schema": SCHEMA_VERSION,
            "command": "score",
            "mode": "reusability",
            "model": format_model(model),
            "model_bits": model_cost(model, config.alphabet),
            "target": list(target),
            "rho_weak": report.rho_weak,
            "rho_strong": report.rho_strong,
            "weak_lhs": report.weak_lhs,
            "weak_rhs_min": report.weak_rhs_min,
            "optimal_models": [
                {"model": format_model(m), "model_bits": km, "transfer_bits": kt}
                for m, km, kt in report.strong_witnesses
            ],
        }
        rows = [("rho_weak", report.rho_weak), ("rho_strong", report.rho_strong)]
    else:
        source = _parse_case(args.source, "--source")
        report = transfer_report(space, space, source, target, config.variant, config.bounds)
        payload = {
            "schema": SCHEMA_VERSION,
            "command": "score",
            "mode": "transferability",
            "source": list(source),
            "target": list(target),
            "variant": report.variant,
            "tau_max": report.tau_max,
            "tau_avg": _fraction_fields(report.tau_avg),
            "rho_variance": _fraction_fields(report.rho_variance),
            "compatible_count": report.compatible_count,
            "per_model": [
                {"model": format_model(m), "weight": float(w), "rho": d}
                for m, w, d in report.per_model
            ],
        }
        rows = [("tau_max", report.tau_max), ("tau_avg", float(report.tau_avg)),
                ("compatible_count", report.compatible_count)]
    if config.format == "json":
        _emit_json(payload)
    else:
        _emit_tsv(rows)
    return EXIT_OK


def _read_corpus(path: str) -> tuple[list[tuple[int, list[str]]], list[int]]:
    records, skipped = [], []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) not in (3, 4) or not all(f for f in fields[:3]):
                log.warning("skipping malformed corpus line %d: %r", lineno, line)
                skipped.append(lineno)
                continue
            records.append((lineno, fields))
    return records, skipped


def _eval_record(space, config: RunConfig, lineno: int, fields: list[str]) -> dict:
    a, b, c = fields[:3]
    gold = fields[3] if len(fields) == 4 else None
    try:
        solutions = solve(a, b, c, config.bounds, config.top_k, space=space)
    except EmptySolutionError:
        solutions = []
    entry = {
        "line": lineno,
        "a": a, "b": b, "c": c,
        "predictions": [_solution_payload(s) for s in solutions],
    }
    if gold is not None:
        space.alphabet.validate_word(gold)
        ys = [s.y for s in solutions]
        entry["gold"] = gold
        entry["hit_at_1"] = bool(ys and ys[0] == gold)
        entry["hit_at_k"] = gold in ys
        report = transfer_report(space, space, (a, b), (c, gold), config.variant, config.bounds)
        entry["tau_max"] = report.tau_max
        entry["tau_avg"] = _fraction_fields(report.tau_avg)
    return entry


def cmd_eval(args, config: RunConfig) -> int:
    records, skipped = _read_corpus(args.corpus)
    if not records:
        print("no usable corpus records", file=sys.stderr)
        return EXIT_USAGE
    space = MorphologySpace(config.alphabet)
    with ThreadPoolExecutor(max_workers=min(8, os.cpu_count() or 1)) as pool:
        entries = list(
            pool.map(lambda rec: _eval_record(space, config, rec[0], rec[1]), records)
        )
    scored = [e for e in entries if "gold" in e]
    summary = {
        "records_total": len(records) + len(skipped),
        "records_scored": len(records),
        "records_skipped": len(skipped),
        "with_gold": len(scored),
    }
    if scored:
        summary["accuracy_at_1"] = sum(e["hit_at_1"] for e in scored) / len(scored)
        summary["accuracy_at_k"] = sum(e["hit_at_k"] for e in scored) / len(scored)
        summary["mean_tau_max"] = sum(e["tau_max"] for e in scored) / len(scored)
        summary["mean_tau_avg"] = sum(e["tau_avg"]["value"] for e in scored) / len(scored)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "eval",
        "corpus": args.corpus,
        "records": entries,
        "summary": summary,
    }
    if config.format == "json":
        _emit_json(payload)
    else:
        _emit_tsv(sorted(summary.items()))
    return EXIT_OK


def cmd_inspect_model(args, config: RunConfig) -> int:
    model = parse_model(args.model)
    if not is_canonical(model):
        raise AnalogyMdlError(
            f"model is not canonical (unmerged literals or unused slots): {format_model(model)}"
        )
    bits = encode_model(model, config.alphabet)
    width = pattern_symbol_cost(config.alphabet, model.slot_count)
    prefix = model.slot_count
    p1 = len(bits) - prefix
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "inspect-model",
        "model": format_model(model),
        "slot_count": model.slot_count,
        "symbol_width_bits": width,
        "model_bits": model_cost(model, config.alphabet),
        "encoding": bits,
        "sections": {
            "slot_count_unary": bits[:prefix],
            "patterns": bits[prefix:],
        },
    }
    assert payload["model_bits"] == len(bits)
    if config.format == "json":
        _emit_json(payload)
    else:
        _emit_tsv([("model_bits", payload["model_bits"]), ("encoding", bits)])
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "score": cmd_score,
    "eval": cmd_eval,
    "inspect-model": cmd_inspect_model,
}


def main(argv=None) -> int:
    level = os.environ.get("ANALOGY_MDL_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = RunConfig.from_args(args)
        return _COMMANDS[args.command](args, config)
    except EmptySolutionError as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except AnalogyMdlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
