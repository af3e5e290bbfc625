"""Command-line front end.

Subcommands: check (decide words), estimate (measured error rates),
growth (growth function table), ball (exact small-radius automaton),
hard (adversarial instances), bench (throughput and space).

Exit codes: 0 success, 1 a run finished but failed its check, 2 bad
usage or malformed input, 3 resource limit exceeded.  The default seed
comes from WORDSTREAM_SEED when set.  Reports go to stdout as JSON;
--csv switches to CSV.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .ball import build_ball_automaton, compute_growth, exhaustive_agreement
from .dsl import ElabConfig, elaborate, parse_group_spec
from .errors import (ConstructionError, DslError, FormatError, GenerationError,
                     ResourceLimitError, StreamOverflowError, WordstreamError)
from .formats import parse_word_file
from .harness import PairKind, estimate_error, gen_word_pair
from .rng import Rng
from .streaming import decide_identity

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class RunConfig:
    group: str
    n: int = 1
    seed: int = 0
    trials: int = 1
    c: Optional[int] = None
    d: int = 2
    eps_prime: float = 0.05
    base_dir: str = "."
    csv: bool = False
    out: Optional[str] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def elab(self) -> ElabConfig:
        return ElabConfig(c=self.c, d=self.d, eps_prime=self.eps_prime,
                          base_dir=self.base_dir)


def _default_seed() -> int:
    raw = os.environ.get("WORDSTREAM_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError("WORDSTREAM_SEED must be an integer, got %r" % raw)


def _add_common(sub, trials: bool = False, group_required: bool = True):
    sub.add_argument("--group", required=group_required, default=None,
                     help="group expression")
    sub.add_argument("--seed", type=int, default=None,
                     help="root seed (default: WORDSTREAM_SEED or 0)")
    sub.add_argument("--dir", default=".", dest="base_dir",
                     help="directory file arguments resolve against")
    sub.add_argument("--c", type=int, default=None,
                     help="override every fingerprint error exponent")
    sub.add_argument("--d", type=int, default=2,
                     help="wreath lamp error exponent")
    sub.add_argument("--eps-prime", type=float, default=0.05,
                     help="prime-power lamp failure budget")
    sub.add_argument("--csv", action="store_true", help="emit CSV, not JSON")
    sub.add_argument("--out", default=None, help="write the report to a file")
    if trials:
        sub.add_argument("--trials", type=int, required=True)


def _config(args, n: int = 1, trials: int = 1) -> RunConfig:
    seed = args.seed if args.seed is not None else _default_seed()
    return RunConfig(group=args.group, n=n, seed=seed, trials=trials,
                     c=args.c, d=args.d, eps_prime=args.eps_prime,
                     base_dir=args.base_dir, csv=args.csv, out=args.out)


def _emit(cfg: RunConfig, json_obj, csv_text: str) -> None:
    body = csv_text if cfg.csv else json.dumps(json_obj, indent=2)
    if not body.endswith("\n"):
        body += "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _need_recipe(recipe, group: str):
    if recipe is None:
        raise ConstructionError(
            "%r has an oracle but no streaming recipe" % group)
    return recipe


# -- subcommands ----------------------------------------------------------------

def _cmd_check(args) -> int:
    cfg = _config(args, n=args.n)
    oracle, recipe = elaborate(cfg.group, cfg.elab())
    recipe = _need_recipe(recipe, cfg.group)
    if args.word:
        with open(args.word, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    words = parse_word_file(text, oracle.alphabet)
    rows = []
    mismatch = False
    bits = None
    for word in words:
        if len(word) > cfg.n:
            raise StreamOverflowError(
                "word of length %d exceeds n = %d" % (len(word), cfg.n))
        res = decide_identity(recipe, cfg.n, Rng(cfg.seed), word)
        bits = res.bits_used
        row = {"word": oracle.alphabet.format_word(word),
               "length": len(word), "accept": res.accept}
        if args.oracle:
            row["oracle"] = oracle.is_identity_word(word)
            row["match"] = row["oracle"] == res.accept
            mismatch = mismatch or not row["match"]
        rows.append(row)
    report = {"group": cfg.group, "n": cfg.n, "seed": cfg.seed,
              "machine": recipe.describe(), "bits_used": bits,
              "epsilon_bound": recipe.epsilon_bound(cfg.n), "words": rows}
    heads = ["word", "length", "accept"] + (["oracle", "match"] if args.oracle else [])
    lines = [",".join(heads)]
    for row in rows:
        lines.append(",".join(str(row[h]).lower() if isinstance(row[h], bool)
                              else str(row[h]) for h in heads))
    _emit(cfg, report, "\n".join(lines))
    return EXIT_FAIL if mismatch else EXIT_OK


def _cmd_estimate(args) -> int:
    cfg = _config(args, n=args.n, trials=args.trials)
    oracle, recipe = elaborate(cfg.group, cfg.elab())
    recipe = _need_recipe(recipe, cfg.group)
    report = estimate_error(recipe, oracle, PairKind(args.kind), cfg.n,
                            cfg.trials, cfg.seed, max_len=args.max_len,
                            machine_seeds=args.machines)
    _emit(cfg, json.loads(report.to_json()), report.to_csv())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_growth(args) -> int:
    cfg = _config(args)
    oracle, _ = elaborate(cfg.group, cfg.elab())
    table = compute_growth(oracle, args.radius, max_elements=args.max_elements)
    report = {"group": cfg.group, "radius": table.radius,
              "rows": [{"radius": r, "gamma": g, "log2_gamma": lg}
                       for r, g, lg in table.rows()]}
    _emit(cfg, report, table.to_csv())
    return EXIT_OK


def _cmd_ball(args) -> int:
    cfg = _config(args, n=args.n)
    oracle, _ = elaborate(cfg.group, cfg.elab())
    automaton = build_ball_automaton(oracle, cfg.n,
                                     max_elements=args.max_elements)
    report = {"group": cfg.group, "n": cfg.n,
              "states": automaton.state_count, "bits": automaton.state_bits}
    failed = False
    if args.verify:
        witness = exhaustive_agreement(automaton, oracle)
        report["verified"] = witness is None
        if witness is not None:
            report["witness"] = oracle.alphabet.format_word(witness)
            failed = True
    heads = list(report)
    csv_text = "\n".join([",".join(heads),
                          ",".join(str(report[h]).lower()
                                   if isinstance(report[h], bool)
                                   else str(report[h]) for h in heads)])
    _emit(cfg, report, csv_text)
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_hard(args) -> int:
    kind = PairKind(args.kind)
    if args.group is None:
        # Canonical adversarial families.  Disjointness needs noncommuting
        # lamps, which no wr() expression provides.
        from .library import grigorchuk_pair, s3_wreath_z
        if kind == PairKind.DISJOINTNESS:
            args.group = "S3 wr Z (builtin)"
            oracle = s3_wreath_z()
        else:
            args.group = "grigorchuk"
            oracle = grigorchuk_pair()[0]
        cfg = _config(args, n=args.n)
    else:
        cfg = _config(args, n=args.n)
        oracle, _ = elaborate(cfg.group, cfg.elab())
    rng = Rng(cfg.seed)
    rows = []
    for i in range(args.count):
        word, _, truth = gen_word_pair(oracle, kind, cfg.n,
                                       rng.child_index("pair", i))
        rows.append({"word": oracle.alphabet.format_word(word),
                     "length": len(word), "identity": truth})
    report = {"group": cfg.group, "kind": kind.value, "n": cfg.n,
              "seed": cfg.seed, "instances": rows}
    lines = ["word,length,identity"]
    for row in rows:
        lines.append("%s,%d,%s" % (row["word"].replace(",", ";"),
                                   row["length"], str(row["identity"]).lower()))
    _emit(cfg, report, "\n".join(lines))
    return EXIT_OK


def _cmd_bench(args) -> int:
    cfg = _config(args, n=args.n)
    oracle, recipe = elaborate(cfg.group, cfg.elab())
    recipe = _need_recipe(recipe, cfg.group)
    rng = Rng(cfg.seed)
    t_build = time.perf_counter()
    machine = recipe.build(cfg.n, rng.child("machine"))
    t_build = time.perf_counter() - t_build
    word = oracle.alphabet.random_word(rng.child("word"), cfg.n)
    t_read = time.perf_counter()
    machine.read(word)
    t_read = time.perf_counter() - t_read
    rate = len(word) / t_read if t_read > 0 else float("inf")
    report = {"group": cfg.group, "n": cfg.n,
              "machine": recipe.describe(),
              "state_bits": recipe.state_bits(cfg.n),
              "config_bits": recipe.config_bits(cfg.n),
              "space_bits": recipe.space_bits(cfg.n),
              "epsilon_bound": recipe.epsilon_bound(cfg.n),
              "build_seconds": round(t_build, 6),
              "letters_per_second": int(rate)}
    heads = list(report)
    csv_text = "\n".join([",".join(heads),
                          ",".join(str(report[h]) for h in heads)])
    _emit(cfg, report, csv_text)
    return EXIT_OK


# -- driver ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordstream",
        description="streaming word-problem machines for finitely "
                    "generated groups")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="decide words from a file or stdin")
    _add_common(p)
    p.add_argument("--n", type=int, required=True, help="stream length bound")
    p.add_argument("--word", default=None, help="word file (default: stdin)")
    p.add_argument("--oracle", action="store_true",
                   help="also evaluate each word exactly and compare")
    p.set_defaults(fn=_cmd_check)

    p = subs.add_parser("estimate", help="measure error rates over word pairs")
    _add_common(p, trials=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in PairKind])
    p.add_argument("--max-len", type=int, default=None,
                   help="pair length budget (default n)")
    p.add_argument("--machines", type=int, default=None,
                   help="distinct machine seeds (default one per trial)")
    p.set_defaults(fn=_cmd_estimate)

    p = subs.add_parser("growth", help="ball sizes gamma(0..radius)")
    _add_common(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=10_000_000)
    p.set_defaults(fn=_cmd_growth)

    p = subs.add_parser("ball", help="exact automaton on the radius-n/2 ball")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="exhaustively compare with the oracle up to length n")
    p.add_argument("--max-elements", type=int, default=10_000_000)
    p.set_defaults(fn=_cmd_ball)

    p = subs.add_parser("hard", help="adversarial instance words")
    _add_common(p, group_required=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", required=True,
                   choices=[PairKind.DISJOINTNESS.value,
                            PairKind.GRIGORCHUK.value])
    p.add_argument("--count", type=int, default=16)
    p.set_defaults(fn=_cmd_hard)

    p = subs.add_parser("bench", help="build time, throughput, and space")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except (DslError, FormatError, ConstructionError, GenerationError,
            StreamOverflowError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except WordstreamError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
