"""Command-line interface: ``fgldpc {construct,params,verify,simulate}``.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass

import numpy as np

from .alist import write_alist
from .channel import RNG_ALGORITHM
from .decoder import DecoderConfig
from .eaqecc import DEFAULT_DIMENSION, code_spec, derive_params, format_table, generate_table, table_csv
from .field import prime_power
from .matrices import FAMILIES, build
from .simulate import CodeInfo, records_csv, run_sweep
from .verify import structural_checks

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CodeId:
    family: str
    p: int
    q: int

    @classmethod
    def parse(cls, text: str) -> CodeId:
        match = re.fullmatch(r"(eg1|eg2|pg1|pg2):(\d+),(\d+)", text.strip())
        if not match:
            raise UsageError(f"malformed code id {text!r}; expected family:p,q with family in {FAMILIES}")
        family, p, q = match.group(1), int(match.group(2)), int(match.group(3))
        if p < 2:
            raise UsageError(f"dimension p must be at least 2, got {p}")
        if prime_power(q) is None:
            raise UsageError(f"q = {q} is not a prime power")
        return cls(family, p, q)

    def __str__(self) -> str:
        return f"{self.family}:{self.p},{self.q}"


def parse_int_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive), ``"a,b,c"`` or a single integer."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer range {text!r}") from None


def parse_fm_grid(text: str) -> list[float]:
    """Comma list, or ``start:stop:count[:log|:lin]`` (endpoints included)."""
    text = text.strip()
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) not in (3, 4):
                raise UsageError(f"bad f_m grid {text!r}")
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            scale = parts[3] if len(parts) == 4 else "lin"
            if count < 1 or scale not in ("lin", "log"):
                raise UsageError(f"bad f_m grid {text!r}")
            if scale == "log":
                if start <= 0 or stop <= 0:
                    raise UsageError("log grid needs positive endpoints")
                grid = np.geomspace(start, stop, count)
            else:
                grid = np.linspace(start, stop, count)
            values = [float(x) for x in grid]
        else:
            values = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad f_m grid {text!r}") from None
    for f in values:
        if not 0.0 <= f <= 1.0 / 3.0:
            raise UsageError(f"f_m = {f} outside [0, 1/3]")
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fgldpc", description="Finite-geometry LDPC codes as entanglement-assisted quantum codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write a parity-check matrix in alist format")
    p.add_argument("code", help="family:p,q, e.g. eg1:2,8")
    p.add_argument("-o", "--out", required=True, help="output alist path")

    p = sub.add_parser("params", help="EAQECC parameter table for a family")
    p.add_argument("family", choices=FAMILIES)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--s", help="range of s with q = 2^s, e.g. 2..4")
    group.add_argument("--q", help="range of q, e.g. 2..5")
    p.add_argument("--p", type=int, help="geometry dimension (default: 2, or 3 for pg2)")
    p.add_argument("--csv", help="also write the table as CSV")
    p.add_argument("--budget", type=int, default=24, help="max null-space dimension for exhaustive d")

    p = sub.add_parser("verify", help="run the structural property checks")
    p.add_argument("code")

    p = sub.add_parser("simulate", help="Monte Carlo block error rate over the depolarizing channel")
    p.add_argument("code")
    p.add_argument("--fm", required=True, help="f_m grid: comma list or start:stop:count[:log]")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--perturb", action="store_true", help="enable random prior perturbation")
    p.add_argument("--perturb-strength", type=float, default=0.1)
    p.add_argument("--perturb-period", type=int, default=6)
    p.add_argument("--workers", type=int, default=1, help="worker processes (results do not depend on it)")
    p.add_argument("--out", help="CSV output path (default: standard output)")
    return parser


def cmd_construct(args) -> int:
    code = CodeId.parse(args.code)
    H = build(code.family, code.p, code.q)
    write_alist(H, args.out)
    print(f"{code}: {H.n_rows}x{H.n_cols}, max row weight {int(H.row_weights().max())}, wrote {args.out}")
    return EXIT_OK


def cmd_params(args) -> int:
    if args.s is not None:
        qs = [2**s for s in parse_int_range(args.s)]
    else:
        qs = parse_int_range(args.q)
    p = args.p if args.p is not None else DEFAULT_DIMENSION[args.family]
    rows = generate_table(args.family, qs, p=p, budget=args.budget)
    print(f"{args.family} over dimension {p}")
    print(format_table(rows))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(table_csv(rows))
    return EXIT_OK if all(r.error is None for r in rows) else EXIT_VERIFY


def cmd_verify(args) -> int:
    code = CodeId.parse(args.code)
    checks = structural_checks(code.family, code.p, code.q)
    print(f"{code}")
    for check in checks:
        print("  " + check.line())
    ok = all(c.passed for c in checks)
    print("all checks passed" if ok else "VERIFICATION FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_simulate(args) -> int:
    code = CodeId.parse(args.code)
    f_ms = parse_fm_grid(args.fm)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    try:
        cfg = DecoderConfig(
            max_iterations=args.max_iter,
            perturbation_enabled=args.perturb,
            perturbation_strength=args.perturb_strength,
            perturbation_period=args.perturb_period,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    H = build(code.family, code.p, code.q)
    spec = code_spec(code.family, code.p, code.q, H, budget=0)
    params = derive_params(H, spec)
    info = CodeInfo(str(code), code.family, code.p, code.q, params.k_quantum, params.e)
    records = run_sweep(H, f_ms, args.trials, seed=args.seed, cfg=cfg, code=info, workers=args.workers)
    text = records_csv(records)

    meta = (
        f"# {code} {params}  seed={args.seed} rng={RNG_ALGORITHM} "
        f"llr_clamp={cfg.llr_clamp} decoder={records[0].decoder_digest}"
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print(meta)
        print(f"{'f_m':>10} {'trials':>8} {'errors':>7} {'bler':>10} {'95% CI':>23}")
        for r in records:
            lo, hi = r.interval
            print(f"{r.f_m:>10.4g} {r.trials:>8} {r.block_errors:>7} {r.bler:>10.4g}   [{lo:.4g}, {hi:.4g}]")
    else:
        print(meta, file=sys.stderr)
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"construct": cmd_construct, "params": cmd_params, "verify": cmd_verify, "simulate": cmd_simulate}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fgldpc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fgldpc: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"fgldpc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
