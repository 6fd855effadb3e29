"""Command-line front end: ``rmspectra <command> [options]``.

Exit codes: 0 success, 1 failed check / witness not found / nonconforming
spectrum, 2 usage error, unsupported parameters or exceeded budget.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from .apset import APSet
from .codes import bch_code, extended_bch_code, extended_bch_rm_aligned, rm_code
from .enumeration import DEFAULT_BUDGET, EnumerationBudgetError, weight_distribution, weight_spectrum
from .gf2 import LinearCode
from .spectra import (
    EXHAUSTIVE_BUDGET,
    BaselineTable,
    UnsupportedCodeError,
    closed_form_m_minus_3,
    closed_form_m_minus_4,
    conjecture_check,
    derive_spectrum,
    sandwich,
    witness_search,
)
from .verify import check_ids, run_checks


class UsageError(Exception):
    pass


def parse_budget(text: str) -> int:
    """``"2^k"`` or a plain integer; returns the count it denotes."""
    m = re.fullmatch(r"\s*2\s*\^\s*(\d+)\s*", text)
    try:
        value = 1 << int(m.group(1)) if m else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be an integer or 2^k, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}") from None
    return a, b


def _dimension_budget(args: argparse.Namespace, default: int) -> int:
    return default if args.budget is None else args.budget.bit_length() - 1


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} --family {args.family} needs {' '.join(missing)}")


def _family_code(args: argparse.Namespace) -> LinearCode:
    if args.family == "rm":
        _require(args, "r", "m")
        if not 0 <= args.r <= args.m:
            raise UsageError("RM(r,m) needs 0 <= r <= m")
        return rm_code(args.r, args.m)
    if args.family in ("bch", "ebch"):
        _require(args, "n", "d")
        build = bch_code if args.family == "bch" else extended_bch_code
        return build(args.n, args.d)
    raise UsageError(f"--family {args.family} has no generator matrix; use the spectrum command")


def _spectrum_lines(s: APSet, csv: bool) -> str:
    return "weight\n" + "".join(f"{w}\n" for w in s.members()) if csv else str(s)


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.family == "rm-closed":
        _require(args, "c", "m")
        c, m = args.c, args.m
        if c == 3 and m >= 6:
            s = closed_form_m_minus_3(m)
        elif c == 4 and m >= 8:
            s = closed_form_m_minus_4(m)
        elif c in (1, 2) and m > c:
            s = derive_spectrum(m - c, m).spectrum
        else:
            raise UsageError(f"no closed form for RM(m-{c}, m) at m={m}")
        payload = {"r": m - c, "m": m, "status": "proven", "spectrum": s.to_json()}
        _emit(args, payload, _spectrum_lines(s, args.csv))
        return 0

    method = args.method or ("derived" if args.family == "rm" else "exhaustive")
    if method != "exhaustive" and args.family != "rm":
        raise UsageError(f"--method {method} only applies to --family rm")
    if method == "exhaustive":
        code = _family_code(args)
        s = weight_spectrum(code, budget=_dimension_budget(args, DEFAULT_BUDGET), threads=args.threads)
        payload = {"n": code.n, "dimension": code.dimension, "status": "proven", "spectrum": s.to_json()}
        _emit(args, payload, _spectrum_lines(s, args.csv))
        return 0

    _require(args, "r", "m")
    r, m = args.r, args.m
    if not 0 <= r <= m:
        raise UsageError("RM(r,m) needs 0 <= r <= m")
    budget = _dimension_budget(args, EXHAUSTIVE_BUDGET)
    if method == "derived":
        res = derive_spectrum(r, m, exhaustive_budget=budget, seed=args.seed)
    else:
        if r == 0 or m == 0:
            raise UsageError("the sandwich step needs r >= 1 and m >= 1")
        base = derive_spectrum(r - 1, m - 1, exhaustive_budget=budget, seed=args.seed)
        table = BaselineTable(f"rm_{r - 1}_{m - 1}", r - 1, m - 1, base.lower, base.status)
        res = sandwich(r, m, [table])
    if res.proven:
        text = _spectrum_lines(res.spectrum, args.csv)
    else:
        text = f"RM({r},{m}): partial\nlower: {res.lower}\ngap: {res.gap}"
    if args.csv and not res.proven:
        raise UsageError("--csv needs a proven spectrum")
    notes = "".join(f"note: {n}\n" for n in res.notes) if not args.csv else ""
    _emit(args, res.to_json(), text.rstrip("\n") + "\n" + notes)
    return 0


def _distribution_text(dist, args: argparse.Namespace) -> str:
    return dist.to_csv() if args.csv else dist.to_magma()


def cmd_distribution(args: argparse.Namespace) -> int:
    code = _family_code(args)
    dist = weight_distribution(code, budget=_dimension_budget(args, DEFAULT_BUDGET),
                               split_bits=min(4, code.dimension) if args.threads > 1 else 0,
                               threads=args.threads)
    payload = {"n": code.n, "dimension": code.dimension, "distribution": dist.to_json()}
    _emit(args, payload, _distribution_text(dist, args))
    return 0


def cmd_intersect(args: argparse.Namespace) -> int:
    r, m = args.rm
    n, d = args.ebch
    if not 0 <= r <= m:
        raise UsageError("--rm needs 0 <= r <= m")
    build = extended_bch_rm_aligned if args.aligned else extended_bch_code
    ebch = build(n, d)
    rm = rm_code(r, m)
    if ebch.n != rm.n:
        raise UsageError(f"lengths differ: RM({r},{m}) has {rm.n}, extended BCH has {ebch.n}")
    code = rm.intersect(ebch)
    payload: dict = {"dimension": code.dimension}
    budget = _dimension_budget(args, DEFAULT_BUDGET)
    split = min(4, code.dimension) if args.threads > 1 else 0
    if args.distribution:
        dist = weight_distribution(code, budget=budget, split_bits=split, threads=args.threads)
        payload["distribution"] = dist.to_json()
        body = _distribution_text(dist, args)
    else:
        s = weight_spectrum(code, budget=budget, threads=args.threads)
        payload["spectrum"] = s.to_json()
        body = _spectrum_lines(s, args.csv)
    text = body if args.csv else f"dimension {code.dimension}\n{body}"
    _emit(args, payload, text)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    budget = 200_000 if args.budget is None else args.budget
    f = witness_search(args.r, args.m, args.target, budget=budget, seed=args.seed)
    if f is None:
        _emit(args, {"found": False, "target": args.target}, "not found")
        return 1
    payload = {"found": True, "target": args.target, "degree": f.degree, "anf": str(f)}
    _emit(args, payload, str(f))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.only is not None and args.only not in check_ids():
        raise UsageError(f"unknown check {args.only!r}; known: {', '.join(check_ids())}")
    report = run_checks(
        only=args.only,
        heavy=args.heavy,
        budget=_dimension_budget(args, DEFAULT_BUDGET),
        threads=args.threads,
    )
    _emit(args, report.to_json(args.timings), report.to_text(args.timings))
    return 0 if report.ok else 1


def _read_b_set(path: str) -> APSet:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return APSet.from_values(int(tok) for tok in re.split(r"[\s,]+", text.strip()) if tok)
    if isinstance(data, dict):
        return APSet.from_json(data)
    if isinstance(data, int):
        return APSet.from_values([data])
    return APSet.from_values(int(x) for x in data)


def cmd_conjecture(args: argparse.Namespace) -> int:
    b_set = _read_b_set(args.b_set) if args.b_set else None
    try:
        rep = conjecture_check(args.c, args.m, b_set)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"RM({args.m - args.c},{args.m}): {rep.status}"]
    if rep.status == "inconclusive":
        lines.append(f"gap: {rep.gap}")
    else:
        lines += [f"A: {rep.low_part}", f"B: {rep.mid_part}", f"C: {rep.central_part}"]
    lines += [f"reason: {r}" for r in rep.reasons]
    _emit(args, rep.to_json(), "\n".join(lines))
    return 1 if rep.status == "nonconforming" else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmspectra", description="Exact Reed-Muller weight spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--budget", type=parse_budget, default=None,
                        help="enumeration budget as 2^k codewords, or search steps for witness")
    common.add_argument("--seed", type=int, default=0)

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("--family", choices=["rm", "rm-closed", "bch", "ebch"], default="rm")
    for flag in ("r", "m", "c", "n", "d"):
        code.add_argument(f"--{flag}", type=int)
    code.add_argument("--csv", action="store_true")

    p = sub.add_parser("spectrum", parents=[common, code], help="set of weights of a code")
    p.add_argument("--method", choices=["exhaustive", "derived", "sandwich"])
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("distribution", parents=[common, code], help="weight distribution")
    p.add_argument("--magma", action="store_true", help="<w, A_w> list (default text form)")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("intersect", parents=[common], help="RM code ∩ extended BCH code")
    p.add_argument("--rm", type=_pair, required=True, metavar="R,M")
    p.add_argument("--ebch", type=_pair, required=True, metavar="N,D")
    p.add_argument("--aligned", action="store_true", help="place cyclic coordinate i at alpha^i")
    p.add_argument("--distribution", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--magma", action="store_true")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("witness", parents=[common], help="find a function of given weight")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="run the reproduction checks")
    p.add_argument("--only", metavar="ID")
    p.add_argument("--heavy", action="store_true", help="include long-running checks")
    p.add_argument("--timings", action="store_true", help="print wall times")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[common], help="check the spectrum shape of RM(m-c,m)")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b-set", metavar="FILE")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedCodeError, EnumerationBudgetError, ValueError, OSError) as exc:
        print(f"rmspectra {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
