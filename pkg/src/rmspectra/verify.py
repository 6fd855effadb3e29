"""Reproduction checks run by ``rmspectra verify`` and the acceptance tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import tables
from .apset import APSet
from .codes import extended_bch_code, rm_code, rm_dimension
from .enumeration import (
    DEFAULT_BUDGET,
    macwilliams_transform,
    repetition_distribution,
    rm_first_order_distribution,
    weight_distribution,
    weight_spectrum,
)
from .spectra import (
    baseline_table,
    closed_form_m_minus_3,
    closed_form_m_minus_4,
    conjecture_check,
    derive_spectrum,
    sandwich,
    sumset_step,
    upper_bound,
)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class Skip(Exception):
    pass


@dataclass
class Check:
    id: str
    claim: str
    expectation: str
    run: Callable[["Context"], list[str]]
    heavy: bool = False


@dataclass
class Context:
    budget: int = DEFAULT_BUDGET
    threads: int = 1


@dataclass
class CheckResult:
    id: str
    claim: str
    expectation: str
    outcome: str
    wall_time: float
    problems: list[str] = field(default_factory=list)
    reason: str = ""

    def line(self, timings: bool = False) -> str:
        extra = f" ({self.wall_time:.2f}s)" if timings else ""
        text = f"{self.outcome:<7} {self.id}{extra}: {self.expectation}"
        if self.outcome == FAIL:
            text += "".join(f"\n        contradicts {self.claim}: {p}" for p in self.problems)
        elif self.outcome == SKIPPED:
            text += f"\n        skipped: {self.reason}"
        return text

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "claim": self.claim,
            "expectation": self.expectation,
            "outcome": self.outcome,
        }
        if timings:
            out["wall_time"] = round(self.wall_time, 3)
        if self.problems:
            out["problems"] = self.problems
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class VerificationReport:
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.outcome != FAIL for r in self.results)

    def to_text(self, timings: bool = False) -> str:
        return "\n".join(r.line(timings) for r in self.results) + "\n"

    def to_json(self, timings: bool = False) -> dict:
        return {"ok": self.ok, "checks": [r.to_json(timings) for r in self.results]}


def _expect(problems: list[str], cond: bool, message: str) -> None:
    if not cond:
        problems.append(message)


def _timed_limit(problems: list[str], start: float, limit: float) -> None:
    elapsed = time.perf_counter() - start
    _expect(problems, elapsed < limit, f"took {elapsed:.1f}s, limit {limit:.0f}s")


# ---------------------------------------------------------------------------
# individual checks


def _exhaustive_rm2(m: int, expected: tuple[int, ...], limit: float):
    def run(ctx: Context) -> list[str]:
        problems: list[str] = []
        code = rm_code(2, m)
        _expect(problems, code.dimension == rm_dimension(2, m), f"dimension {code.dimension}")
        t0 = time.perf_counter()
        got = weight_spectrum(code, budget=ctx.budget, threads=ctx.threads)
        _timed_limit(problems, t0, limit)
        _expect(problems, got == APSet.from_values(expected), f"spectrum {got}")
        return problems

    return run


def _bch_intersection(ctx: Context) -> list[str]:
    problems: list[str] = []
    t0 = time.perf_counter()
    code = rm_code(3, 8).intersect(extended_bch_code(255, 19))
    _expect(problems, code.dimension == 26, f"dimension {code.dimension}, expected 26")
    dist = weight_distribution(code, budget=ctx.budget, threads=ctx.threads)
    _timed_limit(problems, t0, 120)
    _expect(problems, dist.entries == tables.BCH_255_19_TABLE, f"distribution {dist.to_magma()}")
    return problems


def _sumsets(ctx: Context) -> list[str]:
    problems: list[str] = []
    cases = [
        ("RM(2,6)", tables.RM_2_6, tables.SUMSET_RM_2_6),
        ("RM(2,7)", tables.RM_2_7, tables.SUMSET_RM_2_7),
        ("RM(3,8)", tables.RM_3_8, tables.SUMSET_RM_3_8),
    ]
    for name, spectrum, expected in cases:
        got = sumset_step(APSet.from_values(spectrum))
        _expect(problems, got == APSet.from_values(expected), f"S+S for {name} = {got}")
    return problems


def _rm37(ctx: Context) -> list[str]:
    problems: list[str] = []
    res = sandwich(3, 7, [baseline_table("rm_2_6")])
    _expect(problems, res.proven, f"status {res.status}, gap {res.gap}")
    _expect(problems, res.lower == APSet.from_values(tables.SUMSET_RM_2_6), f"spectrum {res.lower}")
    excluded = APSet.interval(0, 128, 4) - upper_bound(3, 7)
    want = APSet.from_values([4, 8, 12, 20, 108, 116, 120, 124])
    _expect(problems, excluded == want, f"excluded weights {excluded}")
    return problems


def _chain(r_offset: int, first: int, closed, baseline: str):
    def run(ctx: Context) -> list[str]:
        problems: list[str] = []
        t0 = time.perf_counter()
        for m in range(first, 21):
            res = derive_spectrum(m - r_offset, m)
            if not res.proven:
                problems.append(f"m={m}: {res.status}, gap {res.gap}")
            elif res.spectrum != closed(m):
                problems.append(f"m={m}: {res.spectrum} != {closed(m)}")
        base = derive_spectrum(first - r_offset, first)
        _expect(problems, base.lower == baseline_table(baseline).spectrum,
                f"m={first} baseline mismatch")
        if r_offset == 3:
            _timed_limit(problems, t0, 5)
        return problems

    return run


def _rm38(ctx: Context) -> list[str]:
    problems: list[str] = []
    res = derive_spectrum(3, 8)
    table = baseline_table("rm_3_8").spectrum
    _expect(problems, res.proven, f"status {res.status}, gap {res.gap}")
    _expect(problems, res.lower == table, f"derived {res.lower} != cited {table}")
    cited = APSet.from_values(tables.RM_3_8_EXTRA_CITED)
    _expect(problems, cited <= res.lower, "cited weights congruent to 4 mod 8 missing")
    bare = sandwich(3, 8, [baseline_table("rm_2_7")])
    _expect(problems, not bare.proven, "S+S alone should leave a gap")
    return problems


def _rm49(ctx: Context) -> list[str]:
    problems: list[str] = []
    res = derive_spectrum(4, 9)
    want = APSet.from_values(tables.SUMSET_RM_3_8) | APSet.from_values([60, 452])
    _expect(problems, res.proven, f"status {res.status}, gap {res.gap}")
    _expect(problems, res.lower == want, f"spectrum {res.lower}")
    _expect(problems, 452 not in APSet.from_values(tables.SUMSET_RM_3_8),
            "452 unexpectedly listed in S+S")
    return problems


def _rm510(ctx: Context) -> list[str]:
    problems: list[str] = []
    res = derive_spectrum(5, 10)
    _expect(problems, not res.proven, "expected a partial result")
    parts = {
        "special weights": APSet.from_values(tables.RM_5_10_SPECIAL),
        "even range": APSet.interval(*tables.RM_5_10_BCH_RANGE, 2),
        "doubled RM(4,9) spectrum": APSet.from_values(tables.RM_5_10_SUMSET_PART),
    }
    for name, part in parts.items():
        _expect(problems, part <= res.lower, f"{name} missing: {part - res.lower}")
    _expect(problems, res.gap.isdisjoint(res.lower), "gap meets the lower set")
    return problems


def _macwilliams(ctx: Context) -> list[str]:
    problems: list[str] = []
    for m in range(4, 11):
        n = 1 << m
        dual = macwilliams_transform(rm_first_order_distribution(m), m + 1)
        want = APSet.interval(0, n, 2) - APSet.from_values([2, n - 2])
        _expect(problems, dual.spectrum() == want, f"RM({m - 2},{m}) spectrum {dual.spectrum()}")
        evens = macwilliams_transform(repetition_distribution(m), 1).spectrum()
        _expect(problems, evens == APSet.interval(0, n, 2), f"RM({m - 1},{m}) spectrum {evens}")
    exhaustive = weight_distribution(rm_code(2, 4))
    via = macwilliams_transform(rm_first_order_distribution(4), 5)
    _expect(problems, via == exhaustive, f"RM(2,4): {via.entries} != {exhaustive.entries}")
    return problems


def _conjecture(ctx: Context) -> list[str]:
    problems: list[str] = []
    for c in (1, 2, 3, 4):
        for m in range(2 * c, 21):
            rep = conjecture_check(c, m)
            _expect(problems, rep.status == "conforms", f"c={c}, m={m}: {rep.status} {rep.reasons}")
    rep = conjecture_check(5, 10)
    _expect(problems, rep.status == "inconclusive", f"c=5, m=10: {rep.status}")
    return problems


def _bch1023(ctx: Context) -> list[str]:
    code = rm_code(5, 10).intersect(extended_bch_code(1023, 157))
    if code.dimension > 28:
        raise Skip(f"intersection has dimension {code.dimension} > 28")
    spec = weight_spectrum(code, budget=ctx.budget, threads=ctx.threads)
    missing = APSet.interval(448, 576, 2) - spec
    return [f"dimension {code.dimension}; even weights missing: {missing}"] if missing else []


CHECKS: list[Check] = [
    Check("rm26-spectrum", "RM(2,6) weights {0,16,24,28,32,36,40,48,64}",
          "exhaustive RM(2,6) spectrum, dim 22, < 10 s",
          _exhaustive_rm2(6, tables.RM_2_6, 10)),
    Check("rm27-spectrum", "RM(2,7) weights {0,32,48,56,64,72,80,96,128}",
          "exhaustive RM(2,7) spectrum, dim 29, < 120 s",
          _exhaustive_rm2(7, tables.RM_2_7, 120), heavy=True),
    Check("bch-intersection", "RM(3,8) ∩ ext-BCH(255,19) weight distribution table",
          "dimension 26 and the 25-pair distribution", _bch_intersection),
    Check("sumset-tables", "listed S+S sets for RM(2,6), RM(2,7), RM(3,8)",
          "sumset_step reproduces all three lists", _sumsets),
    Check("rm37-sandwich", "S+S is the whole spectrum of RM(3,7)",
          "sandwich(3,7) proven, excluded {4,8,12,20} and reflections", _rm37),
    Check("rm-m-minus-3", "weights of RM(m-3,m) for m >= 6",
          "chained sandwich from RM(3,6) proven for 6 <= m <= 20, < 5 s",
          _chain(3, 6, closed_form_m_minus_3, "rm_3_6")),
    Check("rm-m-minus-4", "weights of RM(m-4,m) for m >= 8",
          "chained sandwich from RM(4,8) proven for 8 <= m <= 20",
          _chain(4, 8, closed_form_m_minus_4, "rm_4_8")),
    Check("rm38-derivation", "RM(3,8) spectrum list, including weights 4 mod 8",
          "S+S + BCH weights + witnesses equal the cited RM(3,8) spectrum", _rm38),
    Check("rm49", "RM(4,9) spectrum is {60} ∪ S+S",
          "derived RM(4,9) = {60, 452} ∪ S+S (452 forced by symmetry)", _rm49),
    Check("rm510-partial", "partial spectrum of RM(5,10)",
          "partial; lower set holds all three listed parts; gap disjoint", _rm510),
    Check("macwilliams", "RM(m-1,m), RM(m-2,m) weights via the dual distribution",
          "transform spectra for 4 <= m <= 10; RM(2,4) distribution matches enumeration",
          _macwilliams),
    Check("conjecture", "conjectured shape verified for c = 1..4, open for c = 5",
          "conforms for c in 1..4, m <= 20; inconclusive for c=5, m=10", _conjecture),
    Check("bch1023-intersection", "RM(5,10) ∩ ext-BCH(1023,157) gives all evens in [448,576]",
          "enumerate the intersection when its dimension is <= 28", _bch1023, heavy=True),
]


def check_ids() -> list[str]:
    return [c.id for c in CHECKS]


def run_checks(
    only: str | None = None,
    heavy: bool = False,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> VerificationReport:
    if only is not None and only not in check_ids():
        raise ValueError(f"unknown check {only!r}; known: {', '.join(check_ids())}")
    ctx = Context(budget=budget, threads=threads)
    results = []
    for check in CHECKS:
        if only is not None and check.id != only:
            continue
        t0 = time.perf_counter()
        if check.heavy and not heavy and only is None:
            results.append(CheckResult(check.id, check.claim, check.expectation, SKIPPED, 0.0,
                                       reason="long-running; pass --heavy"))
            continue
        try:
            problems = check.run(ctx)
            outcome = FAIL if problems else PASS
            reason = ""
        except Skip as exc:
            problems, outcome, reason = [], SKIPPED, str(exc)
        except Exception as exc:  # a crashing check is a failed check
            problems, outcome, reason = [f"{type(exc).__name__}: {exc}"], FAIL, ""
        results.append(CheckResult(check.id, check.claim, check.expectation, outcome,
                                   time.perf_counter() - t0, problems, reason))
    return VerificationReport(results)
