"""Weight spectra of Reed-Muller codes by lower/upper bound sandwiching.

Upper bounds come from three filters that every weight must pass:
divisibility by ``2**floor((m-1)/r)``, the Kasami-Tokura description of
weights in ``[d, 2d)`` (``d = 2**(m-r)``), and symmetry ``w -> 2**m - w``.

Lower bounds collect weights that are certainly attained: ``S + S`` for the
spectrum ``S`` of RM(r-1, m-1) (the (u, u+v) construction with ``u, v`` both in
RM(r-1, m-1)), every Kasami-Tokura weight, enumerated subcodes, explicit
witness functions, and reflections of all of these.  When the two meet the
spectrum is determined.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import tables
from .apset import APSet
from .codes import BooleanFunction, extended_bch_code, monomial_masks, rm_code, rm_dimension
from .enumeration import (
    macwilliams_transform,
    repetition_distribution,
    rm_first_order_distribution,
    weight_spectrum,
)

EXHAUSTIVE_BUDGET = 24
MACWILLIAMS_MAX_M = 12


class UnsupportedCodeError(ValueError):
    """No route to the spectrum of the requested code is available."""


# ---------------------------------------------------------------------------
# filters


def mceliece_exponent(r: int, m: int) -> int:
    if not 1 <= r <= m:
        raise ValueError(f"divisibility exponent needs 1 <= r <= m, got r={r}, m={m}")
    return (m - 1) // r


@dataclass(frozen=True)
class KTParams:
    r: int
    m: int
    alpha: int
    beta: Fraction
    mu_max: int

    @classmethod
    def of(cls, r: int, m: int) -> "KTParams":
        alpha = min(r, m - r)
        beta = Fraction(m - r + 2, 2)
        return cls(r, m, alpha, beta, math.floor(max(Fraction(alpha), beta)))


def kt_admissible(r: int, m: int) -> APSet:
    """Weights of RM(r, m) in ``[2^(m-r), 2^(m-r+1))``; all of them occur."""
    if not 2 <= r <= m - 1:
        raise ValueError(f"Kasami-Tokura range needs 2 <= r <= m-1, got r={r}, m={m}")
    p = KTParams.of(r, m)
    top = 1 << (m - r + 1)
    return APSet.from_values(top - (1 << (m - r + 1 - mu)) for mu in range(1, p.mu_max + 1))


def kt_witness(r: int, m: int, family: str, l: int) -> BooleanFunction:
    """Representative function of weight ``2^(m-r+1) - 2^(m-r+1-l)``.

    Family ``"A"``: ``x1..x_{r-2} (x_{r-1}x_r + ... + x_{r+2l-3}x_{r+2l-2})``.
    Family ``"B"``: ``x1..x_{r-l} (x_{r-l+1}..x_r + x_{r+1}..x_{r+l})``.
    """
    family = family.upper()
    if family == "A":
        if r < 2 or not 2 <= 2 * l <= m - r + 2:
            raise ValueError(f"family A needs r >= 2 and 2 <= 2l <= m-r+2 (r={r}, m={m}, l={l})")
        prefix = tuple(range(1, r - 1))
        pairs = [(r - 1 + 2 * i, r + 2 * i) for i in range(l)]
        return BooleanFunction.from_monomials(m, [prefix + pr for pr in pairs])
    if family == "B":
        if not 3 <= l <= min(r, m - r):
            raise ValueError(f"family B needs 3 <= l <= min(r, m-r) (r={r}, m={m}, l={l})")
        prefix = tuple(range(1, r - l + 1))
        first = prefix + tuple(range(r - l + 1, r + 1))
        second = prefix + tuple(range(r + 1, r + l + 1))
        return BooleanFunction.from_monomials(m, [first, second])
    raise ValueError(f"unknown witness family {family!r}")


def kt_witness_parameters(r: int, m: int) -> list[tuple[str, int]]:
    out = [("A", l) for l in range(1, (m - r + 2) // 2 + 1)] if r >= 2 else []
    out += [("B", l) for l in range(3, min(r, m - r) + 1)]
    return out


def sumset_step(s: APSet) -> APSet:
    """``S + S``: weights of RM(r+1, m+1) obtained from spectrum ``S`` of RM(r, m)."""
    return s + s


def upper_bound(r: int, m: int) -> APSet:
    """Every value not excluded by divisibility, Kasami-Tokura or symmetry."""
    if not 2 <= r <= m - 1:
        raise ValueError(f"upper bound needs 2 <= r <= m-1, got r={r}, m={m}")
    n = 1 << m
    d = 1 << (m - r)
    q = 1 << mceliece_exponent(r, m)
    candidates = APSet.interval(0, n, q)
    low = candidates.restrict(1, 2 * d - 1) - kt_admissible(r, m)
    excluded = low | low.reflect(n)
    return candidates - excluded


# ---------------------------------------------------------------------------
# baselines


@dataclass(frozen=True)
class BaselineTable:
    name: str
    r: int
    m: int
    spectrum: APSet
    source: str

    def __post_init__(self) -> None:
        n = 1 << self.m
        if self.spectrum.reflect(n) != self.spectrum:
            raise ValueError(f"baseline {self.name} is not symmetric under w -> {n} - w")
        if 2 <= self.r <= self.m - 1 and not self.spectrum <= upper_bound(self.r, self.m):
            bad = self.spectrum - upper_bound(self.r, self.m)
            raise ValueError(f"baseline {self.name} contains excluded weights {bad}")


def _baselines() -> dict[str, BaselineTable]:
    return {
        t.name: t
        for t in (
            BaselineTable("rm_2_6", 2, 6, APSet.from_values(tables.RM_2_6),
                          "quadratic-form classification; OEIS A001726"),
            BaselineTable("rm_2_7", 2, 7, APSet.from_values(tables.RM_2_7),
                          "quadratic-form classification; OEIS A006006"),
            BaselineTable("rm_3_6", 3, 6, tables.rm_3_6(),
                          "exhaustive computer-algebra enumeration"),
            BaselineTable("rm_4_8", 4, 8, tables.rm_4_8(), "OEIS A146976"),
            BaselineTable("rm_3_8", 3, 8, APSet.from_values(tables.RM_3_8),
                          "OEIS A146953; Kusaka weight distribution tables"),
        )
    }


_BASELINES = _baselines()


def baseline_table(name: str) -> BaselineTable:
    try:
        return _BASELINES[name]
    except KeyError:
        raise KeyError(f"unknown baseline {name!r}; known: {sorted(_BASELINES)}") from None


def baseline_for(r: int, m: int) -> BaselineTable | None:
    return _BASELINES.get(f"rm_{r}_{m}")


# ---------------------------------------------------------------------------
# bounds and results


@dataclass(frozen=True)
class ProvenanceEntry:
    source: str
    weights: APSet

    def to_json(self) -> list[dict]:
        return [
            {
                "weight_range": {"first": s.start, "last": s.last, "step": s.step},
                "source": self.source,
            }
            for s in self.weights.segments
        ]


@dataclass(frozen=True)
class SpectrumBound:
    r: int
    m: int
    lower: APSet
    upper: APSet
    provenance: tuple[ProvenanceEntry, ...] = ()

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def minimum_distance(self) -> int:
        return 1 << (self.m - self.r)

    def source_of(self, w: int) -> str | None:
        for entry in self.provenance:
            if w in entry.weights:
                return entry.source
        return None


@dataclass(frozen=True)
class SpectrumResult:
    bound: SpectrumBound
    status: str  # "proven" | "partial"
    notes: tuple[str, ...] = field(default=())

    @property
    def r(self) -> int:
        return self.bound.r

    @property
    def m(self) -> int:
        return self.bound.m

    @property
    def proven(self) -> bool:
        return self.status == "proven"

    @property
    def lower(self) -> APSet:
        return self.bound.lower

    @property
    def upper(self) -> APSet:
        return self.bound.upper

    @property
    def gap(self) -> APSet:
        return self.bound.upper - self.bound.lower

    @property
    def spectrum(self) -> APSet:
        if not self.proven:
            raise ValueError(f"spectrum of RM({self.r},{self.m}) is only partially known")
        return self.bound.lower

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "status": self.status,
            "lower": self.lower.to_json(),
            "upper": self.upper.to_json(),
            "gap": self.gap.to_json(),
            "provenance": [item for e in self.bound.provenance for item in e.to_json()],
            "notes": list(self.notes),
        }


def _result(r: int, m: int, lower: APSet, upper: APSet, prov, notes=()) -> SpectrumResult:
    if not lower <= upper:
        raise ValueError(
            f"RM({r},{m}): attained weights {lower - upper} violate the upper bound"
        )
    status = "proven" if lower == upper else "partial"
    return SpectrumResult(SpectrumBound(r, m, lower, upper, tuple(prov)), status, tuple(notes))


ExtraWeights = Mapping[str, APSet] | APSet | None


def _normalise_extra(extra: ExtraWeights) -> list[tuple[str, APSet]]:
    if extra is None:
        return []
    if isinstance(extra, APSet):
        return [("extra", extra)]
    return list(extra.items())


def lower_bound(
    r: int,
    m: int,
    bases: Sequence[BaselineTable] = (),
    extra: ExtraWeights = None,
) -> tuple[APSet, tuple[ProvenanceEntry, ...]]:
    """Attained weights of RM(r, m) and, for each, the first source proving it."""
    n = 1 << m
    sources: list[tuple[str, APSet]] = [("trivial", APSet.from_values([0, n]))]
    for table in bases:
        if (table.r, table.m) == (r - 1, m - 1):
            sources.append(("sumset", sumset_step(table.spectrum)))
    if 2 <= r <= m - 1:
        sources.append(("kt-witness", kt_admissible(r, m)))
    sources.extend(_normalise_extra(extra))

    covered = APSet.empty()
    prov: list[ProvenanceEntry] = []

    def add(tag: str, weights: APSet) -> None:
        nonlocal covered
        new = weights - covered
        if new:
            prov.append(ProvenanceEntry(tag, new))
            covered = covered | new

    for tag, weights in sources:
        add(tag, weights)
    add("reflect", covered.reflect(n))
    # cited tables only fill what nothing else establishes
    for table in bases:
        if (table.r, table.m) == (r, m):
            add("baseline", table.spectrum)
    return covered, tuple(prov)


def sandwich(
    r: int,
    m: int,
    bases: Sequence[BaselineTable] = (),
    extra: ExtraWeights = None,
) -> SpectrumResult:
    lower, prov = lower_bound(r, m, bases, extra)
    return _result(r, m, lower, upper_bound(r, m), prov)


# ---------------------------------------------------------------------------
# closed forms


def closed_form_m_minus_3(m: int) -> APSet:
    if m < 6:
        raise ValueError("closed form for RM(m-3, m) needs m >= 6")
    n = 1 << m
    return APSet.from_values([0, 8, n - 8, n]) | APSet.interval(12, n - 12, 2)


def closed_form_m_minus_4(m: int) -> APSet:
    if m < 8:
        raise ValueError("closed form for RM(m-4, m) needs m >= 8")
    n = 1 << m
    return APSet.from_values([0, 16, 24, n - 24, n - 16, n]) | APSet.interval(28, n - 28, 2)


def _even_weights(m: int) -> APSet:
    return APSet.interval(0, 1 << m, 2)


# ---------------------------------------------------------------------------
# witness search


def witness_search(
    r: int, m: int, target: int, budget: int = 200_000, seed: int = 0
) -> BooleanFunction | None:
    """Look for a function of degree <= r whose truth table has weight ``target``.

    Tries, in order: constants, Kasami-Tokura representatives, sums of two
    products, sums of up to four monomials, then a seeded random walk on ANF.
    Complements are checked at every step.  ``None`` proves nothing.
    """
    n = 1 << m
    if not 0 <= target <= n or not 0 <= r <= m:
        raise ValueError("target or order out of range")
    one = BooleanFunction(m, frozenset({0}))
    if target in (0, n):
        return BooleanFunction(m) if target == 0 else one

    def accept(f: BooleanFunction, w: int) -> BooleanFunction | None:
        if w == target:
            return f
        if n - w == target:
            return f ^ one
        return None

    spent = 0
    if 2 <= r <= m - 1:
        for fam, l in kt_witness_parameters(r, m):
            f = kt_witness(r, m, fam, l)
            spent += 1
            if (hit := accept(f, f.weight())) is not None:
                return hit

    # two products sharing ``o`` variables
    for a in range(1, r + 1):
        for b in range(a, r + 1):
            for o in range(0, a + 1):
                if a + b - o > m or (o == a == b):
                    continue
                w = (1 << (m - a)) + (1 << (m - b)) - 2 * (1 << (m - (a + b - o)))
                if target in (w, n - w):
                    f = BooleanFunction.from_monomials(
                        m, [range(1, a + 1), range(a - o + 1, a - o + b + 1)]
                    )
                    return accept(f, f.weight())
    if m > 12:
        return None

    monos = [mono for mono in monomial_masks(r, m) if mono]
    pts = range(n)
    tt = {mono: sum(1 << p for p in pts if p & mono == mono) for mono in monos}
    reps = [(1 << d) - 1 for d in range(1, r + 1)]
    combo_budget = spent + budget // 2
    for k in range(1, 5):
        if spent > combo_budget:
            break
        for first in reps:
            rest = [x for x in monos if x != first]
            for comb in itertools.combinations(rest, k - 1):
                spent += 1
                if spent > combo_budget:
                    break
                v = tt[first]
                for c in comb:
                    v ^= tt[c]
                w = v.bit_count()
                if w == target or n - w == target:
                    f = BooleanFunction(m, frozenset((first,) + comb))
                    return accept(f, w)

    rng = random.Random(seed)
    while spent < budget:
        cur: set[int] = set()
        v = 0
        for _ in range(4000):
            spent += 1
            mono = rng.choice(monos)
            nv = v ^ tt[mono]
            if abs(nv.bit_count() - target) <= abs(v.bit_count() - target) or rng.random() < 0.1:
                v = nv
                cur ^= {mono}
            w = v.bit_count()
            if w == target or n - w == target:
                return accept(BooleanFunction(m, frozenset(cur)), w)
            if spent >= budget:
                break
    return None


# ---------------------------------------------------------------------------
# derivation


def _as_table(res: SpectrumResult) -> BaselineTable:
    return BaselineTable(f"rm_{res.r}_{res.m}", res.r, res.m, res.lower, f"derived ({res.status})")


def _bch_intersection_spectrum(r: int, m: int, n_bch: int, d_bch: int) -> APSet:
    code = rm_code(r, m).intersect(extended_bch_code(n_bch, d_bch))
    return weight_spectrum(code)


def _search_gap(r: int, m: int, gap: APSet, seed: int) -> APSet:
    found = []
    for w in gap.restrict(0, 1 << (m - 1)).members():
        f = witness_search(r, m, w, seed=seed)
        if f is not None:
            found.append(w)
    return APSet.from_values(found)


def derive_spectrum(
    r: int,
    m: int,
    exhaustive_budget: int = EXHAUSTIVE_BUDGET,
    seed: int = 0,
) -> SpectrumResult:
    """Spectrum of RM(r, m) from the best available route.

    Raises ``UnsupportedCodeError`` naming the missing base spectrum when no
    chain back to a known spectrum exists.
    """
    if not 0 <= r <= m:
        raise ValueError(f"RM({r},{m}) needs 0 <= r <= m")
    return _derive(r, m, exhaustive_budget, seed)


@lru_cache(maxsize=None)
def _derive(r: int, m: int, budget: int, seed: int) -> SpectrumResult:
    n = 1 << m
    if r == m:
        s = APSet.interval(0, n)
        return _result(r, m, s, s, [ProvenanceEntry("closed-form", s)])
    if r == 0:
        s = APSet.from_values([0, n])
        return _result(r, m, s, s, [ProvenanceEntry("closed-form", s)])
    if r == 1:
        s = APSet.from_values([0, n // 2, n])
        return _result(r, m, s, s, [ProvenanceEntry("closed-form", s)])
    if r >= m - 2:
        if m <= MACWILLIAMS_MAX_M:
            dual = repetition_distribution(m) if r == m - 1 else rm_first_order_distribution(m)
            dual_dim = rm_dimension(m - r - 1, m)
            spec = macwilliams_transform(dual, dual_dim).spectrum()
            return sandwich(r, m, extra={"macwilliams": spec})
        spec = _even_weights(m)
        if r == m - 2:
            spec = spec - APSet.from_values([2, n - 2])
        return sandwich(r, m, extra={"closed-form": spec})
    if r == 2:
        if rm_dimension(r, m) <= budget:
            s = weight_spectrum(rm_code(r, m))
            return _result(r, m, s, s, [ProvenanceEntry("exhaustive", s)])
        table = baseline_for(r, m)
        if table is None:
            raise UnsupportedCodeError(
                f"RM(2,{m}) has dimension {rm_dimension(2, m)} > 2^{budget} enumeration "
                "budget and no bundled spectrum"
            )
        return _result(r, m, table.spectrum, table.spectrum,
                       [ProvenanceEntry("baseline", table.spectrum)],
                       [f"trusted (cited): {table.source}"])

    own = baseline_for(r, m)
    if own is not None and (r, m) != (3, 8):
        return sandwich(r, m, [own])

    try:
        base = _derive(r - 1, m - 1, budget, seed)
    except UnsupportedCodeError as exc:
        raise UnsupportedCodeError(
            f"RM({r},{m}) needs the spectrum of RM({r - 1},{m - 1}): {exc}"
        ) from None
    extra: dict[str, APSet] = {}
    notes: list[str] = []
    if not base.proven:
        notes.append(f"base RM({r - 1},{m - 1}) is only partially known")
    notes.extend(f"base RM({r - 1},{m - 1}): {note}" for note in base.notes)
    if (r, m) == (3, 8):
        extra["bch-intersection"] = _bch_intersection_spectrum(3, 8, 255, 19)
    if (r, m) == (5, 10):
        extra["bch-intersection"] = _bch_intersection_spectrum(5, 10, 1023, 157)
        extra["witness"] = APSet.from_values([kt_witness(5, 10, "B", 5).weight()])
    res = sandwich(r, m, [_as_table(base)], extra)

    if not res.proven and own is not None:
        # confirm cited weights by explicit functions where possible
        extra["search"] = _search_gap(r, m, res.gap & own.spectrum, seed)
        res = sandwich(r, m, [_as_table(base)], extra)
        if not res.proven:
            res = sandwich(r, m, [_as_table(base), own], extra)
            trusted = APSet.empty().union(
                *(e.weights for e in res.bound.provenance if e.source == "baseline")
            )
            notes.append(f"weights {trusted} trusted (cited): {own.source}")
    if notes:
        res = SpectrumResult(res.bound, res.status, tuple(notes))
    return res


# ---------------------------------------------------------------------------
# conjecture


@dataclass(frozen=True)
class ConjectureReport:
    c: int
    m: int
    status: str  # "conforms" | "nonconforming" | "inconclusive"
    low_part: APSet
    mid_part: APSet
    central_part: APSet
    gap: APSet = field(default_factory=APSet.empty)
    reasons: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "m": self.m,
            "status": self.status,
            "A": self.low_part.to_json(),
            "B": self.mid_part.to_json(),
            "C": self.central_part.to_json(),
            "gap": self.gap.to_json(),
            "reasons": list(self.reasons),
        }


def conjecture_check(c: int, m: int, b_set: APSet | None = None) -> ConjectureReport:
    """Compare the spectrum of RM(m-c, m) with the shape
    ``{0} ∪ A ∪ B ∪ C ∪ B' ∪ A' ∪ {2^m}`` (primes are reflections).

    ``A`` must be the Kasami-Tokura weights, ``C`` a run of consecutive even
    integers.  ``B`` is taken from ``b_set`` when given, otherwise read off the
    spectrum.  Only the lower half is decomposed; the upper half must mirror it.
    """
    if c < 1 or m <= 2 * c - 1:
        raise ValueError(f"conjecture needs c >= 1 and m > 2c-1 (c={c}, m={m})")
    n = 1 << m
    half = n // 2
    d = 1 << c
    res = derive_spectrum(m - c, m)
    if not res.proven:
        return ConjectureReport(c, m, "inconclusive", APSet.empty(), APSet.empty(),
                                APSet.empty(), res.gap,
                                (f"spectrum of RM({m - c},{m}) is only partially known",))
    spec = res.spectrum
    reasons = []
    if spec.reflect(n) != spec:
        reasons.append("spectrum is not symmetric")
    if spec.restrict(1, d - 1):
        reasons.append(f"weights below {d}: {spec.restrict(1, d - 1)}")
    a_obs = spec.restrict(d, min(2 * d - 1, half))
    a_expected = (kt_admissible(m - c, m) if m - c >= 2 else APSet.from_values([d])).restrict(0, half)
    if a_obs != a_expected:
        reasons.append(f"A = {a_obs} differs from Kasami-Tokura weights {a_expected}")
    b_obs = spec.restrict(2 * d, min(3 * d - 1, half))
    if b_set is not None and b_obs != b_set.restrict(0, half):
        reasons.append(f"B = {b_obs} differs from supplied set {b_set}")
    c_obs = spec.restrict(3 * d, n - 3 * d)
    if c_obs and c_obs != APSet.interval(c_obs.min(), c_obs.max(), 2):
        reasons.append(f"C = {c_obs} is not a run of consecutive even integers")
    rebuilt = APSet.from_values([0, n]) | a_obs | b_obs | c_obs
    rebuilt = rebuilt | (a_obs | b_obs).reflect(n)
    if rebuilt != spec:
        reasons.append(f"weights outside the shape: {spec - rebuilt}")
    status = "nonconforming" if reasons else "conforms"
    return ConjectureReport(c, m, status, a_obs, b_obs, c_obs, APSet.empty(), tuple(reasons))
