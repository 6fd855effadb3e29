"""Code constructions: Boolean functions, Reed-Muller and BCH codes.

Points of ``F_2^m`` are ordered as the integers ``0 .. 2^m - 1``; bit ``j`` of
the integer is the value of variable ``x_{j+1}``.  Every truth table and RM
generator row in the package uses this ordering.

Polynomials over GF(2) are Python ints (bit ``i`` = coefficient of ``x^i``).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .gf2 import BitMatrix, BitVector, LinearCode, pack_bits

# Conway polynomials: the default defining polynomials of common computer
# algebra systems.  BCH codes read on RM coordinates depend on this choice.
DEFAULT_PRIMITIVE = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,  # x^4+x+1
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,  # x^8+x^4+x^3+x^2+1
    9: 0b1000010001,
    10: 0b10001101111,  # x^10+x^6+x^5+x^3+x^2+x+1
    11: 0b100000000101,
    12: 0b1000011101011,
}


# ---------------------------------------------------------------------------
# Boolean functions


def _mask(vars_: Iterable[int]) -> int:
    m = 0
    for v in vars_:
        m |= 1 << (v - 1)
    return m


@dataclass(frozen=True)
class BooleanFunction:
    """ANF over ``m`` variables; each monomial is a bitmask of its variables.

    Monomials combine with XOR, so adding a monomial twice cancels it.
    """

    m: int
    monomials: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if any(mono >> self.m for mono in self.monomials):
            raise ValueError(f"monomial uses a variable beyond x{self.m}")

    @classmethod
    def from_monomials(cls, m: int, monomials: Iterable[Iterable[int]]) -> "BooleanFunction":
        """Build from variable-index tuples (1-based); repeats cancel."""
        acc: set[int] = set()
        for mono in monomials:
            acc ^= {_mask(mono)}
        return cls(m, frozenset(acc))

    @classmethod
    def product(cls, m: int, variables: Iterable[int]) -> "BooleanFunction":
        return cls(m, frozenset({_mask(variables)}))

    @property
    def degree(self) -> int:
        return max((bin(mono).count("1") for mono in self.monomials), default=0)

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        self._check(other)
        return BooleanFunction(self.m, self.monomials ^ other.monomials)

    __add__ = __xor__

    def __mul__(self, other: "BooleanFunction") -> "BooleanFunction":
        self._check(other)
        acc: set[int] = set()
        for a in self.monomials:
            for b in other.monomials:
                acc ^= {a | b}
        return BooleanFunction(self.m, frozenset(acc))

    def _check(self, other: "BooleanFunction") -> None:
        if self.m != other.m:
            raise ValueError("functions have different numbers of variables")

    def truth_table(self) -> np.ndarray:
        points = np.arange(1 << self.m, dtype=np.int64)
        tt = np.zeros(1 << self.m, dtype=np.uint8)
        for mono in self.monomials:
            tt ^= ((points & mono) == mono).astype(np.uint8)
        return tt

    def evaluate(self) -> BitVector:
        tt = self.truth_table()
        return BitVector(len(tt), pack_bits(tt))

    def weight(self) -> int:
        return int(self.truth_table().sum())

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = []
        for mono in sorted(self.monomials, key=lambda x: (bin(x).count("1"), _vars(x))):
            vs = _vars(mono)
            terms.append("*".join(f"x{v}" for v in vs) if vs else "1")
        return " + ".join(terms)

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> "BooleanFunction":
        """Parse ``"x1*x2*x3 + x4*x5*x6"``; ``"1"`` is the constant, ``"0"`` zero."""
        monos: list[tuple[int, ...]] = []
        top = 0
        for term in text.split("+"):
            term = term.strip()
            if term in ("", "0"):
                continue
            if term == "1":
                monos.append(())
                continue
            vs = []
            for factor in term.split("*"):
                match = re.fullmatch(r"\s*x_?(\d+)\s*", factor)
                if not match or int(match.group(1)) < 1:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                vs.append(int(match.group(1)))
            top = max(top, *vs)
            monos.append(tuple(vs))
        return cls.from_monomials(top if m is None else m, monos)


def _vars(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def evaluate(f: BooleanFunction) -> BitVector:
    return f.evaluate()


# ---------------------------------------------------------------------------
# Reed-Muller codes


def rm_dimension(r: int, m: int) -> int:
    return sum(math.comb(m, i) for i in range(r + 1))


def monomial_masks(r: int, m: int) -> list[int]:
    """Monomials of degree <= r, by degree then lexicographically."""
    return [
        _mask(c) for d in range(r + 1) for c in itertools.combinations(range(1, m + 1), d)
    ]


@lru_cache(maxsize=64)
def rm_code(r: int, m: int) -> LinearCode:
    """RM(r, m) with generator rows the evaluations of all monomials of degree <= r."""
    if not (0 <= m and 0 <= r <= m):
        raise ValueError(f"RM({r},{m}) needs 0 <= r <= m")
    points = np.arange(1 << m, dtype=np.int64)
    rows = np.array(
        [((points & mono) == mono) for mono in monomial_masks(r, m)], dtype=np.uint8
    )
    return LinearCode(1 << m, BitMatrix.from_array(rows), check=False)


# ---------------------------------------------------------------------------
# GF(2)[x] helpers


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(p.bit_length() - 1, -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


# ---------------------------------------------------------------------------
# GF(2^t)


class ExtField:
    """GF(2^t) with elements as ints in the polynomial basis; alpha = 2."""

    def __init__(self, t: int, poly: int | None = None) -> None:
        if t < 1:
            raise ValueError("field degree must be positive")
        poly = DEFAULT_PRIMITIVE.get(t) if poly is None else poly
        if poly is None:
            poly = find_primitive_polynomial(t)
        if poly.bit_length() != t + 1:
            raise ValueError(f"{poly_str(poly)} does not have degree {t}")
        self.t = t
        self.poly = poly
        self.order = (1 << t) - 1
        exp = np.zeros(2 * self.order, dtype=np.int64)
        log = np.full(1 << t, -1, dtype=np.int64)
        x = 1
        for i in range(self.order):
            if log[x] != -1:
                raise ValueError(f"{poly_str(poly)} is not primitive")
            exp[i] = x
            log[x] = i
            x <<= 1
            if x >> t:
                x ^= poly
        if x != 1:
            raise ValueError(f"{poly_str(poly)} is not primitive")
        exp[self.order:] = exp[: self.order]
        self.exp = exp
        self.log = log

    def alpha_pow(self, e: int) -> int:
        return int(self.exp[e % self.order])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def poly_eval(self, p: int, x: int) -> int:
        """Evaluate a GF(2)[x] polynomial at a field element (Horner)."""
        acc = 0
        for i in range(p.bit_length() - 1, -1, -1):
            acc = self.mul(acc, x) ^ (p >> i & 1)
        return acc

    def __repr__(self) -> str:
        return f"ExtField(2^{self.t}, {poly_str(self.poly)})"


def _is_primitive(poly: int, t: int) -> bool:
    try:
        ExtField(t, poly)
    except ValueError:
        return False
    return True


def find_primitive_polynomial(t: int) -> int:
    for poly in range((1 << t) | 1, 1 << (t + 1), 2):
        if _is_primitive(poly, t):
            return poly
    raise ValueError(f"no primitive polynomial of degree {t}")


def cyclotomic_cosets(n: int) -> list[list[int]]:
    """2-cyclotomic cosets mod n, each listed in doubling order."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"cyclotomic cosets need odd n, got {n}")
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        coset = []
        x = i
        while not seen[x]:
            seen[x] = True
            coset.append(x)
            x = 2 * x % n
        out.append(coset)
    return out


def coset_of(e: int, n: int) -> list[int]:
    coset = [e % n]
    x = 2 * e % n
    while x != coset[0]:
        coset.append(x)
        x = 2 * x % n
    return coset


def minimal_polynomial(field_: ExtField, e: int) -> int:
    """Minimal polynomial of alpha^e over GF(2)."""
    coeffs = [1]  # over GF(2^t), low degree first
    for j in coset_of(e, field_.order):
        root = field_.alpha_pow(j)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= field_.mul(c, root)
        coeffs = nxt
    if any(c not in (0, 1) for c in coeffs):
        raise AssertionError("minimal polynomial has coefficients outside GF(2)")
    return sum(c << i for i, c in enumerate(coeffs))


# ---------------------------------------------------------------------------
# BCH codes


@dataclass(frozen=True)
class CyclicCodeSpec:
    n: int
    designed_distance: int
    generator: int
    gf: ExtField = field(repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return self.n - (self.generator.bit_length() - 1)

    def generator_matrix(self) -> BitMatrix:
        deg = self.generator.bit_length() - 1
        g = np.array([self.generator >> i & 1 for i in range(deg + 1)], dtype=np.uint8)
        rows = np.zeros((self.dimension, self.n), dtype=np.uint8)
        for i in range(self.dimension):
            rows[i, i : i + deg + 1] = g
        return BitMatrix.from_array(rows)


def _field_for_length(n: int, poly: int | None) -> ExtField:
    t = (n + 1).bit_length() - 1
    if n < 3 or (1 << t) - 1 != n:
        raise ValueError(f"BCH length must be 2^t - 1, got {n}")
    return ExtField(t, poly)


def bch_spec(n: int, d: int, poly: int | None = None) -> CyclicCodeSpec:
    """Narrow-sense BCH generator: lcm of minimal polynomials of alpha^1..alpha^(d-1)."""
    f = _field_for_length(n, poly)
    if not 2 <= d <= n:
        raise ValueError(f"designed distance {d} outside [2, {n}]")
    g = 1
    seen: set[int] = set()
    for j in range(1, d):
        if j in seen:
            continue
        seen.update(coset_of(j, n))
        g = poly_mul(g, minimal_polynomial(f, j))
    return CyclicCodeSpec(n, d, g, f)


def bch_code(n: int, d: int, poly: int | None = None) -> LinearCode:
    spec = bch_spec(n, d, poly)
    return LinearCode(n, spec.generator_matrix(), check=False)


def extended_bch_code(n: int, d: int, poly: int | None = None) -> LinearCode:
    """Extended BCH with cyclic coordinate i at position i and parity last.

    Read on the RM point set, cyclic coordinate ``i`` sits at the point whose
    integer label is ``i`` and the parity bit at the all-ones point.  This is
    the convention under which RM(3,8) meets the extended BCH(255,19) in a
    26-dimensional code.
    """
    return bch_code(n, d, poly).extend()


def extended_bch_rm_aligned(n: int, d: int, poly: int | None = None) -> LinearCode:
    """Extended BCH placed on the field points of GF(2^t).

    Cyclic coordinate ``i`` goes to the RM position of ``alpha^i`` (written in
    the polynomial basis, bit ``j`` = coefficient of ``alpha^j``) and the parity
    coordinate to the point 0.  With this placement RM(r,t) is contained in
    the extended BCH code of designed distance ``2^(t-r) - 1``.
    """
    f = _field_for_length(n, poly)
    perm = [f.alpha_pow(i) for i in range(n)] + [0]
    return extended_bch_code(n, d, f.poly).permute(perm)
