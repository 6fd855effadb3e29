"""Exhaustive weight enumeration and the MacWilliams transform."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np
from numba import njit
from numba.cpython.unsafe.numbers import trailing_zeros

from .apset import APSet
from .gf2 import LinearCode

DEFAULT_BUDGET = 30
_MAX_SPLIT = 10  # more prefixes only add per-job overhead


class EnumerationBudgetError(ValueError):
    def __init__(self, dimension: int, budget: int) -> None:
        super().__init__(
            f"code dimension {dimension} exceeds the enumeration budget of 2^{budget} codewords"
        )
        self.dimension = dimension
        self.budget = budget


@dataclass(frozen=True)
class Distribution:
    """Weight distribution ``[(w, A_w), ...]`` with A_w > 0, w increasing."""

    n: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ws = [w for w, _ in self.entries]
        if ws != sorted(set(ws)):
            raise ValueError("weights must be strictly increasing")
        if any(not 0 <= w <= self.n for w in ws) or any(a <= 0 for _, a in self.entries):
            raise ValueError("weights must lie in [0, n] with positive counts")

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[int, int] | Iterable[int]) -> "Distribution":
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            items = enumerate(counts)
        return cls(n, tuple((int(w), int(a)) for w, a in sorted(items) if a))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, w: int) -> int:
        return self.as_dict().get(w, 0)

    @property
    def total(self) -> int:
        return sum(a for _, a in self.entries)

    def spectrum(self) -> APSet:
        return APSet.from_values(w for w, _ in self.entries)

    def to_csv(self) -> str:
        return "weight,count\n" + "".join(f"{w},{a}\n" for w, a in self.entries)

    def to_magma(self) -> str:
        return "[ " + ", ".join(f"<{w}, {a}>" for w, a in self.entries) + " ]"

    @classmethod
    def from_magma(cls, n: int, text: str) -> "Distribution":
        import re

        pairs = re.findall(r"<\s*(\d+)\s*,\s*(\d+)\s*>", text)
        return cls(n, tuple((int(w), int(a)) for w, a in pairs))

    def to_json(self) -> dict:
        # counts as strings would be safer for JS consumers; Python json keeps ints exact
        return {"n": self.n, "distribution": [[w, a] for w, a in self.entries]}


# ---------------------------------------------------------------------------
# Gray-code engine


@njit(inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(nogil=True, cache=True)
def _gray_kernel(rows, footprint, fp_len, start, nbits, counts):
    """Accumulate weights of ``start + span(rows[:nbits])`` into counts."""
    nw = rows.shape[1]
    cur = start.copy()
    w = 0
    for t in range(nw):
        w += _popcount(cur[t])
    counts[w] += 1
    total = np.int64(1) << nbits
    for i in range(1, total):
        j = trailing_zeros(np.uint64(i))
        for f in range(fp_len[j]):
            t = footprint[j, f]
            old = _popcount(cur[t])
            cur[t] ^= rows[j, t]
            w += _popcount(cur[t]) - old
        counts[w] += 1


def _footprints(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    nz = rows != 0
    lens = nz.sum(axis=1).astype(np.int64)
    fp = np.zeros((rows.shape[0], max(1, int(lens.max(initial=0)))), dtype=np.int64)
    for i, row in enumerate(nz):
        idx = np.flatnonzero(row)
        fp[i, : idx.size] = idx
    return fp, lens


def weight_counts(
    code: LinearCode,
    budget: int = DEFAULT_BUDGET,
    split_bits: int = 0,
    threads: int = 1,
) -> np.ndarray:
    """Raw ``counts[w]`` array over all ``2^k`` codewords.

    The message space is split by fixing the top ``split_bits`` message bits;
    each prefix gives an independent Gray-code sub-enumeration and the
    per-prefix histograms are summed.
    """
    k = code.dimension
    if k > budget:
        raise EnumerationBudgetError(k, budget)
    data = np.ascontiguousarray(code.generators.data, dtype=np.uint64)
    nw = data.shape[1]
    split_bits = max(0, min(split_bits, k, _MAX_SPLIT))
    low = k - split_bits
    rows = data[:low] if low else np.zeros((1, nw), np.uint64)
    fp, lens = _footprints(rows)
    top = data[low:]

    def job(prefix: int) -> np.ndarray:
        start = np.zeros(nw, np.uint64)
        for b in range(split_bits):
            if prefix >> b & 1:
                start ^= top[b]
        counts = np.zeros(code.n + 1, np.int64)
        _gray_kernel(rows, fp, lens, start, low, counts)
        return counts

    prefixes = range(1 << split_bits)
    if threads > 1 and split_bits:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(job, prefixes))
    else:
        parts = [job(p) for p in prefixes]
    return np.sum(parts, axis=0)


def weight_distribution(
    code: LinearCode, budget: int = DEFAULT_BUDGET, split_bits: int = 0, threads: int = 1
) -> Distribution:
    counts = weight_counts(code, budget, split_bits, threads)
    return Distribution.from_counts(code.n, [int(a) for a in counts])


def weight_spectrum(code: LinearCode, budget: int = DEFAULT_BUDGET, threads: int = 1) -> APSet:
    counts = weight_counts(code, budget, split_bits=min(4, code.dimension) if threads > 1 else 0,
                           threads=threads)
    return APSet.from_values(np.flatnonzero(counts).tolist())


def naive_distribution(code: LinearCode) -> Distribution:
    """Re-encode every message independently; slow reference for small codes."""
    rows = [r.to_int() for r in code.generators]
    counts: dict[int, int] = {}
    for msg in range(1 << len(rows)):
        word = 0
        for i, row in enumerate(rows):
            if msg >> i & 1:
                word ^= row
        w = bin(word).count("1")
        counts[w] = counts.get(w, 0) + 1
    return Distribution.from_counts(code.n, counts)


# ---------------------------------------------------------------------------
# MacWilliams


def krawtchouk(n: int, k: int, i: int) -> int:
    """K_k(i) = sum_j (-1)^j C(i, j) C(n - i, k - j)."""
    if not (0 <= k <= n and 0 <= i <= n):
        raise ValueError("krawtchouk arguments must lie in [0, n]")
    return sum(
        (-1) ** j * math.comb(i, j) * math.comb(n - i, k - j)
        for j in range(max(0, k - (n - i)), min(i, k) + 1)
    )


def _krawtchouk_column(n: int, i: int) -> list[int]:
    """[K_0(i), ..., K_n(i)] by the three-term recurrence in k."""
    col = [1]
    if n == 0:
        return col
    col.append(n - 2 * i)
    for k in range(1, n):
        num = (n - 2 * i) * col[k] - (n - k + 1) * col[k - 1]
        col.append(num // (k + 1))
    return col


def macwilliams_transform(dist: Distribution, dim: int) -> Distribution:
    """Distribution of the dual of a dimension-``dim`` code with distribution ``dist``."""
    if dist.total != 1 << dim:
        raise ValueError(f"distribution sums to {dist.total}, expected 2^{dim}")
    n = dist.n
    acc = [0] * (n + 1)
    for i, a in dist.entries:
        for k, kv in enumerate(_krawtchouk_column(n, i)):
            acc[k] += a * kv
    out = {}
    for k, v in enumerate(acc):
        q, rem = divmod(v, 1 << dim)
        if rem or q < 0:
            raise ValueError(f"inconsistent input: A'_{k} = {v}/2^{dim} is not a nonnegative integer")
        if q:
            out[k] = q
    return Distribution.from_counts(n, out)


def rm_first_order_distribution(m: int) -> Distribution:
    """RM(1, m): weights 0, 2^(m-1) and 2^m."""
    n = 1 << m
    if m == 0:
        return Distribution.from_counts(1, {0: 1, 1: 1})
    return Distribution.from_counts(n, {0: 1, n // 2: 2 * n - 2, n: 1})


def repetition_distribution(m: int) -> Distribution:
    n = 1 << m
    return Distribution.from_counts(n, {0: 1, n: 1})
