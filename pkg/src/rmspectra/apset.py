"""Finite integer sets stored as arithmetic-progression segments.

Weight spectra of codes of length ``2**m`` are mostly long runs of even
numbers with a few isolated values near the ends, so storing them as
progressions keeps them tiny even for ``m = 20``.

The canonical form is the greedy left-to-right decomposition of the sorted
elements: a run starts at the smallest unused element, takes its step from
the next element and is extended while the gap stays the same.  Because it
is a function of the underlying set alone, two ``APSet`` values are equal
as sets iff their segment tuples are identical.
"""

from __future__ import annotations

import bisect
import math
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

DEFAULT_EXPANSION_BOUND = 1 << 26
MAX_ELEMENT = (1 << 63) - 1

# sumset falls back to pairwise expansion only below this many pairs
_BRUTE_SUMSET_PAIRS = 1 << 16
_SPLIT_COUNT = 16


class ExpansionLimitError(ValueError):
    """Raised when an operation would have to list too many elements."""


class Segment(NamedTuple):
    start: int
    step: int
    count: int

    @property
    def last(self) -> int:
        return self.start + (self.count - 1) * self.step

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < self.start or x > self.last:
            return False
        return (x - self.start) % self.step == 0

    def values(self) -> range:
        return range(self.start, self.last + 1, self.step)


def _make_segment(start: int, step: int, count: int) -> Segment:
    if count < 1:
        raise ValueError("segment count must be positive")
    if start < 0:
        raise ValueError(f"negative element {start}")
    if count == 1:
        step = 1
    elif step < 1:
        raise ValueError("segment step must be positive")
    seg = Segment(start, step, count)
    if seg.last > MAX_ELEMENT:
        raise OverflowError(f"element {seg.last} exceeds the 63-bit range")
    return seg


class _Builder:
    """Greedy canonicaliser fed with sorted, strictly increasing input."""

    def __init__(self) -> None:
        self.out: list[Segment] = []
        self._start = self._step = self._count = 0
        self._last = -1

    def _close(self) -> None:
        if self._count:
            self.out.append(_make_segment(self._start, self._step, self._count))

    def value(self, x: int) -> None:
        if x <= self._last and self._count:
            raise AssertionError("builder input must be strictly increasing")
        if self._count == 0:
            self._start, self._step, self._count = x, 1, 1
        elif self._count == 1:
            self._step, self._count = x - self._start, 2
        elif x - self._last == self._step:
            self._count += 1
        else:
            self._close()
            self._start, self._step, self._count = x, 1, 1
        self._last = x

    def segment(self, start: int, step: int, count: int) -> None:
        head = min(count, 3)
        for i in range(head):
            self.value(start + i * step)
        if count > 3:
            # after three equally spaced values the open run has this step
            self._count += count - 3
            self._last = start + (count - 1) * step

    def finish(self) -> tuple[Segment, ...]:
        self._close()
        self._count = 0
        return tuple(self.out)


def _first_at_or_after(seg: Segment, x: int) -> int:
    if x <= seg.start:
        return seg.start
    return seg.start + -(-(x - seg.start) // seg.step) * seg.step


def _combine(
    operands: Sequence[Sequence[Segment]],
    pred: Callable[[tuple[bool, ...]], bool],
    bound: int,
) -> tuple[Segment, ...]:
    """Evaluate a boolean set expression over unions of segments.

    Each operand is a collection of (possibly overlapping) segments standing
    for their union.  Between consecutive segment boundaries membership is
    periodic, so each elementary interval is resolved either as one
    progression or, when the pattern is irregular, by explicit expansion.
    """
    if pred(tuple(False for _ in operands)):
        raise ValueError("set expression must be empty outside its operands")
    tagged = []
    for j, segs in enumerate(operands):
        for seg in segs:
            if 1 < seg.count <= _SPLIT_COUNT:
                # sparse runs would otherwise inflate the common period
                tagged.extend((Segment(x, 1, 1), j) for x in seg.values())
            else:
                tagged.append((seg, j))
    if not tagged:
        return ()
    cuts = sorted({s.start for s, _ in tagged} | {s.last + 1 for s, _ in tagged})
    starts: dict[int, list[tuple[Segment, int]]] = {}
    for item in tagged:
        starts.setdefault(item[0].start, []).append(item)

    builder = _Builder()
    active: list[tuple[Segment, int]] = []
    expanded = 0
    nops = len(operands)
    for p, q in zip(cuts, cuts[1:]):
        active = [a for a in active if a[0].last >= p]
        active.extend(starts.get(p, ()))
        if not active:
            continue

        def member(x: int) -> bool:
            flags = [False] * nops
            for seg, j in active:
                if not flags[j] and (x - seg.start) % seg.step == 0:
                    flags[j] = True
            return pred(tuple(flags))

        period = 1
        for seg, _ in active:
            period = math.lcm(period, seg.step)
        if 2 * period <= q - p:
            window = sorted(
                {x for seg, _ in active for x in range(_first_at_or_after(seg, p), p + period, seg.step)}
            )
            offsets = [x - p for x in window if member(x)]
            if not offsets:
                continue
            gap = period // len(offsets)
            if len(offsets) * gap == period and all(
                b - a == gap for a, b in zip(offsets, offsets[1:])
            ):
                first = p + offsets[0]
                builder.segment(first, gap, (q - 1 - first) // gap + 1)
                continue
        candidates = sorted(
            {x for seg, _ in active for x in range(_first_at_or_after(seg, p), q, seg.step)}
        )
        expanded += len(candidates)
        if expanded > bound:
            raise ExpansionLimitError(
                f"irregular set pattern needs more than {bound} explicit elements"
            )
        for x in candidates:
            if member(x):
                builder.value(x)
    return builder.finish()


class APSet:
    """Immutable finite set of nonnegative integers."""

    __slots__ = ("_segments", "_starts", "_size")

    def __init__(self, segments: Iterable[Segment] = ()) -> None:
        # Trusted constructor: segments must already be canonical.
        self._segments = tuple(segments)
        self._starts = [s.start for s in self._segments]
        self._size = sum(s.count for s in self._segments)

    # construction -----------------------------------------------------

    @classmethod
    def empty(cls) -> "APSet":
        return cls(())

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "APSet":
        b = _Builder()
        for x in sorted(set(int(v) for v in values)):
            if x < 0 or x > MAX_ELEMENT:
                raise ValueError(f"element {x} outside [0, 2^63)")
            b.value(x)
        return cls(b.finish())

    @classmethod
    def from_segments(
        cls, segments: Iterable[tuple[int, int, int]], bound: int = DEFAULT_EXPANSION_BOUND
    ) -> "APSet":
        """Union of arbitrary (overlapping, interleaving) progressions."""
        segs = [_make_segment(*s) for s in segments]
        return cls(_combine([segs], any, bound))

    @classmethod
    def interval(cls, lo: int, hi: int, step: int = 1) -> "APSet":
        """``{lo, lo+step, ...}`` up to and including ``hi`` when it is hit."""
        if hi < lo:
            return cls.empty()
        return cls.from_segments([(lo, step, (hi - lo) // step + 1)])

    # queries ----------------------------------------------------------

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segments

    def __len__(self) -> int:
        return self._size

    @property
    def cardinality(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def min(self) -> int:
        if not self._segments:
            raise ValueError("min() of empty APSet")
        return self._segments[0].start

    def max(self) -> int:
        if not self._segments:
            raise ValueError("max() of empty APSet")
        return self._segments[-1].last

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        i = bisect.bisect_right(self._starts, x) - 1
        return i >= 0 and x in self._segments[i]

    def contains(self, x: int) -> bool:
        return x in self

    def members(self, bound: int = DEFAULT_EXPANSION_BOUND) -> Iterator[int]:
        if self._size > bound:
            raise ExpansionLimitError(
                f"set has {self._size} elements, expansion bound is {bound}"
            )
        for seg in self._segments:
            yield from seg.values()

    def __iter__(self) -> Iterator[int]:
        return self.members()

    def to_list(self, bound: int = DEFAULT_EXPANSION_BOUND) -> list[int]:
        return list(self.members(bound))

    def equals(self, other: "APSet") -> bool:
        return self == other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, APSet):
            return NotImplemented
        return self._segments == other._segments

    def __hash__(self) -> int:
        return hash(self._segments)

    def issubset(self, other: "APSet") -> bool:
        return not self.difference(other)

    def __le__(self, other: "APSet") -> bool:
        return self.issubset(other)

    def isdisjoint(self, other: "APSet") -> bool:
        return not self.intersection(other)

    # algebra ----------------------------------------------------------

    def union(self, *others: "APSet") -> "APSet":
        ops = [self._segments, *(o._segments for o in others)]
        return APSet(_combine(ops, any, DEFAULT_EXPANSION_BOUND))

    def difference(self, other: "APSet") -> "APSet":
        return APSet(
            _combine([self._segments, other._segments], lambda f: f[0] and not f[1],
                     DEFAULT_EXPANSION_BOUND)
        )

    def intersection(self, other: "APSet") -> "APSet":
        return APSet(_combine([self._segments, other._segments], all, DEFAULT_EXPANSION_BOUND))

    __or__ = union
    __sub__ = difference
    __and__ = intersection

    def restrict(self, lo: int, hi: int) -> "APSet":
        """Elements in the closed range ``[lo, hi]``."""
        return self & APSet.interval(max(lo, 0), hi)

    def shift(self, k: int) -> "APSet":
        return APSet(_make_segment(s.start + k, s.step, s.count) for s in self._segments)

    def reflect(self, n: int) -> "APSet":
        """``{n - x : x in self}``; every element must be at most ``n``."""
        if self and self.max() > n:
            raise ValueError(f"element {self.max()} exceeds reflection point {n}")
        b = _Builder()
        for s in reversed(self._segments):
            b.segment(n - s.last, s.step, s.count)
        return APSet(b.finish())

    def filter_multiples(self, q: int) -> "APSet":
        if q < 1:
            raise ValueError("modulus must be positive")
        if q == 1 or not self:
            return self
        return self & APSet.interval(0, self.max(), q)

    def sumset(self, other: "APSet") -> "APSet":
        if not self or not other:
            return APSet.empty()
        if self.max() + other.max() > MAX_ELEMENT:
            raise OverflowError("sumset exceeds the 63-bit range")
        if self._size * other._size <= _BRUTE_SUMSET_PAIRS:
            mine = self.to_list()
            return APSet.from_values(x + y for x in mine for y in other.members())
        pieces: list[Segment] = []
        for a in self._segments:
            for b in other._segments:
                pieces.extend(_segment_sum(a, b))
        return APSet(_combine([pieces], any, DEFAULT_EXPANSION_BOUND))

    __add__ = sumset

    # presentation -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "segments": [
                {"start": s.start, "step": s.step, "count": s.count} for s in self._segments
            ],
            "cardinality": self._size,
        }

    @classmethod
    def from_json(cls, data: dict) -> "APSet":
        return cls.from_segments((d["start"], d["step"], d["count"]) for d in data["segments"])

    def __repr__(self) -> str:
        return f"APSet({self})"

    def __str__(self) -> str:
        parts = []
        for s in self._segments:
            if s.count <= 3:
                parts.extend(str(x) for x in s.values())
            else:
                parts.append(f"{s.start}..{s.last}/{s.step}")
        return "{" + ", ".join(parts) + "}"


def _segment_sum(a: Segment, b: Segment) -> list[Segment]:
    if a.count == 1 or b.count == 1:
        base, other = (a, b) if b.count == 1 else (b, a)
        return [_make_segment(base.start + other.start, base.step, base.count)]
    if a.step == b.step:
        return [_make_segment(a.start + b.start, a.step, a.count + b.count - 1)]
    if a.step > b.step:
        a, b = b, a
    q, rem = divmod(b.step, a.step)
    if rem == 0 and a.count >= q:
        return [_make_segment(a.start + b.start, a.step, a.count + (b.count - 1) * q)]
    if a.count <= b.count:
        return [_make_segment(a.start + i * a.step + b.start, b.step, b.count) for i in range(a.count)]
    return [_make_segment(b.start + j * b.step + a.start, a.step, a.count) for j in range(b.count)]
