"""Linear algebra over GF(2) on bit-packed numpy arrays.

Bit layout: coordinate ``i`` of a length-``n`` vector lives in word
``i // 64`` at bit ``i % 64`` of a ``uint64`` array.  Unused high bits of the
last word are always zero.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

WORD_BITS = 64
_ONE = np.uint64(1)


def nwords(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


def pack_bits(bits) -> np.ndarray:
    """Pack a 0/1 array (last axis = coordinates) into uint64 words."""
    a = np.asarray(bits, dtype=np.uint8) & 1
    n = a.shape[-1]
    pad = nwords(n) * WORD_BITS - n
    if pad:
        a = np.concatenate([a, np.zeros(a.shape[:-1] + (pad,), np.uint8)], axis=-1)
    packed = np.packbits(a, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    w = np.ascontiguousarray(np.asarray(words, dtype="<u8"))
    return np.unpackbits(w.view(np.uint8), axis=-1, bitorder="little")[..., :n]


def _popcount_words(words: np.ndarray) -> int:
    return int(np.unpackbits(np.ascontiguousarray(words).view(np.uint8)).sum())


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.uint64)
    a.flags.writeable = False
    return a


class BitVector:
    __slots__ = ("length", "words")

    def __init__(self, length: int, words: np.ndarray) -> None:
        if words.shape != (nwords(length),):
            raise ValueError("word array does not match vector length")
        self.length = length
        self.words = _frozen(words)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, np.zeros(nwords(n), np.uint64))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        bits = np.asarray(bits, dtype=np.uint8)
        return cls(len(bits), pack_bits(bits))

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        s = s.strip()
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls.from_bits([int(ch) for ch in s])

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitVector":
        if value >> n:
            raise ValueError("integer has bits beyond the vector length")
        words = [(value >> (WORD_BITS * i)) & 0xFFFFFFFFFFFFFFFF for i in range(nwords(n))]
        return cls(n, np.array(words, dtype=np.uint64))

    def to_bits(self) -> np.ndarray:
        return unpack_bits(self.words, self.length)

    def to_int(self) -> int:
        return sum(int(w) << (WORD_BITS * i) for i, w in enumerate(self.words))

    def weight(self) -> int:
        return _popcount_words(self.words)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return int((self.words[i // WORD_BITS] >> np.uint64(i % WORD_BITS)) & _ONE)

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.words ^ other.words)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.words & other.words)

    def dot(self, other: "BitVector") -> int:
        return (self & other).weight() & 1

    def _check(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __str__(self) -> str:
        return "".join(map(str, self.to_bits()))

    def __repr__(self) -> str:
        s = str(self)
        return f"BitVector({s if len(s) <= 64 else s[:61] + '...'})"


class BitMatrix:
    """Rows of equal length, stored as a ``(rows, words)`` uint64 array."""

    __slots__ = ("ncols", "data")

    def __init__(self, ncols: int, data: np.ndarray) -> None:
        data = np.asarray(data, dtype=np.uint64).reshape(-1, nwords(ncols))
        self.ncols = ncols
        self.data = _frozen(data)

    @classmethod
    def empty(cls, ncols: int) -> "BitMatrix":
        return cls(ncols, np.zeros((0, nwords(ncols)), np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_array(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_array(cls, a) -> "BitMatrix":
        a = np.atleast_2d(np.asarray(a, dtype=np.uint8))
        return cls(a.shape[1], pack_bits(a))

    @classmethod
    def from_rows(cls, rows: Iterable[BitVector], ncols: int | None = None) -> "BitMatrix":
        rows = list(rows)
        if not rows:
            if ncols is None:
                raise ValueError("ncols needed for a matrix without rows")
            return cls.empty(ncols)
        n = rows[0].length
        if any(r.length != n for r in rows):
            raise ValueError("rows differ in length")
        return cls(n, np.stack([r.words for r in rows]))

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    def __len__(self) -> int:
        return self.nrows

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.data[i].copy())

    def __iter__(self) -> Iterator[BitVector]:
        return (self.row(i) for i in range(self.nrows))

    def to_array(self) -> np.ndarray:
        return unpack_bits(self.data, self.ncols)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.ncols, np.vstack([self.data, other.data]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.ncols == other.ncols and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"

    # text / json ------------------------------------------------------

    def to_text(self) -> str:
        return "".join("".join(map(str, r)) + "\n" for r in self.to_array())

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("no rows in matrix text")
        return cls.from_rows(BitVector.from_string(ln) for ln in lines)

    def to_json(self) -> dict:
        return {
            "ncols": self.ncols,
            "rows": [[f"{int(w):016x}" for w in row] for row in self.data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BitMatrix":
        n = int(obj["ncols"])
        rows = [[int(h, 16) for h in row] for row in obj["rows"]]
        data = np.array(rows, dtype=np.uint64).reshape(-1, nwords(n))
        if n % WORD_BITS and data.size and np.any(data[:, -1] >> np.uint64(n % WORD_BITS)):
            raise ValueError("bits set beyond the declared column count")
        return cls(n, data)


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row-echelon form.

    Returns ``(rref, rank, pivot_columns)``; ``rref`` keeps only the ``rank``
    nonzero rows.
    """
    a = m.data.copy()
    nrows = a.shape[0]
    r = 0
    pivots: list[int] = []
    for c in range(m.ncols):
        if r == nrows:
            break
        w, b = divmod(c, WORD_BITS)
        col = (a[:, w] >> np.uint64(b)) & _ONE
        below = np.flatnonzero(col[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
            col[[r, p]] = col[[p, r]]
        hits = np.flatnonzero(col)
        hits = hits[hits != r]
        if hits.size:
            a[hits] ^= a[r]
        pivots.append(c)
        r += 1
    return BitMatrix(m.ncols, a[:r]), r, pivots


def rank(m: BitMatrix) -> int:
    return row_reduce(m)[1]


def kernel(m: BitMatrix) -> BitMatrix:
    """Basis (as rows) of ``{x : M x^T = 0}``."""
    n = m.ncols
    rref, rk, pivots = row_reduce(m)
    free = sorted(set(range(n)) - set(pivots))
    if not free:
        return BitMatrix.empty(n)
    dense = rref.to_array()
    k = np.zeros((len(free), n), np.uint8)
    k[np.arange(len(free)), free] = 1
    if rk:
        k[:, pivots] = dense[:, free].T
    return BitMatrix.from_array(k)


class LinearCode:
    """Binary linear code given by a basis of generator rows."""

    __slots__ = ("n", "generators")

    def __init__(self, n: int, generators: BitMatrix, check: bool = True) -> None:
        if generators.ncols != n:
            raise ValueError(f"generator width {generators.ncols} != length {n}")
        if check and rank(generators) != generators.nrows:
            raise ValueError("generator rows are linearly dependent")
        self.n = n
        self.generators = generators

    @classmethod
    def span(cls, rows: BitMatrix) -> "LinearCode":
        """Code spanned by arbitrary (possibly dependent) rows."""
        rref, _, _ = row_reduce(rows)
        return cls(rows.ncols, rref, check=False)

    @classmethod
    def full(cls, n: int) -> "LinearCode":
        return cls(n, BitMatrix.identity(n), check=False)

    @classmethod
    def zero(cls, n: int) -> "LinearCode":
        return cls(n, BitMatrix.empty(n), check=False)

    @property
    def dimension(self) -> int:
        return self.generators.nrows

    k = dimension

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.dimension})"

    def encode(self, message: int) -> BitVector:
        """Codeword for the message whose bit ``i`` selects generator ``i``."""
        acc = np.zeros(nwords(self.n), np.uint64)
        i = 0
        while message:
            if message & 1:
                acc ^= self.generators.data[i]
            message >>= 1
            i += 1
        return BitVector(self.n, acc)

    def codewords(self) -> Iterator[BitVector]:
        for msg in range(1 << self.dimension):
            yield self.encode(msg)

    def contains(self, v: BitVector) -> bool:
        if v.length != self.n:
            return False
        stacked = self.generators.vstack(BitMatrix.from_rows([v]))
        return rank(stacked) == self.dimension

    __contains__ = contains

    def same_as(self, other: "LinearCode") -> bool:
        """Equality of row spaces."""
        if self.n != other.n or self.dimension != other.dimension:
            return False
        return rank(self.generators.vstack(other.generators)) == self.dimension

    def is_subcode_of(self, other: "LinearCode") -> bool:
        if self.n != other.n:
            return False
        return rank(other.generators.vstack(self.generators)) == other.dimension

    def dual(self) -> "LinearCode":
        return LinearCode(self.n, kernel(self.generators), check=False)

    def parity_check(self) -> BitMatrix:
        return kernel(self.generators)

    def intersect(self, other: "LinearCode") -> "LinearCode":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        checks = self.parity_check().vstack(other.parity_check())
        return LinearCode(self.n, kernel(checks), check=False)

    def extend(self) -> "LinearCode":
        """Append an overall-parity coordinate as the last position."""
        bits = self.generators.to_array()
        parity = bits.sum(axis=1, keepdims=True, dtype=np.int64) % 2
        ext = np.hstack([bits, parity.astype(np.uint8)])
        return LinearCode(self.n + 1, BitMatrix.from_array(ext.reshape(-1, self.n + 1)), check=False)

    def permute(self, perm: Sequence[int], n: int | None = None) -> "LinearCode":
        """Move coordinate ``i`` to position ``perm[i]``."""
        n = self.n if n is None else n
        bits = self.generators.to_array()
        out = np.zeros((bits.shape[0], n), np.uint8)
        out[:, np.asarray(perm, dtype=np.int64)] = bits
        return LinearCode(n, BitMatrix.from_array(out), check=False)


def dual(c: LinearCode) -> LinearCode:
    return c.dual()


def intersect(c1: LinearCode, c2: LinearCode) -> LinearCode:
    return c1.intersect(c2)


def extend(c: LinearCode) -> LinearCode:
    return c.extend()
