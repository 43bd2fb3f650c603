"""Index arithmetic for F_3^n with a little-endian base-3 vector encoding.

A vector (t_0, ..., t_{n-1}) with trits t_i in {0, 1, 2} is stored as the
integer index sum(t_i * 3**i).  Subsets of F_3^n are plain Python integers
used as bitsets: bit i is set iff the vector with index i is a member.
All heavier set operations live on a per-dimension Space object that caches
the lookup tables they need; small spaces use pure-integer paths and large
ones switch to numpy gathers over boolean arrays.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

import numpy as np

MAX_DIM = 12

# full pairwise addition tables are kept up to this many points (n <= 6)
_FULL_TABLE_MAX_SIZE = 729

# pure-python pair loops are used for sumsets up to this many index pairs
_PAIR_LOOP_MAX = 1 << 16


def check_dim(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"dimension must be an int, got {n!r}")
    if n < 0 or n > MAX_DIM:
        raise ValueError(f"dimension must be between 0 and {MAX_DIM}, got {n}")
    return n


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions of a bitset in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def encode(trits: Iterable[int]) -> int:
    index = 0
    power = 1
    for t in trits:
        if t not in (0, 1, 2):
            raise ValueError(f"trit out of range: {t!r}")
        index += t * power
        power *= 3
    return index


def decode(index: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(index % 3)
        index //= 3
    return tuple(out)


class Space:
    """Cached lookup tables and raw bitset operations for one dimension."""

    def __init__(self, n: int):
        check_dim(n)
        self.n = n
        self.size = 3**n
        self.full_bits = (1 << self.size) - 1
        self.powers = tuple(3**i for i in range(n))
        self.powers_np = np.array(self.powers, dtype=np.int64)
        # trit table: row i is the trit tuple of index i
        idx = np.arange(self.size, dtype=np.int64)
        cols = [(idx // 3**i) % 3 for i in range(n)]
        self.trits_np = (
            np.stack(cols, axis=1).astype(np.int8) if n else np.zeros((1, 0), np.int8)
        )
        self.trits = [tuple(int(t) for t in row) for row in self.trits_np]
        neg_np = ((3 - self.trits_np) % 3).astype(np.int64) @ self.powers_np
        self.neg = [int(v) for v in neg_np]
        self.neg_np = neg_np
        if self.size <= _FULL_TABLE_MAX_SIZE:
            add_np = (
                (self.trits_np[:, None, :] + self.trits_np[None, :, :]) % 3
            ).astype(np.int64) @ self.powers_np
            self.add_rows: list[list[int]] | None = [
                [int(v) for v in row] for row in add_np
            ]
        else:
            self.add_rows = None

    # -- scalar index arithmetic ------------------------------------------

    def add(self, i: int, j: int) -> int:
        if self.add_rows is not None:
            return self.add_rows[i][j]
        return int(
            ((self.trits_np[i].astype(np.int64) + self.trits_np[j]) % 3)
            @ self.powers_np
        )

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg[j])

    def scale(self, i: int, c: int) -> int:
        c %= 3
        if c == 0:
            return 0
        if c == 1:
            return i
        return self.neg[i]

    # -- bitset <-> numpy -------------------------------------------------

    def bits_to_bool(self, bits: int) -> np.ndarray:
        raw = bits.to_bytes((self.size + 7) // 8, "little")
        arr = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return arr[: self.size].astype(bool)

    def bool_to_bits(self, arr: np.ndarray) -> int:
        packed = np.packbits(arr.astype(np.uint8), bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def _perm_sub(self, v: int) -> np.ndarray:
        """perm[i] = index of (vector i) - (vector v)."""
        tv = self.trits_np[v]
        return ((self.trits_np + (3 - tv)) % 3).astype(np.int64) @ self.powers_np

    # -- bitset operations -------------------------------------------------

    def translate_bits(self, bits: int, v: int) -> int:
        if v == 0 or bits == 0:
            return bits
        count = bits.bit_count()
        if self.add_rows is not None and count * count <= _PAIR_LOOP_MAX:
            row = self.add_rows[v]
            out = 0
            for i in iter_bits(bits):
                out |= 1 << row[i]
            return out
        arr = self.bits_to_bool(bits)
        return self.bool_to_bits(arr[self._perm_sub(v)])

    def neg_set_bits(self, bits: int) -> int:
        if bits == 0:
            return 0
        if self.size <= _FULL_TABLE_MAX_SIZE:
            neg = self.neg
            out = 0
            for i in iter_bits(bits):
                out |= 1 << neg[i]
            return out
        arr = self.bits_to_bool(bits)
        return self.bool_to_bits(arr[self.neg_np])

    def sumset_bits(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        ca, cb = a.bit_count(), b.bit_count()
        if ca > cb:
            a, b, ca, cb = b, a, cb, ca
        if self.add_rows is not None and ca * cb <= _PAIR_LOOP_MAX:
            rows = self.add_rows
            out = 0
            for v in iter_bits(a):
                row = rows[v]
                for i in iter_bits(b):
                    out |= 1 << row[i]
            return out
        arr = self.bits_to_bool(b)
        acc = np.zeros(self.size, dtype=bool)
        for v in iter_bits(a):
            acc |= arr[self._perm_sub(v)]
        return self.bool_to_bits(acc)

    def difference_set_bits(self, a: int, b: int) -> int:
        return self.sumset_bits(a, self.neg_set_bits(b))

    def span_bits(self, generators: Iterable[int], base: int = 0) -> int:
        """Bitset of the coset base + span(generators)."""
        bits = 1 << base
        for g in generators:
            if g == 0:
                continue
            shifted = self.translate_bits(bits, g)
            bits |= shifted | self.translate_bits(shifted, g)
        return bits


@functools.lru_cache(maxsize=None)
def space(n: int) -> Space:
    return Space(n)
