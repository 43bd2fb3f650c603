"""Vectors and subsets of F_3^n, with the sum-free set operations.

The two value types here are deliberately thin wrappers around the integer
encodings from the space module: a TernaryVector is (dim, index) and a
TernarySet is (dim, bitset).  Both are immutable and hashable, so they can
be used as dictionary keys and shared freely between threads; every
operation allocates a fresh object.

Sets can be read and written in a small text format:

    dim 3
    # comment lines and blank lines are ignored
    1 0 1
    2 0 0

The first meaningful line must be ``dim N``; every further line is one
vector given as N space-separated trits in {0, 1, 2}.  Duplicate vectors
are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import space as _sp
from .space import iter_bits


class ParseError(ValueError):
    """Malformed set text; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, slots=True)
class TernaryVector:
    dim: int
    index: int

    def __post_init__(self):
        _sp.check_dim(self.dim)
        if not 0 <= self.index < 3**self.dim:
            raise ValueError(
                f"index {self.index} out of range for dimension {self.dim}"
            )

    @classmethod
    def from_trits(cls, trits: Iterable[int]) -> "TernaryVector":
        trits = tuple(trits)
        return cls(len(trits), _sp.encode(trits))

    @property
    def trits(self) -> tuple[int, ...]:
        return _sp.decode(self.index, self.dim)

    def __add__(self, other: "TernaryVector") -> "TernaryVector":
        _same_dim(self, other)
        return TernaryVector(self.dim, _sp.space(self.dim).add(self.index, other.index))

    def __neg__(self) -> "TernaryVector":
        return TernaryVector(self.dim, _sp.space(self.dim).neg[self.index])

    def __sub__(self, other: "TernaryVector") -> "TernaryVector":
        return self + (-other)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.trits)


@dataclass(frozen=True, slots=True)
class TernarySet:
    dim: int
    bits: int

    def __post_init__(self):
        _sp.check_dim(self.dim)
        if self.bits < 0 or self.bits >> 3**self.dim:
            raise ValueError(f"bitset out of range for dimension {self.dim}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, dim: int) -> "TernarySet":
        return cls(dim, 0)

    @classmethod
    def full(cls, dim: int) -> "TernarySet":
        return cls(dim, (1 << 3**dim) - 1)

    @classmethod
    def from_indices(cls, dim: int, indices: Iterable[int]) -> "TernarySet":
        bits = 0
        limit = 3**dim
        for i in indices:
            if not 0 <= i < limit:
                raise ValueError(f"index {i} out of range for dimension {dim}")
            bits |= 1 << i
        return cls(dim, bits)

    @classmethod
    def from_vectors(cls, vectors: Iterable[TernaryVector]) -> "TernarySet":
        vectors = list(vectors)
        if not vectors:
            raise ValueError("from_vectors needs at least one vector; use empty(dim)")
        dim = vectors[0].dim
        for v in vectors:
            if v.dim != dim:
                raise ValueError("mixed dimensions in from_vectors")
        return cls.from_indices(dim, (v.index for v in vectors))

    @classmethod
    def from_trit_rows(cls, dim: int, rows: Iterable[Iterable[int]]) -> "TernarySet":
        return cls.from_indices(dim, (_sp.encode(row) for row in rows))

    # -- basic queries -----------------------------------------------------

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    def vectors(self) -> list[TernaryVector]:
        return [TernaryVector(self.dim, i) for i in iter_bits(self.bits)]

    def __contains__(self, item) -> bool:
        i = item.index if isinstance(item, TernaryVector) else item
        return bool((self.bits >> i) & 1)

    def __iter__(self) -> Iterator[TernaryVector]:
        return iter(self.vectors())

    def __len__(self) -> int:
        return self.size

    # -- set algebra ---------------------------------------------------------

    def union(self, other: "TernarySet") -> "TernarySet":
        _same_dim(self, other)
        return TernarySet(self.dim, self.bits | other.bits)

    def intersection(self, other: "TernarySet") -> "TernarySet":
        _same_dim(self, other)
        return TernarySet(self.dim, self.bits & other.bits)

    def difference(self, other: "TernarySet") -> "TernarySet":
        _same_dim(self, other)
        return TernarySet(self.dim, self.bits & ~other.bits)

    def complement(self) -> "TernarySet":
        return TernarySet(self.dim, self.bits ^ (1 << 3**self.dim) - 1)

    def issubset(self, other: "TernarySet") -> bool:
        _same_dim(self, other)
        return self.bits & ~other.bits == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def translate(self, v: TernaryVector | int) -> "TernarySet":
        idx = v.index if isinstance(v, TernaryVector) else v
        return TernarySet(self.dim, _sp.space(self.dim).translate_bits(self.bits, idx))


def _same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} versus {b.dim}")


# -- arithmetic on sets ------------------------------------------------------


def negate(a: TernarySet) -> TernarySet:
    return TernarySet(a.dim, _sp.space(a.dim).neg_set_bits(a.bits))


def sumset(a: TernarySet, b: TernarySet) -> TernarySet:
    """{x + y : x in a, y in b}; empty if either side is empty."""
    _same_dim(a, b)
    return TernarySet(a.dim, _sp.space(a.dim).sumset_bits(a.bits, b.bits))


def difference_set(a: TernarySet, b: TernarySet) -> TernarySet:
    """{x - y : x in a, y in b}."""
    _same_dim(a, b)
    return TernarySet(a.dim, _sp.space(a.dim).difference_set_bits(a.bits, b.bits))


def k_fold_sumset(a: TernarySet, k: int) -> TernarySet:
    """a + a + ... + a with k summands; k >= 1."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    out = a
    for _ in range(k - 1):
        out = sumset(out, a)
    return out


def is_sum_free(a: TernarySet) -> bool:
    """True iff x + y = z has no solution with x, y, z in a (x = y allowed)."""
    sp = _sp.space(a.dim)
    return sp.sumset_bits(a.bits, a.bits) & a.bits == 0


def blocked_cover_bits(a: TernarySet) -> int:
    """Bitset of elements that cannot extend a while keeping it sum-free.

    v outside this cover has sum-free a | {v}.  The cover is
    a | (a+a) | (a-a) | (-a) | {0}.
    """
    sp = _sp.space(a.dim)
    bits = a.bits
    plus = sp.sumset_bits(bits, bits)
    minus = sp.difference_set_bits(bits, bits)
    return bits | plus | minus | sp.neg_set_bits(bits) | 1


def is_maximal_sum_free(a: TernarySet) -> bool:
    """Sum-free and not properly contained in any sum-free set."""
    if not is_sum_free(a):
        return False
    return blocked_cover_bits(a) == (1 << 3**a.dim) - 1


def sym_group_bits(bits: int, n: int) -> int:
    """Bitset of the translation stabilizer {t : bits + t = bits}."""
    if bits == 0:
        raise ValueError("the translation stabilizer of the empty set is undefined")
    sp = _sp.space(n)
    a0 = (bits & -bits).bit_length() - 1
    # any period must carry the least element somewhere into the set
    candidates = sp.translate_bits(bits, sp.neg[a0])
    out = 0
    for t in iter_bits(candidates):
        if sp.translate_bits(bits, t) == bits:
            out |= 1 << t
    return out


def sym_group(a: TernarySet):
    """Translation stabilizer Sym(a) = {t : a + t = a} as a linear subspace.

    Raises ValueError on the empty set.
    """
    from . import subspaces

    bits = sym_group_bits(a.bits, a.dim)
    return subspaces.subspace_from_member_bits(bits, a.dim)


def is_aperiodic(a: TernarySet) -> bool:
    return sym_group_bits(a.bits, a.dim) == 1


# -- text format ----------------------------------------------------------------


def parse_set_text(text: str) -> TernarySet:
    dim = None
    bits = 0
    seen_any = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dim is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim":
                raise ParseError("expected header of the form 'dim N'", lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise ParseError(f"bad dimension {parts[1]!r}", lineno) from None
            try:
                _sp.check_dim(dim)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        parts = line.split()
        if len(parts) != dim:
            raise ParseError(
                f"expected {dim} trits, got {len(parts)}", lineno
            )
        try:
            trits = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer trit in {line!r}", lineno) from None
        for t in trits:
            if t not in (0, 1, 2):
                raise ParseError(f"trit out of range: {t}", lineno)
        index = _sp.encode(trits)
        if (bits >> index) & 1:
            raise ParseError(f"duplicate vector {line!r}", lineno)
        bits |= 1 << index
        seen_any = True
    if dim is None:
        raise ParseError("missing 'dim N' header", 1)
    del seen_any
    return TernarySet(dim, bits)


def format_set_text(a: TernarySet) -> str:
    lines = [f"dim {a.dim}"]
    for i in iter_bits(a.bits):
        lines.append(" ".join(str(t) for t in _sp.decode(i, a.dim)))
    return "\n".join(lines) + "\n"
