"""Linear automorphisms of F_3^n and canonical orbit representatives.

Sets are compared by their sorted index sequences: of two distinct sets,
the smaller is the one containing the least index where they differ.  The
canonical form of a set is the smallest member of its GL(n,3)-orbit under
this order.  Minimization walks image choices for the standard basis one
vector at a time; fixing the images of e_0..e_{j-1} pins the candidate's
membership on the index block [0, 3^j), so subtrees losing against the
current best on that prefix are cut without expanding them.  The same
walk counts setwise stabilizers: a path where every remaining basis image
is unconstrained contributes prod(3^n - 3^i) completions.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass

import numpy as np

from . import space as _sp
from .space import iter_bits


def gl_order(n: int) -> int:
    return math.prod(3**n - 3**i for i in range(n))


@dataclass(frozen=True)
class GroupElement:
    """An invertible linear map, stored as the basis images in index form."""

    n: int
    imgs: tuple[int, ...]

    def __post_init__(self):
        sp = _sp.space(self.n)
        if len(self.imgs) != self.n:
            raise ValueError("need one image per basis vector")
        if sp.span_bits(self.imgs) != sp.full_bits:
            raise ValueError("basis images are linearly dependent")

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(n, tuple(3**i for i in range(n)))

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        sp = _sp.space(self.n)
        return tuple(sp.trits[v] for v in self.imgs)

    @functools.cached_property
    def perm(self) -> np.ndarray:
        """Index permutation of the whole space induced by the map."""
        sp = _sp.space(self.n)
        m = np.array(self.matrix, dtype=np.int64)
        return ((sp.trits_np.astype(np.int64) @ m) % 3) @ np.array(
            sp.powers, dtype=np.int64
        )

    def apply_index(self, i: int) -> int:
        return int(self.perm[i])

    def apply_bits(self, bits: int) -> int:
        sp = _sp.space(self.n)
        arr = sp.bits_to_bool(bits)
        out = np.zeros(sp.size, dtype=bool)
        out[self.perm[arr]] = True
        return sp.bool_to_bits(out)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """The map applying other first, then self."""
        return GroupElement(self.n, tuple(int(self.perm[v]) for v in other.imgs))

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return self.compose(other)

    def inverse(self) -> "GroupElement":
        n = self.n
        rows = [list(r) + [1 if i == k else 0 for i in range(n)]
                for k, r in enumerate(self.matrix)]
        for col in range(n):
            piv = next(r for r in range(col, n) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            if rows[col][col] == 2:
                rows[col] = [(2 * t) % 3 for t in rows[col]]
            for r in range(n):
                c = rows[r][col]
                if r != col and c:
                    rows[r] = [(a - c * b) % 3 for a, b in zip(rows[r], rows[col])]
        return GroupElement(n, tuple(_sp.encode(r[n:]) for r in rows))


def _extend_span(sp: _sp.Space, span: int, v: int) -> int:
    shifted = sp.translate_bits(span, v)
    return span | shifted | sp.translate_bits(shifted, v)


@functools.lru_cache(maxsize=None)
def enumerate_gl(n: int) -> tuple[GroupElement, ...]:
    """Every element of GL(n,3), ordered by basis-image tuples; n <= 3 only."""
    if n > 3:
        raise ValueError("full GL enumeration is capped at dimension 3")
    sp = _sp.space(n)
    out = []

    def rec(prefix: tuple[int, ...], span: int):
        if len(prefix) == n:
            out.append(GroupElement(n, prefix))
            return
        for v in range(1, sp.size):
            if not span >> v & 1:
                rec(prefix + (v,), _extend_span(sp, span, v))

    rec((), 1)
    return tuple(out)


def random_gl(n: int, rng: random.Random) -> GroupElement:
    sp = _sp.space(n)
    while True:
        imgs = tuple(_sp.encode(rng.randrange(3) for _ in range(n)) for _ in range(n))
        if sp.span_bits(imgs) == sp.full_bits:
            return GroupElement(n, imgs)


def generators(n: int) -> tuple[GroupElement, ...]:
    """A small generating set: a scaling, a coordinate cycle, a transvection."""
    if n < 1:
        raise ValueError("no automorphisms below dimension 1")
    e = [3**i for i in range(n)]
    scale = GroupElement(n, tuple([2 * e[0]] + e[1:]))
    if n == 1:
        return (scale,)
    cycle = GroupElement(n, tuple(e[1:] + e[:1]))
    sp = _sp.space(n)
    shear = GroupElement(n, tuple([sp.add(e[0], e[1])] + e[1:]))
    return (scale, cycle, shear)


def orbit_of_bits(bits: int, n: int, gens=None) -> set[int]:
    """Closure of {bits} under a generating set (defaults to generators(n))."""
    if gens is None:
        gens = generators(n)
    seen = {bits}
    frontier = [bits]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            img = g.apply_bits(cur)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return seen


def _compare(t: int, b: int) -> int:
    """-1, 0, 1 for t smaller, equal, bigger in the least-index-wins order."""
    diff = t ^ b
    if not diff:
        return 0
    return -1 if t & (diff & -diff) else 1


class _Smaller(Exception):
    pass


def _walk(bits: int, n: int, fixed: bool):
    """Minimize bits over GL(n,3), or (fixed) test bits against itself.

    Returns (best, stabilizer_order); in fixed mode raises _Smaller as soon
    as any strictly smaller image is certain.
    """
    sp = _sp.space(n)
    size = sp.size
    if bits == 0:
        return 0, gl_order(n)
    tails = [math.prod(size - 3**i for i in range(j, n)) for j in range(n + 1)]
    add = sp.add_rows
    if add is None:
        add = [[sp.add(i, j) for j in range(size)] for i in range(size)]
    neg = sp.neg
    state = {"best": bits if fixed else None, "stab": 0}

    def leaf(j: int, prefix: int):
        best = state["best"]
        if best is None:
            state["best"] = prefix
            state["stab"] = tails[j]
            return
        c = _compare(prefix, best)
        if c == 0:
            state["stab"] += tails[j]
        elif c < 0:
            if fixed:
                raise _Smaller
            state["best"] = prefix
            state["stab"] = tails[j]

    def rec(j: int, hmap: list[int], span: int, prefix: int):
        if bits & ~span == 0:
            leaf(j, prefix)
            return
        block = 3**j
        two_block = 2 * block
        mask = (1 << 3 * block) - 1
        for w in iter_bits(bits & ~span):
            row1 = add[w]
            row2 = add[neg[w]]
            t = prefix
            for r, hr in enumerate(hmap):
                if bits >> row1[hr] & 1:
                    t |= 1 << (block + r)
                if bits >> row2[hr] & 1:
                    t |= 1 << (two_block + r)
            best = state["best"]
            if best is not None:
                c = _compare(t, best & mask)
                if c > 0:
                    continue
                if c < 0 and fixed:
                    raise _Smaller
            rec(
                j + 1,
                hmap + [row1[hr] for hr in hmap] + [row2[hr] for hr in hmap],
                _extend_span(sp, span, w),
                t,
            )

    rec(0, [0], 1, bits & 1)
    return state["best"], state["stab"]


def canonicalize_bits(bits: int, n: int) -> tuple[int, int]:
    """(canonical form, setwise stabilizer order) in one walk."""
    return _walk(bits, n, fixed=False)


def canonical_form_bits(bits: int, n: int) -> int:
    return _walk(bits, n, fixed=False)[0]


def stabilizer_order_bits(bits: int, n: int) -> int:
    return _walk(bits, n, fixed=False)[1]


def is_lexmin_bits(bits: int, n: int) -> bool:
    try:
        _walk(bits, n, fixed=True)
    except _Smaller:
        return False
    return True
