"""Recognition, validation and enumeration of primitive sum-free sets.

A set is primitive when it is an affine hyperplane missing the origin, or
when it decomposes over one: pick such a hyperplane H, a nonempty proper
affine subspace U inside it, a translate-pair half W of H over U, and a
primitive subset X of the linear span of U's members, and take the union
W | X.  X must stay off the direction space of U, must differ from the
mirror -U when U has codimension one in H, and must meet -U in a subset
whose affine hull is all of -U.

The decomposition, when it exists for a given H, is forced: the part of
the set lying in -H determines U as the negated affine hull of that part,
and U determines the split into W and X.  The recognizer walks candidate
hyperplanes in canonical order and keeps the first that works, so equal
sets always receive equal certificates.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional

from . import canon, halves, subspaces
from . import space as _sp
from .core import (
    TernarySet,
    blocked_cover_bits,
    is_sum_free,
    is_maximal_sum_free,
    k_fold_sumset,
    sym_group_bits,
)
from .space import iter_bits
from .subspaces import AffineSubspace


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single verification check.

    status is one of "holds", "not_applicable" (a hypothesis failed, so the
    statement says nothing) or "counterexample".  A hypothesis failure is
    never reported as success.
    """

    name: str
    status: str
    detail: str = ""
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.status not in ("holds", "not_applicable", "counterexample"):
            raise ValueError(f"unknown status {self.status!r}")

    @classmethod
    def holds(cls, name: str, detail: str = "", witness=None) -> "CheckResult":
        return cls(name, "holds", detail, witness)

    @classmethod
    def not_applicable(cls, name: str, detail: str = "") -> "CheckResult":
        return cls(name, "not_applicable", detail)

    @classmethod
    def counterexample(cls, name: str, detail: str = "", witness=None) -> "CheckResult":
        return cls(name, "counterexample", detail, witness)

    @property
    def ok(self) -> bool:
        return self.status != "counterexample"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class CertificateError(ValueError):
    """A certificate clause failed; carries the clause tag and nesting depth."""

    def __init__(self, clause: str, depth: int, message: str):
        self.clause = clause
        self.depth = depth
        super().__init__(f"depth {depth} [{clause}]: {message}")


@dataclass(frozen=True)
class PrimitiveCertificate:
    """Witness of primitivity: a bare hyperplane, or an (H, U, W, X) split."""

    kind: str
    h: AffineSubspace
    u: Optional[AffineSubspace] = None
    w: Optional[TernarySet] = None
    x: Optional["PrimitiveCertificate"] = None

    def __post_init__(self):
        if self.kind not in ("hyperplane", "derived"):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        parts = (self.u, self.w, self.x)
        if self.kind == "hyperplane" and any(p is not None for p in parts):
            raise ValueError("a hyperplane certificate carries no decomposition")
        if self.kind == "derived" and any(p is None for p in parts):
            raise ValueError("a derived certificate needs U, W and X")

    @property
    def dim_ambient(self) -> int:
        return self.h.dim_ambient

    @property
    def member_bits(self) -> int:
        if self.kind == "hyperplane":
            return self.h.members_bits
        return self.w.bits | self.x.member_bits

    def to_set(self) -> TernarySet:
        return TernarySet(self.dim_ambient, self.member_bits)

    def to_json(self) -> dict:
        if self.kind == "hyperplane":
            return {"kind": "hyperplane", "H": self.h.to_json()}
        return {
            "kind": "derived",
            "H": self.h.to_json(),
            "U": self.u.to_json(),
            "W": self.w.indices(),
            "X": self.x.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PrimitiveCertificate":
        kind = obj["kind"]
        h = _subspace_from_json(obj["H"])
        if kind == "hyperplane":
            return cls("hyperplane", h)
        n = h.dim_ambient
        return cls(
            "derived",
            h,
            _subspace_from_json(obj["U"]),
            TernarySet.from_indices(n, obj["W"]),
            cls.from_json(obj["X"]),
        )


def _subspace_from_json(obj: dict) -> AffineSubspace:
    n = len(obj["base_point"])
    rows = [_sp.encode(r) for r in obj["basis"]]
    return subspaces.affine_subspace(n, rows, _sp.encode(obj["base_point"]))


def cone_of_subspace(u: AffineSubspace) -> AffineSubspace:
    """Linear span of the members of a nonempty affine subspace."""
    if u.empty:
        raise ValueError("the empty subspace spans nothing")
    return subspaces.affine_subspace(
        u.dim_ambient, u.basis + (u.base_point,), 0
    )


def validate_certificate(
    cert: PrimitiveCertificate,
    ambient: Optional[AffineSubspace] = None,
    _depth: int = 0,
) -> None:
    """Check every clause; raise CertificateError on the first failure.

    ambient defaults to the full space and is replaced by the span of U at
    each recursion step, so nested certificates are checked inside the
    subspace they are claimed for.
    """
    n = cert.h.dim_ambient
    if ambient is None:
        ambient = subspaces.full_space(n)

    def err(clause: str, message: str):
        raise CertificateError(clause, _depth, message)

    h = cert.h
    if h.empty:
        err("hyperplane", "H is empty")
    if ambient.dim_ambient != n:
        err("hyperplane", "ambient dimension mismatch")
    if not ambient.contains_subspace(h):
        err("hyperplane", "H is not inside the ambient subspace")
    if h.dim != ambient.dim - 1:
        err("hyperplane", f"H has dimension {h.dim}, expected {ambient.dim - 1}")
    if 0 in h:
        err("origin", "H contains the origin")
    if cert.kind == "hyperplane":
        return

    u, w, x = cert.u, cert.w, cert.x
    if u.empty:
        err("u-nonempty", "U is empty")
    if not h.contains_subspace(u):
        err("u-inside", "U is not an affine subspace of H")
    if u.dim >= h.dim:
        err("u-proper", "U must be a proper subspace of H")
    if w.dim != n or not halves.is_half(w, h, u):
        err("half", "W is not a translate-pair half of H over U")

    xbits = x.member_bits
    if w.bits & xbits:
        err("i", "W and X overlap")
    if xbits & u.direction().members_bits:
        err("ii", "X meets the direction space of U")
    nu = u.neg()
    if h.dim - u.dim < 2 and xbits == nu.members_bits:
        err("iii", "X equals -U while U has codimension one in H")
    if subspaces.affine_hull_bits(xbits & nu.members_bits, n) != nu:
        err("iv", "the affine hull of X's part in -U is not all of -U")
    validate_certificate(x, cone_of_subspace(u), _depth + 1)


def recognize_primitive(a: TernarySet) -> Optional[PrimitiveCertificate]:
    """The canonical certificate of a primitive set, or None."""
    if a.size == 0:
        return None
    return _recognize(a.bits, subspaces.full_space(a.dim))


def _recognize(bits: int, ambient: AffineSubspace) -> Optional[PrimitiveCertificate]:
    n = ambient.dim_ambient
    if bits == 0 or bits & 1 or bits & ~ambient.members_bits:
        return None
    hull = subspaces.affine_hull_bits(bits, n)
    if hull.members_bits == bits and hull.dim == ambient.dim - 1:
        return PrimitiveCertificate("hyperplane", hull)
    if ambient.dim < 2:
        return None
    for h in subspaces.hyperplanes_within(ambient, avoid_origin=True):
        cert = _try_derived(bits, h)
        if cert is not None:
            return cert
    return None


def _try_derived(bits: int, h: AffineSubspace) -> Optional[PrimitiveCertificate]:
    n = h.dim_ambient
    mirror = bits & h.neg().members_bits
    if not mirror:
        return None
    nu = subspaces.affine_hull_bits(mirror, n)
    u = nu.neg()
    # nu is a subspace of -H by construction, so u sits inside H
    if u.dim >= h.dim:
        return None
    cu = cone_of_subspace(u)
    xbits = bits & cu.members_bits
    if xbits & u.direction().members_bits:
        return None
    if h.dim - u.dim < 2 and xbits == nu.members_bits:
        return None
    # the hull clause holds by construction: X meets -U exactly in the
    # mirror part, whose hull defined -U
    wbits = bits & ~xbits
    if not halves.is_half(TernarySet(n, wbits), h, u):
        return None
    xcert = _recognize(xbits, cu)
    if xcert is None:
        return None
    return PrimitiveCertificate("derived", h, u, TernarySet(n, wbits), xcert)


def _set_key(bits: int):
    return tuple(iter_bits(bits))


@functools.lru_cache(maxsize=None)
def _all_primitive_bits(n: int) -> frozenset:
    """Every primitive subset of F_3^n as a bitset; n <= 3 only."""
    if n > 3:
        raise ValueError("full primitive enumeration is capped at dimension 3")
    out = set()
    planes = subspaces.enumerate_hyperplanes(n, avoid_origin=True)
    for h in planes:
        out.add(h.members_bits)
    for h in planes:
        for udim in range(h.dim):
            for u in subspaces.enumerate_affine_subspaces(h, udim):
                cu = cone_of_subspace(u)
                cands = _x_candidates(u, cu, h)
                if not cands:
                    continue
                for w in halves.enumerate_halves(h, u):
                    for xb in cands:
                        out.add(w.bits | xb)
    return frozenset(out)


def _x_candidates(u: AffineSubspace, cu: AffineSubspace, h: AffineSubspace) -> list:
    """Bitsets eligible as the X part over (h, u), in ambient coordinates."""
    n = u.dim_ambient
    du = u.direction().members_bits
    nu = u.neg()
    nub = nu.members_bits
    codim_one = h.dim - u.dim < 2
    out = []
    for cb in _all_primitive_bits(cu.dim):
        xb = 0
        for ci in iter_bits(cb):
            xb |= 1 << subspaces.chart_decode(cu, ci)
        if xb & du:
            continue
        if codim_one and xb == nub:
            continue
        if subspaces.affine_hull_bits(xb & nub, n) != nu:
            continue
        out.append(xb)
    return sorted(out, key=_set_key)


def iter_primitive_fixed_hyperplane(n: int):
    """Yield every primitive set whose decomposition uses the first canonical
    origin-avoiding hyperplane, as bitsets.

    For a fixed hyperplane the decomposition is unique, so there are no
    repeats.  Together with transitivity of the linear group on these
    hyperplanes, the stream covers all primitive sets up to isomorphism.
    """
    h = subspaces.enumerate_hyperplanes(n, avoid_origin=True)[0]
    yield h.members_bits
    for udim in range(h.dim):
        for u in subspaces.enumerate_affine_subspaces(h, udim):
            cu = cone_of_subspace(u)
            cands = _x_candidates(u, cu, h)
            if not cands:
                continue
            for w in halves.enumerate_halves(h, u):
                for xb in cands:
                    yield w.bits | xb


def enumerate_primitive(n: int, up_to_iso: bool = False) -> tuple:
    """All primitive subsets of F_3^n, or one representative per orbit.

    The unreduced listing is only available for n <= 3; dimension 4 holds
    tens of millions of primitive sets, so only the reduced form is offered
    there (see iter_primitive_fixed_hyperplane for a raw stream).
    """
    if not 1 <= n <= 4:
        raise ValueError("enumeration is supported for dimensions 1 through 4")
    if n <= 3:
        pool = _all_primitive_bits(n)
        if up_to_iso:
            pool = {canon.canonical_form_bits(b, n) for b in pool}
    else:
        if not up_to_iso:
            raise ValueError(
                "the unreduced dimension-4 listing does not fit in memory; "
                "use up_to_iso=True or iter_primitive_fixed_hyperplane"
            )
        pool = _dim4_orbit_reps()
    return tuple(TernarySet(n, b) for b in sorted(pool, key=_set_key))


def _stream_multiplicity(bits: int, n: int) -> int:
    """Over how many hyperplanes a primitive set decomposes.

    Counts the ways the set can enter the fixed-hyperplane stream, ranging
    over all origin-avoiding hyperplanes: once if it is a hyperplane itself,
    plus once per hyperplane it splits over.
    """
    d = 0
    for h in subspaces.enumerate_hyperplanes(n, avoid_origin=True):
        if h.members_bits == bits or _try_derived(bits, h) is not None:
            d += 1
    return d


@functools.lru_cache(maxsize=None)
def _dim4_orbit_reps() -> frozenset:
    """Canonical representatives of the dimension-4 primitive orbits.

    Canonicalizing each of the two hundred thousand stream members would
    work but wastes minutes on a handful of orbits, so the stream is first
    bucketed by an invariant signature (set size plus the sorted profile of
    hyperplane intersection sizes), which is constant on orbits.  Within a
    bucket, members are canonicalized until the found orbits account for
    the whole bucket: an orbit with representative R meets the stream in
    exactly |orbit(R)| * d(R) / 80 sets, where d(R) is the decomposition
    multiplicity and 80 the number of origin-avoiding hyperplanes the
    linear group permutes transitively.
    """
    stream = list(iter_primitive_fixed_hyperplane(4))
    planes = tuple(
        h.members_bits for h in subspaces.enumerate_hyperplanes(4, avoid_origin=True)
    )
    buckets = {}
    for b in stream:
        sig = tuple(sorted((b & p).bit_count() for p in planes))
        buckets.setdefault(sig, []).append(b)
    order = canon.gl_order(4)
    reps = set()
    for members in buckets.values():
        found = set()
        accounted = 0
        for b in members:
            if accounted == len(members):
                break
            r, stab = canon.canonicalize_bits(b, 4)
            if r in found:
                continue
            found.add(r)
            share, rem = divmod(
                (order // stab) * _stream_multiplicity(r, 4), len(planes)
            )
            if rem:
                raise RuntimeError("orbit accounting is not divisible")
            accounted += share
        if accounted != len(members):
            raise RuntimeError("orbit accounting failed to cover a bucket")
        reps.update(found)
    return frozenset(reps)


@functools.lru_cache(maxsize=None)
def _primitive_library(n: int) -> tuple:
    return tuple(sorted(_all_primitive_bits(n)))


def is_subprimitive(a: TernarySet) -> bool:
    """Whether a extends to a primitive set in the same ambient space."""
    n = a.dim
    if n > 4:
        raise ValueError("subprimitive testing is available up to dimension 4")
    if not is_sum_free(a):
        return False
    return _primitive_superset(a) is not None


def _primitive_superset(a: TernarySet) -> Optional[int]:
    """Bitset of some primitive set containing a, or None; a must be sum-free."""
    n = a.dim
    if n > 4:
        raise ValueError("subprimitive testing is available up to dimension 4")
    if n <= 3:
        b = a.bits
        return next((p for p in _primitive_library(n) if b & ~p == 0), None)
    return _primitive_superset_dim4(a.bits)


def _primitive_superset_dim4(bits: int) -> Optional[int]:
    """First primitive maximal superset found by direct extension, or None.

    Branches on the least admissible element: a maximal sum-free superset
    either contains it or must stay sum-free after it is struck from the
    admissible pool, and in the latter case the element has to be blocked
    by something chosen later.
    """
    sp = _sp.space(4)
    full = sp.full_bits

    def rec(cur: int, banned: int) -> Optional[int]:
        free = full & ~blocked_cover_bits(TernarySet(4, cur))
        open_free = free & ~banned
        if free == 0:
            return cur if _recognize(cur, subspaces.full_space(4)) else None
        if open_free == 0:
            return None  # some admissible element was banned but never blocked
        v = (open_free & -open_free).bit_length() - 1
        hit = rec(cur | 1 << v, banned)
        if hit is not None:
            return hit
        return rec(cur, banned | 1 << v)

    return rec(bits, 0)


_LEMMA_IDS = (
    "card_formula",
    "sym_containment",
    "four_sum",
    "hyperplane_bound",
    "affine_above_sym",
    "dense_affine",
    "disjoint_transfer",
)


def check_lemma(lemma_id: str, a: TernarySet, *, b: Optional[TernarySet] = None,
                j: Optional[AffineSubspace] = None, k: Optional[int] = None) -> CheckResult:
    """Run one structural check against a concrete set.

    Checks whose hypotheses fail report not_applicable; a hypothesis failure
    is never scored as a pass.
    """
    if lemma_id not in _LEMMA_IDS:
        raise ValueError(f"unknown check {lemma_id!r}; choose from {_LEMMA_IDS}")
    return globals()[f"_check_{lemma_id}"](a, b=b, j=j, k=k)


def _check_card_formula(a: TernarySet, **_) -> CheckResult:
    name = "card_formula"
    cert = recognize_primitive(a)
    if cert is None:
        return CheckResult.not_applicable(name, "set is not primitive")
    n = a.dim
    sym = bin(sym_group_bits(a.bits, n)).count("1")
    expected = (3**n + 3 * sym) // 6
    if 6 * a.size == 3**n + 3 * sym:
        return CheckResult.holds(name, f"size {a.size} matches ({3**n} + 3*{sym})/6")
    return CheckResult.counterexample(
        name,
        f"size {a.size}, symmetry group size {sym}, expected {expected}",
        witness={"set": a.indices(), "sym_size": sym},
    )


def _check_sym_containment(a: TernarySet, **_) -> CheckResult:
    name = "sym_containment"
    cert = recognize_primitive(a)
    if cert is None or cert.kind != "derived":
        return CheckResult.not_applicable(name, "set is not a derived primitive")
    n = a.dim
    sym_a = sym_group_bits(a.bits, n)
    sym_x = sym_group_bits(cert.x.member_bits, n)
    du = cert.u.direction().members_bits
    if sym_a == sym_x and sym_a & ~du == 0:
        return CheckResult.holds(
            name, "symmetry groups of the set and its X part agree inside [U]"
        )
    return CheckResult.counterexample(
        name,
        "symmetry group mismatch or escape from the direction space of U",
        witness={
            "set": a.indices(),
            "sym_set": sorted(iter_bits(sym_a)),
            "sym_x": sorted(iter_bits(sym_x)),
        },
    )


def _check_four_sum(a: TernarySet, **_) -> CheckResult:
    name = "four_sum"
    if recognize_primitive(a) is None:
        return CheckResult.not_applicable(name, "set is not primitive")
    if 0 in k_fold_sumset(a, 4):
        return CheckResult.counterexample(
            name, "0 is a sum of four members", witness={"set": a.indices()}
        )
    return CheckResult.holds(name, "no four members sum to 0")


def _check_hyperplane_bound(a: TernarySet, **_) -> CheckResult:
    name = "hyperplane_bound"
    cert = recognize_primitive(a)
    if cert is None or cert.kind == "hyperplane":
        return CheckResult.not_applicable(
            name, "set is not a derived primitive"
        )
    n = a.dim
    bound = 3 ** (n - 1)
    for jp in subspaces.enumerate_hyperplanes(n):
        inside = bin(a.bits & jp.members_bits).count("1")
        if a.size + inside > bound:
            return CheckResult.counterexample(
                name,
                f"|A| + |A cap J| = {a.size} + {inside} > {bound}",
                witness={"set": a.indices(), "J": jp.to_json()},
            )
    return CheckResult.holds(name, f"|A| + |A cap J| <= {bound} for every hyperplane J")


def _check_affine_above_sym(a: TernarySet, **_) -> CheckResult:
    name = "affine_above_sym"
    cert = recognize_primitive(a)
    if cert is None or cert.kind == "hyperplane":
        return CheckResult.not_applicable(name, "set is not a derived primitive")
    n = a.dim
    sym_size = bin(sym_group_bits(a.bits, n)).count("1")
    d = round(_log3(sym_size)) + 1
    for e in subspaces.enumerate_affine_subspaces(subspaces.full_space(n), d):
        if e.members_bits & ~a.bits == 0:
            return CheckResult.holds(
                name,
                f"contains an affine subspace of dimension {d} > symmetry dimension {d - 1}",
                witness={"E": e.to_json()},
            )
    return CheckResult.counterexample(
        name,
        f"no affine subspace of dimension {d} fits inside the set",
        witness={"set": a.indices()},
    )


def _log3(size: int) -> float:
    return math.log(size, 3)


def _check_dense_affine(a: TernarySet, *, k: Optional[int] = None, **_) -> CheckResult:
    name = "dense_affine"
    if k is None or k < 1:
        return CheckResult.not_applicable(name, "needs a dimension k >= 1")
    n = a.dim
    if k > n:
        return CheckResult.not_applicable(name, "k exceeds the ambient dimension")
    if subspaces.affine_hull_bits(a.bits, n).dim != n:
        return CheckResult.not_applicable(name, "set lies in a hyperplane")
    if 6 * a.size <= 3**n + 3 ** (k - 1):
        return CheckResult.not_applicable(
            name, f"size {a.size} is not above ({3**n} + 3^{k - 1})/6"
        )
    if not is_subprimitive(a):
        return CheckResult.not_applicable(name, "set is not subprimitive")
    need = (5 * 3**k + 3) // 6
    best = None
    for e in subspaces.enumerate_affine_subspaces(subspaces.full_space(n), k):
        got = bin(a.bits & e.members_bits).count("1")
        if 6 * got >= 5 * 3**k + 3:
            return CheckResult.holds(
                name,
                f"an affine subspace of dimension {k} holds {got} members",
                witness={"E": e.to_json()},
            )
        if best is None or got > best:
            best = got
    return CheckResult.counterexample(
        name,
        f"no affine subspace of dimension {k} holds {need} members (best {best})",
        witness={"set": a.indices()},
    )


def _check_disjoint_transfer(a: TernarySet, *, b: Optional[TernarySet] = None,
                             j: Optional[AffineSubspace] = None, **_) -> CheckResult:
    name = "disjoint_transfer"
    if b is None or j is None:
        return CheckResult.not_applicable(name, "needs a subset B and a hyperplane J")
    cert = recognize_primitive(a)
    if cert is None or cert.kind == "hyperplane":
        return CheckResult.not_applicable(name, "set is not a derived primitive")
    n = a.dim
    if j.empty or j.dim != n - 1:
        return CheckResult.not_applicable(name, "J is not a hyperplane")
    if b.dim != n or b.bits & ~a.bits:
        return CheckResult.not_applicable(name, "B is not a subset of A")
    if 6 * b.size <= 3**n:
        return CheckResult.not_applicable(name, "B is not above a sixth of the space")
    if b.bits & j.members_bits:
        return CheckResult.not_applicable(name, "J meets B")
    if a.bits & j.members_bits:
        return CheckResult.counterexample(
            name,
            "J avoids B but meets A",
            witness={
                "set": a.indices(),
                "B": b.indices(),
                "J": j.to_json(),
                "overlap": sorted(iter_bits(a.bits & j.members_bits)),
            },
        )
    return CheckResult.holds(name, "every hyperplane avoiding B avoids A")


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the classifier can say about one set."""

    dim: int
    size: int
    sum_free: bool
    maximal: bool
    aperiodic: Optional[bool]
    sym_dim: Optional[int]
    sym_size: Optional[int]
    certificate: Optional[PrimitiveCertificate]
    subprimitive: Optional[bool]

    @property
    def primitive(self) -> bool:
        return self.certificate is not None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "size": self.size,
            "sum_free": self.sum_free,
            "maximal": self.maximal,
            "aperiodic": self.aperiodic,
            "sym_dim": self.sym_dim,
            "sym_size": self.sym_size,
            "primitive": self.primitive,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "subprimitive": self.subprimitive,
        }


def classify_set(a: TernarySet) -> ClassificationReport:
    n = a.dim
    sum_free = is_sum_free(a)
    maximal = is_maximal_sum_free(a) if sum_free else False
    if a.size:
        sym = sym_group_bits(a.bits, n)
        sym_size = bin(sym).count("1")
        sym_dim = round(_log3(sym_size))
        aperiodic = sym == 1
    else:
        sym_size = None
        sym_dim = None
        aperiodic = None
    cert = recognize_primitive(a) if sum_free else None
    sub = is_subprimitive(a) if n <= 4 else None
    return ClassificationReport(
        dim=n,
        size=a.size,
        sum_free=sum_free,
        maximal=maximal,
        aperiodic=aperiodic,
        sym_dim=sym_dim,
        sym_size=sym_size,
        certificate=cert,
        subprimitive=sub,
    )
