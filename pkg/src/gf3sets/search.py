"""Exhaustive search for maximal sum-free sets, reduced by symmetry.

The engine generates sum-free sets in ascending index order and keeps a
branch only while the partial set is the least member of its orbit under
the full linear group, so each isomorphism class of maximal sets is
reported exactly once (dropping the largest element of a least orbit
member leaves a least orbit member, which makes the prefix tree of
canonical sets closed under truncation and the generation exhaustive).
Blocked elements are maintained incrementally: adding v to S extends the
forbidden region by v+S, v-S, S-v and -v, so a node is maximal exactly
when the forbidden region covers everything.

verify_main_theorem runs the search against the independent structural
enumeration of primitive sets, in both directions.  compute_t reads the
largest aperiodic size off the same reports.  lev_construction builds the
explicit half-of-a-hyperplane example in any dimension from 3 up.
"""

from __future__ import annotations

import functools
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import canon, primitive, subspaces
from . import space as _sp
from .canon import GroupElement
from .core import (
    TernarySet,
    blocked_cover_bits,
    is_maximal_sum_free,
    is_sum_free,
    k_fold_sumset,
    sym_group_bits,
)
from .primitive import CheckResult, PrimitiveCertificate
from .space import iter_bits
from .subspaces import AffineSubspace

CHECKPOINT_VERSION = 1


def canonical_form(a: TernarySet) -> TernarySet:
    """The least set in the GL-orbit of a, under least-index-wins order."""
    return TernarySet(a.dim, canon.canonical_form_bits(a.bits, a.dim))


def stabilizer_order(a: TernarySet) -> int:
    return canon.canonicalize_bits(a.bits, a.dim)[1]


@dataclass(frozen=True)
class EnumerationReport:
    """Search outcome; canonical JSON excludes timing so reruns compare equal."""

    n: int
    min_size: int
    up_to_iso: bool
    engine: str
    counts_by_size: dict
    orbit_counts_by_size: dict
    counts_by_size_sym: dict
    representatives: tuple  # of (index tuple, stabilizer order, sym_dim)
    node_count: int
    wall_time_s: float = field(compare=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "min_size": self.min_size,
            "up_to_iso": self.up_to_iso,
            "engine": self.engine,
            "counts_by_size": {str(k): v for k, v in sorted(self.counts_by_size.items())},
            "orbit_counts_by_size": {
                str(k): v for k, v in sorted(self.orbit_counts_by_size.items())
            },
            "counts_by_size_sym": {
                f"{k[0]},{k[1]}": v
                for k, v in sorted(self.counts_by_size_sym.items())
            },
            "representatives": [
                {
                    "set": list(s),
                    "size": len(s),
                    "stabilizer_order": stab,
                    "sym_dim": sym_dim,
                }
                for s, stab, sym_dim in self.representatives
            ],
            "node_count": self.node_count,
        }


def _cover_increment(sp: _sp.Space, sbits: int, v: int) -> int:
    """New forbidden elements when v joins the set with bitset sbits."""
    s2 = sbits | 1 << v
    plus = sp.translate_bits(s2, v)
    minus_a = sp.translate_bits(sp.neg_set_bits(s2), v)
    minus_b = sp.translate_bits(s2, sp.neg[v])
    return plus | minus_a | minus_b | 1 << sp.neg[v] | 1 << v


def _search_from(
    n: int,
    min_size: int,
    reduced: bool,
    start_bits: int,
    found: dict,
) -> int:
    """DFS continuation below one partial set; returns nodes visited."""
    sp = _sp.space(n)
    full = sp.full_bits
    cover = blocked_cover_bits(TernarySet(n, start_bits))
    maxv = start_bits.bit_length() - 1  # -1 for the empty set
    stack = [(start_bits, start_bits.bit_count(), maxv, cover)]
    nodes = 0
    while stack:
        sbits, size, maxv, cover = stack.pop()
        nodes += 1
        if cover == full:
            if size >= min_size:
                found[sbits] = None
            continue
        free_above = ~cover & full & -(1 << (maxv + 1))
        if size < min_size:
            # pair rule: of x and -x at most one can ever join
            f = free_above.bit_count()
            paired = (free_above & sp.neg_set_bits(free_above)).bit_count()
            if size + f - paired // 2 < min_size:
                continue
        for v in iter_bits(free_above):
            child = sbits | 1 << v
            if reduced and not canon.is_lexmin_bits(child, n):
                continue
            stack.append((child, size + 1, v, cover | _cover_increment(sp, sbits, v)))
    return nodes


def _expand_frontier(n: int, min_size: int, reduced: bool, depth: int):
    """Grow the search tree breadth-first to a task frontier.

    Returns (tasks, found, nodes): partial sets of the frontier size whose
    subtrees remain to be searched, maximal sets already seen above the
    frontier, and the node count so far.
    """
    sp = _sp.space(n)
    full = sp.full_bits
    found: dict = {}
    tasks = []
    layer = [(0, 0, -1, blocked_cover_bits(TernarySet.empty(n)))]
    nodes = 0
    for _ in range(depth):
        nxt = []
        for sbits, size, maxv, cover in layer:
            nodes += 1
            if cover == full:
                if size >= min_size:
                    found[sbits] = None
                continue
            free_above = ~cover & full & -(1 << (maxv + 1))
            if size < min_size:
                f = free_above.bit_count()
                paired = (free_above & sp.neg_set_bits(free_above)).bit_count()
                if size + f - paired // 2 < min_size:
                    continue
            for v in iter_bits(free_above):
                child = sbits | 1 << v
                if reduced and not canon.is_lexmin_bits(child, n):
                    continue
                nxt.append((child, size + 1, v, cover | _cover_increment(sp, sbits, v)))
        layer = nxt
    tasks = [sbits for sbits, _, _, _ in layer]
    return tasks, found, nodes


def _run_task(args) -> tuple:
    n, min_size, reduced, start_bits = args
    found: dict = {}
    nodes = _search_from(n, min_size, reduced, start_bits, found)
    return sorted(found), nodes


_FRONTIER_DEPTH = 3


def _load_checkpoint(path: str, n: int, min_size: int, reduced: bool):
    with open(path) as fh:
        state = json.load(fh)
    if state.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {state.get('version')}")
    for key, want in (("dim", n), ("min_size", min_size), ("reduced", reduced)):
        if state.get(key) != want:
            raise ValueError(f"checkpoint {key} mismatch: {state.get(key)} != {want}")
    return state


def _save_checkpoint(path: str, n: int, min_size: int, reduced: bool,
                     pending: list, found: dict, nodes: int) -> None:
    state = {
        "version": CHECKPOINT_VERSION,
        "dim": n,
        "min_size": min_size,
        "reduced": reduced,
        "pending": pending,
        "found": sorted(found),
        "nodes": nodes,
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def enumerate_maximal_sumfree(
    n: int,
    min_size: int = 1,
    up_to_iso: bool = True,
    jobs: int = 1,
    checkpoint: Optional[str] = None,
) -> EnumerationReport:
    """All maximal sum-free subsets of F_3^n with at least min_size members.

    With up_to_iso the engine explores one representative per orbit and the
    plain counts are recovered through orbit sizes; without it every set is
    visited (dimension at most 3: the unreduced dimension-4 tree is far too
    large, and exists here as a cross-check oracle anyway).  jobs splits
    the frontier subtrees across processes; results and reports are
    identical for any worker count.  checkpoint names a JSON file used to
    resume an interrupted run and is rewritten as subtrees complete.
    """
    _sp.check_dim(n)
    if not 1 <= n <= 4:
        raise ValueError("enumeration is supported for dimensions 1 through 4")
    if n == 4 and not up_to_iso:
        raise ValueError("the unreduced dimension-4 search is not feasible")
    if min_size < 1:
        raise ValueError("min_size must be at least 1 (the empty set is never maximal)")
    t0 = time.time()
    reduced = up_to_iso

    if checkpoint and os.path.exists(checkpoint):
        state = _load_checkpoint(checkpoint, n, min_size, reduced)
        pending = list(state["pending"])
        found = {b: None for b in state["found"]}
        nodes = state["nodes"]
    else:
        pending, shallow, nodes = _expand_frontier(n, min_size, reduced, _FRONTIER_DEPTH)
        found = shallow
        if checkpoint:
            _save_checkpoint(checkpoint, n, min_size, reduced, pending, found, nodes)

    chunk = max(1, math.ceil(len(pending) / max(jobs, 1) / 8)) if pending else 1
    task_args = [(n, min_size, reduced, b) for b in pending]
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, task_args, chunksize=chunk))
    else:
        results = map(_run_task, task_args)

    done = 0
    for got, sub_nodes in results:
        for b in got:
            found[b] = None
        nodes += sub_nodes
        done += 1
        if checkpoint and (done % (8 * max(jobs, 1)) == 0 or done == len(pending)):
            _save_checkpoint(
                checkpoint, n, min_size, reduced, pending[done:], found, nodes
            )

    return _build_report(n, min_size, up_to_iso, found, nodes, time.time() - t0)


def _build_report(n, min_size, up_to_iso, found, nodes, wall) -> EnumerationReport:
    order = canon.gl_order(n)
    counts: dict = {}
    orbit_counts: dict = {}
    sym_counts: dict = {}
    reps = []
    if up_to_iso:
        for b in sorted(found, key=primitive._set_key):
            stab = canon.canonicalize_bits(b, n)[1]
            size = b.bit_count()
            sym_dim = round(math.log(sym_group_bits(b, n).bit_count(), 3))
            reps.append((tuple(iter_bits(b)), stab, sym_dim))
            orbit_counts[size] = orbit_counts.get(size, 0) + 1
            counts[size] = counts.get(size, 0) + order // stab
            key = (size, sym_dim)
            sym_counts[key] = sym_counts.get(key, 0) + order // stab
    else:
        rep_bits: dict = {}
        for b in found:
            size = b.bit_count()
            counts[size] = counts.get(size, 0) + 1
            sym_dim = round(math.log(sym_group_bits(b, n).bit_count(), 3))
            key = (size, sym_dim)
            sym_counts[key] = sym_counts.get(key, 0) + 1
            rep_bits[canon.canonical_form_bits(b, n)] = None
        for b in sorted(rep_bits, key=primitive._set_key):
            stab = canon.canonicalize_bits(b, n)[1]
            sym_dim = round(math.log(sym_group_bits(b, n).bit_count(), 3))
            reps.append((tuple(iter_bits(b)), stab, sym_dim))
            size = b.bit_count()
            orbit_counts[size] = orbit_counts.get(size, 0) + 1
    return EnumerationReport(
        n=n,
        min_size=min_size,
        up_to_iso=up_to_iso,
        engine="reduced" if up_to_iso else "unreduced",
        counts_by_size=counts,
        orbit_counts_by_size=orbit_counts,
        counts_by_size_sym=sym_counts,
        representatives=tuple(reps),
        node_count=nodes,
        wall_time_s=wall,
    )


@dataclass(frozen=True)
class VerificationVerdict:
    """Result of checking the classification in both directions."""

    n: int
    verified: bool
    forward_checked: int
    backward_checked: int
    counterexample: Optional[list]
    details: dict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "verified": self.verified,
            "forward_checked": self.forward_checked,
            "backward_checked": self.backward_checked,
            "counterexample": self.counterexample,
            "details": self.details,
        }


def verify_main_theorem(
    n: int, jobs: int = 1, checkpoint: Optional[str] = None
) -> VerificationVerdict:
    """Check, exhaustively up to symmetry, that the maximal sum-free sets
    larger than a sixth of the space are exactly the primitive sets.

    Forward: every orbit representative from the search recognizes as
    primitive.  Backward: every primitive set is maximal sum-free and
    large enough; below dimension 4 the full structural enumeration is
    used, in dimension 4 the fixed-hyperplane stream (soundness of that
    reduction rests on hyperplane transitivity, which is itself checked
    here).  Orbit representative sets from both sides must agree exactly.
    """
    if not 1 <= n <= 4:
        raise ValueError("verification is supported for dimensions 1 through 4")
    threshold = 3**n // 6 + 1
    details: dict = {"threshold": threshold}
    report = enumerate_maximal_sumfree(
        n, threshold, up_to_iso=True, jobs=jobs, checkpoint=checkpoint
    )
    details["maximal_orbit_counts"] = {
        str(k): v for k, v in sorted(report.orbit_counts_by_size.items())
    }

    forward = 0
    for s, _, _ in report.representatives:
        a = TernarySet.from_indices(n, s)
        if primitive.recognize_primitive(a) is None:
            return VerificationVerdict(
                n, False, forward, 0, list(s), {**details, "direction": "forward"}
            )
        forward += 1

    backward = 0
    if n <= 3:
        prim_sets = primitive.enumerate_primitive(n)
        for a in prim_sets:
            if a.size < threshold or not is_maximal_sum_free(a):
                return VerificationVerdict(
                    n, False, forward, backward,
                    a.indices(), {**details, "direction": "backward"},
                )
            backward += 1
    else:
        orbit = canon.orbit_of_bits(
            subspaces.enumerate_hyperplanes(4, avoid_origin=True)[0].members_bits, 4
        )
        details["hyperplane_orbit_size"] = len(orbit)
        if len(orbit) != len(subspaces.enumerate_hyperplanes(4, avoid_origin=True)):
            return VerificationVerdict(
                n, False, forward, backward, None,
                {**details, "direction": "backward",
                 "failure": "hyperplane transitivity"},
            )
        for bits in primitive.iter_primitive_fixed_hyperplane(4):
            a = TernarySet(4, bits)
            if a.size < threshold or not is_maximal_sum_free(a):
                return VerificationVerdict(
                    n, False, forward, backward,
                    a.indices(), {**details, "direction": "backward"},
                )
            backward += 1

    max_reps = {tuple(s) for s, _, _ in report.representatives}
    prim_reps = {
        tuple(r.indices()) for r in primitive.enumerate_primitive(n, up_to_iso=True)
    }
    details["orbit_reps_match"] = max_reps == prim_reps
    if max_reps != prim_reps:
        odd = sorted(max_reps ^ prim_reps)[0]
        return VerificationVerdict(
            n, False, forward, backward, list(odd),
            {**details, "direction": "orbit comparison"},
        )
    return VerificationVerdict(n, True, forward, backward, None, details)


def compute_t(n: int, jobs: int = 1) -> int:
    """Largest size of an aperiodic maximal sum-free subset of F_3^n.

    Aperiodicity is a GL-invariant, so orbit representatives decide it.
    For n <= 3 every maximal set is enumerated.  For n = 4 the search is
    run from the theorem threshold upward; that is exact because an
    aperiodic maximal set of size 14 exists (the explicit construction),
    so the maximum is at least 14 and any larger candidate would have been
    enumerated.
    """
    if not 1 <= n <= 4:
        raise ValueError("t is computed for dimensions 1 through 4")
    min_size = 14 if n == 4 else 1
    report = enumerate_maximal_sumfree(n, min_size, up_to_iso=True, jobs=jobs)
    best = 0
    for s, _, sym_dim in report.representatives:
        if sym_dim == 0:
            best = max(best, len(s))
    if n == 4 and best < 14:
        raise RuntimeError(
            "inconclusive: the aperiodic witness of size 14 was not found"
        )
    return best


def lev_construction(n: int) -> tuple[TernarySet, PrimitiveCertificate]:
    """The explicit aperiodic maximal sum-free set of size (3^(n-1)+1)/2.

    Over the hyperplane H = {x : x_0 = 1} take U = {e_0} and X = {-e_0};
    the half W picks, from each translate pair {U+y, U-y}, the one whose
    lowest nonzero coordinate among positions 1..n-1 is 1.
    """
    if not 3 <= n <= _sp.MAX_DIM:
        raise ValueError(f"the construction needs 3 <= n <= {_sp.MAX_DIM}")
    wbits = 0
    for m in range(1, 3 ** (n - 1)):
        trits = _sp.decode(m, n - 1)
        if next(t for t in trits if t) == 1:
            wbits |= 1 << (1 + 3 * m)
    h = subspaces.affine_subspace(n, tuple(3**i for i in range(1, n)), 1)
    u = subspaces.affine_subspace(n, (), 1)
    x = PrimitiveCertificate("hyperplane", subspaces.affine_subspace(n, (), 2))
    cert = PrimitiveCertificate("derived", h, u, TernarySet(n, wbits), x)
    return TernarySet(n, wbits | 1 << 2), cert


_PROP_IDS = (
    "prop_hyperplane_cover",
    "prop_empty_slice",
    "conclusion_grid",
    "five_in_cube",
    "four_point",
    "line_everywhere",
    "parallel_lines",
    "dim4",
    "no_zero_4A",
    "codim2_slice",
)


def check_proposition(
    prop_id: str, a: TernarySet, *, h: Optional[AffineSubspace] = None
) -> CheckResult:
    """Test one implication on a concrete set; hypothesis failures are
    reported as not_applicable, never as success."""
    if prop_id not in _PROP_IDS:
        raise ValueError(f"unknown proposition {prop_id!r}; choose from {_PROP_IDS}")
    return globals()[f"_prop_{prop_id}"](a, h)


def _subprimitive_conclusion(name: str, a: TernarySet, extra: dict) -> CheckResult:
    sup = primitive._primitive_superset(a)
    if sup is None:
        return CheckResult.counterexample(
            name, "set is not subprimitive", witness={"set": a.indices(), **extra}
        )
    return CheckResult.holds(
        name,
        "subprimitive",
        witness={"primitive_superset": sorted(iter_bits(sup)), **extra},
    )


def _prop_prop_hyperplane_cover(a: TernarySet, h) -> CheckResult:
    name = "prop_hyperplane_cover"
    n = a.dim
    if n > 4:
        return CheckResult.not_applicable(name, "needs the verified range n <= 4")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if 6 * a.size <= 3**n:
        return CheckResult.not_applicable(name, "set is not above a sixth of the space")
    cands = [h] if h is not None else list(
        subspaces.enumerate_hyperplanes(n, avoid_origin=True)
    )
    for cand in cands:
        if cand.dim != n - 1 or 0 in cand:
            continue
        if a.bits & cand.direction().members_bits:
            continue
        neg = cand.neg()
        hull = subspaces.affine_hull_bits(a.bits & neg.members_bits, n)
        if hull == neg:
            continue
        return _subprimitive_conclusion(name, a, {"H": cand.to_json()})
    return CheckResult.not_applicable(name, "no hyperplane satisfies the hypotheses")


def _prop_prop_empty_slice(a: TernarySet, h) -> CheckResult:
    name = "prop_empty_slice"
    n = a.dim
    if n > 4:
        return CheckResult.not_applicable(name, "needs the verified range n <= 4")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if 6 * a.size <= 3**n:
        return CheckResult.not_applicable(name, "set is not above a sixth of the space")
    cands = [h] if h is not None else list(
        subspaces.enumerate_hyperplanes(n, avoid_origin=True)
    )
    for cand in cands:
        if cand.dim != n - 1 or 0 in cand:
            continue
        if a.bits & cand.members_bits:
            continue
        direction = cand.direction()
        hull = subspaces.affine_hull_bits(a.bits & direction.members_bits, n)
        if hull == direction:
            continue
        return _subprimitive_conclusion(name, a, {"H": cand.to_json()})
    return CheckResult.not_applicable(name, "no hyperplane satisfies the hypotheses")


@functools.lru_cache(maxsize=None)
def _grid_slice_bits(n: int, i: int, j: int) -> int:
    sp = _sp.space(n)
    bits = 0
    for idx in range(sp.size):
        t = sp.trits[idx]
        if t[0] == i and t[1] == j:
            bits |= 1 << idx
    return bits


def _prop_conclusion_grid(a: TernarySet, h) -> CheckResult:
    name = "conclusion_grid"
    n = a.dim
    if n < 2 or n > 4:
        return CheckResult.not_applicable(name, "needs 2 <= n <= 4")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if 2 * a.size <= 3 ** (n - 1):
        return CheckResult.not_applicable(name, "set is not above half a hyperplane")
    if 2 * (a.bits & _grid_slice_bits(n, 0, 1)).bit_count() <= 3 ** (n - 2):
        return CheckResult.not_applicable(
            name, "the (0,1) slice is not above half its size"
        )
    for i in range(3):
        one = a.bits & _grid_slice_bits(n, 1, i)
        two = a.bits & _grid_slice_bits(n, 2, (1 - i) % 3)
        if one and two:
            return CheckResult.not_applicable(
                name, f"both paired slices at i={i} are occupied"
            )
    return _subprimitive_conclusion(name, a, {})


def _lines_within(a: TernarySet) -> list:
    full = subspaces.full_space(a.dim)
    return [
        e
        for e in subspaces.enumerate_affine_subspaces(full, 1)
        if e.members_bits & ~a.bits == 0
    ]


def _prop_five_in_cube(a: TernarySet, h) -> CheckResult:
    name = "five_in_cube"
    if a.dim != 3:
        return CheckResult.not_applicable(name, "the statement concerns dimension 3")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if a.size < 5:
        return CheckResult.not_applicable(name, "set has fewer than 5 members")
    sup = primitive._primitive_superset(a)
    lines = _lines_within(a)
    if sup is not None and lines:
        return CheckResult.holds(
            name,
            "subprimitive and contains a line",
            witness={
                "primitive_superset": sorted(iter_bits(sup)),
                "line": lines[0].to_json(),
            },
        )
    reason = "not subprimitive" if sup is None else "contains no line"
    return CheckResult.counterexample(name, reason, witness={"set": a.indices()})


def _prop_four_point(a: TernarySet, h) -> CheckResult:
    name = "four_point"
    if a.dim != 3:
        return CheckResult.not_applicable(name, "the statement concerns dimension 3")
    if a.size != 4:
        return CheckResult.not_applicable(name, "set does not have 4 members")
    if not primitive.is_subprimitive(a):
        return CheckResult.not_applicable(name, "set is not subprimitive")
    hull = subspaces.affine_hull_bits(a.bits, 3)
    if hull.dim <= 2:
        return CheckResult.holds(name, "contained in a plane", witness={"plane": hull.to_json()})
    sp = _sp.space(3)
    members = a.indices()
    for p in members:
        total = 0
        for q in members:
            if q != p:
                total = sp.add(total, q)
        if total == p:
            return CheckResult.holds(
                name, "one member is the sum of the other three", witness={"point": p}
            )
    return CheckResult.counterexample(
        name, "neither planar nor a three-term sum", witness={"set": members}
    )


def _prop_line_everywhere(a: TernarySet, h) -> CheckResult:
    name = "line_everywhere"
    n = a.dim
    if n < 3:
        return CheckResult.not_applicable(name, "needs dimension at least 3")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if 6 * a.size <= 3**n:
        return CheckResult.not_applicable(name, "set is not above a sixth of the space")
    lines = _lines_within(a)
    if lines:
        return CheckResult.holds(name, "contains a line", witness={"line": lines[0].to_json()})
    return CheckResult.counterexample(name, "contains no line", witness={"set": a.indices()})


def _prop_parallel_lines(a: TernarySet, h) -> CheckResult:
    name = "parallel_lines"
    if a.dim != 4:
        return CheckResult.not_applicable(name, "the statement concerns dimension 4")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if a.size < 14:
        return CheckResult.not_applicable(name, "set has fewer than 14 members")
    by_direction: dict = {}
    for line in _lines_within(a):
        by_direction.setdefault(line.basis, []).append(line)
    pair = next((ls for ls in by_direction.values() if len(ls) >= 2), None)
    if pair is None:
        return CheckResult.not_applicable(name, "no two parallel lines inside the set")
    return _subprimitive_conclusion(
        name, a, {"lines": [pair[0].to_json(), pair[1].to_json()]}
    )


def _prop_dim4(a: TernarySet, h) -> CheckResult:
    name = "dim4"
    if a.dim != 4:
        return CheckResult.not_applicable(name, "the statement concerns dimension 4")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if a.size < 14:
        return CheckResult.not_applicable(name, "set has fewer than 14 members")
    return _subprimitive_conclusion(name, a, {})


def _prop_no_zero_4A(a: TernarySet, h) -> CheckResult:
    name = "no_zero_4A"
    n = a.dim
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if 6 * a.size <= 3**n:
        return CheckResult.not_applicable(name, "set is not above a sixth of the space")
    if 0 in k_fold_sumset(a, 4):
        return CheckResult.counterexample(
            name, "0 is a sum of four members", witness={"set": a.indices()}
        )
    return CheckResult.holds(name, "no four members sum to 0")


def _prop_codim2_slice(a: TernarySet, h) -> CheckResult:
    name = "codim2_slice"
    n = a.dim
    if n < 3 or n > 4:
        return CheckResult.not_applicable(name, "needs the verified range 3 <= n <= 4")
    if not is_sum_free(a):
        return CheckResult.not_applicable(name, "set is not sum-free")
    if 6 * a.size <= 3**n:
        return CheckResult.not_applicable(name, "set is not above a sixth of the space")
    q = 3 ** (n - 2)
    best = -1
    for e in subspaces.enumerate_affine_subspaces(subspaces.full_space(n), n - 2):
        got = (a.bits & e.members_bits).bit_count()
        if 2 * got >= q + 3:
            return CheckResult.holds(
                name,
                f"a codimension-2 subspace holds {got} of {q} points",
                witness={"Q": e.to_json()},
            )
        best = max(best, got)
    return CheckResult.counterexample(
        name,
        f"no codimension-2 subspace holds {(q + 3) // 2} points (best {best})",
        witness={"set": a.indices()},
    )
