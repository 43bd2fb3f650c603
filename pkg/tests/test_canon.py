"""Linear group action, least orbit members, stabilizer counts."""

import random

import pytest

import oracles
from gf3sets import TernarySet, canonical_form, gl_order, stabilizer_order
from gf3sets import canon
from gf3sets import subspaces as sub
from gf3sets.space import iter_bits


def test_group_orders():
    assert gl_order(1) == 2
    assert gl_order(2) == 48
    assert gl_order(3) == 11232
    assert gl_order(4) == 24261120


@pytest.mark.parametrize("n", [1, 2])
def test_enumerate_gl_matches_oracle(n):
    got = {g.imgs for g in canon.enumerate_gl(n)}
    want = {
        tuple(oracles.to_index(row) for row in mat)
        for mat in oracles.gl_elements(n)
    }
    assert got == want
    assert len(got) == gl_order(n)


def test_enumerate_gl_count_dim3():
    assert len(canon.enumerate_gl(3)) == 11232
    with pytest.raises(ValueError):
        canon.enumerate_gl(4)


def test_group_element_action_matches_oracle():
    rng = random.Random(1)
    for n in (2, 3):
        for _ in range(20):
            g = canon.random_gl(n, rng)
            mat = g.matrix
            for idx in range(3**n):
                want = oracles.to_index(
                    oracles.apply_matrix(mat, oracles.to_trits(idx, n))
                )
                assert g.apply_index(idx) == want
            bits = rng.getrandbits(3**n)
            got = g.apply_bits(bits)
            assert set(iter_bits(got)) == {g.apply_index(i) for i in iter_bits(bits)}


def test_compose_and_inverse():
    rng = random.Random(2)
    for n in (1, 2, 3):
        ident = canon.GroupElement.identity(n)
        for _ in range(15):
            g = canon.random_gl(n, rng)
            h = canon.random_gl(n, rng)
            gh = g @ h
            for idx in range(3**n):
                assert gh.apply_index(idx) == g.apply_index(h.apply_index(idx))
            assert (g @ g.inverse()).imgs == ident.imgs
            assert (g.inverse() @ g).imgs == ident.imgs


def test_invalid_group_element_rejected():
    with pytest.raises(ValueError):
        canon.GroupElement(2, (1, 2))  # e_1 image is a multiple of e_0 image


@pytest.mark.parametrize("n", [1, 2])
def test_canonicalization_matches_oracle_exhaustively(n):
    group = oracles.gl_elements(n)
    for bits in range(1 << 3**n):
        a = TernarySet(n, bits)
        got = canonical_form(a)
        stab = stabilizer_order(a)
        trits = [oracles.to_trits(i, n) for i in iter_bits(bits)]
        best, hits = oracles.orbit_min(trits, n, group)
        assert tuple(got.indices()) == (best or ())
        assert stab == hits if bits else stab == gl_order(n)


def test_canonicalization_matches_oracle_dim3_sampled():
    group = oracles.gl_elements(3)
    rng = random.Random(3)
    for _ in range(12):
        size = rng.randrange(0, 8)
        idxs = rng.sample(range(27), size)
        a = TernarySet.from_indices(3, idxs)
        got = canonical_form(a)
        stab = stabilizer_order(a)
        trits = [oracles.to_trits(i, 3) for i in idxs]
        best, hits = oracles.orbit_min(trits, 3, group)
        assert tuple(got.indices()) == (best or ())
        if size:
            assert stab == hits
        else:
            assert stab == gl_order(3)


def test_is_lexmin_agrees_with_canonical_form():
    rng = random.Random(4)
    for n in (2, 3):
        for _ in range(200):
            bits = rng.getrandbits(3**n) & rng.getrandbits(3**n)
            a = TernarySet(n, bits)
            is_min = canon.is_lexmin_bits(bits, n)
            least = canonical_form(a).bits
            assert is_min == (least == bits)
            assert canon.is_lexmin_bits(least, n)


def test_orbit_stabilizer_identity():
    rng = random.Random(5)
    for n in (2, 3):
        for _ in range(6):
            size = rng.randrange(1, 6)
            a = TernarySet.from_indices(n, rng.sample(range(3**n), size))
            orbit = canon.orbit_of_bits(a.bits, n)
            assert len(orbit) * stabilizer_order(a) == gl_order(n)
            assert min(orbit, key=lambda b: tuple(iter_bits(b))) == canonical_form(a).bits


def test_lines_share_one_canonical_form():
    # every maximal sum-free set of the 2-dimensional space is one orbit
    from gf3sets import enumerate_maximal_sumfree

    rep = enumerate_maximal_sumfree(2, 1, up_to_iso=False)
    forms = {
        canonical_form(TernarySet.from_indices(2, s)).bits
        for s, _, _ in rep.representatives
    }
    assert len(forms) == 1


def test_hyperplane_transitivity_dim4():
    planes = sub.enumerate_hyperplanes(4, avoid_origin=True)
    orbit = canon.orbit_of_bits(planes[0].members_bits, 4)
    assert len(orbit) == 80
    assert orbit == {h.members_bits for h in planes}


def test_empty_and_full_sets_are_fixed():
    for n in (1, 2, 3):
        assert canonical_form(TernarySet.empty(n)).size == 0
        assert stabilizer_order(TernarySet.empty(n)) == gl_order(n)
        full = TernarySet.full(n)
        assert canonical_form(full) == full
        assert stabilizer_order(full) == gl_order(n)
