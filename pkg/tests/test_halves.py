"""Translate-pair halves of a punctured hyperplane."""

import pytest

from gf3sets import TernarySet
from gf3sets import halves as hv
from gf3sets import subspaces as sub
from gf3sets.space import iter_bits, space


def _h_u(n):
    h = sub.hyperplane_from_normal(n, 1, 1)  # {x : x_0 = 1}
    u = sub.affine_subspace(n, (), 1)  # the single point e_0
    return h, u


def test_point_half_in_the_plane():
    h, u = _h_u(2)
    assert hv.is_half(TernarySet.from_indices(2, [4]), h, u)
    assert hv.is_half(TernarySet.from_indices(2, [7]), h, u)
    assert not hv.is_half(TernarySet.from_indices(2, [4, 7]), h, u)
    assert not hv.is_half(TernarySet.empty(2), h, u)
    assert len(hv.enumerate_halves(h, u)) == 2


def test_sixteen_halves_in_the_cube():
    h, u = _h_u(3)
    out = hv.enumerate_halves(h, u)
    assert len(out) == 16
    assert len({w.bits for w in out}) == 16
    for w in out:
        assert hv.is_half(w, h, u)
        assert w.size == 4
        # W, -W and U partition H
        sp = space(3)
        mirror = sp.sumset_bits(sp.neg_set_bits(u.members_bits),
                                sp.neg_set_bits(w.bits))
        assert w.bits & mirror == 0
        assert (w.bits | mirror | u.members_bits) == h.members_bits


def test_half_violations():
    h, u = _h_u(3)
    good = hv.enumerate_halves(h, u)[0]
    # dropping a point leaves a translate pair unrepresented
    short = TernarySet(3, good.bits & (good.bits - 1))
    assert not hv.is_half(short, h, u)
    # W together with its own mirror covers pairs twice
    sp = space(3)
    mirror = sp.sumset_bits(sp.neg_set_bits(u.members_bits),
                            sp.neg_set_bits(good.bits))
    assert not hv.is_half(TernarySet(3, good.bits | mirror), h, u)
    # a set containing U itself cannot be a half
    assert not hv.is_half(TernarySet(3, good.bits | u.members_bits), h, u)
    with pytest.raises(ValueError):
        hv.is_half(TernarySet.empty(2), h, u)


def test_line_core_halves():
    # U a line inside a 3-flat: pairs group whole translates of U
    h = sub.hyperplane_from_normal(4, 1, 1)
    u = sub.affine_subspace(4, (3,), 1)
    pairs = hv.coset_pairs(h, u)
    assert len(pairs) == 4
    out = hv.enumerate_halves(h, u)
    assert len(out) == 16
    for w in out:
        assert w.size == 12
        assert hv.is_half(w, h, u)
        # halves are unions of U-translates, so U's direction stabilizes them
        sp = space(4)
        assert sp.translate_bits(w.bits, 3) == w.bits


def test_check_half_fact_small():
    h, u = _h_u(3)
    assert hv.check_half_fact(h, u)


def test_check_half_fact_8192():
    h, u = _h_u(4)
    assert len(hv.coset_pairs(h, u)) == 13
    assert hv.check_half_fact(h, u)


def test_check_half_fact_guards():
    h, u = _h_u(2)
    with pytest.raises(ValueError):
        hv.check_half_fact(h, u)  # dim gap is only 1
    plane = sub.linear_subspace(3, (1, 3))
    point = sub.affine_subspace(3, (), 1)
    with pytest.raises(ValueError):
        hv.check_half_fact(plane, point)  # H through the origin


def test_u_equal_h_yields_single_empty_half():
    h, _ = _h_u(2)
    out = hv.enumerate_halves(h, h)
    assert len(out) == 1 and out[0].size == 0
