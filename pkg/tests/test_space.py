"""Index arithmetic tables against the naive trit oracle."""

import random

import pytest

import oracles
from gf3sets import space


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_encode_decode_roundtrip(n):
    for i in range(3**n):
        trits = space.decode(i, n)
        assert oracles.to_trits(i, n) == trits
        assert space.encode(trits) == i


@pytest.mark.parametrize("n", [1, 2, 3])
def test_add_sub_neg_tables(n):
    sp = space.space(n)
    for i in range(sp.size):
        u = oracles.to_trits(i, n)
        assert sp.neg[i] == oracles.to_index(oracles.neg(u))
        for j in range(sp.size):
            v = oracles.to_trits(j, n)
            assert sp.add(i, j) == oracles.to_index(oracles.add(u, v))
            assert sp.sub(i, j) == oracles.to_index(oracles.sub(u, v))


def test_scale():
    sp = space.space(3)
    for i in range(sp.size):
        u = oracles.to_trits(i, 3)
        assert sp.scale(i, 2) == oracles.to_index(oracles.neg(u))
        assert sp.scale(i, 0) == 0
        assert sp.scale(i, 1) == i


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bitset_ops_match_setwise(n):
    rng = random.Random(n)
    sp = space.space(n)
    for _ in range(25):
        abits = rng.getrandbits(sp.size)
        bbits = rng.getrandbits(sp.size)
        a = {oracles.to_trits(i, n) for i in space.iter_bits(abits)}
        b = {oracles.to_trits(i, n) for i in space.iter_bits(bbits)}
        got_sum = {
            oracles.to_trits(i, n)
            for i in space.iter_bits(sp.sumset_bits(abits, bbits))
        }
        assert got_sum == oracles.sumset(a, b)
        got_neg = {
            oracles.to_trits(i, n) for i in space.iter_bits(sp.neg_set_bits(abits))
        }
        assert got_neg == {oracles.neg(x) for x in a}
        v = rng.randrange(sp.size)
        got_tr = {
            oracles.to_trits(i, n)
            for i in space.iter_bits(sp.translate_bits(abits, v))
        }
        w = oracles.to_trits(v, n)
        assert got_tr == {oracles.add(x, w) for x in a}


def test_span_bits():
    sp = space.space(3)
    assert sp.span_bits(()) == 1
    assert sp.span_bits((1,)) == 0b111
    e0e1 = sp.span_bits((1, 3))
    want = {
        oracles.to_index(v) for v in oracles.span([(1, 0, 0), (0, 1, 0)], 3)
    }
    assert set(space.iter_bits(e0e1)) == want
    assert sp.span_bits((1, 3, 9)) == sp.full_bits


def test_iter_bits_order():
    assert list(space.iter_bits(0b101101)) == [0, 2, 3, 5]
    assert list(space.iter_bits(0)) == []


def test_check_dim_limits():
    space.check_dim(0)
    space.check_dim(space.MAX_DIM)
    with pytest.raises(ValueError):
        space.check_dim(-1)
    with pytest.raises(ValueError):
        space.check_dim(space.MAX_DIM + 1)
    with pytest.raises(TypeError):
        space.check_dim("3")
