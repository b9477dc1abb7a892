import pytest
from hypothesis import given, strategies as st

from commgraph.bits import BitVec


def test_msb_first_hex():
    # bits 1010 -> first nibble 0xa
    assert BitVec.from_string("1010").to_hex() == "a"
    # 5 bits pad on the right: 10111 -> 1011 1000 -> "b8"
    assert BitVec.from_string("10111").to_hex() == "b8"
    assert BitVec.from_hex("b8", 5) == BitVec.from_string("10111")


def test_bad_hex_padding_rejected():
    with pytest.raises(ValueError):
        BitVec.from_hex("b9", 5)  # nonzero bits in the padding


def test_indexing_matches_string_order():
    v = BitVec.from_string("0110")
    assert [v[i] for i in range(4)] == [0, 1, 1, 0]
    with pytest.raises(IndexError):
        v[4]


def test_and_popcount():
    a = BitVec.from_string("1101")
    b = BitVec.from_string("1011")
    assert (a & b) == BitVec.from_string("1001")
    assert (a & b).popcount() == 2


def test_concat_copies():
    assert BitVec.from_string("101").concat_copies(2) == BitVec.from_string("101101")


@given(st.lists(st.integers(0, 1), min_size=1, max_size=200))
def test_hex_round_trip(bits):
    v = BitVec.from_bits(bits)
    assert BitVec.from_hex(v.to_hex(), v.n) == v
    assert list(v) == bits


@given(st.lists(st.integers(0, 1), min_size=1, max_size=50), st.integers(1, 5))
def test_concat_copies_indexing(bits, k):
    v = BitVec.from_bits(bits)
    rep = v.concat_copies(k)
    assert rep.n == v.n * k
    assert all(rep[i] == bits[i % len(bits)] for i in range(rep.n))
