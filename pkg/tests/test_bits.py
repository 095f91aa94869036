import pytest

from invariant_states import bits


def test_roundtrip_index():
    for k in (1, 2, 3):
        for idx in range(2**k):
            assert bits.to_index(bits.from_index(idx, k)) == idx


def test_first_bit_most_significant():
    assert bits.to_index((1, 0)) == 2
    assert bits.to_index((0, 1)) == 1
    assert bits.from_index(2, 2) == (1, 0)


def test_all_vectors_order():
    assert list(bits.all_vectors(2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_xor_and_product():
    assert bits.xor((1, 0, 1), (1, 1, 0)) == (0, 1, 1)
    assert bits.bit_and((1, 0, 1), (1, 1, 0)) == (1, 0, 0)
    with pytest.raises(ValueError):
        bits.xor((1, 0), (1,))


def test_parse_and_str():
    assert bits.parse_bits("01") == (0, 1)
    assert bits.bits_str((1, 1, 0)) == "110"
    with pytest.raises(ValueError):
        bits.parse_bits("")
    with pytest.raises(ValueError):
        bits.parse_bits("012")


def test_validation():
    with pytest.raises(ValueError):
        bits.as_bits(())
    with pytest.raises(ValueError):
        bits.as_bits((0, 2))
    assert bits.weight((1, 0, 1)) == 2
