import numpy as np
import pytest
from hypothesis import given, strategies as st

from paritymark import codec
from paritymark.codec import BCH421, HAM74, InvalidWord, LengthMismatch


@pytest.mark.parametrize("m,cw,valid", [
    ("00", "0000", {"0001", "0010", "0100", "1000"}),
    ("01", "0101", {"0101", "0111", "1101"}),
    ("10", "1010", {"1010", "1011", "1110"}),
    ("11", "1111", {"1111"}),
])
def test_bch421_table(m, cw, valid):
    assert codec.encode(m) == cw
    assert set(codec.valid_set(m)) == valid
    for w in valid:
        assert codec.decode(w) == m


@pytest.mark.parametrize("w", ["0000", "0011", "0110", "1001", "1100"])
def test_bch421_invalid_words(w):
    with pytest.raises(InvalidWord):
        codec.decode(w)


def test_length_checks():
    with pytest.raises(LengthMismatch):
        codec.encode("011")
    with pytest.raises(LengthMismatch):
        codec.decode("01", HAM74)


def test_hamming_known_codewords():
    # d1..d4 then p1=d1^d2^d4, p2=d1^d3^d4, p3=d2^d3^d4, worked by hand
    assert codec.encode("1011", HAM74) == "1011010"
    assert codec.encode("0000", HAM74) == "0000000"
    assert codec.encode("1111", HAM74) == "1111111"


def test_hamming_decodes_every_word_uniquely():
    decoded = {w: codec.decode(w, HAM74) for w in codec.all_words(7)}
    assert len(decoded) == 128
    for m in codec.all_words(4):
        ball = [w for w, d in decoded.items() if d == m]
        assert len(ball) == 8


@given(st.integers(0, 15), st.integers(0, 6))
def test_hamming_corrects_single_flip(m, pos):
    msg = format(m, "04b")
    cw = list(codec.encode(msg, HAM74))
    cw[pos] = "1" if cw[pos] == "0" else "0"
    assert codec.decode("".join(cw), HAM74) == msg


def test_sampling_never_zero_and_stays_valid():
    rng = np.random.default_rng(0)
    for code in (BCH421, HAM74):
        k = codec.params(code).message_length
        for m in codec.all_words(k):
            seen = {codec.sample_watermark(m, code, rng) for _ in range(200)}
            assert "0" * codec.params(code).length not in seen
            assert seen == set(codec.valid_set(m, code))
