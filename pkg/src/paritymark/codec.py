"""Identity-message codecs.

Two codes are supported. ``BCH421`` is the short (4,2,1) code given as an
explicit lookup table: each 2-bit message owns a disjoint set of 4-bit words
that decode back to it, and five words decode to nothing. ``HAM74`` is the
systematic (7,4) Hamming code, which is perfect, so every 7-bit word decodes.

Watermark sequences are drawn uniformly from the message's valid set rather
than being the canonical codeword itself; the all-zero word is never drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

BCH421, HAM74, ORGFIXED = "BCH421", "HAM74", "ORGFIXED"


class LengthMismatch(ValueError):
    pass


class InvalidWord(ValueError):
    """The word lies outside every message's decoding region."""


@dataclass(frozen=True)
class CodeParams:
    code_id: str
    length: int  # l
    message_length: int  # k
    correctable: int  # e


PARAMS = {
    BCH421: CodeParams(BCH421, 4, 2, 1),
    HAM74: CodeParams(HAM74, 7, 4, 1),
}

# message -> (canonical codeword, valid watermark sequences)
BCH421_TABLE = {
    "00": ("0000", ("0001", "0010", "0100", "1000")),
    "01": ("0101", ("0101", "0111", "1101")),
    "10": ("1010", ("1010", "1011", "1110")),
    "11": ("1111", ("1111",)),
}
_BCH421_DECODE = {w: m for m, (_, valid) in BCH421_TABLE.items() for w in valid}

# parity bits: p1 = d1^d2^d4, p2 = d1^d3^d4, p3 = d2^d3^d4
_HAM_P = np.array([[1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]], dtype=np.uint8)
HAM74_GENERATOR = np.hstack([np.eye(4, dtype=np.uint8), _HAM_P])
HAM74_CHECK = np.hstack([_HAM_P.T, np.eye(3, dtype=np.uint8)])


def params(code_id: str) -> CodeParams:
    try:
        return PARAMS[code_id]
    except KeyError:
        raise ValueError(f"unknown code {code_id!r}") from None


def to_bits(word: str) -> np.ndarray:
    return np.array([int(ch) for ch in word], dtype=np.uint8)


def to_str(bits) -> str:
    return "".join(str(int(b)) for b in bits)


def _check(word: str, length: int, what: str) -> None:
    if len(word) != length or set(word) - {"0", "1"}:
        raise LengthMismatch(f"{what} {word!r} must be {length} bits")


def encode(message: str, code_id: str = BCH421) -> str:
    p = params(code_id)
    _check(message, p.message_length, "message")
    if code_id == BCH421:
        return BCH421_TABLE[message][0]
    return to_str(to_bits(message) @ HAM74_GENERATOR % 2)


def valid_set(message: str, code_id: str = BCH421) -> tuple[str, ...]:
    """Embeddable sequences for ``message``: the decoding ball minus the zero word."""
    p = params(code_id)
    _check(message, p.message_length, "message")
    if code_id == BCH421:
        return BCH421_TABLE[message][1]
    cw = encode(message, code_id)
    ball = [cw] + [cw[:i] + ("1" if cw[i] == "0" else "0") + cw[i + 1:]
                   for i in range(p.length)]
    return tuple(w for w in ball if "1" in w)


def sample_watermark(message: str, code_id: str, rng: np.random.Generator) -> str:
    choices = valid_set(message, code_id)
    return choices[int(rng.integers(len(choices)))]


def decode(word: str, code_id: str = BCH421) -> str:
    p = params(code_id)
    _check(word, p.length, "word")
    if code_id == BCH421:
        try:
            return _BCH421_DECODE[word]
        except KeyError:
            raise InvalidWord(word) from None
    bits = to_bits(word)
    syndrome = HAM74_CHECK @ bits % 2
    if syndrome.any():
        column = np.flatnonzero((HAM74_CHECK.T == syndrome).all(axis=1))[0]
        bits[column] ^= 1
    return to_str(bits[:4])


def all_words(length: int) -> list[str]:
    return ["".join(bits) for bits in product("01", repeat=length)]
