"""Fixed reference coding: alphabets, bit costs, and bit-exact emission.

Every description length in this package is an exact integer number of bits
under one fixed, auditable code. Words are coded letter by letter at a fixed
codeword width, terminated by a reserved end-of-word codeword; counts are
coded in unary. Codewords are emitted most-significant-bit first and
concatenated in write order; `docs/coding.md` documents the layout bit by
bit. Each ``*_cost`` function equals the length of the corresponding
``encode_*`` output, which the test suite verifies by actually emitting.

All functions here are pure and all values immutable, so concurrent use
needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import AlphabetError, DomainError

# Description lengths are plain nonnegative ints measured in bits. Integer
# arithmetic only: costs are added and compared exactly, never via floats.
BitLength = int

# A word is a str over an Alphabet; a case is a (problem, solution) pair.
Word = str
Case = tuple[str, str]

DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz-"


def codeword_width(count: int) -> int:
    """Width in bits of a fixed-length code distinguishing `count` codewords."""
    if count < 1:
        raise DomainError("codeword count must be positive")
    return max(1, (count - 1).bit_length())


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbols plus one reserved end-of-word token.

    The end token lives outside `symbols`; `symbol_cost` is the fixed
    codeword width covering all symbols and the end token.
    """

    symbols: tuple[str, ...] = tuple(DEFAULT_SYMBOLS)
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if isinstance(self.symbols, str):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise DomainError("alphabet must not be empty")
        if any(not isinstance(s, str) or len(s) != 1 for s in self.symbols):
            raise DomainError("alphabet symbols must be single characters")
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError("alphabet symbols must be distinct")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def symbol_cost(self) -> BitLength:
        # +1 reserves the end-of-word codeword.
        return codeword_width(self.size + 1)

    @property
    def end_code(self) -> int:
        return self.size

    def index(self, char: str, word: Word = "") -> int:
        try:
            return self._index[char]
        except KeyError:
            raise AlphabetError(char, word) from None

    def contains_word(self, word: Word) -> bool:
        return all(c in self._index for c in word)

    def validate_word(self, word: Word) -> None:
        for c in word:
            if c not in self._index:
                raise AlphabetError(c, word)


DEFAULT_ALPHABET = Alphabet()


def word_cost(word: Word, alphabet: Alphabet = DEFAULT_ALPHABET) -> BitLength:
    """Bits to code `word` letter by letter plus the end-of-word token."""
    alphabet.validate_word(word)
    return (len(word) + 1) * alphabet.symbol_cost


def unary_cost(k: int) -> BitLength:
    """Bits of the unary code for k >= 1: k-1 ones and a terminating zero."""
    if k < 1:
        raise DomainError(f"unary code is defined for k >= 1, got {k}")
    return k


def null_case_cost(case: Case, alphabet: Alphabet = DEFAULT_ALPHABET) -> BitLength:
    """Model-free cost of a case: both words coded independently."""
    x, y = case
    return word_cost(x, alphabet) + word_cost(y, alphabet)


def encode_fixed(value: int, width: int) -> str:
    """Emit `value` as `width` bits, most significant bit first."""
    if value < 0 or value >= (1 << width):
        raise DomainError(f"value {value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def encode_unary(k: int) -> str:
    unary_cost(k)
    return "1" * (k - 1) + "0"


def decode_unary(bits: str, start: int = 0) -> tuple[int, int]:
    """Read one unary codeword; returns (k, next position)."""
    pos = bits.index("0", start)
    return pos - start + 1, pos + 1


def encode_word(word: Word, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    width = alphabet.symbol_cost
    parts = [encode_fixed(alphabet.index(c, word), width) for c in word]
    parts.append(encode_fixed(alphabet.end_code, width))
    return "".join(parts)


def decode_word(bits: str, alphabet: Alphabet = DEFAULT_ALPHABET, start: int = 0) -> tuple[Word, int]:
    """Read one word codeword sequence; returns (word, next position)."""
    width = alphabet.symbol_cost
    chars: list[str] = []
    pos = start
    while True:
        code = int(bits[pos : pos + width], 2)
        pos += width
        if code == alphabet.end_code:
            return "".join(chars), pos
        if code >= alphabet.size:
            raise DomainError(f"codeword {code} is not assigned")
        chars.append(alphabet.symbols[code])


def is_prefix_free(codes: Iterable[str]) -> bool:
    """True iff no emitted bitstring is a proper prefix of another."""
    ordered = sorted(set(codes))
    for a, b in zip(ordered, ordered[1:]):
        if b.startswith(a):
            return False
    return True
