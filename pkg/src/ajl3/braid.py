"""Three-strand braid words.

A word is kept verbatim as a tuple of signed generators; no rewriting or
normal form is attempted.  Two input spellings are accepted per token:

* signed integers, ``"1"``, ``"-2"``
* letters, ``"s1"`` for the generator and ``"S1"`` for its inverse

The printer always emits the signed-integer form, so
``parse_braid(str(w)) == w``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import IndexOutOfRange, OddExponent, UnknownToken

_INT_TOKEN = re.compile(r"^[+-]?\d+$")
_LETTER_TOKEN = re.compile(r"^([sS])(\d+)$")


@dataclass(frozen=True, order=True)
class Generator:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index not in (1, 2):
            raise IndexOutOfRange(f"generator index {self.index} not in {{1, 2}}")
        if self.sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> Generator:
        return Generator(self.index, -self.sign)

    def __str__(self) -> str:
        return str(self.index * self.sign)


SIGMA1 = Generator(1, 1)
SIGMA2 = Generator(2, 1)
SIGMA1_INV = Generator(1, -1)
SIGMA2_INV = Generator(2, -1)
ALPHABET = (SIGMA1, SIGMA2, SIGMA1_INV, SIGMA2_INV)


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return BraidWord(self.letters[i])
        return self.letters[i]

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, s: int) -> BraidWord:
        return power(self, s)

    def __invert__(self) -> BraidWord:
        return inverse(self)

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)

    def pretty(self) -> str:
        """Unicode rendering, e.g. ``σ₁σ₂⁻¹``; ``1`` for the identity."""
        if not self.letters:
            return "1"
        sub = {1: "₁", 2: "₂"}
        return "".join(
            f"σ{sub[g.index]}" + ("⁻¹" if g.sign < 0 else "")
            for g in self.letters
        )

    @property
    def m(self) -> int:
        return len(self.letters)


IDENTITY = BraidWord()


def word(*ints: int) -> BraidWord:
    """Build a word from signed integers: ``word(2, 1, 1, 2)``."""
    return BraidWord(tuple(Generator(abs(n), 1 if n > 0 else -1) for n in ints))


def _parse_token(tok: str) -> Generator:
    if _INT_TOKEN.match(tok):
        n = int(tok)
        if n == 0 or abs(n) not in (1, 2):
            raise IndexOutOfRange(f"generator index in token {tok!r} not in {{1, 2}}")
        return Generator(abs(n), 1 if n > 0 else -1)
    m = _LETTER_TOKEN.match(tok)
    if m:
        idx = int(m.group(2))
        if idx not in (1, 2):
            raise IndexOutOfRange(f"generator index in token {tok!r} not in {{1, 2}}")
        return Generator(idx, 1 if m.group(1) == "s" else -1)
    raise UnknownToken(f"cannot parse braid token {tok!r}")


def parse_braid(text: str) -> BraidWord:
    return BraidWord(tuple(_parse_token(t) for t in text.split()))


def exponent_sum(w: BraidWord) -> int:
    return sum(g.sign for g in w)


def writhe_of_closure(w: BraidWord) -> int:
    """Writhe of the trace closure, in the convention matching this package's
    representation: ``-exponent_sum``.

    With the generator image ``A E + A^-1 1`` the bracket of the closure of
    ``sigma_1`` is ``-d A^-3``; only the negative sign turns it into the
    2-component unlink value ``d``.
    """
    return -exponent_sum(w)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    return BraidWord(a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(tuple(g.inverse() for g in reversed(a.letters)))


def power(a: BraidWord, s: int) -> BraidWord:
    if s < 0:
        a, s = inverse(a), -s
    return BraidWord(a.letters * s)


def separable_family(j: int) -> BraidWord:
    """``s2 s1 s2^j s1 s2`` for even ``j >= 0``; separable in every bipartition."""
    if j < 0 or j % 2:
        raise OddExponent(f"exponent j must be even and non-negative, got {j}")
    return word(2, 1) * power(word(2), j) * word(1, 2)


def all_words(max_len: int, min_len: int = 0) -> Iterator[BraidWord]:
    """Every word over the four letters with ``min_len <= length <= max_len``.

    Sorted by length, then lexicographically in the order s1, s2, S1, S2.
    """
    for n in range(min_len, max_len + 1):
        for letters in itertools.product(ALPHABET, repeat=n):
            yield BraidWord(letters)


def random_word(
    rng: np.random.Generator, max_len: int, min_len: int = 0
) -> BraidWord:
    n = int(rng.integers(min_len, max_len + 1))
    picks = rng.integers(0, 4, size=n)
    return BraidWord(tuple(ALPHABET[i] for i in picks))


def substitute_braid_relation(w: BraidWord) -> list[BraidWord]:
    """All words obtained from ``w`` by swapping one occurrence of
    ``s1 s2 s1`` with ``s2 s1 s2`` (or back)."""
    a = word(1, 2, 1).letters
    b = word(2, 1, 2).letters
    out = []
    for i in range(len(w) - 2):
        chunk = w.letters[i : i + 3]
        if chunk == a:
            out.append(BraidWord(w.letters[:i] + b + w.letters[i + 3 :]))
        elif chunk == b:
            out.append(BraidWord(w.letters[:i] + a + w.letters[i + 3 :]))
    return out

