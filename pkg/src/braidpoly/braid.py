"""Braid words in the Artin generators, with singular letters.

A word on ``m`` strands is a sequence of letters ``sigma_i``, ``sigma_i^-1``
or the singular generator ``tau_i`` (1 <= i < m).  Text form is a blank or
comma separated list of tokens: ``i`` for sigma_i, ``-i`` for its inverse and
``*i`` for tau_i.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BraidLetter",
    "BraidWord",
    "BraidError",
    "parse",
    "conjugate",
    "resolve_singular",
    "random_word",
]

POSITIVE = "pos"
NEGATIVE = "neg"
SINGULAR = "sing"


class BraidError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BraidLetter:
    index: int
    kind: str = POSITIVE

    def __post_init__(self):
        if self.kind not in (POSITIVE, NEGATIVE, SINGULAR):
            raise BraidError(f"unknown letter kind {self.kind!r}")
        if self.index < 1:
            raise BraidError(f"generator index must be positive, got {self.index}")

    @property
    def sign(self) -> int:
        """+1 for sigma_i, -1 for its inverse; singular letters have no sign."""
        if self.kind == SINGULAR:
            raise BraidError("singular letter has no crossing sign")
        return 1 if self.kind == POSITIVE else -1

    @property
    def is_singular(self) -> bool:
        return self.kind == SINGULAR

    def inverse(self) -> BraidLetter:
        if self.kind == SINGULAR:
            raise BraidError("singular letters are not invertible")
        return BraidLetter(self.index, NEGATIVE if self.kind == POSITIVE else POSITIVE)

    def token(self) -> str:
        if self.kind == SINGULAR:
            return f"*{self.index}"
        return str(self.index if self.kind == POSITIVE else -self.index)

    @classmethod
    def from_int(cls, g: int) -> BraidLetter:
        if g == 0:
            raise BraidError("0 is not a braid generator")
        return cls(abs(g), POSITIVE if g > 0 else NEGATIVE)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.index >= self.strands:
                raise BraidError(
                    f"generator {letter.index} out of range for {self.strands} strands"
                )

    @classmethod
    def from_ints(cls, strands: int, gens: Iterable[int]) -> BraidWord:
        return cls(strands, tuple(BraidLetter.from_int(g) for g in gens))

    def to_ints(self) -> list[int]:
        """Signed generator list; fails on singular words."""
        return [letter.index * letter.sign for letter in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise BraidError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(letter.token() for letter in self.letters)

    @property
    def singular_count(self) -> int:
        return sum(letter.is_singular for letter in self.letters)

    @property
    def is_singular(self) -> bool:
        return self.singular_count > 0

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(l.inverse() for l in reversed(self.letters)))

    def with_strands(self, m: int) -> BraidWord:
        """The same word read in B_m for m >= current strand count."""
        if m < self.strands:
            raise BraidError("cannot drop strands")
        return BraidWord(m, self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation: entry p is the bottom position of the strand ending at top position p."""
        perm = list(range(self.strands))
        for letter in self.letters:
            i = letter.index - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def replace(self, start: int, stop: int, new: Sequence[BraidLetter]) -> BraidWord:
        return BraidWord(self.strands, self.letters[:start] + tuple(new) + self.letters[stop:])


def parse(text: str, m: int) -> BraidWord:
    letters = []
    for tok in text.replace(",", " ").split():
        singular = tok.startswith("*")
        body = tok[1:] if singular else tok
        try:
            g = int(body)
        except ValueError:
            raise BraidError(f"malformed braid token {tok!r}") from None
        if g == 0 or (singular and g < 0):
            raise BraidError(f"malformed braid token {tok!r}")
        letters.append(BraidLetter(g, SINGULAR) if singular else BraidLetter.from_int(g))
    return BraidWord(m, tuple(letters))


def conjugate(beta: BraidWord, gamma: BraidWord) -> BraidWord:
    """The word ``gamma beta gamma^-1``."""
    if beta.strands != gamma.strands:
        raise BraidError(f"strand mismatch: {beta.strands} vs {gamma.strands}")
    if beta.is_singular or gamma.is_singular:
        raise BraidError("conjugation is defined on non-singular words only")
    return gamma + beta + gamma.inverse()


def resolve_singular(word: BraidWord) -> list[tuple[int, BraidWord]]:
    """Expand every singular letter as ``tau_i = sigma_i - sigma_i^-1``.

    Returns ``2**s`` signed words; resolutions appear in binary order with the
    positive choice first at each singular letter.
    """
    spots = [n for n, letter in enumerate(word.letters) if letter.is_singular]
    out = []
    for choice in itertools.product((POSITIVE, NEGATIVE), repeat=len(spots)):
        letters = list(word.letters)
        sign = 1
        for n, kind in zip(spots, choice):
            letters[n] = BraidLetter(letters[n].index, kind)
            if kind == NEGATIVE:
                sign = -sign
        out.append((sign, BraidWord(word.strands, tuple(letters))))
    return out


def random_word(m: int, length: int, seed: int | random.Random | None = None) -> BraidWord:
    if m < 2:
        raise BraidError("random words need at least two strands")
    if length < 0:
        raise BraidError("length must be nonnegative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    gens = [rng.choice((1, -1)) * rng.randint(1, m - 1) for _ in range(length)]
    return BraidWord.from_ints(m, gens)
