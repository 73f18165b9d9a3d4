"""Words over indexed generator alphabets.

A word is a whitespace-separated sequence of terms.  Each term is a generator
name, optionally followed by ``^`` and a decimal exponent (with optional
sign).  Generator names are a single lowercase letter; indexed letters carry
a positive decimal index glued to the letter.  Examples of terms::

    f    s^-1    z^3    b3    x17^-2

Words are stored in run-length canonical form: a tuple of (generator,
exponent) runs with no zero exponents and no two adjacent runs sharing a
generator.  Canonical form is exactly free reduction for words in distinct
letters, so two words are freely equal iff their canonical forms are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple


class WordError(ValueError):
    """Raised for malformed word text or alphabet violations.

    ``position`` is the 1-based column of the offending term when the error
    comes from parsing, else None.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"column {position}: {message}"
        super().__init__(message)
        self.position = position


class Gen(NamedTuple):
    """A single generator: a letter plus an index (None for plain letters)."""

    letter: str
    index: int | None

    def __str__(self) -> str:
        return self.letter if self.index is None else f"{self.letter}{self.index}"


@dataclass(frozen=True)
class Alphabet:
    """A finite set of plain letters plus a set of indexed letter families."""

    name: str
    plain: frozenset[str] = frozenset()
    indexed: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        for letter in self.plain | self.indexed:
            if not (len(letter) == 1 and letter.islower()):
                raise WordError(f"alphabet letter must be one lowercase char, got {letter!r}")
        if self.plain & self.indexed:
            raise WordError("a letter cannot be both plain and indexed")

    def gen(self, letter: str, index: int | None = None) -> Gen:
        """Build a validated generator of this alphabet."""
        if letter in self.plain:
            if index is not None:
                raise WordError(f"letter {letter!r} does not take an index")
            return Gen(letter, None)
        if letter in self.indexed:
            if index is None:
                raise WordError(f"letter {letter!r} requires an index")
            if index < 1:
                raise WordError(f"index must be >= 1, got {letter}{index}")
            return Gen(letter, index)
        raise WordError(f"unknown letter {letter!r} for alphabet {self.name}")


def _push(runs: list[tuple[Gen, int]], gen: Gen, exp: int) -> None:
    # Stack push with cascading cancellation; keeps the run list canonical.
    if exp == 0:
        return
    if runs and runs[-1][0] == gen:
        merged = runs[-1][1] + exp
        if merged == 0:
            runs.pop()
        else:
            runs[-1] = (gen, merged)
    else:
        runs.append((gen, exp))


@dataclass(frozen=True)
class Word:
    """A canonical word.  Build with :meth:`make` or :func:`parse_word`."""

    alphabet: Alphabet
    runs: tuple[tuple[Gen, int], ...] = ()

    @staticmethod
    def make(alphabet: Alphabet, pairs: Iterable[tuple[Gen, int]]) -> Word:
        """Canonicalize an iterable of (generator, exponent) pairs."""
        runs: list[tuple[Gen, int]] = []
        for gen, exp in pairs:
            alphabet.gen(gen.letter, gen.index)
            _push(runs, gen, exp)
        return Word(alphabet, tuple(runs))

    @staticmethod
    def identity(alphabet: Alphabet) -> Word:
        return Word(alphabet, ())

    def is_identity(self) -> bool:
        return not self.runs

    def letter_count(self) -> int:
        """Total letter count, exponents counted with multiplicity."""
        return sum(abs(exp) for _, exp in self.runs)

    def __iter__(self) -> Iterator[tuple[Gen, int]]:
        return iter(self.runs)

    def __mul__(self, other: Word) -> Word:
        if self.alphabet != other.alphabet:
            raise WordError("cannot multiply words over different alphabets")
        runs = list(self.runs)
        for gen, exp in other.runs:
            _push(runs, gen, exp)
        return Word(self.alphabet, tuple(runs))

    def __invert__(self) -> Word:
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.runs)))

    def __pow__(self, n: int) -> Word:
        if n == 0:
            return Word.identity(self.alphabet)
        base = self if n > 0 else ~self
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def __str__(self) -> str:
        return word_to_text(self)


_TERM = re.compile(r"([a-z])([0-9]*)(?:\^([+-]?[0-9]+))?\Z")


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse word text; raises WordError with a 1-based column on bad input."""
    pairs: list[tuple[Gen, int]] = []
    for token_match in re.finditer(r"\S+", text):
        token = token_match.group(0)
        pos = token_match.start() + 1
        m = _TERM.match(token)
        if m is None:
            raise WordError(f"malformed term {token!r}", pos)
        letter, digits, exp_text = m.group(1), m.group(2), m.group(3)
        index = int(digits) if digits else None
        try:
            gen = alphabet.gen(letter, index)
        except WordError as exc:
            raise WordError(str(exc), pos) from None
        exp = int(exp_text) if exp_text is not None else 1
        pairs.append((gen, exp))
    return Word.make(alphabet, pairs)


def word_to_text(word: Word) -> str:
    """Inverse of parse_word on canonical words; identity prints as ''."""
    terms = []
    for gen, exp in word.runs:
        terms.append(str(gen) if exp == 1 else f"{gen}^{exp}")
    return " ".join(terms)


def commutator(a, b):
    """``a b a^-1 b^-1``, for words or any element type with ``*`` and ``~``."""
    return a * b * ~a * ~b


def concat(a: Word, b: Word) -> Word:
    return a * b


def invert(a: Word) -> Word:
    return ~a


def free_reduce(a: Word) -> Word:
    """Re-canonicalize; the identity map on words built through this module."""
    return Word.make(a.alphabet, a.runs)


# Alphabets used across the package.  ``x`` generates the rank-omega free
# abelian target of the diagonal encoding, ``a`` the presented base groups,
# ``z``/``b`` the inner wreath stage, ``f``/``s`` the two-generator group.
X_ALPHABET = Alphabet("free-abelian", indexed=frozenset({"x"}))
A_ALPHABET = Alphabet("presented-base", indexed=frozenset({"a"}))
ZB_ALPHABET = Alphabet("inner-wreath", plain=frozenset({"z"}), indexed=frozenset({"b"}))
FS_ALPHABET = Alphabet("two-generator", plain=frozenset({"f", "s"}))
