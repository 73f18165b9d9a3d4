"""Outer stage: the two-generator group on ``f`` and ``s``.

Elements live in the restricted wreath product of the inner stage
(:mod:`wreathembed.wreath`) by the infinite cyclic group on ``s``.  The
single generator ``f`` is the function on ``s``-points whose value at point
``n`` is ``z`` when ``n = 1``, the inner generator ``b_i`` when ``n = 2^i``
(i >= 1), and the identity otherwise; ``s`` shifts arguments.

Normal form mirrors the inner stage: an ordered tuple of factors
``(gamma, beta)``, each denoting the ``s^gamma``-conjugate of ``f`` raised
to ``beta``, followed by a trailing ``s^tail``.  Only adjacent factors with
equal ``gamma`` merge.

A factor ``(gamma, beta)`` contributes a value only at points ``mu`` with
``gamma + mu`` equal to 1 or a power of two, so an element with d distinct
conjugating exponents is nontrivial on at most d * (log of the window) many
points.  All deciders enumerate exactly those sparse active points; the
conjugating exponents themselves may be astronomically large (they are
``2^i - 1`` for the embedding of the i-th base generator) and everything
stays exact integer arithmetic.

The embedding of a countable base group H sends its i-th generator to the
commutator of ``f`` with its ``s^(2^i - 1)``-conjugate.  That element is
supported at the single point 1, where its value is the inner commutator
``[z, b_i]``; composing with the inner diagonal embedding gives the
two-stage embedding of H into this group, with image recognized by
:func:`in_image` and inverted by :func:`decode`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from wreathembed import wreath
from wreathembed.base_groups import NONTRIVIAL, TRIVIAL, UNKNOWN, GroupOracle, SemiVerdict
from wreathembed.words import FS_ALPHABET, Gen, Word
from wreathembed.wreath import ZBElement

Factor = tuple[int, int]  # (conjugating s power, exponent)


def _push_factor(factors: list[Factor], gamma: int, beta: int) -> None:
    if beta == 0:
        return
    if factors and factors[-1][0] == gamma:
        merged = factors[-1][1] + beta
        if merged == 0:
            factors.pop()
        else:
            factors[-1] = (gamma, merged)
    else:
        factors.append((gamma, beta))


@dataclass(frozen=True)
class FSElement:
    """Normal form of a word in ``f`` and ``s``."""

    factors: tuple[Factor, ...] = ()
    tail: int = 0

    @staticmethod
    def make(factors: Iterable[Factor], tail: int = 0) -> FSElement:
        out: list[Factor] = []
        for gamma, beta in factors:
            _push_factor(out, gamma, beta)
        return FSElement(tuple(out), tail)

    @staticmethod
    def identity() -> FSElement:
        return FSElement()

    def __mul__(self, other: FSElement) -> FSElement:
        factors = list(self.factors)
        for gamma, beta in other.factors:
            _push_factor(factors, gamma + self.tail, beta)
        return FSElement(tuple(factors), self.tail + other.tail)

    def __invert__(self) -> FSElement:
        factors: list[Factor] = []
        for gamma, beta in reversed(self.factors):
            _push_factor(factors, gamma - self.tail, -beta)
        return FSElement(tuple(factors), -self.tail)

    def __pow__(self, n: int) -> FSElement:
        base = self if n >= 0 else ~self
        out = FSElement.identity()
        for _ in range(abs(n)):
            out = out * base
        return out


def from_word(word: Word) -> FSElement:
    """Evaluate a word over the ``f``/``s`` alphabet into normal form."""
    if word.alphabet != FS_ALPHABET:
        raise ValueError(f"expected the {FS_ALPHABET.name} alphabet")
    factors: list[Factor] = []
    offset = 0
    for gen, exp in word.runs:
        if gen.letter == "s":
            offset += exp
        else:
            _push_factor(factors, offset, exp)
    return FSElement(tuple(factors), offset)


def to_word(a: FSElement) -> Word:
    pairs: list[tuple[Gen, int]] = []
    f, s = Gen("f", None), Gen("s", None)
    at = 0
    for gamma, beta in a.factors:
        pairs.append((s, gamma - at))
        pairs.append((f, beta))
        at = gamma
    pairs.append((s, a.tail - at))
    return Word.make(FS_ALPHABET, pairs)


def normal_form_text(a: FSElement) -> str:
    body = ",".join(f"({gamma},{beta})" for gamma, beta in a.factors)
    return f"[{body}] ; {a.tail}"


def class_sums(a: FSElement) -> dict[int, int]:
    """Total exponent per conjugating power, including zero totals."""
    out: dict[int, int] = {}
    for gamma, beta in a.factors:
        out[gamma] = out.get(gamma, 0) + beta
    return out


def _f_value_at(n: int, beta: int) -> ZBElement | None:
    # The defining values of f: z at 1, b_i at 2^i, identity elsewhere.
    if n == 1:
        return ZBElement((), beta)
    if n >= 2 and n & (n - 1) == 0:
        return ZBElement(((n.bit_length() - 1, 0, beta),), 0)
    return None


class _Evaluator:
    """Per-element index of factors by conjugating power.

    Supports point evaluation and enumeration of active points without ever
    scanning an interval, which would be hopeless for embedded generators
    with conjugating exponents around ``2^100``.
    """

    def __init__(self, a: FSElement):
        self.by_gamma: dict[int, list[tuple[int, int]]] = {}
        for pos, (gamma, beta) in enumerate(a.factors):
            self.by_gamma.setdefault(gamma, []).append((pos, beta))

    def value_at(self, mu: int) -> ZBElement:
        contributions: list[tuple[int, ZBElement]] = []
        for gamma in self._active_gammas(mu):
            n = gamma + mu
            for pos, beta in self.by_gamma[gamma]:
                value = _f_value_at(n, beta)
                assert value is not None
                contributions.append((pos, value))
        contributions.sort()
        out = ZBElement.identity()
        for _, value in contributions:
            out = out * value
        return out

    def _active_gammas(self, mu: int) -> list[int]:
        found = []
        gamma = 1 - mu
        if gamma in self.by_gamma:
            found.append(gamma)
        if self.by_gamma:
            top = max(self.by_gamma) + mu
            power = 2
            while power <= top:
                gamma = power - mu
                if gamma in self.by_gamma:
                    found.append(gamma)
                power <<= 1
        return found

    def active_points(self, lo: int, hi: int) -> list[int]:
        """Sorted points in [lo, hi] where some factor takes a value."""
        points: set[int] = set()
        for gamma in self.by_gamma:
            mu = 1 - gamma
            if lo <= mu <= hi:
                points.add(mu)
            power = 2
            while power <= hi + gamma:
                if power - gamma >= lo:
                    points.add(power - gamma)
                power <<= 1
        return sorted(points)


def value_at(a: FSElement, mu: int) -> ZBElement:
    """The inner-stage element this element carries at the point ``mu``."""
    return _Evaluator(a).value_at(mu)


def _gamma_bound(a: FSElement) -> int:
    return max((abs(gamma) for gamma, _ in a.factors), default=0)


def is_trivial(a: FSElement, H: GroupOracle) -> bool:
    """Word problem relative to a total base oracle.

    Trivial iff the trailing ``s`` power vanishes, every conjugacy class of
    factors has exponent sum zero, and the carried value is inner-trivial
    across the window of three times the largest conjugating exponent.  The
    class-sum condition pins the values beyond the window, where only one
    class can be active at a time.
    """
    wreath._require_total(H)
    if a.tail != 0:
        return False
    if any(total != 0 for total in class_sums(a).values()):
        return False
    ev = _Evaluator(a)
    bound = 3 * _gamma_bound(a)
    return all(
        wreath.is_trivial(ev.value_at(mu), H) for mu in ev.active_points(-bound, bound)
    )


def semi_trivial(a: FSElement, H: GroupOracle, fuel: int) -> SemiVerdict:
    """Fuel-bounded word problem; refutations are fuel-independent."""
    if a.tail != 0:
        return NONTRIVIAL
    if any(total != 0 for total in class_sums(a).values()):
        return NONTRIVIAL
    ev = _Evaluator(a)
    bound = 3 * _gamma_bound(a)
    confirmed = True
    for mu in ev.active_points(-bound, bound):
        verdict = wreath.semi_trivial(ev.value_at(mu), H, fuel)
        if verdict.nontrivial:
            return NONTRIVIAL
        confirmed = confirmed and verdict.trivial
    return TRIVIAL if confirmed else UNKNOWN


def min_support(a: FSElement, H: GroupOracle) -> int | None:
    """Least point where the carried value is nontrivial, if any.

    Inside the window of five times the largest conjugating exponent the
    active points are scanned directly.  Beyond it at most one factor class
    is active per point, so the value is a power of a single ``b_i`` whose
    exponent is the class sum; the base generators all have infinite order,
    so such a point is in the support exactly when the class sum is nonzero.
    """
    wreath._require_total(H)
    ev = _Evaluator(a)
    bound = 5 * _gamma_bound(a) + 2
    for mu in ev.active_points(-bound, bound):
        if not wreath.is_trivial(ev.value_at(mu), H):
            return mu
    candidates = []
    for gamma, total in class_sums(a).items():
        if total != 0:
            top = bound + gamma
            power = 2 if top < 2 else 1 << top.bit_length()
            candidates.append(power - gamma)
    return min(candidates) if candidates else None


def generator_word(i: int) -> Word:
    """The ``f``/``s`` word embedding the i-th base generator.

    The commutator of ``f`` with its ``s^(2^i - 1)``-conjugate: supported
    at the single point 1, carrying the inner commutator ``[z, b_i]``.
    """
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    k = (1 << i) - 1
    f, s = Gen("f", None), Gen("s", None)
    return Word.make(
        FS_ALPHABET,
        [(f, 1), (s, k), (f, 1), (s, -k), (f, -1), (s, k), (f, -1), (s, -k)],
    )


def encode_word(word: Word) -> FSElement:
    """Embed a word of the base group, letter by letter."""
    out = Word.identity(FS_ALPHABET)
    for gen, exp in word.runs:
        if gen.index is None:
            raise ValueError(f"generator {gen} carries no index")
        out = out * generator_word(gen.index) ** exp
    return from_word(out)


def in_image(a: FSElement, H: GroupOracle) -> bool:
    """Membership in the embedded copy of the base group.

    Image elements are supported at the single point 1, where their value
    lies in the inner diagonal subgroup.
    """
    wreath._require_total(H)
    if a.tail != 0:
        return False
    if any(total != 0 for total in class_sums(a).values()):
        return False
    ev = _Evaluator(a)
    bound = 3 * _gamma_bound(a)
    for mu in ev.active_points(-bound, bound):
        if mu != 1 and not wreath.is_trivial(ev.value_at(mu), H):
            return False
    return wreath.in_diagonal(ev.value_at(1), H)


def decode(a: FSElement, H: GroupOracle) -> Word:
    """Inverse of :func:`encode_word` on the embedded copy of the base."""
    if not in_image(a, H):
        raise ValueError("element is not in the embedded base group")
    return wreath.decode(value_at(a, 1), H)


def in_base(a: FSElement) -> bool:
    """Membership in the subgroup of elements with no ``s`` component.

    That subgroup is normally generated by ``f`` alone and consists exactly
    of the elements with vanishing trailing ``s`` power; no base-group
    oracle is needed.
    """
    return a.tail == 0


def word_oracle(H: GroupOracle) -> GroupOracle:
    """This group, packaged as an oracle over the ``f``/``s`` alphabet."""
    if H.is_trivial is not None:
        return GroupOracle(
            f"twogen({H.name})",
            FS_ALPHABET,
            is_trivial=lambda w: is_trivial(from_word(w), H),
        )
    return GroupOracle(
        f"twogen({H.name})",
        FS_ALPHABET,
        semi_trivial=lambda w, fuel: semi_trivial(from_word(w), H, fuel).trivial,
    )
