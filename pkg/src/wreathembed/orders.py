"""Computable strict orders and their lift through the embedding.

An :class:`OrderOracle` is a strict total order (modulo group equality) on
the words of one group, given as a computable predicate ``less``.  Orders on
a base group lift to the inner wreath stage and from there to the
two-generator group: compare the trailing shift exponents first, and when
those agree compare the carried values at the least point where they differ.
Lifting a bi-invariant order this way again yields a bi-invariant order.

For the pair-relation base groups the order compares exponent vectors
rewritten into a basis adapted to the relations, so equal group elements
always compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from wreathembed import twogen, wreath
from wreathembed.base_groups import (
    EnumeratedPair,
    GroupOracle,
    exponent_vector,
    pair_basis_vector,
)
from wreathembed.twogen import FSElement
from wreathembed.words import A_ALPHABET, FS_ALPHABET, X_ALPHABET, ZB_ALPHABET, Alphabet, Word
from wreathembed.wreath import ZBElement


@dataclass(frozen=True)
class OrderOracle:
    """A computable strict total order on the words of one group."""

    name: str
    alphabet: Alphabet
    less: Callable[[Word, Word], bool]


def _vector_less(u: dict[int, int], v: dict[int, int]) -> bool:
    # Lexicographic on sparse integer vectors: the smallest coordinate where
    # they differ decides, smaller value first.
    keys = sorted(set(u) | set(v))
    for key in keys:
        a, b = u.get(key, 0), v.get(key, 0)
        if a != b:
            return a < b
    return False


def lex_less(u: Word, v: Word) -> bool:
    """Strict lexicographic order on the free abelian group."""
    return _vector_less(exponent_vector(u), exponent_vector(v))


def lex_order(alphabet: Alphabet = X_ALPHABET) -> OrderOracle:
    return OrderOracle("lex", alphabet, lex_less)


def pair_adapted_order(pair: EnumeratedPair, alphabet: Alphabet = A_ALPHABET) -> OrderOracle:
    """Lexicographic order on the pair-relation group, via the adapted basis.

    Needs the pair's membership hint to rewrite words; equal group elements
    get equal vectors, so the order is well defined on the group.
    """

    def less(u: Word, v: Word) -> bool:
        return _vector_less(pair_basis_vector(u, pair), pair_basis_vector(v, pair))

    return OrderOracle(f"lex[{pair.name}]", alphabet, less)


def _check_alphabets(H: GroupOracle, H_order: OrderOracle) -> None:
    if H.alphabet != H_order.alphabet:
        raise ValueError(
            f"oracle {H.name!r} and order {H_order.name!r} use different alphabets"
        )


def zb_compare(
    a: ZBElement, b: ZBElement, H_order: OrderOracle, H: GroupOracle
) -> tuple[str, str, int | None]:
    """("LT"|"GT"|"EQ", deciding clause, deciding point).

    The clause is "tail" when the trailing shift exponents differ, "value"
    when the carried values decide at their least differing point, and
    "equal" otherwise.
    """
    _check_alphabets(H, H_order)
    if a.tail != b.tail:
        return ("LT" if a.tail < b.tail else "GT", "tail", None)
    nu0 = wreath.min_support(a * ~b, H)
    if nu0 is None:
        return ("EQ", "equal", None)
    va = wreath.value_at(a, nu0, H.alphabet)
    vb = wreath.value_at(b, nu0, H.alphabet)
    if H_order.less(va, vb):
        return ("LT", "value", nu0)
    if H_order.less(vb, va):
        return ("GT", "value", nu0)
    raise ValueError(f"order {H_order.name!r} is not total on distinct elements")


def zb_less(a: ZBElement, b: ZBElement, H_order: OrderOracle, H: GroupOracle) -> bool:
    return zb_compare(a, b, H_order, H)[0] == "LT"


def fs_compare(
    a: FSElement, b: FSElement, H_order: OrderOracle, H: GroupOracle
) -> tuple[str, str, int | None]:
    """Like :func:`zb_compare`, one level up."""
    _check_alphabets(H, H_order)
    if a.tail != b.tail:
        return ("LT" if a.tail < b.tail else "GT", "tail", None)
    mu0 = twogen.min_support(a * ~b, H)
    if mu0 is None:
        return ("EQ", "equal", None)
    va = twogen.value_at(a, mu0)
    vb = twogen.value_at(b, mu0)
    if zb_less(va, vb, H_order, H):
        return ("LT", "value", mu0)
    if zb_less(vb, va, H_order, H):
        return ("GT", "value", mu0)
    raise ValueError(f"order {H_order.name!r} is not total on distinct elements")


def fs_less(a: FSElement, b: FSElement, H_order: OrderOracle, H: GroupOracle) -> bool:
    return fs_compare(a, b, H_order, H)[0] == "LT"


def inner_lifted_order(H: GroupOracle, H_order: OrderOracle) -> OrderOracle:
    """The lifted order as an oracle over ``z``/``b`` words."""

    def less(u: Word, v: Word) -> bool:
        return zb_less(wreath.from_word(u), wreath.from_word(v), H_order, H)

    return OrderOracle(f"lift[{H_order.name}]", ZB_ALPHABET, less)


def lifted_order(H: GroupOracle, H_order: OrderOracle) -> OrderOracle:
    """The doubly lifted order as an oracle over ``f``/``s`` words."""

    def less(u: Word, v: Word) -> bool:
        return fs_less(twogen.from_word(u), twogen.from_word(v), H_order, H)

    return OrderOracle(f"lift2[{H_order.name}]", FS_ALPHABET, less)


def transport_less(
    u: Word, v: Word, images: dict, target_order: OrderOracle
) -> bool:
    """Pull the target order back along the substitution ``images``.

    ``images`` maps generators to words of the target order's alphabet; a
    letter without an image is an error.  When the substitution is an
    injective homomorphism this is again a strict order.
    """

    def substitute(w: Word) -> Word:
        out = Word.identity(target_order.alphabet)
        for gen, exp in w.runs:
            image = images.get(gen)
            if image is None:
                raise ValueError(f"no image given for generator {gen}")
            out = out * image**exp
        return out

    return target_order.less(substitute(u), substitute(v))


@dataclass(frozen=True)
class OrderAxiomViolation:
    axiom: str
    witnesses: tuple[str, ...]


@dataclass(frozen=True)
class OrderAxiomReport:
    checked: int
    violations: tuple[OrderAxiomViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_order_axioms(
    sample: Sequence[Word],
    relation: Callable[[Word, Word], bool],
    oracle: GroupOracle,
    n_max: int = 4,
) -> OrderAxiomReport:
    """Test a reflexive-style comparison relation against the order axioms.

    Over the sample: relation both ways forces group equality; a word above
    the identity forces its inverse below; a word above the identity forces
    all its powers above.  Violations are reported with printable witnesses,
    never raised.
    """
    if oracle.is_trivial is None:
        raise ValueError(f"oracle {oracle.name!r} has no total word-problem decider")
    one = Word.identity(oracle.alphabet)
    violations: list[OrderAxiomViolation] = []
    checked = 0
    for i, g in enumerate(sample):
        for h in sample[i + 1 :]:
            checked += 1
            if relation(g, h) and relation(h, g) and not oracle.is_trivial(g * ~h):
                violations.append(OrderAxiomViolation("antisymmetry", (str(g), str(h))))
    for g in sample:
        if not relation(one, g):
            continue
        checked += 1
        if not relation(~g, one):
            violations.append(OrderAxiomViolation("inverse", (str(g),)))
        for n in range(2, n_max + 1):
            checked += 1
            if not relation(one, g**n):
                violations.append(OrderAxiomViolation("power", (str(g), str(n))))
    return OrderAxiomReport(checked, tuple(violations))
