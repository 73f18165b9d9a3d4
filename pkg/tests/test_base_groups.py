import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreathembed.base_groups import (
    EnumeratedPair,
    classify_coordinate,
    exponent_vector,
    free_abelian_oracle,
    free_abelian_trivial,
    halting_pair,
    insep_oracle,
    insep_trivial,
    insep_trivial_bruteforce,
    mock_pair,
    pair_basis_vector,
    prime,
    re_oracle,
    re_semi_trivial,
)
from wreathembed.words import A_ALPHABET, X_ALPHABET, Gen, Word, parse_word


def a_word(text: str) -> Word:
    return parse_word(text, A_ALPHABET)


def random_a_word(rng: random.Random, max_letters: int = 40, max_index: int = 20) -> Word:
    pairs = []
    for _ in range(rng.randrange(0, max_letters + 1)):
        pairs.append((Gen("a", rng.randrange(1, max_index + 1)), rng.choice([-1, 1])))
    return Word.make(A_ALPHABET, pairs)


class TestPrimes:
    def test_first_primes(self):
        # Independent fixed table.
        assert [prime(i) for i in range(1, 9)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_prime_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            prime(0)


class TestFreeAbelian:
    def test_commutator_is_trivial(self):
        w = parse_word("x1 x2 x1^-1 x2^-1", X_ALPHABET)
        assert free_abelian_trivial(w)

    def test_single_generator_is_not(self):
        assert not free_abelian_trivial(parse_word("x3", X_ALPHABET))

    def test_exponent_vector(self):
        w = parse_word("x2^3 x1 x2^-1", X_ALPHABET)
        assert exponent_vector(w) == {1: 1, 2: 2}

    def test_oracle_is_total(self):
        oracle = free_abelian_oracle()
        assert oracle.is_trivial is not None and oracle.semi_trivial is None


class TestMockPair:
    def test_enumerations(self):
        pair = mock_pair()
        assert [pair.enum_n(i) for i in (1, 2, 3)] == [1, 3, 5]
        assert [pair.enum_m(i) for i in (1, 2, 3)] == [2, 4, 6]

    def test_classify(self):
        pair = mock_pair()
        assert classify_coordinate(pair, 5) == ("n", 3)
        assert classify_coordinate(pair, 4) == ("m", 2)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            mock_pair("other")


class TestInsepDecider:
    def test_relator_n_side(self):
        # First pair (k = 1 in N, p = 2): a2 = a1^2.
        pair = mock_pair()
        assert insep_trivial(a_word("a2 a1^-2"), pair)
        assert not insep_trivial(a_word("a2 a1^-1"), pair)

    def test_relator_m_side(self):
        # First M pair (k = 2, p = 2): a4 = a3^-2.
        pair = mock_pair()
        assert insep_trivial(a_word("a4 a3^2"), pair)
        assert not insep_trivial(a_word("a4 a3^-2"), pair)

    def test_free_coordinates_never_cancel(self):
        # With the odd-even mock no coordinate is free, so use a sparser pair.
        sparse = EnumeratedPair(
            name="sparse",
            enum_n=lambda i: 4 * i,
            enum_m=lambda i: 4 * i + 2,
            in_n=lambda k: k >= 4 and k % 4 == 0,
            in_m=lambda k: k >= 6 and k % 4 == 2,
        )
        assert not insep_trivial(a_word("a1 a2^-1"), sparse)
        assert insep_trivial(a_word("a8 a7^-2"), sparse)  # k=4 is N's first member, p=2

    def test_bruteforce_matches_examples(self):
        pair = mock_pair()
        for text in ("a2 a1^-2", "a2 a1^-1", "a4 a3^2", "a4 a3^-2", ""):
            w = a_word(text)
            assert insep_trivial(w, pair) == insep_trivial_bruteforce(w, pair)

    def test_bulk_agreement_with_bruteforce(self):
        pair = mock_pair()
        rng = random.Random(7)
        for _ in range(1500):
            w = random_a_word(rng)
            assert insep_trivial(w, pair) == insep_trivial_bruteforce(w, pair)

    def test_multiplicativity_on_trivial_products(self):
        pair = mock_pair()
        rng = random.Random(11)
        for _ in range(300):
            w = random_a_word(rng, max_letters=15, max_index=10)
            assert insep_trivial(w * ~w, pair)

    def test_basis_vector_example(self):
        pair = mock_pair()
        assert pair_basis_vector(a_word("a4 a3^2"), pair) == {}
        assert pair_basis_vector(a_word("a3 a4"), pair) == {3: -1}

    def test_oracle_works_for_halting_pair_without_hint(self):
        oracle = insep_oracle(halting_pair())
        assert oracle.is_trivial is not None
        assert not oracle.is_trivial(a_word("a2 a1^-1"))
        assert oracle.is_trivial(a_word("a1 a1^-1"))


class TestHaltingPair:
    def test_values_are_positive_and_disjoint(self):
        pair = halting_pair()
        ns = [pair.enum_n(i) for i in range(1, 40)]
        ms = [pair.enum_m(i) for i in range(1, 20)]
        assert all(v >= 1 for v in ns + ms)
        assert len(set(ns)) == len(ns)
        assert not set(ns) & set(ms)

    def test_halt_program_is_enumerated(self):
        # Program number 1 is the single instruction HALT.
        pair = halting_pair()
        assert pair.enum_n(1) == 1

    def test_no_hint(self):
        assert not halting_pair().has_hint


class TestReSemiDecider:
    def test_merged_pair_becomes_trivial(self):
        enum = mock_pair().enum_n  # 1, 3, 5, ...
        assert not re_semi_trivial(a_word("a2 a1^-1"), enum, fuel=0)
        assert re_semi_trivial(a_word("a2 a1^-1"), enum, fuel=1)

    def test_monotone_in_fuel(self):
        enum = mock_pair().enum_n
        rng = random.Random(13)
        for _ in range(200):
            w = random_a_word(rng, max_letters=12, max_index=8)
            budgets = [0, 1, 2, 4, 8]
            answers = [re_semi_trivial(w, enum, f) for f in budgets]
            assert answers == sorted(answers)  # False may only turn True

    def test_sound_for_unmerged_pairs(self):
        enum = mock_pair().enum_n
        # Coordinates 3,4 merge only via n = 2, which is not enumerated.
        assert not re_semi_trivial(a_word("a4 a3^-1"), enum, fuel=50)

    def test_oracle_channel(self):
        oracle = re_oracle(mock_pair().enum_n, name="mock")
        assert oracle.is_trivial is None and oracle.semi_trivial is not None
        assert oracle.semi_trivial(a_word("a2 a1^-1"), 3)


@given(st.lists(st.tuples(st.integers(1, 12), st.integers(-3, 3)), max_size=10))
def test_insep_respects_free_reduction(pairs):
    pair = mock_pair()
    w = Word.make(A_ALPHABET, [(Gen("a", i), e) for i, e in pairs])
    shuffled = Word.make(A_ALPHABET, [(Gen("a", i), e) for i, e in reversed(pairs)])
    # Abelian base: order of letters cannot change the verdict.
    assert insep_trivial(w, pair) == insep_trivial(shuffled, pair)
