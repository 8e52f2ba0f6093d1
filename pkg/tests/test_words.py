import random

import pytest
from hypothesis import given, strategies as st

from heiscurve.words import (
    A, B, C, FreeWord, commutator, conjugation_expansion_sides, exponent_sums, phi_relation_sides,
    random_word, reduce, search_phi_relation_order, verify_conjugation_expansion, verify_phi_relation,
)

letters = st.lists(st.tuples(st.sampled_from("AB"), st.integers(-3, 3)), max_size=12)


def naive_reduce(text):
    # stack-based free reduction on single letters
    out = []
    for ch in text:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def test_reduce_examples():
    assert reduce([("A", 1), ("A", -1)]).is_identity()
    assert reduce([("A", 2), ("B", 0), ("A", 3)]) == FreeWord.gen("A", 5)
    assert (C * C.inverse()).is_identity()


def test_parse_and_str():
    assert str(C) == "ABab"
    assert FreeWord.parse("ABab") == C
    assert FreeWord.parse("AaBb").is_identity()
    with pytest.raises(ValueError):
        FreeWord.parse("AxB")


def test_exponent_sums():
    assert exponent_sums(C) == (0, 0)
    assert exponent_sums(A ** 2 * B ** 3) == (2, 3)


@given(letters, letters)
def test_exponent_sums_homomorphism(u, v):
    u, v = reduce(u), reduce(v)
    su, sv = exponent_sums(u), exponent_sums(v)
    assert exponent_sums(u * v) == (su[0] + sv[0], su[1] + sv[1])


@given(letters)
def test_reduced_form_invariants(raw):
    w = reduce(raw)
    assert all(e != 0 for _, e in w.letters)
    assert all(w.letters[i][0] != w.letters[i + 1][0] for i in range(len(w.letters) - 1))
    assert str(w) == naive_reduce(str(w))


@given(letters, letters)
def test_product_matches_naive_reduction(u, v):
    u, v = reduce(u), reduce(v)
    assert str(u * v) == naive_reduce(str(u) + str(v))


@given(letters)
def test_inverse(raw):
    w = reduce(raw)
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


def test_phi_relation_small_n():
    for N in range(1, 7):
        assert verify_phi_relation(N)
    lhs, rhs = phi_relation_sides(1)
    assert lhs == rhs == C


def test_phi_relation_other_orders():
    # only the i-outer, left-to-right order holds in general
    assert search_phi_relation_order(3) == ["ij"]


def test_phi_relation_naive_oracle():
    for N in (2, 3):
        lhs = "A" * N + "B" * N + "a" * N + "b" * N
        rhs = ""
        for i in range(N):
            for j in range(N):
                k = N - 1 - i
                rhs += "A" * k + "B" * j + "ABab" + "b" * j + "a" * k
        assert naive_reduce(lhs) == naive_reduce(rhs)


def test_conjugation_expansion():
    for N in range(1, 7):
        assert verify_conjugation_expansion(N)
    lhs, rhs = conjugation_expansion_sides(3)
    assert str(lhs) == naive_reduce("ABBBabbb")


def test_bad_n():
    with pytest.raises(ValueError):
        verify_phi_relation(0)


def test_random_word_is_reduced():
    rng = random.Random(3)
    for _ in range(20):
        w = random_word(rng, 15)
        assert str(w) == naive_reduce(str(w))
    assert commutator(A, B) == C
