import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heiscurve.curves import genus_closed_form, rh_genus
from heiscurve.psl2 import (
    D3, GuardError, ProjMat, closure, coset_action, derived_closure, gamma2_image, gamma2_index_mod,
    gen_A, gen_B, identity, is_klein_group, phi_image_mod3, psl2_order, sorted_elements,
)


def order_formula(n):
    # |SL_2(Z/n)| = n^3 prod (1 - p^-2), halved for n > 2
    out = Fraction(n ** 3)
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q for q in range(2, p)):
            out *= 1 - Fraction(1, p * p)
    return int(out) // (2 if n > 2 else 1)


def test_psl2_order_formula():
    for n in range(2, 13):
        assert psl2_order(n) == order_formula(n)


def test_gamma2_image_sizes():
    assert [gamma2_index_mod(n) for n in (2, 3, 4, 5, 6, 12)] == [1, 12, 4, 60, 12, 96]
    # for odd n the image is all of PSL_2(Z/n)
    for n in (3, 5, 7, 9):
        assert gamma2_index_mod(n) == psl2_order(n)


def test_gamma2_image_mod5_is_a5():
    G = gamma2_image(5)
    assert len(G) == 60
    assert len(derived_closure(G)) == 60  # perfect


def test_derived_mod3_is_klein():
    Dd = derived_closure(gamma2_image(3))
    assert Dd == D3()
    assert is_klein_group(Dd)
    assert not is_klein_group(gamma2_image(3))


def test_phi_image_mod3():
    for N in range(1, 10):
        size = len(phi_image_mod3(N))
        assert (size == 4) == (N % 3 == 0)
        if N % 3:
            assert size == 12


mats = st.tuples(st.sampled_from([3, 4, 5, 6, 7]), st.integers(0, 40), st.integers(0, 40), st.integers(0, 40))


def _mat(n, seed):
    # deterministic element of the image of Gamma-bar(2)
    A, B = gen_A(n), gen_B(n)
    return A ** seed[0] * B ** seed[1] * A ** -seed[2]


@given(mats, mats)
def test_group_laws(s, t):
    n = s[0]
    g = _mat(n, s[1:])
    h = _mat(n, t[1:])
    assert g * g.inverse() == identity(n)
    assert (g * h).inverse() == h.inverse() * g.inverse()
    assert g ** 3 == g * g * g


def test_canonical_sign():
    assert ProjMat.make(-1, 0, 0, -1, 5) == identity(5)
    assert ProjMat.make(4, 0, 0, 4, 5) == identity(5)
    with pytest.raises(ValueError):
        ProjMat.make(2, 0, 0, 2, 5)
    with pytest.raises(ValueError):
        gen_A(3) * gen_A(5)


def test_closure_bfs_against_brute_force():
    # all products of length <= 12 in A, B and inverses reach the same set
    n = 4
    gens = [gen_A(n), gen_B(n), gen_A(n).inverse(), gen_B(n).inverse()]
    seen = {identity(n)}
    for _ in range(12):
        seen |= {g * h for g in seen for h in gens}
    assert frozenset(seen) == gamma2_image(n)


def test_coset_action_of_d3():
    act = coset_action(D3(), 3)
    assert act.degree == 3
    # one 3-cycle over each of 0, 1, oo: genus 1, the same curve as H_{3,3,1}
    data = rh_genus(act)
    assert data.cusps == {"inf": (3,), "zero": (3,), "one": (3,)}
    assert data.genus == genus_closed_form(3, 3, 1) == 1


def test_guard(monkeypatch):
    with pytest.raises(GuardError):
        gamma2_image(31)
    monkeypatch.setenv("HEISCURVE_GUARD_PSL2", "5")
    with pytest.raises(GuardError):
        gamma2_image(6)
    with pytest.raises(ValueError):
        gamma2_image(1)


def test_sorted_elements():
    els = sorted_elements(D3())
    assert els == sorted(els) and len(els) == 4
    assert els[0] == (0, 1, 2, 0)
